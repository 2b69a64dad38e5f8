#ifndef TCC_EQUIVALENCE_HPP
#define TCC_EQUIVALENCE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tcc/code.hpp"

namespace tcc {

/// Signed coordinate permutation: applying m to x yields y with
/// y[i] = (-1)^{signs[i]} * x[perm[i]].
struct MonomialMap {
    std::vector<uint8_t> perm;
    std::vector<uint8_t> signs;  // 0/1 per target position

    static MonomialMap identity(size_t n);
    size_t degree() const noexcept { return perm.size(); }

    gf3::Vec apply(const gf3::Vec& x) const;
    MonomialMap inverse() const;
    /// compose(f, g): apply g first, then f.
    static MonomialMap compose(const MonomialMap& f, const MonomialMap& g);

    friend bool operator==(const MonomialMap&, const MonomialMap&) = default;
};

LinearCode apply_monomial(const LinearCode& c, const MonomialMap& m);

/// The digraph attached to a code: one vertex per nonzero codeword, two
/// "slot" vertices (j,1),(j,2) per coordinate j, an arc from codeword c to
/// slot (j, c_j) whenever c_j != 0, and twin arcs both ways between (j,1)
/// and (j,2). Slots are indexed 2j + (s-1); the twin of slot t is t^1.
/// Codeword vertices have no incoming arcs, so the two vertex kinds can
/// never be confused by an isomorphism.
struct CodeDigraph {
    size_t n = 0;
    size_t k = 0;
    std::vector<uint32_t> codeword_arcs;  // per nonzero codeword, bitmask over slots
    std::vector<int> codeword_weight;

    size_t codeword_count() const noexcept { return codeword_arcs.size(); }
    size_t slot_count() const noexcept { return 2 * n; }
    size_t vertex_count() const noexcept { return codeword_count() + slot_count(); }
    size_t arc_count() const noexcept;
};

/// Requires k >= 1.
CodeDigraph gamma(const LinearCode& c);

/// Canonical byte certificate: equal exactly for isomorphic code digraphs.
struct CanonicalCert {
    std::vector<uint8_t> bytes;
    friend bool operator==(const CanonicalCert&, const CanonicalCert&) = default;
    bool operator<(const CanonicalCert& o) const { return bytes < o.bytes; }
    std::string hex() const;
};

using SlotPerm = std::vector<uint8_t>;  // permutation of slot indices

struct CanonicalResult {
    CanonicalCert cert;
    SlotPerm slot_labeling;                // canonical position -> slot index
    std::vector<SlotPerm> aut_generators;  // slot action of discovered automorphisms
    uint64_t group_order = 1;              // order of the monomial automorphism group
};

CanonicalResult canonicalize(const CodeDigraph& d);
CanonicalCert canonical_cert(const CodeDigraph& d);

/// Permutation group on {0..degree-1} held as a stabilizer chain.
class PermGroup {
  public:
    PermGroup(size_t degree, const std::vector<SlotPerm>& gens);
    size_t degree() const noexcept { return degree_; }
    uint64_t order() const;
    bool contains(const SlotPerm& p) const;
    /// Every element, in a deterministic order. Throws std::runtime_error
    /// when the group order exceeds cap.
    std::vector<SlotPerm> elements(uint64_t cap = 1000000) const;

  private:
    struct Level {
        int base = -1;
        std::vector<SlotPerm> gens;
        std::vector<SlotPerm> transversal;  // by point; empty entry = outside orbit
        std::vector<int> orbit;             // discovery order
    };
    size_t degree_;
    std::vector<Level> levels_;

    void add(SlotPerm g);
    std::pair<size_t, SlotPerm> sift(SlotPerm g) const;
    void rebuild_level(size_t lvl);
};

/// Translate between the digraph's slot action and monomial maps.
/// p must send twin slots to twin slots.
MonomialMap monomial_from_slot_perm(const SlotPerm& p, size_t n);
SlotPerm slot_perm_from_monomial(const MonomialMap& m);

/// True when a monomial map carries a onto b. Requires equal n and k.
bool equivalent(const LinearCode& a, const LinearCode& b);
/// A monomial m with apply_monomial(a, m) = b, when the codes are equivalent.
std::optional<MonomialMap> equivalence_witness(const LinearCode& a, const LinearCode& b);

struct AutGroup {
    std::vector<MonomialMap> generators;
    uint64_t order = 1;
};
/// The group of monomial maps fixing c setwise.
AutGroup automorphisms(const LinearCode& c);

}  // namespace tcc

#endif

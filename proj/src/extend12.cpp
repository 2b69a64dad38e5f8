#include "tcc/extend12.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace tcc {

namespace {

std::string generator_text(const LinearCode& c) {
    std::string s;
    for (const auto& row : c.row_strings()) s += row;
    return s;
}

int y_digit(const gf3::Packed& w, size_t j) {
    return ((w.lo >> j) & 1) ? 1 : ((w.hi >> j) & 1) ? 2 : 0;
}

void require_12_5(const LinearCode& c, const char* what) {
    if (c.n() != 12 || c.k() != 5)
        throw std::invalid_argument(std::string(what) + " requires a [12,5] code");
}

// shared scan: x-part weight and last-two digits of every codeword
template <class Fn>
bool all_codewords(const LinearCode& c12, Fn&& pred) {
    for (const auto& w : c12.packed_codewords()) {
        int xw = std::popcount(static_cast<uint32_t>((w.lo | w.hi) & 0x3ff));
        if (!pred(xw, y_digit(w, 10), y_digit(w, 11))) return false;
    }
    return true;
}

}  // namespace

LinearCode builtin_10_5_5() {
    return LinearCode::parse({"1000012210", "0100001221", "0010010122", "0001021012",
                              "0000122101"});
}

const std::vector<std::pair<int, int>>& column_pairs(int residue) {
    static const std::vector<std::pair<int, int>> table[3] = {
        {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}},
        {{1, 1}, {2, 2}},
        {{1, 2}, {2, 1}},
    };
    if (residue < 0 || residue > 2) throw std::invalid_argument("residue must be 0, 1 or 2");
    return table[residue];
}

std::pair<int, int> pinned_first_pair(int residue) {
    switch (residue) {
        case 0: return {0, 1};
        case 1: return {1, 1};
        case 2: return {1, 2};
    }
    throw std::invalid_argument("residue must be 0, 1 or 2");
}

void extensions(const LinearCode& g10, std::pair<int, int> first_pair,
                const std::function<void(const LinearCode&)>& fn) {
    if (g10.n() != 10 || g10.k() != 5)
        throw std::invalid_argument("extension requires a [10,5] code");
    const int d10 = g10.min_weight();
    if (d10 < 3 || d10 > 5)
        throw std::invalid_argument("extension requires minimum weight 3, 4 or 5");

    const gf3::Mat& g = g10.generator();
    std::vector<std::vector<std::pair<int, int>>> choices(5);
    for (size_t i = 0; i < 5; ++i) {
        const auto& pairs = column_pairs(g.row(i).weight() % 3);
        if (i == 0) {
            if (std::find(pairs.begin(), pairs.end(), first_pair) == pairs.end())
                throw std::invalid_argument(
                    "first-pair normalization conflicts with the weight of row 1");
            choices[0] = {first_pair};
        } else {
            choices[i] = pairs;
        }
    }

    std::array<size_t, 5> idx{};
    while (true) {
        std::vector<gf3::Vec> rows;
        for (size_t i = 0; i < 5; ++i) {
            gf3::Vec r(12);
            for (size_t j = 0; j < 10; ++j) r.set(j, g.at(i, j));
            r.set(10, choices[i][idx[i]].first);
            r.set(11, choices[i][idx[i]].second);
            rows.push_back(r);
        }
        fn(LinearCode::from_generators(rows));

        size_t i = 5;
        while (i > 0 && ++idx[i - 1] == choices[i - 1].size()) idx[--i] = 0;
        if (i == 0) break;
    }
}

bool check_c1(const LinearCode& c12) {
    require_12_5(c12, "condition c1");
    return all_codewords(c12, [](int xw, int y1, int y2) { return xw % 3 == y1 * y2 % 3; });
}

bool check_c2(const LinearCode& c12) {
    require_12_5(c12, "condition c2");
    return all_codewords(c12, [](int xw, int y1, int y2) {
        return xw >= 3 || (xw == 0 && y1 == 0 && y2 == 0);
    });
}

bool check_c3(const LinearCode& c12) {
    require_12_5(c12, "condition c3");
    return all_codewords(c12,
                         [](int xw, int y1, int y2) { return xw != 3 || y1 != 0 || y2 != 0; });
}

MonomialMap SZMap::full() const {
    if (base.degree() != 10) throw std::invalid_argument("base map must act on 10 coordinates");
    MonomialMap m = base;
    m.perm.push_back(swap_last ? 11 : 10);
    m.perm.push_back(swap_last ? 10 : 11);
    m.signs.push_back(negate_last ? 1 : 0);
    m.signs.push_back(negate_last ? 1 : 0);
    return m;
}

LinearCode apply_sz(const LinearCode& c12, const SZMap& m) {
    require_12_5(c12, "restricted map");
    return apply_monomial(c12, m.full());
}

bool sz_equivalent(const LinearCode& a, const LinearCode& b) {
    require_12_5(a, "restricted equivalence");
    require_12_5(b, "restricted equivalence");
    for (const LinearCode* c : {&a, &b})
        if (!check_c1(*c) || !check_c2(*c) || !check_c3(*c))
            throw std::invalid_argument(
                "restricted equivalence is defined for codes passing conditions c1-c3");

    LinearCode pa = a.puncture({11, 12});
    LinearCode pb = b.puncture({11, 12});

    // any candidate's action on the first ten coordinates must carry one
    // punctured code onto the other
    std::optional<MonomialMap> witness = equivalence_witness(pa, pb);
    if (!witness) return false;

    AutGroup aut = automorphisms(pa);
    constexpr uint64_t kCap = 1000000;
    if (aut.order > kCap)
        throw std::runtime_error("punctured automorphism group exceeds the enumeration cap");
    std::vector<SlotPerm> slot_gens;
    for (const auto& g : aut.generators) slot_gens.push_back(slot_perm_from_monomial(g));
    PermGroup group(20, slot_gens);

    for (const auto& elem : group.elements(kCap)) {
        MonomialMap base = MonomialMap::compose(*witness, monomial_from_slot_perm(elem, 10));
        for (int swap_last = 0; swap_last < 2; ++swap_last)
            for (int negate_last = 0; negate_last < 2; ++negate_last) {
                SZMap m{base, swap_last == 1, negate_last == 1};
                if (apply_sz(a, m).same_code_as(b)) return true;
            }
    }
    return false;
}

namespace {

struct Candidate {
    LinearCode code;
    int source_d;
    size_t group;  // index into the per-source-class grouping
};

// extensions of one [10,5] representative surviving c1 (and c3); tallies feed
// the per-family counts
struct ClassOutcome {
    bool any_c1 = false;
    bool any_c1c3 = false;
    std::vector<LinearCode> survivors;
};

ClassOutcome extend_one_class(const LinearCode& rep) {
    ClassOutcome out;
    size_t w1 = rep.generator().row(0).weight();
    int residue = static_cast<int>(w1) % 3;
    auto scan = [&](std::pair<int, int> first, bool keep) {
        extensions(rep, first, [&](const LinearCode& c12) {
            if (!check_c1(c12)) return;
            out.any_c1 = true;
            if (!check_c2(c12))
                throw std::logic_error("a full-rank extension violated the weight floor");
            if (!keep || !check_c3(c12)) return;
            out.any_c1c3 = true;
            out.survivors.push_back(c12);
        });
    };
    scan(pinned_first_pair(residue), true);
    // The swap and shared-sign moves identify all nonzero pairs of a residue
    // table, so one pinned pair reaches every extension class except those
    // passing only through (0,0), the lone fixed point of the moves.  A zero
    // tail on a weight-3 first row is forbidden anyway (c3), so the pinned
    // scan already yields every surviving class for such representatives; the
    // second pass keeps the admits-a-c1-extension flag independent of which
    // generator matrix represents the class, and recovers the survivors
    // themselves when the first row is heavy enough to carry a zero tail.
    if (residue == 0) scan({0, 0}, w1 != 3);
    return out;
}

Extend12Result finish(std::vector<Candidate> pool, Extend12Result result,
                      const std::vector<CanonicalCert>& group_certs) {
    // union-find inside each punctured class; distinct punctured classes can
    // never be SZ-related
    std::vector<size_t> parent(pool.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i < pool.size(); ++i)
        for (size_t j = i + 1; j < pool.size(); ++j) {
            if (pool[i].group != pool[j].group) continue;
            if (find(i) == find(j)) continue;
            if (sz_equivalent(pool[i].code, pool[j].code)) parent[find(i)] = find(j);
        }

    std::map<size_t, std::vector<size_t>> classes;
    for (size_t i = 0; i < pool.size(); ++i) classes[find(i)].push_back(i);

    for (const auto& [root, members] : classes) {
        size_t best = members[0];
        for (size_t m : members)
            if (generator_text(pool[m].code) < generator_text(pool[best].code)) best = m;
        Survivor s;
        s.code = pool[best].code;
        s.min_weight = s.code.min_weight();
        s.source_d = pool[best].source_d;
        s.punctured_cert = group_certs[pool[best].group];
        s.refined = refined_we(s.code);
        s.sz_class_size = members.size();
        result.survivors.push_back(std::move(s));
    }

    std::sort(result.survivors.begin(), result.survivors.end(),
              [](const Survivor& x, const Survivor& y) {
                  if (x.min_weight != y.min_weight) return x.min_weight > y.min_weight;
                  if (x.source_d != y.source_d) return x.source_d > y.source_d;
                  return generator_text(x.code) < generator_text(y.code);
              });
    return result;
}

}  // namespace

Extend12Result extend_fixture_only() {
    Extend12Result result;
    LinearCode fixture = builtin_10_5_5();
    ClassOutcome out = extend_one_class(fixture);
    result.d5_c1_classes = out.any_c1 ? 1 : 0;

    std::vector<Candidate> pool;
    std::vector<CanonicalCert> group_certs{canonical_cert(gamma(fixture))};
    for (auto& c : out.survivors) pool.push_back({std::move(c), 5, 0});
    return finish(std::move(pool), std::move(result), group_certs);
}

Extend12Result classify_12_5(const ClassificationResult& d3, const ClassificationResult& d4) {
    if (d3.target_d != 3 || d3.classes.empty())
        throw std::invalid_argument("the [10,5,3] classification input is missing");
    if (d4.target_d != 4 || d4.classes.empty())
        throw std::invalid_argument("the [10,5,4] classification input is missing");

    Extend12Result result;
    std::vector<Candidate> pool;
    std::vector<CanonicalCert> group_certs;

    LinearCode fixture = builtin_10_5_5();
    {
        ClassOutcome out = extend_one_class(fixture);
        result.d5_c1_classes = out.any_c1 ? 1 : 0;
        group_certs.push_back(canonical_cert(gamma(fixture)));
        for (auto& c : out.survivors) pool.push_back({std::move(c), 5, group_certs.size() - 1});
    }
    for (const CodeClass& cls : d4.classes) {
        ClassOutcome out = extend_one_class(cls.rep);
        result.d4_c1_classes += out.any_c1;
        result.d4_c1c3_classes += out.any_c1c3;
        if (out.survivors.empty()) continue;
        group_certs.push_back(cls.cert);
        for (auto& c : out.survivors) pool.push_back({std::move(c), 4, group_certs.size() - 1});
    }
    for (const CodeClass& cls : d3.classes) {
        ClassOutcome out = extend_one_class(cls.rep);
        result.d3_c1_classes += out.any_c1;
        result.d3_c1c3_classes += out.any_c1c3;
        if (out.survivors.empty()) continue;
        group_certs.push_back(cls.cert);
        for (auto& c : out.survivors) pool.push_back({std::move(c), 3, group_certs.size() - 1});
    }

    return finish(std::move(pool), std::move(result), group_certs);
}

}  // namespace tcc

#include "tcc/equivalence.hpp"

#include <stdexcept>

namespace tcc {

MonomialMap MonomialMap::identity(size_t n) {
    MonomialMap m;
    m.perm.resize(n);
    m.signs.assign(n, 0);
    for (size_t i = 0; i < n; ++i) m.perm[i] = static_cast<uint8_t>(i);
    return m;
}

gf3::Vec MonomialMap::apply(const gf3::Vec& x) const {
    if (x.size() != degree()) throw std::invalid_argument("monomial: degree mismatch");
    gf3::Vec y(x.size());
    for (size_t i = 0; i < x.size(); ++i) {
        const uint8_t v = x[perm[i]];
        y.set(i, signs[i] ? gf3::neg(v) : v);
    }
    return y;
}

MonomialMap MonomialMap::inverse() const {
    MonomialMap r;
    r.perm.resize(degree());
    r.signs.resize(degree());
    for (size_t i = 0; i < degree(); ++i) {
        r.perm[perm[i]] = static_cast<uint8_t>(i);
        r.signs[perm[i]] = signs[i];
    }
    return r;
}

MonomialMap MonomialMap::compose(const MonomialMap& f, const MonomialMap& g) {
    if (f.degree() != g.degree()) throw std::invalid_argument("monomial: degree mismatch");
    // (f∘g)(x)[i] = ±(g x)[f.perm[i]] = ±±x[g.perm[f.perm[i]]]
    MonomialMap r;
    r.perm.resize(f.degree());
    r.signs.resize(f.degree());
    for (size_t i = 0; i < f.degree(); ++i) {
        r.perm[i] = g.perm[f.perm[i]];
        r.signs[i] = f.signs[i] ^ g.signs[f.perm[i]];
    }
    return r;
}

LinearCode apply_monomial(const LinearCode& c, const MonomialMap& m) {
    if (m.degree() != c.n()) throw std::invalid_argument("monomial: degree mismatch");
    std::vector<gf3::Vec> rows;
    rows.reserve(c.k());
    for (size_t i = 0; i < c.k(); ++i) rows.push_back(m.apply(c.generator().row(i)));
    return LinearCode::from_generators(rows);
}

CodeDigraph gamma(const LinearCode& c) {
    if (c.k() < 1) throw std::invalid_argument("digraph: code must have dimension >= 1");
    if (c.n() > 16) throw std::invalid_argument("digraph: length above 16 unsupported");
    CodeDigraph d;
    d.n = c.n();
    d.k = c.k();
    const auto words = c.packed_codewords();
    d.codeword_arcs.reserve(words.size() - 1);
    d.codeword_weight.reserve(words.size() - 1);
    for (size_t i = 1; i < words.size(); ++i) {  // skip the zero word
        const gf3::Packed w = words[i];
        uint32_t mask = 0;
        for (size_t j = 0; j < d.n; ++j) {
            const uint8_t digit = w.digit(static_cast<int>(j));
            if (digit) mask |= uint32_t(1) << (2 * j + digit - 1);
        }
        d.codeword_arcs.push_back(mask);
        d.codeword_weight.push_back(w.weight());
    }
    return d;
}

size_t CodeDigraph::arc_count() const noexcept {
    size_t total = 2 * n;  // twin arcs, one per slot
    for (int w : codeword_weight) total += static_cast<size_t>(w);
    return total;
}

std::string CanonicalCert::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (uint8_t b : bytes) {
        s.push_back(digits[b >> 4]);
        s.push_back(digits[b & 15]);
    }
    return s;
}

MonomialMap monomial_from_slot_perm(const SlotPerm& p, size_t n) {
    if (p.size() != 2 * n) throw std::invalid_argument("monomial: slot permutation degree mismatch");
    MonomialMap m;
    m.perm.resize(n);
    m.signs.resize(n);
    for (size_t j = 0; j < n; ++j) {
        const uint8_t t = p[2 * j];
        if (p[2 * j + 1] != (t ^ 1)) throw std::invalid_argument("monomial: slot map breaks twins");
        m.perm[t >> 1] = static_cast<uint8_t>(j);
        m.signs[t >> 1] = t & 1;
    }
    return m;
}

SlotPerm slot_perm_from_monomial(const MonomialMap& m) {
    SlotPerm p(2 * m.degree());
    for (size_t i = 0; i < m.degree(); ++i) {
        const size_t j = m.perm[i];
        p[2 * j] = static_cast<uint8_t>(2 * i + m.signs[i]);
        p[2 * j + 1] = static_cast<uint8_t>(2 * i + (m.signs[i] ^ 1));
    }
    return p;
}

bool equivalent(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument("equivalence: parameter mismatch");
    if (!(a.hamming_we() == b.hamming_we())) return false;
    return canonical_cert(gamma(a)) == canonical_cert(gamma(b));
}

std::optional<MonomialMap> equivalence_witness(const LinearCode& a, const LinearCode& b) {
    if (a.n() != b.n() || a.k() != b.k())
        throw std::invalid_argument("equivalence: parameter mismatch");
    const CanonicalResult ra = canonicalize(gamma(a));
    const CanonicalResult rb = canonicalize(gamma(b));
    if (!(ra.cert == rb.cert)) return std::nullopt;
    // slots of a and b in the same canonical position correspond
    SlotPerm h(2 * a.n());
    for (size_t i = 0; i < 2 * a.n(); ++i) h[ra.slot_labeling[i]] = rb.slot_labeling[i];
    MonomialMap m = monomial_from_slot_perm(h, a.n());
    if (!apply_monomial(a, m).same_code_as(b))
        throw std::logic_error("equivalence: witness failed verification");
    return m;
}

AutGroup automorphisms(const LinearCode& c) {
    const CanonicalResult r = canonicalize(gamma(c));
    AutGroup g;
    g.order = r.group_order;
    g.generators.reserve(r.aut_generators.size());
    for (const SlotPerm& p : r.aut_generators) g.generators.push_back(monomial_from_slot_perm(p, c.n()));
    return g;
}

}  // namespace tcc

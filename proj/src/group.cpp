// Stabilizer chain for small permutation groups (degree <= 32).
//
// One master list of strong generators is kept; level i of the chain uses the
// generators fixing the first i base points and records the orbit/transversal
// of base point i under them. After every insertion the chain is re-verified
// with Schreier's lemma: any Schreier generator that fails to sift to the
// identity is inserted in turn, until the chain closes.

#include <stdexcept>

#include "tcc/equivalence.hpp"

namespace tcc {

namespace {

bool is_identity(const SlotPerm& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] != i) return false;
    }
    return true;
}

SlotPerm compose_perm(const SlotPerm& a, const SlotPerm& b) {  // (a∘b)(x) = a[b[x]]
    SlotPerm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

SlotPerm invert_perm(const SlotPerm& p) {
    SlotPerm r(p.size());
    for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<uint8_t>(i);
    return r;
}

int first_moved(const SlotPerm& p) {
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] != i) return static_cast<int>(i);
    }
    return -1;
}

}  // namespace

PermGroup::PermGroup(size_t degree, const std::vector<SlotPerm>& gens) : degree_(degree) {
    for (const SlotPerm& g : gens) {
        if (g.size() != degree_) throw std::invalid_argument("group: generator degree mismatch");
        add(g);
    }
}

std::pair<size_t, SlotPerm> PermGroup::sift(SlotPerm g) const {
    for (size_t lvl = 0; lvl < levels_.size(); ++lvl) {
        if (is_identity(g)) return {lvl, std::move(g)};
        const Level& L = levels_[lvl];
        const uint8_t img = g[static_cast<size_t>(L.base)];
        if (L.transversal[img].empty()) return {lvl, std::move(g)};
        g = compose_perm(invert_perm(L.transversal[img]), g);
    }
    return {levels_.size(), std::move(g)};
}

void PermGroup::rebuild_level(size_t lvl) {
    // Level 0's list holds every strong generator (its fixed prefix is empty);
    // level i gets the subset fixing bases 0..i-1. Rebuild everything from
    // level 0's list and the recorded base sequence.
    std::vector<SlotPerm> pool = levels_.empty() ? std::vector<SlotPerm>{} : levels_[0].gens;
    std::vector<int> bases;
    for (const Level& L : levels_) bases.push_back(L.base);
    (void)lvl;

    levels_.clear();
    for (size_t i = 0; i < bases.size(); ++i) {
        Level L;
        L.base = bases[i];
        for (const SlotPerm& g : pool) {
            bool fixes_prefix = true;
            for (size_t j = 0; j < i; ++j) {
                if (g[static_cast<size_t>(bases[j])] != bases[j]) {
                    fixes_prefix = false;
                    break;
                }
            }
            if (fixes_prefix) L.gens.push_back(g);
        }
        if (L.gens.empty()) break;  // deeper stabilizers are trivial
        L.transversal.assign(degree_, {});
        L.orbit.clear();
        SlotPerm id(degree_);
        for (size_t p = 0; p < degree_; ++p) id[p] = static_cast<uint8_t>(p);
        L.transversal[static_cast<size_t>(L.base)] = id;
        L.orbit.push_back(L.base);
        for (size_t oi = 0; oi < L.orbit.size(); ++oi) {
            const int p = L.orbit[oi];
            for (const SlotPerm& s : L.gens) {
                const int q = s[static_cast<size_t>(p)];
                if (L.transversal[static_cast<size_t>(q)].empty()) {
                    L.transversal[static_cast<size_t>(q)] =
                        compose_perm(s, L.transversal[static_cast<size_t>(p)]);
                    L.orbit.push_back(q);
                }
            }
        }
        levels_.push_back(std::move(L));
    }
}

void PermGroup::add(SlotPerm g) {
    auto [stop, res] = sift(std::move(g));
    (void)stop;
    if (is_identity(res)) return;

    // register the residue as a strong generator; make sure some base sees it
    bool moves_base = false;
    for (const Level& L : levels_) {
        if (res[static_cast<size_t>(L.base)] != L.base) {
            moves_base = true;
            break;
        }
    }
    // store in level 0's list; rebuild_level redistributes by fixed prefix
    if (levels_.empty()) {
        Level L;
        L.base = first_moved(res);
        levels_.push_back(std::move(L));
        moves_base = true;  // its base is a moved point of res
    }
    levels_[0].gens.push_back(std::move(res));
    if (!moves_base) {
        const SlotPerm& r = levels_[0].gens.back();
        Level L;
        L.base = first_moved(r);
        levels_.push_back(std::move(L));
    }
    rebuild_level(0);

    // verify Schreier closure; restart whenever the chain grows
    bool again = true;
    while (again) {
        again = false;
        for (size_t i = 0; i < levels_.size() && !again; ++i) {
            const Level& L = levels_[i];
            for (size_t oi = 0; oi < L.orbit.size() && !again; ++oi) {
                const int p = L.orbit[oi];
                for (const SlotPerm& s : L.gens) {
                    const int q = s[static_cast<size_t>(p)];
                    SlotPerm u = compose_perm(invert_perm(L.transversal[static_cast<size_t>(q)]),
                                              compose_perm(s, L.transversal[static_cast<size_t>(p)]));
                    auto [lvl2, res2] = sift(std::move(u));
                    (void)lvl2;
                    if (!is_identity(res2)) {
                        add(std::move(res2));
                        again = true;
                        break;
                    }
                }
            }
        }
    }
}

uint64_t PermGroup::order() const {
    uint64_t o = 1;
    for (const Level& L : levels_) o *= static_cast<uint64_t>(L.orbit.size());
    return o;
}

bool PermGroup::contains(const SlotPerm& p) const {
    if (p.size() != degree_) return false;
    auto [lvl, h] = sift(p);
    (void)lvl;
    return is_identity(h);
}

std::vector<SlotPerm> PermGroup::elements(uint64_t cap) const {
    if (order() > cap) throw std::runtime_error("group: enumeration cap exceeded");
    SlotPerm id(degree_);
    for (size_t i = 0; i < degree_; ++i) id[i] = static_cast<uint8_t>(i);
    std::vector<SlotPerm> out{id};
    for (size_t lvl = levels_.size(); lvl-- > 0;) {
        const Level& L = levels_[lvl];
        std::vector<SlotPerm> next;
        next.reserve(out.size() * L.orbit.size());
        for (const int p : L.orbit) {
            const SlotPerm& t = L.transversal[static_cast<size_t>(p)];
            for (const SlotPerm& e : out) next.push_back(compose_perm(t, e));
        }
        out = std::move(next);
    }
    return out;
}

}  // namespace tcc

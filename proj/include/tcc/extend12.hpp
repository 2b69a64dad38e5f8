#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "tcc/analysis.hpp"
#include "tcc/classify10.hpp"
#include "tcc/code.hpp"
#include "tcc/equivalence.hpp"

namespace tcc {

// The unique [10,5,5] code, generator (I5 | A) with A the circulant on 12210.
LinearCode builtin_10_5_5();

// Column pairs (a_i, b_i) compatible with a generator row of x-part weight w:
// the congruence w = a*b (mod 3) admits exactly these.
const std::vector<std::pair<int, int>>& column_pairs(int residue);

// Normalized choice of (a_1, b_1) for each row-1 weight residue; the remaining
// options are reachable from it by the last-two-coordinate symmetries (except
// (0,0), which a weight-3 row ultimately cannot carry).
std::pair<int, int> pinned_first_pair(int residue);

// All [12,5] codes G(a,b) obtained by appending two columns to g10's generator,
// each row's pair drawn from its weight-residue table, row 1 pinned to
// first_pair. Deterministic order.
void extensions(const LinearCode& g10, std::pair<int, int> first_pair,
                const std::function<void(const LinearCode&)>& fn);

// Per-codeword conditions on a [12,5] code, x = first ten coordinates,
// (y1,y2) = last two:
//   c1: wt(x) = y1*y2 (mod 3)
//   c2: nonzero codewords have wt(x) >= 3
//   c3: wt(x) = 3 implies (y1,y2) != (0,0)
bool check_c1(const LinearCode& c12);
bool check_c2(const LinearCode& c12);
bool check_c3(const LinearCode& c12);

// Restricted equivalence for [12,5] codes: a monomial map on the first ten
// coordinates, an optional swap of the last two, and one shared sign on both.
struct SZMap {
    MonomialMap base;          // acts on coordinates 1..10
    bool swap_last = false;    // exchange the last two coordinates
    bool negate_last = false;  // negate both last coordinates

    MonomialMap full() const;  // the induced degree-12 monomial map
};

LinearCode apply_sz(const LinearCode& c12, const SZMap& m);

// True iff some SZMap carries a onto b. Both inputs must satisfy c1-c3.
// Decides via the punctured codes: inequivalent puncturings can never be
// SZ-related; otherwise one witness plus the punctured automorphism group
// (enumerated, capped) covers every candidate base map.
bool sz_equivalent(const LinearCode& a, const LinearCode& b);

struct Survivor {
    LinearCode code;  // lex-min generator text within its SZ-class
    int min_weight = 0;
    int source_d = 0;  // minimum weight of the punctured class: 5, 4, or 3
    CanonicalCert punctured_cert;
    RefinedWeightEnumerator refined;
    size_t sz_class_size = 0;  // candidate codes merged into this class
};

struct Extend12Result {
    std::vector<Survivor> survivors;
    // classes admitting condition-passing extensions, per source family;
    // independent of which generator matrix represents each class
    size_t d5_c1_classes = 0;
    size_t d4_c1_classes = 0;
    size_t d4_c1c3_classes = 0;
    size_t d3_c1_classes = 0;
    size_t d3_c1c3_classes = 0;
};

// Extensions of the built-in [10,5,5] code only.
Extend12Result extend_fixture_only();

// The complete classification: extensions of the [10,5,5] code and of every
// [10,5,4] and [10,5,3] representative, filtered by c1-c3, grouped up to
// SZ-equivalence. Survivors ordered by descending minimum weight, then source
// family (d=5, 4, 3), then generator text.
Extend12Result classify_12_5(const ClassificationResult& d3, const ClassificationResult& d4);

}  // namespace tcc

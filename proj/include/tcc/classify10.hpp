#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcc/analysis.hpp"
#include "tcc/code.hpp"
#include "tcc/equivalence.hpp"
#include "tcc/gf3.hpp"

namespace tcc {

// Row-by-row search for [10,5] codes with generator matrix (I5 | A): the first
// A row is pinned per target minimum weight, the remaining rows are drawn from
// pruning sets X1/X2 defined below.
struct SearchConfig {
    int target_d = 4;  // 3 or 4
    gf3::Vec r1;       // fixed first row of A

    static SearchConfig for_min_weight(int d);
};

struct XSets {
    std::vector<gf3::Vec> x1;  // rows usable at depths 3..5
    std::vector<gf3::Vec> x2;  // rows usable at depth 2 (ordering-normalized)
};

// X1: x with first nonzero entry 1, weight >= 2 (d=3) or >= 3 (d=4), and
// min weight of the two-row code <(e1,r1),(e2,x)> exactly target_d.
// X2: the subset with x1<=x2<=x3<=1, x4<=x5 (d=3) or x1<=x2<=1, x3<=x4<=x5 (d=4).
// Both lists sorted lexicographically.
XSets build_x_sets(const SearchConfig& cfg);

// Streams every 5x5 matrix A = (r1; r2; r3; r4; r5) with r2 in X2, r3<r4<r5
// from X1 (strict lex), where each partial span <(e_s,r_s) : s<=t> has minimum
// weight exactly target_d for t = 3,4,5. Deterministic lex order over
// (r2,r3,r4,r5).
void enumerate_matrices(const SearchConfig& cfg,
                        const std::function<void(const gf3::Mat&)>& fn);

struct CodeClass {
    LinearCode rep;  // generator (I5 | A); lex-minimal matrix in the class
    WeightEnumerator we;
    CanonicalCert cert;
    uint64_t aut_order = 0;
    bool formally_self_dual = false;
    DesignReport design;

    gf3::Mat a_matrix() const;  // the A block of the representative
    std::string a_string() const;
};

struct ClassificationResult {
    int target_d = 0;
    uint64_t matrix_count = 0;
    size_t we_class_count = 0;
    std::vector<CodeClass> classes;  // sorted by (weight enumerator, matrix text)

    size_t class_count() const { return classes.size(); }
};

struct ClassifyOptions {
    unsigned threads = 0;        // 0 = hardware concurrency
    std::string checkpoint_dir;  // empty = no checkpointing
    std::function<void(size_t branch, uint64_t matrices)> on_branch_done;
};

// Full pipeline: enumerate, bucket by weight enumerator then canonical
// certificate, keep the lex-minimal matrix per class, attach per-class
// metadata. Result is independent of thread count.
ClassificationResult classify10(const SearchConfig& cfg, const ClassifyOptions& opts = {});

// Same bucketing applied to an explicit list of codes (used for small-scale
// cross-checks); representative = lex-minimal generator text in each class.
ClassificationResult classify_codes(const std::vector<LinearCode>& codes);

}  // namespace tcc

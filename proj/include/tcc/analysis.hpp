#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tcc/code.hpp"

namespace tcc {

// Weight enumerator of a length-12 code that keeps the last two coordinates
// symbolic: a codeword contributes x^w y^{n1} z^{n2} where w is the weight of
// its first ten coordinates, n1 counts 1s among the last two and n2 counts 2s.
struct RefinedWeightEnumerator {
    // coeffs[w][n1][n2]
    std::array<std::array<std::array<uint32_t, 3>, 3>, 11> coeffs{};

    uint32_t at(size_t w, size_t n1, size_t n2) const;
    uint64_t total() const;

    // Hamming weight enumerator of the full length-12 code (weight w + n1 + n2).
    WeightEnumerator hamming_marginal() const;
    // Coefficients of x^w after substituting y = z = 1.
    WeightEnumerator x_marginal() const;

    // Sorted (w, n1, n2, count) rows, zero coefficients omitted.
    std::vector<std::array<uint32_t, 4>> terms() const;
    std::string str() const;

    bool operator==(const RefinedWeightEnumerator& o) const { return coeffs == o.coeffs; }
    bool operator<(const RefinedWeightEnumerator& o) const { return coeffs < o.coeffs; }
};

RefinedWeightEnumerator refined_we(const LinearCode& c12);

// Block system formed by the distinct supports of the minimum-weight codewords.
struct DesignReport {
    size_t point_count = 0;
    size_t block_size = 0;
    std::vector<uint32_t> blocks;  // supports as bit masks (bit j = coordinate j+1), sorted
    int max_t = 0;                 // largest t with constant t-subset coverage; 0 = none
    std::vector<uint64_t> lambda;  // lambda[t] for t = 0..max_t (lambda[0] = block count)
};

DesignReport design_strength(const LinearCode& c);

struct PropertyTally {
    size_t total = 0;
    size_t formally_self_dual = 0;
    std::map<int, size_t> design_strength_histogram;  // max_t value -> code count

    size_t design_at_least(int t) const;
};

PropertyTally tally_properties(const std::vector<LinearCode>& reps);

}  // namespace tcc

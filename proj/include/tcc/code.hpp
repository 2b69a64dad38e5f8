#ifndef TCC_CODE_HPP
#define TCC_CODE_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "tcc/gf3.hpp"

namespace tcc {

/// Hamming weight histogram of a code: coeffs[w] = number of codewords of weight w.
struct WeightEnumerator {
    std::vector<uint32_t> coeffs;  // length n+1

    friend bool operator==(const WeightEnumerator&, const WeightEnumerator&) = default;
    bool operator<(const WeightEnumerator& o) const { return coeffs < o.coeffs; }
    /// Compact "w:count" rendering of the nonzero coefficients, e.g. "0:1 5:72 6:60".
    std::string str() const;
};

/// A ternary [n,k] linear code given by a rank-k generator matrix.
/// Codes compare equal when their row spaces coincide.
class LinearCode {
  public:
    LinearCode() = default;

    /// Span of the given rows. Dependent rows are tolerated: the stored generator
    /// is reduced to a basis (the rows themselves when already independent).
    static LinearCode from_generators(const std::vector<gf3::Vec>& rows);
    static LinearCode from_generators(const gf3::Mat& gen) { return from_generators(gen.rows()); }
    /// Parse from strings of digits, one row per string.
    static LinearCode parse(const std::vector<std::string>& rows);

    size_t n() const noexcept { return n_; }
    size_t k() const noexcept { return gen_.row_count(); }
    const gf3::Mat& generator() const noexcept { return gen_; }

    /// All 3^k codewords, zero first, in lexicographic message order
    /// (message digit for generator row 1 most significant, 0 < 1 < 2).
    std::vector<gf3::Vec> codewords() const;
    void for_each_codeword(const std::function<void(const gf3::Vec&)>& fn) const;
    /// Packed codeword list in the same order; requires n <= 16.
    std::vector<gf3::Packed> packed_codewords() const;

    /// Minimum nonzero codeword weight, by full enumeration.
    int min_weight() const;
    WeightEnumerator hamming_we() const;

    /// Delete the 1-based coordinates in `drop` from every codeword.
    /// The result's dimension is recomputed and may be smaller than k (even zero).
    LinearCode puncture(const std::vector<size_t>& drop) const;

    /// The [n, n-k] code orthogonal to this one under the standard dot product.
    LinearCode dual() const;
    bool is_formally_self_dual() const;

    /// Row-space canonical form; equal exactly for equal codes.
    const gf3::Mat& rref_form() const;
    bool same_code_as(const LinearCode& o) const;

    std::vector<std::string> row_strings() const;

  private:
    gf3::Mat gen_;
    size_t n_ = 0;
    mutable gf3::Mat rref_;  // cached canonical form
    mutable bool have_rref_ = false;
};

}  // namespace tcc

#endif

#ifndef TCC_GF3_HPP
#define TCC_GF3_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace tcc::gf3 {

/// Scalar arithmetic in the field with three elements {0,1,2}.
inline constexpr uint8_t add(uint8_t a, uint8_t b) noexcept {
    uint8_t s = static_cast<uint8_t>(a + b);
    return s >= 3 ? static_cast<uint8_t>(s - 3) : s;
}
inline constexpr uint8_t neg(uint8_t a) noexcept { return a == 0 ? 0 : static_cast<uint8_t>(3 - a); }
inline constexpr uint8_t sub(uint8_t a, uint8_t b) noexcept { return add(a, neg(b)); }
inline constexpr uint8_t mul(uint8_t a, uint8_t b) noexcept { return static_cast<uint8_t>((a * b) % 3); }
inline constexpr uint8_t inv(uint8_t a) { return a == 0 ? throw std::domain_error("gf3: inverse of zero") : a; }

/// Bit-plane packed vector over F3, length <= 16.
/// Bit j of `lo` is set when entry j equals 1, bit j of `hi` when it equals 2.
/// Componentwise addition costs a handful of word ops, weight is one popcount.
struct Packed {
    uint16_t lo = 0;
    uint16_t hi = 0;

    friend constexpr Packed operator+(Packed a, Packed b) noexcept {
        const uint16_t s1 = a.lo ^ b.lo;
        const uint16_t s2 = a.hi ^ b.hi;
        return {static_cast<uint16_t>((s1 & ~s2) | (a.hi & b.hi)),
                static_cast<uint16_t>((s2 & ~s1) | (a.lo & b.lo))};
    }
    constexpr Packed negated() const noexcept { return {hi, lo}; }
    friend constexpr Packed operator-(Packed a, Packed b) noexcept { return a + b.negated(); }
    constexpr Packed scaled(uint8_t c) const noexcept {
        return c == 0 ? Packed{} : (c == 1 ? *this : negated());
    }
    constexpr int weight() const noexcept { return std::popcount(static_cast<uint16_t>(lo | hi)); }
    constexpr uint16_t support() const noexcept { return static_cast<uint16_t>(lo | hi); }
    constexpr uint8_t digit(int j) const noexcept {
        return static_cast<uint8_t>(((lo >> j) & 1) + 2 * ((hi >> j) & 1));
    }
    constexpr void set(int j, uint8_t v) noexcept {
        const uint16_t m = static_cast<uint16_t>(~(uint16_t(1) << j));
        lo &= m;
        hi &= m;
        if (v == 1) lo |= uint16_t(1) << j;
        if (v == 2) hi |= uint16_t(1) << j;
    }
    constexpr bool is_zero() const noexcept { return (lo | hi) == 0; }
    friend constexpr bool operator==(Packed, Packed) noexcept = default;
};

/// Fixed-length vector over F3. Length is set at construction and never changes.
class Vec {
  public:
    Vec() = default;
    explicit Vec(size_t n) : v_(n, 0) {}
    Vec(std::initializer_list<int> xs) {
        v_.reserve(xs.size());
        for (int x : xs) v_.push_back(static_cast<uint8_t>(((x % 3) + 3) % 3));
    }
    /// Parse from a string of characters '0','1','2'.
    static Vec parse(const std::string& s);

    size_t size() const noexcept { return v_.size(); }
    uint8_t operator[](size_t i) const { return v_[i]; }
    void set(size_t i, uint8_t val) { v_[i] = static_cast<uint8_t>(val % 3); }

    Vec operator+(const Vec& o) const;
    Vec operator-(const Vec& o) const;
    Vec negated() const;
    Vec scaled(uint8_t c) const;

    /// Number of nonzero entries.
    int weight() const noexcept;

    /// Three-way lexicographic comparison in the order 0 < 1 < 2, position 1 first.
    static int lex_compare(const Vec& a, const Vec& b);

    bool is_zero() const noexcept;
    friend bool operator==(const Vec&, const Vec&) = default;
    bool operator<(const Vec& o) const { return lex_compare(*this, o) < 0; }

    Packed packed() const;
    static Vec unpack(Packed p, size_t n);

    std::string str() const;

  private:
    std::vector<uint8_t> v_;
};

/// Rectangular matrix over F3, stored as equal-length rows.
class Mat {
  public:
    Mat() = default;
    Mat(size_t rows, size_t cols) : rows_(rows, Vec(cols)), cols_(cols) {}
    explicit Mat(std::vector<Vec> rows);

    static Mat identity(size_t k);
    /// Horizontal concatenation (A | B); row counts must agree.
    static Mat hconcat(const Mat& a, const Mat& b);

    size_t row_count() const noexcept { return rows_.size(); }
    size_t col_count() const noexcept { return cols_; }
    const Vec& row(size_t i) const { return rows_[i]; }
    Vec& row(size_t i) { return rows_[i]; }
    const std::vector<Vec>& rows() const noexcept { return rows_; }
    uint8_t at(size_t i, size_t j) const { return rows_[i][j]; }
    void set(size_t i, size_t j, uint8_t v) { rows_[i].set(j, v); }

    Mat transposed() const;
    friend bool operator==(const Mat&, const Mat&) = default;
    std::string str() const;

  private:
    std::vector<Vec> rows_;
    size_t cols_ = 0;
};

struct RrefResult {
    Mat matrix;
    size_t rank = 0;
};

/// Reduced row-echelon form over F3. Row space is preserved, pivots normalized to 1.
RrefResult rref(const Mat& m);

}  // namespace tcc::gf3

#endif

#include "tcc/gf3.hpp"

#include <algorithm>

namespace tcc::gf3 {

Vec Vec::parse(const std::string& s) {
    Vec r;
    r.v_.reserve(s.size());
    for (char c : s) {
        if (c < '0' || c > '2') throw std::invalid_argument("gf3: bad digit '" + std::string(1, c) + "'");
        r.v_.push_back(static_cast<uint8_t>(c - '0'));
    }
    return r;
}

Vec Vec::operator+(const Vec& o) const {
    if (size() != o.size()) throw std::invalid_argument("gf3: length mismatch in vector add");
    Vec r(size());
    for (size_t i = 0; i < size(); ++i) r.v_[i] = add(v_[i], o.v_[i]);
    return r;
}

Vec Vec::operator-(const Vec& o) const {
    if (size() != o.size()) throw std::invalid_argument("gf3: length mismatch in vector sub");
    Vec r(size());
    for (size_t i = 0; i < size(); ++i) r.v_[i] = sub(v_[i], o.v_[i]);
    return r;
}

Vec Vec::negated() const {
    Vec r(size());
    for (size_t i = 0; i < size(); ++i) r.v_[i] = neg(v_[i]);
    return r;
}

Vec Vec::scaled(uint8_t c) const {
    Vec r(size());
    for (size_t i = 0; i < size(); ++i) r.v_[i] = mul(v_[i], c);
    return r;
}

int Vec::weight() const noexcept {
    int w = 0;
    for (uint8_t x : v_) w += x != 0;
    return w;
}

int Vec::lex_compare(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("gf3: length mismatch in lex_compare");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a.v_[i] != b.v_[i]) return a.v_[i] < b.v_[i] ? -1 : 1;
    }
    return 0;
}

bool Vec::is_zero() const noexcept {
    return std::all_of(v_.begin(), v_.end(), [](uint8_t x) { return x == 0; });
}

Packed Vec::packed() const {
    if (size() > 16) throw std::invalid_argument("gf3: packed vectors support length <= 16");
    Packed p;
    for (size_t i = 0; i < size(); ++i) p.set(static_cast<int>(i), v_[i]);
    return p;
}

Vec Vec::unpack(Packed p, size_t n) {
    Vec r(n);
    for (size_t i = 0; i < n; ++i) r.v_[i] = p.digit(static_cast<int>(i));
    return r;
}

std::string Vec::str() const {
    std::string s;
    s.reserve(size());
    for (uint8_t x : v_) s.push_back(static_cast<char>('0' + x));
    return s;
}

Mat::Mat(std::vector<Vec> rows) : rows_(std::move(rows)) {
    if (rows_.empty()) throw std::invalid_argument("gf3: matrix needs at least one row");
    cols_ = rows_[0].size();
    for (const Vec& r : rows_) {
        if (r.size() != cols_) throw std::invalid_argument("gf3: ragged rows in matrix");
    }
}

Mat Mat::identity(size_t k) {
    Mat m(k, k);
    for (size_t i = 0; i < k; ++i) m.set(i, i, 1);
    return m;
}

Mat Mat::hconcat(const Mat& a, const Mat& b) {
    if (a.row_count() != b.row_count()) throw std::invalid_argument("gf3: hconcat row count mismatch");
    Mat m(a.row_count(), a.col_count() + b.col_count());
    for (size_t i = 0; i < a.row_count(); ++i) {
        for (size_t j = 0; j < a.col_count(); ++j) m.set(i, j, a.at(i, j));
        for (size_t j = 0; j < b.col_count(); ++j) m.set(i, a.col_count() + j, b.at(i, j));
    }
    return m;
}

Mat Mat::transposed() const {
    Mat t(cols_, row_count());
    for (size_t i = 0; i < row_count(); ++i)
        for (size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

std::string Mat::str() const {
    std::string s;
    for (const Vec& r : rows_) {
        s += r.str();
        s += '\n';
    }
    return s;
}

RrefResult rref(const Mat& m) {
    Mat a = m;
    const size_t rows = a.row_count(), cols = a.col_count();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i) {
            if (a.at(i, c) != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        if (pivot != r) std::swap(a.row(pivot), a.row(r));
        if (a.at(r, c) == 2) a.row(r) = a.row(r).scaled(2);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const uint8_t f = a.at(i, c);
            if (f != 0) a.row(i) = a.row(i) - a.row(r).scaled(f);
        }
        ++r;
    }
    return {std::move(a), r};
}

}  // namespace tcc::gf3

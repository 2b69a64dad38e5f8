#include "tcc/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace tcc {

std::string WeightEnumerator::str() const {
    std::string s;
    for (size_t w = 0; w < coeffs.size(); ++w) {
        if (coeffs[w] == 0) continue;
        if (!s.empty()) s += ' ';
        s += std::to_string(w) + ":" + std::to_string(coeffs[w]);
    }
    return s;
}

LinearCode LinearCode::from_generators(const std::vector<gf3::Vec>& rows) {
    if (rows.empty()) throw std::invalid_argument("code: empty generator list");
    gf3::Mat m(rows);
    auto [reduced, rank] = gf3::rref(m);
    LinearCode c;
    c.n_ = m.col_count();
    if (rank == rows.size()) {
        c.gen_ = std::move(m);
    } else {
        std::vector<gf3::Vec> basis(reduced.rows().begin(), reduced.rows().begin() + rank);
        if (basis.empty()) {
            c.gen_ = gf3::Mat();  // zero-dimensional code
        } else {
            c.gen_ = gf3::Mat(std::move(basis));
        }
    }
    c.rref_ = std::move(reduced);
    // drop zero rows from the cached rref so it is exactly the basis rows
    if (rank < c.rref_.row_count()) {
        std::vector<gf3::Vec> rr(c.rref_.rows().begin(), c.rref_.rows().begin() + rank);
        c.rref_ = rr.empty() ? gf3::Mat() : gf3::Mat(std::move(rr));
    }
    c.have_rref_ = true;
    return c;
}

LinearCode LinearCode::parse(const std::vector<std::string>& rows) {
    std::vector<gf3::Vec> vs;
    vs.reserve(rows.size());
    for (const auto& s : rows) vs.push_back(gf3::Vec::parse(s));
    return from_generators(vs);
}

void LinearCode::for_each_codeword(const std::function<void(const gf3::Vec&)>& fn) const {
    const size_t kk = k();
    std::vector<gf3::Vec> partial;  // partial[i] = sum of chosen multiples of rows 0..i-1
    partial.reserve(kk + 1);
    partial.emplace_back(gf3::Vec(n_));
    std::vector<uint8_t> msg(kk, 0);
    // odometer over messages, most significant digit first
    while (true) {
        for (size_t i = partial.size() - 1; i < kk; ++i)
            partial.push_back(msg[i] == 0 ? partial[i] : partial[i] + gen_.row(i).scaled(msg[i]));
        fn(partial[kk]);
        size_t i = kk;
        while (i > 0 && msg[i - 1] == 2) msg[--i] = 0;
        if (i == 0) break;
        ++msg[i - 1];
        partial.resize(i);
    }
}

std::vector<gf3::Vec> LinearCode::codewords() const {
    size_t total = 1;
    for (size_t i = 0; i < k(); ++i) total *= 3;
    std::vector<gf3::Vec> out;
    out.reserve(total);
    for_each_codeword([&](const gf3::Vec& c) { out.push_back(c); });
    return out;
}

std::vector<gf3::Packed> LinearCode::packed_codewords() const {
    if (n_ > 16) throw std::invalid_argument("code: packed codewords need n <= 16");
    const size_t kk = k();
    std::vector<gf3::Packed> words{gf3::Packed{}};
    // Expand from the last generator row inward: at each level the new digit
    // becomes the most significant, so the final order is lexicographic over
    // messages with the digit for row 1 varying slowest.
    for (size_t i = kk; i-- > 0;) {
        const gf3::Packed r = gen_.row(i).packed();
        const gf3::Packed r2 = r.negated();
        std::vector<gf3::Packed> next;
        next.reserve(words.size() * 3);
        for (const auto& w : words) next.push_back(w);
        for (const auto& w : words) next.push_back(w + r);
        for (const auto& w : words) next.push_back(w + r2);
        words = std::move(next);
    }
    return words;
}

int LinearCode::min_weight() const {
    if (k() < 1) throw std::domain_error("code: min_weight needs k >= 1");
    int best = static_cast<int>(n_) + 1;
    if (n_ <= 16) {
        for (const auto& w : packed_codewords()) {
            const int wt = w.weight();
            if (wt != 0 && wt < best) best = wt;
        }
    } else {
        for_each_codeword([&](const gf3::Vec& c) {
            const int wt = c.weight();
            if (wt != 0 && wt < best) best = wt;
        });
    }
    return best;
}

WeightEnumerator LinearCode::hamming_we() const {
    WeightEnumerator we;
    we.coeffs.assign(n_ + 1, 0);
    if (gen_.row_count() == 0) {
        we.coeffs[0] = 1;
        return we;
    }
    if (n_ <= 16) {
        for (const auto& w : packed_codewords()) ++we.coeffs[static_cast<size_t>(w.weight())];
    } else {
        for_each_codeword([&](const gf3::Vec& c) { ++we.coeffs[static_cast<size_t>(c.weight())]; });
    }
    return we;
}

LinearCode LinearCode::puncture(const std::vector<size_t>& drop) const {
    std::vector<bool> gone(n_ + 1, false);
    for (size_t j : drop) {
        if (j < 1 || j > n_) throw std::invalid_argument("code: puncture coordinate out of range");
        gone[j] = true;
    }
    size_t m = 0;
    for (size_t j = 1; j <= n_; ++j) m += !gone[j];
    std::vector<gf3::Vec> rows;
    rows.reserve(k());
    for (size_t i = 0; i < k(); ++i) {
        gf3::Vec r(m);
        size_t t = 0;
        for (size_t j = 1; j <= n_; ++j)
            if (!gone[j]) r.set(t++, gen_.at(i, j - 1));
        rows.push_back(std::move(r));
    }
    if (rows.empty()) {
        LinearCode c;
        c.n_ = m;
        return c;
    }
    auto [reduced, rank] = gf3::rref(gf3::Mat(rows));
    LinearCode c;
    c.n_ = m;
    if (rank > 0) {
        std::vector<gf3::Vec> basis(reduced.rows().begin(), reduced.rows().begin() + rank);
        c.gen_ = gf3::Mat(std::move(basis));
        c.rref_ = c.gen_;
        c.have_rref_ = true;
    }
    return c;
}

LinearCode LinearCode::dual() const {
    // Solve G x = 0 from the rref of G: free columns parameterize the null space.
    auto [r, rank] = gf3::rref(gen_.row_count() ? gen_ : gf3::Mat(1, n_));
    std::vector<size_t> pivot_col;
    std::vector<bool> is_pivot(n_, false);
    size_t row = 0;
    for (size_t c = 0; c < n_ && row < rank; ++c) {
        if (r.at(row, c) != 0) {
            pivot_col.push_back(c);
            is_pivot[c] = true;
            ++row;
        }
    }
    std::vector<gf3::Vec> basis;
    for (size_t c = 0; c < n_; ++c) {
        if (is_pivot[c]) continue;
        gf3::Vec v(n_);
        v.set(c, 1);
        for (size_t i = 0; i < pivot_col.size(); ++i) v.set(pivot_col[i], gf3::neg(r.at(i, c)));
        basis.push_back(std::move(v));
    }
    if (basis.empty()) {
        LinearCode c;
        c.n_ = n_;
        return c;
    }
    return from_generators(basis);
}

bool LinearCode::is_formally_self_dual() const { return hamming_we() == dual().hamming_we(); }

const gf3::Mat& LinearCode::rref_form() const {
    if (!have_rref_) {
        if (gen_.row_count() == 0) {
            rref_ = gf3::Mat();
        } else {
            rref_ = gf3::rref(gen_).matrix;
        }
        have_rref_ = true;
    }
    return rref_;
}

bool LinearCode::same_code_as(const LinearCode& o) const {
    return n_ == o.n_ && k() == o.k() && rref_form() == o.rref_form();
}

std::vector<std::string> LinearCode::row_strings() const {
    std::vector<std::string> out;
    out.reserve(k());
    for (size_t i = 0; i < k(); ++i) out.push_back(gen_.row(i).str());
    return out;
}

}  // namespace tcc

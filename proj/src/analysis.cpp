#include "tcc/analysis.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace tcc {

uint32_t RefinedWeightEnumerator::at(size_t w, size_t n1, size_t n2) const {
    if (w >= coeffs.size() || n1 >= 3 || n2 >= 3)
        throw std::invalid_argument("refined enumerator index out of range");
    return coeffs[w][n1][n2];
}

uint64_t RefinedWeightEnumerator::total() const {
    uint64_t s = 0;
    for (const auto& plane : coeffs)
        for (const auto& row : plane)
            for (uint32_t c : row) s += c;
    return s;
}

WeightEnumerator RefinedWeightEnumerator::hamming_marginal() const {
    WeightEnumerator we;
    we.coeffs.assign(coeffs.size() + 2, 0);
    for (size_t w = 0; w < coeffs.size(); ++w)
        for (size_t n1 = 0; n1 < 3; ++n1)
            for (size_t n2 = 0; n2 < 3; ++n2) we.coeffs[w + n1 + n2] += coeffs[w][n1][n2];
    return we;
}

WeightEnumerator RefinedWeightEnumerator::x_marginal() const {
    WeightEnumerator we;
    we.coeffs.assign(coeffs.size(), 0);
    for (size_t w = 0; w < coeffs.size(); ++w)
        for (size_t n1 = 0; n1 < 3; ++n1)
            for (size_t n2 = 0; n2 < 3; ++n2) we.coeffs[w] += coeffs[w][n1][n2];
    return we;
}

std::vector<std::array<uint32_t, 4>> RefinedWeightEnumerator::terms() const {
    std::vector<std::array<uint32_t, 4>> rows;
    for (uint32_t w = 0; w < coeffs.size(); ++w)
        for (uint32_t n1 = 0; n1 < 3; ++n1)
            for (uint32_t n2 = 0; n2 < 3; ++n2)
                if (coeffs[w][n1][n2]) rows.push_back({w, n1, n2, coeffs[w][n1][n2]});
    return rows;
}

namespace {

void append_power(std::ostringstream& out, const char* sym, uint32_t e) {
    if (e == 0) return;
    out << ' ' << sym;
    if (e > 1) out << '^' << e;
}

}  // namespace

std::string RefinedWeightEnumerator::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms()) {
        if (!first) out << " + ";
        first = false;
        if (t[3] != 1 || (t[0] == 0 && t[1] == 0 && t[2] == 0)) out << t[3];
        else {
            // bare monomial: drop the leading space from append_power
            std::ostringstream mono;
            append_power(mono, "x", t[0]);
            append_power(mono, "y", t[1]);
            append_power(mono, "z", t[2]);
            out << mono.str().substr(1);
            continue;
        }
        append_power(out, "x", t[0]);
        append_power(out, "y", t[1]);
        append_power(out, "z", t[2]);
    }
    if (first) out << '0';
    return out.str();
}

RefinedWeightEnumerator refined_we(const LinearCode& c12) {
    if (c12.n() != 12 || c12.k() != 5)
        throw std::invalid_argument("refined weight enumerator requires a [12,5] code");
    RefinedWeightEnumerator r;
    c12.for_each_codeword([&](const gf3::Vec& c) {
        size_t w = 0;
        for (size_t j = 0; j < 10; ++j)
            if (c[j] != 0) ++w;
        size_t n1 = (c[10] == 1) + (c[11] == 1);
        size_t n2 = (c[10] == 2) + (c[11] == 2);
        ++r.coeffs[w][n1][n2];
    });
    return r;
}

DesignReport design_strength(const LinearCode& c) {
    const size_t n = c.n();
    if (n > 16) throw std::invalid_argument("design test limited to length <= 16");
    const int d = c.min_weight();

    // Supports of the minimum-weight codewords; negation pairs words with equal
    // support, so each distinct support must show up exactly twice.
    std::vector<uint32_t> supports;
    for (const auto& w : c.packed_codewords()) {
        if (w.weight() == d) supports.push_back(w.lo | w.hi);
    }
    std::sort(supports.begin(), supports.end());

    DesignReport rep;
    rep.point_count = n;
    rep.block_size = static_cast<size_t>(d);
    for (size_t i = 0; i < supports.size();) {
        size_t j = i;
        while (j < supports.size() && supports[j] == supports[i]) ++j;
        if (j - i != 2)
            throw std::runtime_error(
                "minimum-weight support multiplicity is not 2; the block system "
                "would need multiset semantics");
        rep.blocks.push_back(supports[i]);
        i = j;
    }

    rep.lambda.assign(1, rep.blocks.size());
    rep.max_t = 0;
    for (int t = 1; t <= d; ++t) {
        // Walk all t-subsets of the n points and count covering blocks.
        uint64_t common = 0;
        bool constant = true, first = true;
        uint32_t sub = (1u << t) - 1;
        const uint32_t limit = 1u << n;
        while (sub < limit) {
            uint64_t cover = 0;
            for (uint32_t b : rep.blocks)
                if ((b & sub) == sub) ++cover;
            if (first) {
                common = cover;
                first = false;
            } else if (cover != common) {
                constant = false;
                break;
            }
            // next mask of the same popcount
            uint32_t lo = sub & (~sub + 1), up = sub + lo;
            sub = up | (((sub ^ up) >> 2) / lo);
        }
        if (!constant) break;
        rep.lambda.push_back(common);
        rep.max_t = t;
    }
    return rep;
}

size_t PropertyTally::design_at_least(int t) const {
    size_t s = 0;
    for (const auto& [maxt, cnt] : design_strength_histogram)
        if (maxt >= t) s += cnt;
    return s;
}

PropertyTally tally_properties(const std::vector<LinearCode>& reps) {
    PropertyTally tally;
    tally.total = reps.size();
    for (const auto& c : reps) {
        if (c.is_formally_self_dual()) ++tally.formally_self_dual;
        ++tally.design_strength_histogram[design_strength(c).max_t];
    }
    return tally;
}

}  // namespace tcc

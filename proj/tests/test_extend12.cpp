#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "reference_enumerators.hpp"
#include "tcc/extend12.hpp"

using namespace tcc;

namespace {

// (I5 | A | a b) from five A rows and five column pairs
LinearCode make12(const std::vector<std::string>& a_rows,
                  const std::vector<std::pair<int, int>>& pairs) {
    std::vector<std::string> rows;
    for (size_t i = 0; i < 5; ++i) {
        std::string r(5, '0');
        r[i] = '1';
        r += a_rows[i];
        r += static_cast<char>('0' + pairs[i].first);
        r += static_cast<char>('0' + pairs[i].second);
        rows.push_back(r);
    }
    return LinearCode::parse(rows);
}

const std::vector<std::string> kA60 = {"00111", "01011", "10101", "11001", "12210"};
const std::vector<std::string> kA132 = {"00111", "01011", "10101", "11001", "11111"};
const std::vector<std::string> kA302 = {"00011", "01100", "10101", "11010", "11221"};
const std::vector<std::string> kA666 = {"00011", "01100", "10101", "11010", "12222"};
const std::vector<std::string> kA987 = {"00011", "00101", "01010", "01100", "11221"};
const std::vector<std::string> kA1245 = {"00011", "00101", "01010", "01100", "01111"};

LinearCode code60a() { return make12(kA60, {{1, 1}, {2, 2}, {2, 2}, {1, 1}, {1, 2}}); }
LinearCode code60b() { return make12(kA60, {{1, 1}, {2, 2}, {2, 2}, {1, 1}, {2, 1}}); }
LinearCode code132() { return make12(kA132, {{1, 1}, {2, 2}, {2, 2}, {1, 1}, {0, 0}}); }
LinearCode code302() { return make12(kA302, {{0, 1}, {0, 1}, {2, 2}, {2, 2}, {0, 1}}); }
LinearCode code666() { return make12(kA666, {{0, 1}, {0, 1}, {2, 2}, {2, 2}, {2, 0}}); }
LinearCode code987() { return make12(kA987, {{0, 1}, {2, 0}, {2, 0}, {0, 1}, {0, 0}}); }
LinearCode code1245() { return make12(kA1245, {{0, 1}, {2, 0}, {2, 0}, {0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("built-in [10,5,5] code") {
    LinearCode c = builtin_10_5_5();
    CHECK(c.same_code_as(fixtures::unique_10_5_5()));
    CHECK(c.min_weight() == 5);
}

TEST_CASE("column pair tables") {
    using P = std::vector<std::pair<int, int>>;
    CHECK(column_pairs(0) == P{{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}});
    CHECK(column_pairs(1) == P{{1, 1}, {2, 2}});
    CHECK(column_pairs(2) == P{{1, 2}, {2, 1}});
    for (int r = 0; r < 3; ++r)
        for (auto [a, b] : column_pairs(r)) CHECK(a * b % 3 == r);
    CHECK_THROWS_AS(column_pairs(3), std::invalid_argument);
    CHECK_THROWS_AS(column_pairs(-1), std::invalid_argument);

    CHECK(pinned_first_pair(0) == std::pair<int, int>{0, 1});
    CHECK(pinned_first_pair(1) == std::pair<int, int>{1, 1});
    CHECK(pinned_first_pair(2) == std::pair<int, int>{1, 2});
    CHECK_THROWS_AS(pinned_first_pair(7), std::invalid_argument);
}

TEST_CASE("column extensions of the [10,5,5] code") {
    LinearCode fixture = builtin_10_5_5();
    std::vector<LinearCode> cands;
    extensions(fixture, {1, 2}, [&](const LinearCode& c) { cands.push_back(c); });
    CHECK(cands.size() == 16);  // rows 2..5 pick from two pairs each

    for (const auto& c : cands) {
        CHECK(c.n() == 12);
        CHECK(c.k() == 5);
        CHECK(c.puncture({11, 12}).same_code_as(fixture));
        const gf3::Mat& g = c.generator();
        CHECK(g.at(0, 10) == 1);
        CHECK(g.at(0, 11) == 2);
        for (size_t i = 0; i < 5; ++i) {
            int residue = 0;
            for (size_t j = 0; j < 10; ++j) residue += g.at(i, j) != 0;
            CHECK(g.at(i, 10) * g.at(i, 11) % 3 == residue % 3);
        }
    }

    // normalization must match the weight residue of row 1 (here 5 = 2 mod 3)
    CHECK_THROWS_AS(extensions(fixture, {1, 1}, [](const LinearCode&) {}),
                    std::invalid_argument);
    CHECK_THROWS_AS(extensions(fixture, {0, 0}, [](const LinearCode&) {}),
                    std::invalid_argument);
    // only [10,5] codes of minimum weight 3..5 extend
    CHECK_THROWS_AS(extensions(LinearCode::parse({"110"}), {1, 2}, [](const LinearCode&) {}),
                    std::invalid_argument);
    LinearCode d1 = LinearCode::parse({"1000000000", "0100000000", "0010000000",
                                       "0001000000", "0000100000"});
    CHECK_THROWS_AS(extensions(d1, {1, 1}, [](const LinearCode&) {}), std::invalid_argument);
}

TEST_CASE("per-codeword conditions") {
    std::vector<std::string> fr = fixtures::unique_10_5_5_rows();
    auto extend_all = [&](const std::vector<std::string>& tails) {
        std::vector<std::string> rows;
        for (size_t i = 0; i < 5; ++i) rows.push_back(fr[i] + tails[i]);
        return LinearCode::parse(rows);
    };

    // the forced extension passes; flipping one pair to the other residue-2
    // option breaks the congruence
    LinearCode forced = extend_all({"12", "12", "12", "12", "12"});
    CHECK(check_c1(forced));
    CHECK(check_c2(forced));
    CHECK(check_c3(forced));
    LinearCode flipped = extend_all({"12", "21", "12", "12", "12"});
    CHECK_FALSE(check_c1(flipped));

    // a codeword supported only on the last two coordinates
    LinearCode tail_only = LinearCode::parse({"100000000000", "010000000000", "001000000000",
                                              "000100000000", "000000000011"});
    CHECK_FALSE(check_c1(tail_only));
    CHECK_FALSE(check_c2(tail_only));

    // weight-3 x-part with zero tail: passes the congruence, fails c3
    LinearCode zero_tail =
        make12(kA987, {{0, 0}, {2, 0}, {2, 0}, {0, 1}, {0, 0}});
    CHECK_FALSE(check_c3(zero_tail));

    CHECK_THROWS_AS(check_c1(builtin_10_5_5()), std::invalid_argument);
    CHECK_THROWS_AS(check_c2(builtin_10_5_5()), std::invalid_argument);
    CHECK_THROWS_AS(check_c3(builtin_10_5_5()), std::invalid_argument);
}

TEST_CASE("the two known [12,5,6] extension families") {
    LinearCode a = code60a(), b = code60b(), c = code132();
    for (const LinearCode* p : {&a, &b, &c}) {
        CHECK(check_c1(*p));
        CHECK(check_c2(*p));
        CHECK(check_c3(*p));
        CHECK(p->min_weight() == 6);
    }
    const auto& ws = testrefs::reference_refined();
    CHECK(refined_we(a) == ws[1]);
    CHECK(refined_we(b) == ws[1]);
    CHECK(refined_we(c) == ws[2]);

    // the two same-source codes are SZ-equivalent; the cross pair is not
    CHECK(sz_equivalent(a, b));
    CHECK(sz_equivalent(b, a));
    CHECK(sz_equivalent(a, a));
    CHECK_FALSE(sz_equivalent(a, c));
    CHECK_FALSE(sz_equivalent(b, c));
}

TEST_CASE("the four known [12,5,4] extensions") {
    std::vector<LinearCode> codes{code302(), code666(), code987(), code1245()};
    const auto& ws = testrefs::reference_refined();
    for (size_t i = 0; i < 4; ++i) {
        CHECK(check_c1(codes[i]));
        CHECK(check_c2(codes[i]));
        CHECK(check_c3(codes[i]));
        CHECK(codes[i].min_weight() == 4);
        CHECK(refined_we(codes[i]) == ws[3 + i]);
    }
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j) CHECK_FALSE(sz_equivalent(codes[i], codes[j]));
}

TEST_CASE("restricted maps preserve the conditions") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> bit(0, 1);
    LinearCode a = code60a();
    for (int trial = 0; trial < 10; ++trial) {
        SZMap m;
        m.base = MonomialMap::identity(10);
        for (int i = 9; i > 0; --i)
            std::swap(m.base.perm[i], m.base.perm[rng() % (i + 1)]);
        for (int i = 0; i < 10; ++i) m.base.signs[i] = bit(rng);
        m.swap_last = bit(rng);
        m.negate_last = bit(rng);

        LinearCode img = apply_sz(a, m);
        CHECK(check_c1(img));
        CHECK(check_c2(img));
        CHECK(check_c3(img));
        CHECK(img.min_weight() == a.min_weight());
        if (trial < 3) CHECK(sz_equivalent(a, img));
    }
    CHECK_THROWS_AS(apply_sz(builtin_10_5_5(), SZMap{MonomialMap::identity(10), false, false}),
                    std::invalid_argument);
    // inputs outside the c1-c3 family are rejected
    LinearCode bad = make12(kA987, {{0, 0}, {2, 0}, {2, 0}, {0, 1}, {0, 0}});
    CHECK_THROWS_AS(sz_equivalent(bad, bad), std::invalid_argument);
}

TEST_CASE("extension candidate counts follow the pair tables") {
    // rows 2..4 of this representative have weight residue 1 (two pairs each),
    // row 5 has residue 0 (five pairs)
    LinearCode rep132 = LinearCode::parse(
        {"1000000111", "0100001011", "0010010101", "0001011001", "0000111111"});
    size_t count = 0;
    extensions(rep132, {1, 1}, [&](const LinearCode&) { ++count; });
    CHECK(count == 2 * 2 * 2 * 5);
}

TEST_CASE("fixture-only extension classification") {
    Extend12Result res = extend_fixture_only();
    CHECK(res.d5_c1_classes == 1);
    REQUIRE(res.survivors.size() == 1);
    const Survivor& s = res.survivors[0];
    CHECK(s.min_weight == 6);
    CHECK(s.source_d == 5);
    CHECK(s.sz_class_size == 1);
    CHECK(s.refined == testrefs::reference_refined()[0]);
    CHECK(s.code.puncture({11, 12}).same_code_as(builtin_10_5_5()));
    CHECK(s.punctured_cert == canonical_cert(gamma(builtin_10_5_5())));

    // classification inputs are validated
    ClassificationResult empty3, empty4;
    empty3.target_d = 3;
    empty4.target_d = 4;
    CHECK_THROWS_AS(classify_12_5(empty3, empty4), std::invalid_argument);
}

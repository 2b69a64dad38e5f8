#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "tcc/code.hpp"

using namespace tcc;

TEST_CASE("construction from generators") {
    const auto full = LinearCode::from_generators({gf3::Vec{1, 0}, gf3::Vec{0, 1}});
    CHECK(full.k() == 2);
    CHECK(full.codewords().size() == 9);

    // dependent rows reduce to a basis
    const auto dep = LinearCode::from_generators({gf3::Vec{1, 1}, gf3::Vec{2, 2}});
    CHECK(dep.k() == 1);
    CHECK(dep.n() == 2);

    CHECK_THROWS_AS(LinearCode::from_generators(std::vector<gf3::Vec>{}), std::invalid_argument);

    // independent rows are kept verbatim as the generator
    const auto fixture = fixtures::unique_10_5_5();
    CHECK(fixture.k() == 5);
    CHECK(fixture.generator().row(0) == gf3::Vec::parse("1000012210"));
}

TEST_CASE("codeword enumeration order") {
    const auto repetition = LinearCode::from_generators({gf3::Vec{1, 1}});
    const auto words = repetition.codewords();
    REQUIRE(words.size() == 3);
    CHECK(words[0] == gf3::Vec{0, 0});
    CHECK(words[1] == gf3::Vec{1, 1});
    CHECK(words[2] == gf3::Vec{2, 2});

    // order is lexicographic over messages, first row's digit most significant
    const gf3::Vec r1{1, 0, 2}, r2{0, 1, 1};
    const auto two = LinearCode::from_generators({r1, r2});
    const auto ws = two.codewords();
    REQUIRE(ws.size() == 9);
    size_t idx = 0;
    for (uint8_t m1 = 0; m1 < 3; ++m1)
        for (uint8_t m2 = 0; m2 < 3; ++m2) CHECK(ws[idx++] == r1.scaled(m1) + r2.scaled(m2));

    const auto fixture = fixtures::unique_10_5_5();
    const auto all = fixture.codewords();
    CHECK(all.size() == 243);
    CHECK(all[0].is_zero());
    CHECK(std::set<gf3::Vec>(all.begin(), all.end()).size() == 243);

    // packed enumeration matches in content and order
    const auto packed = fixture.packed_codewords();
    REQUIRE(packed.size() == 243);
    for (size_t i = 0; i < 243; ++i) CHECK(packed[i] == all[i].packed());
}

TEST_CASE("minimum weight") {
    CHECK(fixtures::unique_10_5_5().min_weight() == 5);
    gf3::Vec e1(10);
    e1.set(0, 1);
    CHECK(LinearCode::from_generators({e1}).min_weight() == 1);
}

TEST_CASE("weight enumerator") {
    const auto we = fixtures::unique_10_5_5().hamming_we();
    REQUIRE(we.coeffs.size() == 11);
    CHECK(we.coeffs[0] == 1);
    CHECK(we.coeffs[5] == 72);
    CHECK(we.coeffs[6] == 60);
    CHECK(we.coeffs[7] == 0);
    CHECK(we.coeffs[8] == 90);
    CHECK(we.coeffs[9] == 20);
    uint32_t total = 0;
    for (uint32_t c : we.coeffs) total += c;
    CHECK(total == 243);
    CHECK(we.str() == "0:1 5:72 6:60 8:90 9:20");

    const auto tiny = LinearCode::from_generators({gf3::Vec{1, 1, 0}}).hamming_we();
    CHECK(tiny.coeffs == std::vector<uint32_t>{1, 0, 2, 0});
}

TEST_CASE("puncturing") {
    const auto rep = LinearCode::from_generators({gf3::Vec{1, 1}});
    const auto p = rep.puncture({2});
    CHECK(p.n() == 1);
    CHECK(p.k() == 1);

    // dimension can drop to zero
    const auto drop = LinearCode::from_generators({gf3::Vec{0, 1}, gf3::Vec{0, 2}});
    CHECK(drop.k() == 1);
    const auto zeroed = drop.puncture({2});
    CHECK(zeroed.n() == 1);
    CHECK(zeroed.k() == 0);

    // puncturing nothing is the identity
    const auto fixture = fixtures::unique_10_5_5();
    CHECK(fixture.puncture({}).same_code_as(fixture));

    CHECK_THROWS_AS(fixture.puncture({11}), std::invalid_argument);
    CHECK_THROWS_AS(fixture.puncture({0}), std::invalid_argument);
}

TEST_CASE("dual codes") {
    const auto fixture = fixtures::unique_10_5_5();
    const auto dual = fixture.dual();
    CHECK(dual.n() == 10);
    CHECK(dual.k() == 5);

    // every dual word is orthogonal to every generator row
    for (const auto& w : dual.codewords()) {
        for (size_t i = 0; i < 5; ++i) {
            uint8_t dot = 0;
            for (size_t j = 0; j < 10; ++j)
                dot = gf3::add(dot, gf3::mul(w[j], fixture.generator().at(i, j)));
            CHECK(dot == 0);
        }
    }

    // standard form: dual of (I|A) is spanned by (-A^T|I)
    const gf3::Mat a({gf3::Vec::parse("12210"), gf3::Vec::parse("01221"), gf3::Vec::parse("10122"),
                      gf3::Vec::parse("21012"), gf3::Vec::parse("22101")});
    gf3::Mat neg_at = a.transposed();
    for (size_t i = 0; i < 5; ++i) neg_at.row(i) = neg_at.row(i).negated();
    const auto expect = LinearCode::from_generators(gf3::Mat::hconcat(neg_at, gf3::Mat::identity(5)));
    CHECK(dual.same_code_as(expect));

    CHECK(fixture.dual().dual().same_code_as(fixture));
    CHECK(fixture.is_formally_self_dual());

    const auto ones = LinearCode::parse({"1111111111"});
    CHECK_FALSE(ones.is_formally_self_dual());
}

TEST_CASE("random codes sanity") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> digit(0, 2);
    for (int t = 0; t < 40; ++t) {
        std::vector<gf3::Vec> rows;
        for (int i = 0; i < 4; ++i) {
            gf3::Vec v(9);
            for (size_t j = 0; j < 9; ++j) v.set(j, static_cast<uint8_t>(digit(rng)));
            rows.push_back(v);
        }
        const auto code = LinearCode::from_generators(rows);
        if (code.k() == 0) continue;
        const auto we = code.hamming_we();
        const int d = code.min_weight();
        CHECK(we.coeffs[static_cast<size_t>(d)] > 0);
        for (int w = 1; w < d; ++w) CHECK(we.coeffs[static_cast<size_t>(w)] == 0);
        CHECK(code.dual().dual().same_code_as(code));
        CHECK(code.dual().k() == 9 - code.k());
    }
}

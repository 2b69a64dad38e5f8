#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "tcc/gf3.hpp"

using namespace tcc;

TEST_CASE("scalar field axioms, exhaustively") {
    for (uint8_t a = 0; a < 3; ++a) {
        CHECK(gf3::add(a, 0) == a);
        CHECK(gf3::mul(a, 1) == a);
        CHECK(gf3::mul(a, 0) == 0);
        CHECK(gf3::add(a, gf3::neg(a)) == 0);
        if (a != 0) CHECK(gf3::mul(a, gf3::inv(a)) == 1);
        for (uint8_t b = 0; b < 3; ++b) {
            CHECK(gf3::add(a, b) == gf3::add(b, a));
            CHECK(gf3::mul(a, b) == gf3::mul(b, a));
            CHECK(gf3::sub(a, b) == gf3::add(a, gf3::neg(b)));
            for (uint8_t c = 0; c < 3; ++c) {
                CHECK(gf3::add(gf3::add(a, b), c) == gf3::add(a, gf3::add(b, c)));
                CHECK(gf3::mul(gf3::mul(a, b), c) == gf3::mul(a, gf3::mul(b, c)));
                CHECK(gf3::mul(a, gf3::add(b, c)) == gf3::add(gf3::mul(a, b), gf3::mul(a, c)));
            }
        }
    }
    CHECK(gf3::add(1, 2) == 0);
    CHECK(gf3::mul(2, 2) == 1);
    CHECK_THROWS_AS(gf3::inv(0), std::domain_error);
}

TEST_CASE("vector addition") {
    CHECK(gf3::Vec{1, 2} + gf3::Vec{2, 1} == gf3::Vec{0, 0});
    CHECK(gf3::Vec{0, 0, 0, 1, 1} + gf3::Vec{0, 1, 1, 0, 0} == gf3::Vec{0, 1, 1, 1, 1});
    CHECK(gf3::Vec{1, 1} + gf3::Vec{1, 1} == gf3::Vec{2, 2});
    CHECK_THROWS_AS((gf3::Vec{1} + gf3::Vec{1, 0}), std::invalid_argument);
}

TEST_CASE("vector weight") {
    CHECK(gf3::Vec{0, 0, 0, 1, 1}.weight() == 2);
    CHECK(gf3::Vec(10).weight() == 0);
    CHECK(gf3::Vec{1, 2, 2, 1, 0}.weight() == 4);
    // negation preserves support
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> digit(0, 2);
    for (int t = 0; t < 100; ++t) {
        gf3::Vec v(12);
        for (size_t i = 0; i < 12; ++i) v.set(i, static_cast<uint8_t>(digit(rng)));
        CHECK(v.negated().weight() == v.weight());
        gf3::Vec u(12);
        for (size_t i = 0; i < 12; ++i) u.set(i, static_cast<uint8_t>(digit(rng)));
        CHECK((u + v).weight() <= u.weight() + v.weight());
    }
}

TEST_CASE("lexicographic order") {
    CHECK(gf3::Vec::lex_compare({0, 0, 0, 1, 1}, {0, 1, 1, 0, 0}) < 0);
    const gf3::Vec v{2, 0, 1};
    CHECK(gf3::Vec::lex_compare(v, v) == 0);
    CHECK(gf3::Vec::lex_compare({0, 0, 1, 1, 1}, {0, 0, 1, 1, 2}) < 0);
    CHECK_THROWS_AS(gf3::Vec::lex_compare({0}, {0, 1}), std::invalid_argument);

    // trichotomy and transitivity on random triples
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> digit(0, 2);
    auto rand_vec = [&] {
        gf3::Vec v5(5);
        for (size_t i = 0; i < 5; ++i) v5.set(i, static_cast<uint8_t>(digit(rng)));
        return v5;
    };
    for (int t = 0; t < 200; ++t) {
        gf3::Vec a = rand_vec(), b = rand_vec(), c = rand_vec();
        const int ab = gf3::Vec::lex_compare(a, b);
        CHECK(gf3::Vec::lex_compare(b, a) == -ab);
        CHECK((ab == 0) == (a == b));
        if (ab < 0 && gf3::Vec::lex_compare(b, c) < 0) CHECK(gf3::Vec::lex_compare(a, c) < 0);
    }
}

TEST_CASE("parse and render") {
    CHECK(gf3::Vec::parse("12210") == gf3::Vec{1, 2, 2, 1, 0});
    CHECK(gf3::Vec::parse("12210").str() == "12210");
    CHECK_THROWS_AS(gf3::Vec::parse("0031"), std::invalid_argument);
}

TEST_CASE("packed vectors agree with plain vectors") {
    // every pair of digits in one coordinate
    for (uint8_t a = 0; a < 3; ++a) {
        for (uint8_t b = 0; b < 3; ++b) {
            gf3::Packed p, q;
            p.set(3, a);
            q.set(3, b);
            CHECK((p + q).digit(3) == gf3::add(a, b));
        }
    }
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> digit(0, 2);
    for (int t = 0; t < 300; ++t) {
        gf3::Vec u(16), v(16);
        for (size_t i = 0; i < 16; ++i) {
            u.set(i, static_cast<uint8_t>(digit(rng)));
            v.set(i, static_cast<uint8_t>(digit(rng)));
        }
        CHECK((u + v).packed() == u.packed() + v.packed());
        CHECK((u - v).packed() == u.packed() - v.packed());
        CHECK(u.negated().packed() == u.packed().negated());
        CHECK(u.packed().weight() == u.weight());
        for (uint8_t c = 0; c < 3; ++c) CHECK(u.scaled(c).packed() == u.packed().scaled(c));
        CHECK(gf3::Vec::unpack(u.packed(), 16) == u);
    }
}

TEST_CASE("matrix basics") {
    CHECK(gf3::Mat::identity(3).at(1, 1) == 1);
    CHECK(gf3::Mat::identity(3).at(1, 2) == 0);
    const gf3::Mat a({gf3::Vec{1, 2}, gf3::Vec{0, 1}});
    const gf3::Mat b({gf3::Vec{2}, gf3::Vec{2}});
    const gf3::Mat ab = gf3::Mat::hconcat(a, b);
    CHECK(ab.col_count() == 3);
    CHECK(ab.row(0) == gf3::Vec{1, 2, 2});
    CHECK(a.transposed().row(0) == gf3::Vec{1, 0});
    CHECK_THROWS_AS(gf3::Mat(std::vector<gf3::Vec>{gf3::Vec{1}, gf3::Vec{1, 0}}),
                    std::invalid_argument);
}

TEST_CASE("row reduction") {
    const auto [ident, ident_rank] = gf3::rref(gf3::Mat::identity(5));
    CHECK(ident == gf3::Mat::identity(5));
    CHECK(ident_rank == 5);

    // two equal weight-1 rows collapse to rank 1
    const auto dup = gf3::rref(gf3::Mat({gf3::Vec{0, 1, 0}, gf3::Vec{0, 1, 0}}));
    CHECK(dup.rank == 1);
    CHECK(dup.matrix.row(0) == gf3::Vec{0, 1, 0});
    CHECK(dup.matrix.row(1).is_zero());

    // pivot normalization: a single row of 2s reduces to 1s
    const auto twos = gf3::rref(gf3::Mat({gf3::Vec{2, 2, 0}}));
    CHECK(twos.matrix.row(0) == gf3::Vec{1, 1, 0});

    const auto fixture = gf3::rref(fixtures::unique_10_5_5().generator());
    CHECK(fixture.rank == 5);

    // idempotence on random matrices
    std::mt19937 rng(37);
    std::uniform_int_distribution<int> digit(0, 2);
    for (int t = 0; t < 100; ++t) {
        gf3::Mat m(4, 7);
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 7; ++j) m.set(i, j, static_cast<uint8_t>(digit(rng)));
        const auto once = gf3::rref(m);
        const auto twice = gf3::rref(once.matrix);
        CHECK(once.matrix == twice.matrix);
        CHECK(once.rank == twice.rank);
    }
}

#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "orthex/matrix.hpp"

using namespace orthex;

TEST_CASE("rank of simple matrices") {
    Mat m(3, 3);
    m(0, 0) = 1;
    m(1, 1) = 1;
    CHECK(rank(m) == 2);

    Mat id = Mat::identity(5);
    CHECK(rank(id) == 5);

    // Rationals with mixed denominators.
    Mat q(2, 3);
    q(0, 0) = Rat(1, 2);
    q(0, 1) = Rat(1, 3);
    q(0, 2) = Rat(1, 6);
    q(1, 0) = Rat(3, 2);
    q(1, 1) = 1;
    q(1, 2) = Rat(1, 2);
    CHECK(rank(q) == 1);
}

TEST_CASE("rank equals rref pivot count on random integer matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
        Mat m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                m(i, j) = static_cast<long>(rng() % 7) - 3;
        Mat e = m;
        auto piv = rref(e);
        CHECK(rank(m) == piv.size());
    }
}

TEST_CASE("nullspace vectors are killed by the matrix") {
    Mat m(2, 4);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(0, 2) = 3;
    m(1, 3) = 1;
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns) {
        auto mv = m.apply(v);
        for (const auto& x : mv) CHECK(x == 0);
    }
    CHECK(rank(m) + ns.size() == m.cols());
}

TEST_CASE("echelon basis tracks span membership") {
    EchelonBasis eb(3);
    CHECK(eb.insert({1, 2, 3}));
    CHECK(eb.insert({0, 1, 1}));
    CHECK_FALSE(eb.insert({1, 3, 4}));
    CHECK(eb.rank() == 2);
    CHECK(eb.contains({2, 5, 7}));
    CHECK_FALSE(eb.contains({0, 0, 1}));
}

TEST_CASE("bracket and product shapes") {
    Mat a(2, 2), b(2, 2);
    a(0, 1) = 1;
    b(1, 0) = 1;
    Mat h = Mat::bracket(a, b);
    CHECK(h(0, 0) == 1);
    CHECK(h(1, 1) == -1);
}

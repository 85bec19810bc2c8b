#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/matrix.hpp"
#include "test_util.hpp"

#include <random>
#include <stdexcept>

using namespace cyclocode;

TEST_CASE("basic arithmetic over GF(4)") {
    FieldSpec f = make_field(4);
    GfMatrix a(f, 2, 2), b(f, 2, 2);
    a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 0; a(1, 1) = 3;
    b(0, 0) = 1; b(0, 1) = 2; b(1, 0) = 3; b(1, 1) = 0;

    GfMatrix s = a + b;
    CHECK(s(0, 0) == 3);
    CHECK(s(1, 1) == 3);

    GfMatrix p = a * b;  // [u*1+1*(u+1), u*u] ; [3*3, 0]
    CHECK(p(0, 0) == f.add(f.mul(2, 1), f.mul(1, 3)));
    CHECK(p(0, 1) == f.mul(2, 2));
    CHECK(p(1, 0) == f.mul(3, 3));
    CHECK(p(1, 1) == 0);

    CHECK(a.transpose().transpose() == a);
    CHECK((a - a).is_zero());
    CHECK(GfMatrix::identity(f, 2) * a == a);
    CHECK(a.scaled(1) == a);
    CHECK(a.scaled(0).is_zero());
}

TEST_CASE("shape and field mismatches throw") {
    FieldSpec f2 = make_field(2), f3 = make_field(3);
    GfMatrix a(f2, 2, 3), b(f2, 3, 2), c(f3, 2, 3);
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * a, std::invalid_argument);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
    CHECK_NOTHROW(a * b);
    CHECK_THROWS_AS(a.at(2, 0), std::out_of_range);
}

TEST_CASE("rank and rref") {
    FieldSpec f = make_field(2);
    GfMatrix m(f, 3, 4);
    // rows: 1011, 0110, 1101 (third = first + second)
    m(0, 0) = 1; m(0, 2) = 1; m(0, 3) = 1;
    m(1, 1) = 1; m(1, 2) = 1;
    m(2, 0) = 1; m(2, 1) = 1; m(2, 3) = 1;
    CHECK(rank(m) == 2);

    RrefResult rr = rref(m);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 1});
    for (std::size_t j = 0; j < 4; ++j) CHECK(rr.reduced(2, j) == 0);

    // preferring the last columns moves the pivots there
    RrefResult rr2 = rref(m, {3, 2, 1, 0});
    CHECK(rr2.pivots == std::vector<std::size_t>{3, 2});
}

TEST_CASE("rref rejects a partial column order") {
    FieldSpec f = make_field(2);
    GfMatrix m(f, 2, 3);
    CHECK_THROWS_AS(rref(m, {0, 1}), std::invalid_argument);
}

TEST_CASE("null space is the kernel") {
    std::mt19937 rng(7);
    for (std::uint32_t l : {2u, 3u, 4u, 5u}) {
        FieldSpec f = make_field(l);
        for (int trial = 0; trial < 10; ++trial) {
            GfMatrix m = testutil::random_matrix(f, 4, 7, rng);
            GfMatrix ns = null_space(m);
            CHECK(ns.rows() == 7 - rank(m));
            CHECK((m * ns.transpose()).is_zero());
            CHECK(rank(ns) == ns.rows());
        }
    }
}

TEST_CASE("row space comparison ignores the presentation") {
    std::mt19937 rng(11);
    FieldSpec f = make_field(5);
    GfMatrix m = testutil::random_matrix(f, 3, 6, rng);
    GfMatrix shuffled(f, 3, 6);
    for (std::size_t j = 0; j < 6; ++j) {
        shuffled(0, j) = f.mul(3, m(2, j));
        shuffled(1, j) = f.add(m(0, j), m(1, j));
        shuffled(2, j) = m(0, j);
    }
    if (rank(m) == rank(shuffled))  // the row operations above are invertible iff rank matches
        CHECK(same_row_space(m, shuffled));
    GfMatrix other = testutil::random_matrix(f, 3, 6, rng);
    CHECK(same_row_space(m, m));
    CHECK_FALSE(same_row_space(m, testutil::random_matrix(f, 3, 7, rng)));
    (void)other;
}

TEST_CASE("text format round trip") {
    FieldSpec f = make_field(4);
    GfMatrix m(f, 2, 3);
    m(0, 0) = 2; m(0, 1) = 3; m(0, 2) = 1;
    m(1, 0) = 0; m(1, 1) = 1; m(1, 2) = 2;
    std::string text = m.to_text();
    CHECK(text == "field=4 rows=2 cols=3\nu v 1\n0 1 u\n");
    CHECK(matrix_from_text(text) == m);

    GfMatrix b(make_field(3), 2, 2);
    b(0, 0) = 2; b(1, 1) = 1;
    CHECK(matrix_from_text(b.to_text()) == b);
}

TEST_CASE("text format rejects malformed input") {
    CHECK_THROWS_AS(matrix_from_text(""), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("rows=2 cols=2 field=2\n0 0\n0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("field=2 rows=2 cols=2\n1 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("field=2 rows=1 cols=2\n1 0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("field=2 rows=1 cols=2\n1 2\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("field=6 rows=1 cols=1\n0\n"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text("field=x rows=1 cols=1\n0\n"), std::invalid_argument);
}

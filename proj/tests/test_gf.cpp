#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/gf.hpp"

#include <stdexcept>

using namespace cyclocode;

TEST_CASE("supported and unsupported orders") {
    for (std::uint32_t l : {2u, 3u, 4u, 5u, 7u, 13u, 251u, 257u, 65521u})
        CHECK(make_field(l).order() == l);
    for (std::uint32_t l : {0u, 1u, 6u, 8u, 9u, 15u, 25u, 65536u, 65537u})
        CHECK_THROWS_AS(make_field(l), std::invalid_argument);
    CHECK_THROWS_WITH(make_field(6), "unsupported field order 6");
}

TEST_CASE("characteristic") {
    CHECK(make_field(2).characteristic() == 2);
    CHECK(make_field(4).characteristic() == 2);
    CHECK(make_field(3).characteristic() == 3);
    CHECK(make_field(65521).characteristic() == 65521);
}

TEST_CASE("GF(4) multiplication table") {
    FieldSpec f = make_field(4);
    const felem u = 2, v = 3;  // v = u + 1
    CHECK(f.mul(u, u) == v);       // u^2 = u + 1
    CHECK(f.mul(u, v) == 1);       // u * (u+1) = u^2 + u = 1
    CHECK(f.mul(v, v) == u);       // (u+1)^2 = u^2 + 1 = u
    CHECK(f.inv(u) == v);
    CHECK(f.inv(v) == u);
    CHECK(f.add(u, v) == 1);
    CHECK(f.add(u, u) == 0);
    CHECK(f.neg(u) == u);
    // Frobenius: squaring is additive in characteristic 2
    for (felem a = 0; a < 4; ++a)
        for (felem b = 0; b < 4; ++b)
            CHECK(f.mul(f.add(a, b), f.add(a, b)) == f.add(f.mul(a, a), f.mul(b, b)));
}

TEST_CASE("field axioms hold exhaustively for small orders") {
    for (std::uint32_t l : {2u, 3u, 4u, 5u, 7u, 13u}) {
        FieldSpec f = make_field(l);
        for (felem a = 0; a < l; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            CHECK(f.mul(a, 0) == 0);
            if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
            for (felem b = 0; b < l; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                CHECK(f.sub(a, b) == f.add(a, f.neg(b)));
                for (felem c = 0; c < l; ++c) {
                    CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
                    CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("large prime field uses modular arithmetic") {
    FieldSpec f = make_field(65521);
    CHECK(f.add(65520, 1) == 0);
    CHECK(f.mul(256, 256) == 65536 % 65521);
    felem a = 12345;
    CHECK(f.mul(a, f.inv(a)) == 1);
    CHECK(f.neg(1) == 65520);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(make_field(2).inv(0), std::domain_error);
    CHECK_THROWS_WITH(make_field(5).inv(0), "division by zero in GF(5)");
}

TEST_CASE("integer reduction into the field") {
    FieldSpec f2 = make_field(2), f4 = make_field(4), f5 = make_field(5);
    CHECK(f2.from_int(35) == 1);
    CHECK(f4.from_int(35) == 1);  // reduction mod the characteristic, not the order
    CHECK(f4.from_int(-3) == 1);
    CHECK(f4.from_int(4) == 0);
    CHECK(f5.from_int(-3) == 2);
    CHECK(f5.from_int(12) == 2);
}

TEST_CASE("tokens") {
    FieldSpec f4 = make_field(4);
    CHECK(f4.token(3) == "u+1");
    CHECK(f4.file_token(3) == "v");
    CHECK(f4.token(2) == "u");
    CHECK(f4.parse_token("u") == 2);
    CHECK(f4.parse_token("v") == 3);
    CHECK(f4.parse_token("u+1") == 3);
    CHECK(f4.parse_token("2") == 2);
    CHECK(f4.parse_token("3") == 3);
    CHECK_THROWS_AS(f4.parse_token("w"), std::invalid_argument);

    FieldSpec f7 = make_field(7);
    CHECK(f7.token(6) == "6");
    CHECK(f7.parse_token("6") == 6);
    CHECK_THROWS_AS(f7.parse_token("7"), std::invalid_argument);
    CHECK_THROWS_AS(f7.parse_token("u"), std::invalid_argument);
    CHECK_THROWS_AS(f7.parse_token(""), std::invalid_argument);
}

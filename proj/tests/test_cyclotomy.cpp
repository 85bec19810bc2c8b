#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/cyclotomy.hpp"

#include <numeric>
#include <stdexcept>

using namespace cyclocode;
using u32v = std::vector<std::uint32_t>;

TEST_CASE("context for p=3 q=5") {
    CyclotomicContext c = build_context(3, 5);
    CHECK(c.n == 15);
    CHECK(c.e == 4);
    CHECK(c.g == 2);
    CHECK(c.x == 11);
    CHECK(c.even_case);
    CHECK(c.mult_p == u32v{3, 6, 9, 12});
    CHECK(c.mult_q == u32v{5, 10});
    CHECK(c.c0 == u32v{1, 2, 4, 8});
    CHECK(c.c1 == u32v{7, 11, 13, 14});
}

TEST_CASE("context for p=5 q=7") {
    CyclotomicContext c = build_context(5, 7);
    CHECK(c.n == 35);
    CHECK(c.e == 12);
    CHECK(c.g == 3);
    CHECK(c.x == 8);
    CHECK(c.even_case);
    CHECK(c.mult_p == u32v{5, 10, 15, 20, 25, 30});
    CHECK(c.mult_q == u32v{7, 14, 21, 28});
    CHECK(c.c0 == u32v{1, 3, 4, 9, 11, 12, 13, 16, 17, 27, 29, 33});
    CHECK(c.c1 == u32v{2, 6, 8, 18, 19, 22, 23, 24, 26, 31, 32, 34});
}

TEST_CASE("context for p=3 q=7 (matched residues)") {
    CyclotomicContext c = build_context(3, 7);
    CHECK(c.n == 21);
    CHECK(c.e == 6);
    CHECK(c.g == 5);
    CHECK(c.x == 8);
    CHECK_FALSE(c.even_case);
    CHECK(c.c0 == u32v{1, 4, 5, 16, 17, 20});
    CHECK(c.c1 == u32v{2, 8, 10, 11, 13, 19});
    CHECK(c.mult_p == u32v{3, 6, 9, 12, 15, 18});
    CHECK(c.mult_q == u32v{7, 14});
}

TEST_CASE("swapping p and q swaps the multiple classes only") {
    CyclotomicContext a = build_context(5, 7), b = build_context(7, 5);
    CHECK(b.x == 31);
    CHECK(a.c0 == b.c0);
    CHECK(a.c1 == b.c1);
    CHECK(a.mult_p == b.mult_q);
    CHECK(a.mult_q == b.mult_p);
}

TEST_CASE("input validation") {
    CHECK_THROWS_WITH(build_context(13, 17), "gcd(p-1, q-1) = 4 != 2");
    CHECK_THROWS_AS(build_context(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(build_context(2, 7), std::invalid_argument);
    CHECK_THROWS_AS(build_context(9, 5), std::invalid_argument);
    CHECK_THROWS_AS(build_context(15, 7), std::invalid_argument);
    CHECK_THROWS_WITH(build_context(9, 5), "p and q must be distinct odd primes");
    // 1013 * 1019 is beyond the modulus limit (and gcd(1012, 1018) = 2)
    CHECK_THROWS_AS(build_context(1013, 1019), std::invalid_argument);
}

TEST_CASE("common primitive roots") {
    CHECK(common_primitive_root(3, 5) == 2);
    CHECK(common_primitive_root(5, 7) == 3);
    CHECK(common_primitive_root(3, 7) == 5);
    CHECK(common_primitive_root(7, 5) == 3);
    CHECK_THROWS_AS(common_primitive_root(5, 5), std::invalid_argument);
}

TEST_CASE("classification") {
    CyclotomicContext c = build_context(3, 5);
    CHECK(classify(c, 0) == CycClass::Zero);
    CHECK(classify(c, 6) == CycClass::MultP);
    CHECK(classify(c, 10) == CycClass::MultQ);
    CHECK(classify(c, 4) == CycClass::C0);
    CHECK(classify(c, 13) == CycClass::C1);
    CHECK_THROWS_AS(classify(c, 15), std::out_of_range);
}

TEST_CASE("partition properties on a sweep") {
    // every valid pair with pq <= 300: classes partition Z_n and are closed
    // under multiplication by g
    for (std::uint32_t p = 3; p <= 100; p += 2) {
        for (std::uint32_t q = 3; q <= 100; q += 2) {
            if (p == q || p * q > 300) continue;
            CyclotomicContext c;
            try {
                c = build_context(p, q);
            } catch (const std::invalid_argument&) {
                continue;
            }
            CHECK(c.c0.size() == c.e);
            CHECK(c.c1.size() == c.e);
            CHECK(c.mult_p.size() == q - 1);
            CHECK(c.mult_q.size() == p - 1);
            for (std::uint32_t a : c.c0)
                CHECK(classify(c, static_cast<std::uint32_t>(std::uint64_t(a) * c.g % c.n)) ==
                      CycClass::C0);
            for (std::uint32_t a : c.c1)
                CHECK(classify(c, static_cast<std::uint32_t>(std::uint64_t(a) * c.g % c.n)) ==
                      CycClass::C1);
        }
    }
}

TEST_CASE("cyclotomic numbers: frozen values") {
    CyclotomicContext c35 = build_context(3, 5);
    CHECK(cyclotomic_number_direct(c35, 0, 0) == 1);
    CHECK(cyclotomic_number_direct(c35, 0, 1) == 0);
    CHECK(cyclotomic_number_direct(c35, 1, 0) == 1);
    CHECK(cyclotomic_number_direct(c35, 1, 1) == 1);

    CyclotomicContext c57 = build_context(5, 7);
    CHECK(cyclotomic_number_direct(c57, 0, 0) == 4);
    CHECK(cyclotomic_number_direct(c57, 0, 1) == 3);
    CHECK(cyclotomic_number_direct(c57, 1, 0) == 4);
    CHECK(cyclotomic_number_direct(c57, 1, 1) == 4);

    CyclotomicContext c37 = build_context(3, 7);
    CHECK(cyclotomic_number_direct(c37, 0, 0) == 2);
    CHECK(cyclotomic_number_direct(c37, 0, 1) == 1);
    CHECK(cyclotomic_number_direct(c37, 1, 0) == 1);
    CHECK(cyclotomic_number_direct(c37, 1, 1) == 1);

    for (unsigned i = 0; i < 2; ++i) {
        for (unsigned j = 0; j < 2; ++j) {
            CHECK(cyclotomic_number_closed_form(c35, i, j) == cyclotomic_number_direct(c35, i, j));
            CHECK(cyclotomic_number_closed_form(c57, i, j) == cyclotomic_number_direct(c57, i, j));
            CHECK(cyclotomic_number_closed_form(c37, i, j) == cyclotomic_number_direct(c37, i, j));
        }
    }
    CHECK_THROWS_AS(cyclotomic_number_direct(c35, 2, 0), std::invalid_argument);
}

TEST_CASE("minus one lands opposite to the published rule") {
    struct Row {
        std::uint32_t p, q;
        CycClass computed, published;
    };
    for (Row r : {Row{3, 5, CycClass::C1, CycClass::C0}, Row{5, 7, CycClass::C1, CycClass::C0},
                  Row{3, 7, CycClass::C0, CycClass::C1}}) {
        MinusOneReport mo = minus_one_class(build_context(r.p, r.q));
        CHECK(mo.computed == r.computed);
        CHECK(mo.published == r.published);
        CHECK_FALSE(mo.agree);
    }
}

TEST_CASE("parity rule matches direct counts in the mixed case") {
    CyclotomicContext c57 = build_context(5, 7);  // (p+q)/4 = 3 odd
    std::array<unsigned, 4> pred57 = cyclotomic_number_parities(c57);
    CHECK(pred57 == std::array<unsigned, 4>{0, 1, 0, 0});

    CyclotomicContext c35 = build_context(3, 5);  // (p+q)/4 = 2 even
    std::array<unsigned, 4> pred35 = cyclotomic_number_parities(c35);
    CHECK(pred35 == std::array<unsigned, 4>{1, 0, 1, 1});

    const unsigned idx[4][2] = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    for (int t = 0; t < 4; ++t) {
        CHECK(pred57[t] == cyclotomic_number_direct(c57, idx[t][0], idx[t][1]) % 2);
        CHECK(pred35[t] == cyclotomic_number_direct(c35, idx[t][0], idx[t][1]) % 2);
    }

    CHECK_THROWS_AS(cyclotomic_number_parities(build_context(3, 7)), std::domain_error);
}

TEST_CASE("class names") {
    CHECK(std::string(cyc_class_name(CycClass::C0)) == "C0");
    CHECK(std::string(cyc_class_name(CycClass::MultP)) == "P");
}

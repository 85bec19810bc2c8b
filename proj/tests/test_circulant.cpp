#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cyclocode/circulant.hpp"

#include <stdexcept>

using namespace cyclocode;

namespace {

GfMatrix explicit_combination(const CyclotomicContext& ctx, const FieldSpec& f, const Mask& d) {
    GfMatrix acc = basis_matrix(ctx, f, CycClass::Zero).scaled(d[0]);
    acc = acc + basis_matrix(ctx, f, CycClass::MultP).scaled(d[1]);
    acc = acc + basis_matrix(ctx, f, CycClass::MultQ).scaled(d[2]);
    acc = acc + basis_matrix(ctx, f, CycClass::C0).scaled(d[3]);
    return acc + basis_matrix(ctx, f, CycClass::C1).scaled(d[4]);
}

}  // namespace

TEST_CASE("basis matrices are difference matrices of their classes") {
    CyclotomicContext ctx = build_context(3, 5);
    FieldSpec f = make_field(2);

    GfMatrix z = basis_matrix(ctx, f, CycClass::Zero);
    CHECK(z == GfMatrix::identity(f, ctx.n));

    GfMatrix p = basis_matrix(ctx, f, CycClass::MultP);
    for (std::size_t i = 0; i < ctx.n; ++i) {
        unsigned row_sum = 0;
        for (std::size_t j = 0; j < ctx.n; ++j) {
            std::uint32_t diff = static_cast<std::uint32_t>((j + ctx.n - i) % ctx.n);
            CHECK(p(i, j) == (classify(ctx, diff) == CycClass::MultP ? 1 : 0));
            row_sum += p(i, j);
        }
        CHECK(row_sum == ctx.q - 1);  // |P| = q - 1 ones per row
    }

    GfMatrix a1 = basis_matrix(ctx, f, CycClass::C0);
    GfMatrix a2 = basis_matrix(ctx, f, CycClass::C1);
    CHECK(a1.transpose() == a2);  // -1 in C1 for this pair
}

TEST_CASE("mask matrix assembles the linear combination") {
    CyclotomicContext ctx = build_context(3, 5);
    FieldSpec f = make_field(2);

    GfMatrix all = mask_matrix(ctx, f, Mask{1, 1, 1, 1, 1});
    for (std::size_t i = 0; i < ctx.n; ++i)
        for (std::size_t j = 0; j < ctx.n; ++j) CHECK(all(i, j) == 1);

    CHECK(mask_matrix(ctx, f, Mask{1, 0, 0, 0, 0}) == GfMatrix::identity(f, ctx.n));

    FieldSpec f5 = make_field(5);
    Mask m{2, 3, 1, 4, 0};
    CHECK(mask_matrix(ctx, f5, m) == explicit_combination(ctx, f5, m));
}

TEST_CASE("frozen D-coefficients") {
    FieldSpec f2 = make_field(2), f4 = make_field(4);
    CHECK(d_coefficients_direct(build_context(3, 7), f2, Mask{1, 0, 0, 1, 1}) ==
          Mask{1, 0, 0, 1, 1});
    CHECK(d_coefficients_direct(build_context(5, 7), f2, Mask{1, 0, 1, 0, 1}) ==
          Mask{1, 0, 0, 0, 0});
    CHECK(d_coefficients_direct(build_context(3, 5), f4, Mask{0, 0, 1, 3, 2}) ==
          Mask{0, 1, 1, 1, 1});
}

TEST_CASE("direct coefficients reproduce the full Gram matrix") {
    // also exercises odd characteristic and the matched-residue case, where
    // the closed form does not apply but the direct computation must
    for (std::uint32_t l : {2u, 3u, 4u, 5u}) {
        FieldSpec f = make_field(l);
        for (auto [p, q] : {std::pair<std::uint32_t, std::uint32_t>{3, 5}, {3, 7}}) {
            CyclotomicContext ctx = build_context(p, q);
            Mask m{1, static_cast<felem>(l - 1), 0, 1, static_cast<felem>(l / 2)};
            GfMatrix M = mask_matrix(ctx, f, m);
            Mask d = d_coefficients_direct(ctx, f, m);
            CHECK(M * M.transpose() == explicit_combination(ctx, f, d));
        }
    }
}

TEST_CASE("closed form matches direct over every mask") {
    for (auto [p, q] : {std::pair<std::uint32_t, std::uint32_t>{3, 5}, {5, 7}}) {
        CyclotomicContext ctx = build_context(p, q);
        for (std::uint32_t l : {2u, 4u}) {
            FieldSpec f = make_field(l);
            std::uint32_t total = l * l * l * l * l;
            for (std::uint32_t code = 0; code < total; ++code) {
                Mask m;
                std::uint32_t c = code;
                for (int t = 4; t >= 0; --t) {
                    m[static_cast<std::size_t>(t)] = static_cast<felem>(c % l);
                    c /= l;
                }
                Mask direct = d_coefficients_direct(ctx, f, m);
                CHECK(direct == d_coefficients_closed_form(ctx, f, m));
                CHECK(direct[3] == direct[4]);  // Gram matrix is symmetric
            }
        }
    }
}

TEST_CASE("closed form requires mixed residues mod 4") {
    CHECK_THROWS_AS(d_coefficients_closed_form(build_context(3, 7), make_field(2),
                                               Mask{1, 0, 0, 1, 1}),
                    std::domain_error);
}

TEST_CASE("product identities hold in characteristic 2") {
    for (auto [p, q, l] : {std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>{5, 7, 2},
                           {3, 5, 2},
                           {3, 5, 4}}) {
        IdentityReport rep = verify_product_identities(build_context(p, q), make_field(l));
        CHECK(rep.all_pass);
        CHECK(rep.checks.size() == 20);
        for (const IdentityCheck& c : rep.checks) {
            CHECK(c.pass);
            CHECK(c.detail.empty());
        }
    }
}

TEST_CASE("product identities reject unsupported settings") {
    CHECK_THROWS_AS(verify_product_identities(build_context(3, 7), make_field(2)),
                    std::domain_error);
    CHECK_THROWS_AS(verify_product_identities(build_context(3, 5), make_field(3)),
                    std::invalid_argument);
}

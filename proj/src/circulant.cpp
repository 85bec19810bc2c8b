#include "cyclocode/circulant.hpp"

#include <optional>
#include <stdexcept>

namespace cyclocode {

namespace {

// Index of the basis coefficient that a class picks out of a Mask.
std::size_t mask_slot(CycClass c) { return static_cast<std::size_t>(c); }

// First row of M * M^T for M = mask_matrix(m); entry a is
// sum_k m(k) * m(k - a). The whole product is determined by this row since
// entry (i, j) depends only on (j - i) mod n.
std::vector<felem> product_first_row(const CyclotomicContext& ctx, const FieldSpec& f,
                                     const Mask& m) {
    const std::uint32_t n = ctx.n;
    std::vector<felem> mv(n);
    for (std::uint32_t a = 0; a < n; ++a) mv[a] = m[mask_slot(ctx.label[a])];
    std::vector<felem> row(n, 0);
    for (std::uint32_t a = 0; a < n; ++a) {
        felem acc = 0;
        for (std::uint32_t k = 0; k < n; ++k) {
            felem lhs = mv[k];
            if (lhs == 0) continue;
            felem rhs = mv[(k + n - a) % n];
            if (rhs == 0) continue;
            acc = f.add(acc, f.mul(lhs, rhs));
        }
        row[a] = acc;
    }
    return row;
}

// Reads a class-constant first row off as basis coefficients.
Mask coefficients_from_row(const CyclotomicContext& ctx, const FieldSpec& f,
                           const std::vector<felem>& row) {
    std::array<std::optional<felem>, 5> seen;
    for (std::uint32_t a = 0; a < ctx.n; ++a) {
        std::size_t slot = mask_slot(ctx.label[a]);
        if (!seen[slot]) {
            seen[slot] = row[a];
        } else if (*seen[slot] != row[a]) {
            throw std::runtime_error("product is not constant on class " +
                                     std::string(cyc_class_name(ctx.label[a])) + ": values " +
                                     f.token(*seen[slot]) + " and " + f.token(row[a]));
        }
    }
    Mask d{};
    for (std::size_t s = 0; s < 5; ++s) d[s] = seen[s].value_or(0);
    return d;
}

}  // namespace

GfMatrix basis_matrix(const CyclotomicContext& ctx, const FieldSpec& field, CycClass which) {
    GfMatrix m(field, ctx.n, ctx.n);
    for (std::uint32_t i = 0; i < ctx.n; ++i)
        for (std::uint32_t j = 0; j < ctx.n; ++j)
            if (ctx.label[(j + ctx.n - i) % ctx.n] == which) m(i, j) = 1;
    return m;
}

GfMatrix mask_matrix(const CyclotomicContext& ctx, const FieldSpec& field, const Mask& m) {
    GfMatrix r(field, ctx.n, ctx.n);
    for (std::uint32_t i = 0; i < ctx.n; ++i)
        for (std::uint32_t j = 0; j < ctx.n; ++j)
            r(i, j) = m[mask_slot(ctx.label[(j + ctx.n - i) % ctx.n])];
    return r;
}

Mask d_coefficients_direct(const CyclotomicContext& ctx, const FieldSpec& field, const Mask& m) {
    return coefficients_from_row(ctx, field, product_first_row(ctx, field, m));
}

Mask d_coefficients_closed_form(const CyclotomicContext& ctx, const FieldSpec& field,
                                const Mask& m) {
    if (!ctx.even_case)
        throw std::domain_error(
            "closed coefficient formulas require p and q in opposite residue classes mod 4");
    const FieldSpec& f = field;
    felem two = f.from_int(2);
    felem c00 = f.from_int(static_cast<std::int64_t>(cyclotomic_number_closed_form(ctx, 0, 0)));
    felem c01 = f.from_int(static_cast<std::int64_t>(cyclotomic_number_closed_form(ctx, 0, 1)));
    felem c10 = f.from_int(static_cast<std::int64_t>(cyclotomic_number_closed_form(ctx, 1, 0)));
    auto [m0, m1, m2, m3, m4] = m;

    felem sq34 = f.add(f.mul(m3, m3), f.mul(m4, m4));
    felem s34 = f.add(m3, m4);

    Mask d{};
    d[0] = f.mul(m0, m0);
    // "plain" slot: mi^2 + 2*m0*mi; "loaded" slot additionally picks up the
    // class-pair terms mj^2 + mk^2 and the cross products with m3, m4.
    felem plain1 = f.add(f.mul(m1, m1), f.mul(two, f.mul(m0, m1)));
    felem plain2 = f.add(f.mul(m2, m2), f.mul(two, f.mul(m0, m2)));
    if (ctx.p % 4 == 1) {
        d[1] = plain1;
        d[2] = f.add(plain2, f.add(sq34, f.mul(two, f.mul(m1, s34))));
    } else {
        d[1] = f.add(plain1, f.add(sq34, f.mul(two, f.mul(m2, s34))));
        d[2] = plain2;
    }
    felem cross = f.add(f.mul(f.add(f.add(m0, m1), m2), s34), f.mul(two, f.mul(m1, m2)));
    cross = f.add(cross, f.mul(c00, sq34));
    cross = f.add(cross, f.mul(f.add(c10, c01), f.mul(m3, m4)));
    d[3] = cross;
    d[4] = cross;
    return d;
}

IdentityReport verify_product_identities(const CyclotomicContext& ctx, const FieldSpec& field) {
    if (field.characteristic() != 2)
        throw std::invalid_argument("product identities require a field of characteristic 2");
    if (!ctx.even_case)
        throw std::domain_error(
            "product identities require p and q in opposite residue classes mod 4");

    const GfMatrix P = basis_matrix(ctx, field, CycClass::MultP);
    const GfMatrix Q = basis_matrix(ctx, field, CycClass::MultQ);
    const GfMatrix A1 = basis_matrix(ctx, field, CycClass::C0);
    const GfMatrix A2 = basis_matrix(ctx, field, CycClass::C1);

    felem c00 = field.from_int(static_cast<std::int64_t>(cyclotomic_number_direct(ctx, 0, 0)));
    felem c01 = field.from_int(static_cast<std::int64_t>(cyclotomic_number_direct(ctx, 0, 1)));
    felem c10 = field.from_int(static_cast<std::int64_t>(cyclotomic_number_direct(ctx, 1, 0)));
    felem c11 = field.from_int(static_cast<std::int64_t>(cyclotomic_number_direct(ctx, 1, 1)));

    auto combo = [&](const Mask& m) { return mask_matrix(ctx, field, m); };

    IdentityReport report;
    report.all_pass = true;
    auto check_eq = [&](std::string name, const GfMatrix& lhs, const GfMatrix& rhs) {
        IdentityCheck c{std::move(name), lhs == rhs, ""};
        if (!c.pass) {
            try {
                // decompose row 0 of the actual product for the report
                std::array<std::optional<felem>, 5> seen;
                std::string vals;
                Mask got{};
                bool constant = true;
                for (std::uint32_t a = 0; a < ctx.n && constant; ++a) {
                    std::size_t slot = static_cast<std::size_t>(ctx.label[a]);
                    felem v = lhs(0, a);
                    if (!seen[slot]) seen[slot] = v;
                    else if (*seen[slot] != v) constant = false;
                }
                if (constant) {
                    for (std::size_t s = 0; s < 5; ++s) got[s] = seen[s].value_or(0);
                    c.detail = "actual = (" + field.token(got[0]) + ", " + field.token(got[1]) +
                               ", " + field.token(got[2]) + ", " + field.token(got[3]) + ", " +
                               field.token(got[4]) + ") on (I, P, Q, A1, A2)";
                } else {
                    c.detail = "product is not constant on the classes";
                }
            } catch (const std::exception& e) {
                c.detail = e.what();
            }
            report.all_pass = false;
        }
        report.checks.push_back(std::move(c));
    };

    check_eq("A1 = A2^T", A1, A2.transpose());
    check_eq("A2 = A1^T", A2, A1.transpose());
    check_eq("P = P^T", P, P.transpose());
    check_eq("Q = Q^T", Q, Q.transpose());

    bool p1 = ctx.p % 4 == 1;
    // products with P and Q: over the branch where p = 1 (mod 4) the map
    // X -> P*X sends A1, A2 to Q + A2, Q + A1 and Q absorbs them; the other
    // branch swaps the roles of P and Q.
    const Mask QA2{0, 0, 1, 0, 1}, QA1{0, 0, 1, 1, 0};
    const Mask PA2{0, 1, 0, 0, 1}, PA1{0, 1, 0, 1, 0};
    const Mask justA1{0, 0, 0, 1, 0}, justA2{0, 0, 0, 0, 1};
    check_eq(p1 ? "P*A1 = Q + A2" : "P*A1 = A1", P * A1, combo(p1 ? QA2 : justA1));
    check_eq(p1 ? "A1*P = Q + A2" : "A1*P = A1", A1 * P, combo(p1 ? QA2 : justA1));
    check_eq(p1 ? "P*A2 = Q + A1" : "P*A2 = A2", P * A2, combo(p1 ? QA1 : justA2));
    check_eq(p1 ? "A2*P = Q + A1" : "A2*P = A2", A2 * P, combo(p1 ? QA1 : justA2));
    check_eq(p1 ? "Q*A1 = A1" : "Q*A1 = P + A2", Q * A1, combo(p1 ? justA1 : PA2));
    check_eq(p1 ? "A1*Q = A1" : "A1*Q = P + A2", A1 * Q, combo(p1 ? justA1 : PA2));
    check_eq(p1 ? "Q*A2 = A2" : "Q*A2 = P + A1", Q * A2, combo(p1 ? justA2 : PA1));
    check_eq(p1 ? "A2*Q = A2" : "A2*Q = P + A1", A2 * Q, combo(p1 ? justA2 : PA1));

    check_eq("P*Q = A1 + A2", P * Q, combo({0, 0, 0, 1, 1}));
    check_eq("Q*P = A1 + A2", Q * P, combo({0, 0, 0, 1, 1}));
    check_eq("P^2 = P", P * P, combo({0, 1, 0, 0, 0}));
    check_eq("Q^2 = Q", Q * Q, combo({0, 0, 1, 0, 0}));

    check_eq("A1^2 = (1,0)*A1 + (0,1)*A2", A1 * A1, combo({0, 0, 0, c10, c01}));
    check_eq("A2^2 = (0,1)*A1 + (1,0)*A2", A2 * A2, combo({0, 0, 0, c01, c10}));
    // the extra summand is Q when p = 1 (mod 4), P otherwise
    Mask cross1{0, 0, 0, c00, c11}, cross2{0, 0, 0, c11, c00};
    cross1[p1 ? 2 : 1] = 1;
    cross2[p1 ? 2 : 1] = 1;
    check_eq(p1 ? "A1*A2 = Q + (0,0)*A1 + (1,1)*A2" : "A1*A2 = P + (0,0)*A1 + (1,1)*A2", A1 * A2,
             combo(cross1));
    check_eq(p1 ? "A2*A1 = Q + (1,1)*A1 + (0,0)*A2" : "A2*A1 = P + (1,1)*A1 + (0,0)*A2", A2 * A1,
             combo(cross2));

    return report;
}

}  // namespace cyclocode

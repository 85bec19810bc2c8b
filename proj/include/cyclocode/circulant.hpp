#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclocode/cyclotomy.hpp"
#include "cyclocode/matrix.hpp"

namespace cyclocode {

/// Coefficients (m0..m4) on the basis (I, P, Q, A1, A2).
using Mask = std::array<felem, 5>;

/// n x n 0/1 matrix of a class: entry (i, j) = 1 iff (j - i) mod n lies in
/// the class. CycClass::Zero yields the identity.
GfMatrix basis_matrix(const CyclotomicContext& ctx, const FieldSpec& field, CycClass which);

/// m0*I + m1*P + m2*Q + m3*A1 + m4*A2 assembled entrywise.
GfMatrix mask_matrix(const CyclotomicContext& ctx, const FieldSpec& field, const Mask& m);

/// Coefficients (d0..d4) with M * M^T = d0*I + d1*P + d2*Q + d3*A1 + d4*A2
/// for M = mask_matrix(ctx, field, m), read off the product directly.
/// Throws std::runtime_error if the product is not constant on some class.
Mask d_coefficients_direct(const CyclotomicContext& ctx, const FieldSpec& field, const Mask& m);

/// Same coefficients from the closed formulas (cyclotomic numbers reduced
/// into the field). Requires p, q in opposite residue classes mod 4.
Mask d_coefficients_closed_form(const CyclotomicContext& ctx, const FieldSpec& field,
                                const Mask& m);

struct IdentityCheck {
    std::string name;
    bool pass;
    std::string detail;  // empty on pass; decomposition of the product on failure
};

struct IdentityReport {
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

/// Verifies the multiplication rules of the basis algebra (transposition
/// pairing, products with P and Q, and the class-number expansions of
/// A1^2, A2^2, A1*A2, A2*A1). Requires characteristic 2 and p, q in
/// opposite residue classes mod 4.
IdentityReport verify_product_identities(const CyclotomicContext& ctx, const FieldSpec& field);

}  // namespace cyclocode

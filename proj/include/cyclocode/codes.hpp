#pragma once

#include <cstddef>
#include <string>

#include "cyclocode/circulant.hpp"
#include "cyclocode/matrix.hpp"

namespace cyclocode {

/// A linear code presented by a generator matrix. Immutable once built;
/// `dimension` is the rank of `generator` (rows may be dependent).
struct LinearCode {
    FieldSpec field;
    GfMatrix generator;
    std::size_t length = 0;
    std::size_t dimension = 0;
};

LinearCode make_code(GfMatrix generator);

/// (I_n | R) with R the mask combination of the class basis; length 2n.
LinearCode pure_double_circulant(const CyclotomicContext& ctx, const FieldSpec& field,
                                 const Mask& m);

/// (I_{n+1} | B) with B bordered: corner alpha, first row of ones, first
/// column of -1, lower-right block R; length 2n + 2.
LinearCode bordered_double_circulant(const CyclotomicContext& ctx, const FieldSpec& field,
                                     felem alpha, const Mask& m);

/// The dual code, generated by a basis of the right null space of the
/// generator.
LinearCode dual_code(const LinearCode& code);

/// Ground truth: even length, G * G^T = 0, and rank(G) = length / 2.
bool is_self_dual(const LinearCode& code);

/// True when the word lies in the row space of the generator.
bool code_contains(const LinearCode& code, const std::vector<felem>& word);

struct BoundResult {
    unsigned bound = 0;
    std::string rule;  // which branch applied: "binary", "ternary", "quaternary", "generic"
};

/// Largest minimum distance a self-dual code of this length can have over
/// GF(l): field-specific bounds for l = 2, 3, 4 and the Singleton bound
/// otherwise. Length must be even.
BoundResult self_dual_bound(std::uint32_t l, std::size_t length);

}  // namespace cyclocode

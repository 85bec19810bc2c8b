#include "cyclocode/codes.hpp"

#include <stdexcept>

namespace cyclocode {

LinearCode make_code(GfMatrix generator) {
    LinearCode c{generator.field(), std::move(generator), 0, 0};
    c.length = c.generator.cols();
    c.dimension = rank(c.generator);
    return c;
}

LinearCode pure_double_circulant(const CyclotomicContext& ctx, const FieldSpec& field,
                                 const Mask& m) {
    const std::uint32_t n = ctx.n;
    GfMatrix r = mask_matrix(ctx, field, m);
    GfMatrix g(field, n, 2 * n);
    for (std::uint32_t i = 0; i < n; ++i) {
        g(i, i) = 1;
        for (std::uint32_t j = 0; j < n; ++j) g(i, n + j) = r(i, j);
    }
    return make_code(std::move(g));
}

LinearCode bordered_double_circulant(const CyclotomicContext& ctx, const FieldSpec& field,
                                     felem alpha, const Mask& m) {
    const std::uint32_t n = ctx.n;
    GfMatrix r = mask_matrix(ctx, field, m);
    const std::uint32_t k = n + 1;
    GfMatrix g(field, k, 2 * k);
    felem minus_one = field.neg(1);
    for (std::uint32_t i = 0; i < k; ++i) g(i, i) = 1;
    g(0, k) = alpha;
    for (std::uint32_t j = 1; j < k; ++j) g(0, k + j) = 1;
    for (std::uint32_t i = 1; i < k; ++i) {
        g(i, k) = minus_one;
        for (std::uint32_t j = 1; j < k; ++j) g(i, k + j) = r(i - 1, j - 1);
    }
    return make_code(std::move(g));
}

LinearCode dual_code(const LinearCode& code) {
    return make_code(null_space(code.generator));
}

bool is_self_dual(const LinearCode& code) {
    if (code.length % 2 != 0) return false;
    if (code.dimension != code.length / 2) return false;
    return (code.generator * code.generator.transpose()).is_zero();
}

bool code_contains(const LinearCode& code, const std::vector<felem>& word) {
    if (word.size() != code.length)
        throw std::invalid_argument("word length does not match the code length");
    GfMatrix stacked(code.field, code.generator.rows() + 1, code.length);
    for (std::size_t i = 0; i < code.generator.rows(); ++i)
        for (std::size_t j = 0; j < code.length; ++j) stacked(i, j) = code.generator(i, j);
    for (std::size_t j = 0; j < code.length; ++j) stacked(code.generator.rows(), j) = word[j];
    return rank(stacked) == code.dimension;
}

BoundResult self_dual_bound(std::uint32_t l, std::size_t length) {
    if (length == 0 || length % 2 != 0)
        throw std::invalid_argument("self-dual codes have positive even length");
    make_field(l);  // validate the order
    unsigned n = static_cast<unsigned>(length);
    switch (l) {
        case 2:
            if (n % 24 == 22) return {4 * (n / 24) + 6, "binary"};
            return {4 * (n / 24) + 4, "binary"};
        case 3:
            return {3 * (n / 12) + 3, "ternary"};
        case 4:
            return {4 * (n / 12) + 4, "quaternary"};
        default:
            return {n / 2 + 1, "generic"};
    }
}

}  // namespace cyclocode

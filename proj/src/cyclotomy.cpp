#include "cyclocode/cyclotomy.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace cyclocode {

namespace {

constexpr std::uint32_t kMaxModulus = 1'000'000;

bool is_prime(std::uint32_t v) {
    if (v < 2) return false;
    for (std::uint32_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t acc = 1;
    base %= mod;
    while (exp) {
        if (exp & 1) acc = acc * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return static_cast<std::uint32_t>(acc);
}

std::vector<std::uint32_t> prime_factors(std::uint32_t v) {
    std::vector<std::uint32_t> fs;
    for (std::uint32_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            fs.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

bool is_primitive_root(std::uint32_t g, std::uint32_t prime,
                       const std::vector<std::uint32_t>& factors_of_order) {
    if (g % prime == 0) return false;
    for (std::uint32_t f : factors_of_order)
        if (pow_mod(g, (prime - 1) / f, prime) == 1) return false;
    return true;
}

}  // namespace

const char* cyc_class_name(CycClass c) {
    switch (c) {
        case CycClass::Zero: return "zero";
        case CycClass::MultP: return "P";
        case CycClass::MultQ: return "Q";
        case CycClass::C0: return "C0";
        case CycClass::C1: return "C1";
    }
    return "?";
}

std::uint32_t common_primitive_root(std::uint32_t p, std::uint32_t q) {
    if (p == q || p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || !is_prime(p) || !is_prime(q))
        throw std::invalid_argument("p and q must be distinct odd primes");
    auto fp = prime_factors(p - 1);
    auto fq = prime_factors(q - 1);
    std::uint64_t n = static_cast<std::uint64_t>(p) * q;
    for (std::uint32_t g = 2; g < n; ++g) {
        if (is_primitive_root(g, p, fp) && is_primitive_root(g, q, fq)) return g;
    }
    throw std::logic_error("no common primitive root found");  // CRT guarantees one exists
}

CyclotomicContext build_context(std::uint32_t p, std::uint32_t q) {
    if (p == q || p < 3 || q < 3 || p % 2 == 0 || q % 2 == 0 || !is_prime(p) || !is_prime(q))
        throw std::invalid_argument("p and q must be distinct odd primes");
    std::uint32_t d = std::gcd(p - 1, q - 1);
    if (d != 2)
        throw std::invalid_argument("gcd(p-1, q-1) = " + std::to_string(d) + " != 2");
    std::uint64_t n64 = static_cast<std::uint64_t>(p) * q;
    if (n64 > kMaxModulus)
        throw std::invalid_argument("n = " + std::to_string(n64) + " exceeds limit " +
                                    std::to_string(kMaxModulus));

    CyclotomicContext ctx;
    ctx.p = p;
    ctx.q = q;
    ctx.n = static_cast<std::uint32_t>(n64);
    ctx.e = (p - 1) * (q - 1) / 2;
    ctx.even_case = ((p - 1) * (q - 1) / 4) % 2 == 0;
    ctx.g = common_primitive_root(p, q);

    // x = g (mod p), x = 1 (mod q): x = 1 + q*t with t = (g-1) * q^{-1} mod p.
    std::uint64_t q_inv = pow_mod(q % p, p - 2, p);
    std::uint64_t t = (static_cast<std::uint64_t>((ctx.g + p - 1) % p) * q_inv) % p;
    ctx.x = static_cast<std::uint32_t>((1 + q * t) % ctx.n);

    ctx.label.assign(ctx.n, CycClass::Zero);
    for (std::uint32_t a = p; a < ctx.n; a += p) ctx.label[a] = CycClass::MultP;
    for (std::uint32_t a = q; a < ctx.n; a += q) ctx.label[a] = CycClass::MultQ;

    std::uint64_t v = 1;
    for (std::uint32_t s = 0; s < ctx.e; ++s) {
        std::uint32_t a0 = static_cast<std::uint32_t>(v);
        std::uint32_t a1 = static_cast<std::uint32_t>(v * ctx.x % ctx.n);
        if (ctx.label[a0] != CycClass::Zero || ctx.label[a1] != CycClass::Zero)
            throw std::logic_error("cyclotomic classes are not a partition");
        ctx.label[a0] = CycClass::C0;
        ctx.label[a1] = CycClass::C1;
        v = v * ctx.g % ctx.n;
    }
    ctx.label[0] = CycClass::Zero;

    for (std::uint32_t a = 1; a < ctx.n; ++a) {
        switch (ctx.label[a]) {
            case CycClass::MultP: ctx.mult_p.push_back(a); break;
            case CycClass::MultQ: ctx.mult_q.push_back(a); break;
            case CycClass::C0: ctx.c0.push_back(a); break;
            case CycClass::C1: ctx.c1.push_back(a); break;
            case CycClass::Zero:
                throw std::logic_error("cyclotomic classes do not cover Z_n");
        }
    }
    if (ctx.mult_p.size() != q - 1 || ctx.mult_q.size() != p - 1 || ctx.c0.size() != ctx.e ||
        ctx.c1.size() != ctx.e)
        throw std::logic_error("cyclotomic class sizes are wrong");
    return ctx;
}

CycClass classify(const CyclotomicContext& ctx, std::uint32_t a) {
    if (a >= ctx.n)
        throw std::out_of_range("residue " + std::to_string(a) + " out of range for Z_" +
                                std::to_string(ctx.n));
    return ctx.label[a];
}

std::uint64_t cyclotomic_number_direct(const CyclotomicContext& ctx, unsigned i, unsigned j) {
    if (i > 1 || j > 1) throw std::invalid_argument("cyclotomic number indices must be 0 or 1");
    const auto& members = (i == 0) ? ctx.c0 : ctx.c1;
    CycClass want = (j == 0) ? CycClass::C0 : CycClass::C1;
    std::uint64_t count = 0;
    for (std::uint32_t a : members)
        if (ctx.label[(a + 1) % ctx.n] == want) ++count;
    return count;
}

std::uint64_t cyclotomic_number_closed_form(const CyclotomicContext& ctx, unsigned i, unsigned j) {
    if (i > 1 || j > 1) throw std::invalid_argument("cyclotomic number indices must be 0 or 1");
    std::uint64_t base = static_cast<std::uint64_t>(ctx.p - 2) * (ctx.q - 2);
    if (ctx.even_case)
        return (i == 0 && j == 1) ? (base - 3) / 4 : (base + 1) / 4;
    return (i == 0 && j == 0) ? (base + 3) / 4 : (base - 1) / 4;
}

MinusOneReport minus_one_class(const CyclotomicContext& ctx) {
    MinusOneReport r;
    r.computed = ctx.label[ctx.n - 1];
    r.published = ctx.even_case ? CycClass::C0 : CycClass::C1;
    r.agree = r.computed == r.published;
    return r;
}

std::array<unsigned, 4> cyclotomic_number_parities(const CyclotomicContext& ctx) {
    if (!ctx.even_case)
        throw std::domain_error(
            "parity rule requires p and q in opposite residue classes mod 4");
    unsigned s = (ctx.p + ctx.q) / 4;  // integral exactly in the mixed-residue case
    unsigned diag = (s % 2 == 1) ? 0u : 1u;  // parity of (0,0), (1,0), (1,1)
    unsigned off = 1u - diag;                // parity of (0,1)
    return {diag, off, diag, diag};
}

}  // namespace cyclocode

#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace cyclocode {

/// Residue classes of the Whiteman order-two partition of Z_n, n = pq:
/// {0}, the nonzero multiples of p, the nonzero multiples of q, and the
/// two generalized cyclotomic classes C0 = <g>, C1 = x*C0.
enum class CycClass : std::uint8_t { Zero, MultP, MultQ, C0, C1 };

const char* cyc_class_name(CycClass c);

struct CyclotomicContext {
    std::uint32_t p = 0, q = 0;
    std::uint32_t n = 0;  // pq
    std::uint32_t e = 0;  // (p-1)(q-1)/2, the common class size
    std::uint32_t g = 0;  // smallest common primitive root of p and q
    std::uint32_t x = 0;  // x = g (mod p), x = 1 (mod q)
    bool even_case = false;  // (p-1)(q-1)/4 even, i.e. p, q in opposite classes mod 4

    std::vector<CycClass> label;  // size n, label[a] classifies a
    std::vector<std::uint32_t> mult_p, mult_q, c0, c1;  // sorted members
};

/// Validates p, q (distinct odd primes, gcd(p-1, q-1) = 2, pq <= 10^6) and
/// assembles the partition. Throws std::invalid_argument on bad input.
CyclotomicContext build_context(std::uint32_t p, std::uint32_t q);

/// Smallest g >= 2 that is a primitive root of both p and q. Requires only
/// that p and q are distinct odd primes.
std::uint32_t common_primitive_root(std::uint32_t p, std::uint32_t q);

/// Class of a residue. Throws std::out_of_range unless 0 <= a < n.
CycClass classify(const CyclotomicContext& ctx, std::uint32_t a);

/// (i, j) = |{a in C_i : a + 1 in C_j}|, counted from the partition.
std::uint64_t cyclotomic_number_direct(const CyclotomicContext& ctx, unsigned i, unsigned j);

/// Closed form for (i, j); branches on the parity of (p-1)(q-1)/4.
std::uint64_t cyclotomic_number_closed_form(const CyclotomicContext& ctx, unsigned i, unsigned j);

struct MinusOneReport {
    CycClass computed;   // class that actually contains n - 1
    CycClass published;  // class the published rule predicts
    bool agree;
};

/// Locates -1 = n - 1 and compares with the published rule (which places it
/// in C0 when (p-1)(q-1)/4 is even, C1 otherwise). The two are expected to
/// disagree; callers should trust `computed`.
MinusOneReport minus_one_class(const CyclotomicContext& ctx);

/// Predicted parities of the numbers (0,0), (0,1), (1,0), (1,1), in that
/// order, from the closed parity rule. Requires p, q in opposite residue
/// classes mod 4; throws std::domain_error otherwise.
std::array<unsigned, 4> cyclotomic_number_parities(const CyclotomicContext& ctx);

}  // namespace cyclocode

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cyclocode/codes.hpp"

namespace cyclocode {

enum class DistanceMethod { Exhaustive, InfoSet, Auto };

const char* distance_method_name(DistanceMethod m);

/// Caps on a single distance computation; a zero disables that limit.
struct DistanceBudget {
    std::uint64_t max_evaluations = 1'000'000'000;
    double max_seconds = 900.0;
};

struct DistanceResult {
    unsigned distance = 0;
    std::vector<felem> certificate;  // minimum-weight codeword (lex-least among finds)
    DistanceMethod method_used = DistanceMethod::Exhaustive;
    std::uint64_t evaluations = 0;
};

/// Thrown when the evaluation or time budget runs out before the bounds
/// meet; carries the proven interval and the best codeword found so far.
class BudgetExhausted : public std::runtime_error {
  public:
    BudgetExhausted(const std::string& what, unsigned lower, unsigned upper,
                    std::vector<felem> cert, std::uint64_t evals)
        : std::runtime_error(what),
          lower_bound(lower),
          upper_bound(upper),
          certificate(std::move(cert)),
          evaluations(evals) {}

    unsigned lower_bound;
    unsigned upper_bound;
    std::vector<felem> certificate;
    std::uint64_t evaluations;
};

/// Minimum Hamming weight of a nonzero codeword.
///
/// Exhaustive walks every nonzero message; the information-set method runs
/// the systematic-matrix lower-bound scheme and stops once the bounds meet.
/// Auto picks exhaustive when l^k <= 2^26. The result (distance and
/// certificate) is independent of the worker count; workers = 0 reads
/// CYCLOCODE_THREADS, defaulting to the hardware concurrency.
DistanceResult min_distance(const LinearCode& code, DistanceMethod method = DistanceMethod::Auto,
                            const DistanceBudget& budget = {}, unsigned workers = 0);

unsigned vector_weight(const std::vector<felem>& v);

}  // namespace cyclocode

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclocode/codes.hpp"
#include "cyclocode/distance.hpp"

namespace cyclocode {

enum class CodeKind { Pure, Bordered };

const char* code_kind_name(CodeKind k);

struct ConditionCheck {
    std::string name;
    bool pass;
    std::string detail;  // actual value(s) when the condition fails
};

struct CriteriaReport {
    std::vector<ConditionCheck> conditions;
    bool satisfied = false;
};

/// Algebraic self-duality test evaluated on the product coefficients alone,
/// without building the code: pure needs D = (-1, 0, 0, 0, 0); bordered
/// needs alpha^2 + n = -1, zero border sum, and D = (-2, -1, -1, -1, -1).
/// `alpha` is ignored for pure codes.
CriteriaReport self_dual_criteria(const CyclotomicContext& ctx, const FieldSpec& field,
                                  CodeKind kind, felem alpha, const Mask& m);

struct FamilyEntry {
    CodeKind kind;
    felem alpha = 0;  // meaningful for bordered entries only
    Mask mask;
    LinearCode code;
};

/// The four binary codes attached to a context with (p+q)/4 odd: two pure
/// and two bordered, mask sets branching on p mod 4. Every returned code is
/// verified self-dual; hypothesis violations throw std::domain_error naming
/// the failed condition.
std::vector<FamilyEntry> gf2_family_codes(const CyclotomicContext& ctx);

/// The quaternary counterpart, for contexts with (p+q)/4 even.
std::vector<FamilyEntry> gf4_family_codes(const CyclotomicContext& ctx);

struct SearchHit {
    CodeKind kind;
    std::optional<felem> alpha;
    Mask mask;
};

struct SearchResult {
    std::vector<SearchHit> hits;       // candidates whose built code is self-dual
    std::uint64_t scanned = 0;         // candidates examined
    std::uint64_t disagreements = 0;   // criteria verdict != built-code ground truth
};

/// Scans every mask (and every alpha for bordered codes), comparing the
/// criteria verdict against the built code on each candidate.
SearchResult search_self_dual(const CyclotomicContext& ctx, const FieldSpec& field,
                              CodeKind kind);

struct TableRow {
    std::uint32_t p, q;
    std::uint32_t order;
    CodeKind kind;
    std::optional<felem> alpha;
    Mask mask;
    LinearCode code;
    DistanceResult distance;
    unsigned expected_distance = 0;
    BoundResult bound;
    bool self_dual = false;
    bool extremal = false;
    std::string note;
};

/// Rebuilds the five reference codes ([70,35,10] and [72,36,12] over GF(2),
/// [30,15,6] and [32,16,8] over GF(4), plus the alternative [72,36,12] from
/// the swapped prime pair) and recomputes their distances.
std::vector<TableRow> reproduce_reference_tables(unsigned workers = 0,
                                                 const DistanceBudget& budget = {});

}  // namespace cyclocode

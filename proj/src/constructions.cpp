#include "cyclocode/constructions.hpp"

#include <stdexcept>

namespace cyclocode {

namespace {

std::string mask_string(const FieldSpec& f, const Mask& m) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) s += ",";
        s += f.token(m[i]);
    }
    return s;
}

LinearCode build_kind(const CyclotomicContext& ctx, const FieldSpec& f, CodeKind kind,
                      felem alpha, const Mask& m) {
    return kind == CodeKind::Pure ? pure_double_circulant(ctx, f, m)
                                  : bordered_double_circulant(ctx, f, alpha, m);
}

std::vector<FamilyEntry> family_codes(const CyclotomicContext& ctx, const FieldSpec& f,
                                      bool want_odd_sum, const Mask masks[4]) {
    if (!ctx.even_case)
        throw std::domain_error("family requires p and q in opposite residue classes mod 4");
    unsigned s = (ctx.p + ctx.q) / 4;
    if (want_odd_sum && s % 2 == 0)
        throw std::domain_error("(p+q)/4 = " + std::to_string(s) +
                                " is even; the binary family requires it odd");
    if (!want_odd_sum && s % 2 == 1)
        throw std::domain_error("(p+q)/4 = " + std::to_string(s) +
                                " is odd; the quaternary family requires it even");

    std::vector<FamilyEntry> out;
    for (int i = 0; i < 4; ++i) {
        CodeKind kind = i < 2 ? CodeKind::Pure : CodeKind::Bordered;
        FamilyEntry e{kind, 0, masks[i], build_kind(ctx, f, kind, 0, masks[i])};
        if (!is_self_dual(e.code))
            throw std::logic_error("family code for mask (" + mask_string(f, masks[i]) +
                                   ") failed the self-duality check");
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace

const char* code_kind_name(CodeKind k) {
    return k == CodeKind::Pure ? "pure" : "bordered";
}

CriteriaReport self_dual_criteria(const CyclotomicContext& ctx, const FieldSpec& field,
                                  CodeKind kind, felem alpha, const Mask& m) {
    const FieldSpec& f = field;
    Mask d = d_coefficients_direct(ctx, f, m);
    felem minus1 = f.neg(1);

    CriteriaReport rep;
    rep.satisfied = true;
    auto condition = [&](std::string name, felem actual, felem expected) {
        ConditionCheck c{std::move(name), actual == expected, ""};
        if (!c.pass) {
            c.detail = "got " + f.token(actual) + ", need " + f.token(expected);
            rep.satisfied = false;
        }
        rep.conditions.push_back(std::move(c));
    };

    if (kind == CodeKind::Pure) {
        condition("D0 = -1", d[0], minus1);
        for (int i = 1; i < 5; ++i)
            condition("D" + std::to_string(i) + " = 0", d[i], 0);
        return rep;
    }

    felem n_f = f.from_int(ctx.n);
    condition("alpha^2 + n = -1", f.add(f.mul(alpha, alpha), n_f), minus1);
    // border sum: -alpha + row sum of the circulant block
    felem row_sum = m[0];
    row_sum = f.add(row_sum, f.mul(f.from_int(ctx.q - 1), m[1]));
    row_sum = f.add(row_sum, f.mul(f.from_int(ctx.p - 1), m[2]));
    row_sum = f.add(row_sum, f.mul(f.from_int(ctx.e), f.add(m[3], m[4])));
    condition("border sum = 0", f.sub(row_sum, alpha), 0);
    condition("D0 = -2", d[0], f.neg(f.from_int(2)));
    for (int i = 1; i < 5; ++i)
        condition("D" + std::to_string(i) + " = -1", d[i], minus1);
    return rep;
}

std::vector<FamilyEntry> gf2_family_codes(const CyclotomicContext& ctx) {
    FieldSpec f = make_field(2);
    if (ctx.p % 4 == 1) {
        const Mask masks[4] = {{1, 0, 1, 0, 1}, {1, 0, 1, 1, 0}, {0, 1, 0, 1, 0}, {0, 1, 0, 0, 1}};
        return family_codes(ctx, f, true, masks);
    }
    const Mask masks[4] = {{1, 1, 0, 0, 1}, {1, 1, 0, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 0, 1}};
    return family_codes(ctx, f, true, masks);
}

std::vector<FamilyEntry> gf4_family_codes(const CyclotomicContext& ctx) {
    FieldSpec f = make_field(4);
    const felem u = 2, v = 3;  // v = u + 1
    if (ctx.p % 4 == 1) {
        const Mask masks[4] = {{1, 0, 1, v, u}, {1, 0, 1, u, v}, {0, 1, 0, u, v}, {0, 1, 0, v, u}};
        return family_codes(ctx, f, false, masks);
    }
    const Mask masks[4] = {{1, 1, 0, v, u}, {1, 1, 0, u, v}, {0, 0, 1, v, u}, {0, 0, 1, u, v}};
    return family_codes(ctx, f, false, masks);
}

SearchResult search_self_dual(const CyclotomicContext& ctx, const FieldSpec& field,
                              CodeKind kind) {
    const std::uint64_t l = field.order();
    std::uint64_t space = 1;
    for (int i = 0; i < (kind == CodeKind::Bordered ? 6 : 5); ++i) {
        space *= l;
        if (space > (std::uint64_t{1} << 20))
            throw std::invalid_argument("search space exceeds 2^20 candidates");
    }

    std::vector<felem> alphas;
    if (kind == CodeKind::Bordered)
        for (std::uint32_t a = 0; a < l; ++a) alphas.push_back(static_cast<felem>(a));
    else
        alphas.push_back(0);

    std::uint64_t mask_count = l * l * l * l * l;
    SearchResult res;
    for (felem alpha : alphas) {
        Mask m{};
        for (std::uint64_t idx = 0; idx < mask_count; ++idx) {
            std::uint64_t rest = idx;
            for (int i = 4; i >= 0; --i) {
                m[i] = static_cast<felem>(rest % l);
                rest /= l;
            }
            bool predicted = self_dual_criteria(ctx, field, kind, alpha, m).satisfied;
            bool actual = is_self_dual(build_kind(ctx, field, kind, alpha, m));
            ++res.scanned;
            if (predicted != actual) ++res.disagreements;
            if (actual)
                res.hits.push_back({kind,
                                    kind == CodeKind::Bordered ? std::optional<felem>(alpha)
                                                               : std::nullopt,
                                    m});
        }
    }
    return res;
}

std::vector<TableRow> reproduce_reference_tables(unsigned workers, const DistanceBudget& budget) {
    struct Entry {
        std::uint32_t p, q, order;
        CodeKind kind;
        felem alpha;
        Mask mask;
        unsigned expected;
        const char* note;
    };
    const felem u = 2, v = 3;
    const Entry rows[] = {
        {5, 7, 2, CodeKind::Pure, 0, {1, 0, 1, 0, 1}, 10, "almost optimal"},
        {5, 7, 2, CodeKind::Bordered, 0, {0, 1, 0, 1, 0}, 12, "highest known"},
        {3, 5, 4, CodeKind::Pure, 0, {1, 1, 0, v, u}, 6, ""},
        {3, 5, 4, CodeKind::Bordered, 0, {0, 0, 1, v, u}, 8, "almost optimal"},
        {7, 5, 2, CodeKind::Bordered, 0, {0, 0, 1, 0, 1}, 12, "highest known"},
    };

    std::vector<TableRow> out;
    for (const Entry& s : rows) {
        CyclotomicContext ctx = build_context(s.p, s.q);
        FieldSpec f = make_field(s.order);
        TableRow row;
        row.p = s.p;
        row.q = s.q;
        row.order = s.order;
        row.kind = s.kind;
        if (s.kind == CodeKind::Bordered) row.alpha = s.alpha;
        row.mask = s.mask;
        row.code = build_kind(ctx, f, s.kind, s.alpha, s.mask);
        row.self_dual = is_self_dual(row.code);
        row.distance = min_distance(row.code, DistanceMethod::InfoSet, budget, workers);
        row.expected_distance = s.expected;
        row.bound = self_dual_bound(s.order, row.code.length);
        row.extremal = row.distance.distance == row.bound.bound;
        row.note = s.note;
        out.push_back(std::move(row));
    }
    return out;
}

}  // namespace cyclocode

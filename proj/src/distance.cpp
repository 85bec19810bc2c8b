#include "cyclocode/distance.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <thread>

namespace cyclocode {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kSaturated = std::uint64_t{1} << 62;
constexpr unsigned kNoWeight = std::numeric_limits<unsigned>::max();

struct LevelAborted {};  // internal unwind signal for time aborts

unsigned resolve_workers(unsigned workers) {
    if (workers != 0) return workers;
    if (const char* env = std::getenv("CYCLOCODE_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 4096) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

std::uint64_t mul_sat(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kSaturated / b) return kSaturated;
    return a * b;
}

std::uint64_t pow_sat(std::uint64_t base, unsigned exp) {
    std::uint64_t acc = 1;
    while (exp--) acc = mul_sat(acc, base);
    return acc;
}

std::uint64_t comb_sat(unsigned n, unsigned r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    std::uint64_t acc = 1;
    for (unsigned i = 1; i <= r; ++i) {
        acc = mul_sat(acc, n - r + i);
        if (acc >= kSaturated) return kSaturated;
        acc /= i;
    }
    return acc;
}

// ---- packed row layouts -------------------------------------------------

// GF(2): one bit per symbol, add = XOR.
struct Gf2Pack {
    using Word = std::uint64_t;
    std::size_t n;
    std::size_t words() const { return (n + 63) / 64; }
    void pack(const felem* src, Word* dst) const {
        std::fill(dst, dst + words(), 0);
        for (std::size_t j = 0; j < n; ++j)
            if (src[j]) dst[j / 64] |= Word{1} << (j % 64);
    }
    void unpack(const Word* src, felem* dst) const {
        for (std::size_t j = 0; j < n; ++j)
            dst[j] = static_cast<felem>((src[j / 64] >> (j % 64)) & 1);
    }
    void add(Word* acc, const Word* row, std::size_t nw) const {
        for (std::size_t i = 0; i < nw; ++i) acc[i] ^= row[i];
    }
    unsigned weight(const Word* acc, std::size_t nw) const {
        unsigned w = 0;
        for (std::size_t i = 0; i < nw; ++i) w += static_cast<unsigned>(std::popcount(acc[i]));
        return w;
    }
};

// GF(4): two bits per symbol (the element code); code XOR is field addition.
struct Gf4Pack {
    using Word = std::uint64_t;
    std::size_t n;
    std::size_t words() const { return (n + 31) / 32; }
    void pack(const felem* src, Word* dst) const {
        std::fill(dst, dst + words(), 0);
        for (std::size_t j = 0; j < n; ++j)
            dst[j / 32] |= static_cast<Word>(src[j] & 3) << (2 * (j % 32));
    }
    void unpack(const Word* src, felem* dst) const {
        for (std::size_t j = 0; j < n; ++j)
            dst[j] = static_cast<felem>((src[j / 32] >> (2 * (j % 32))) & 3);
    }
    void add(Word* acc, const Word* row, std::size_t nw) const {
        for (std::size_t i = 0; i < nw; ++i) acc[i] ^= row[i];
    }
    unsigned weight(const Word* acc, std::size_t nw) const {
        constexpr Word lo = 0x5555555555555555ull;
        unsigned w = 0;
        for (std::size_t i = 0; i < nw; ++i)
            w += static_cast<unsigned>(std::popcount((acc[i] | (acc[i] >> 1)) & lo));
        return w;
    }
};

// Odd prime fields: one element per slot, modular addition.
struct GenericPack {
    using Word = felem;
    std::size_t n;
    std::uint32_t l;
    std::size_t words() const { return n; }
    void pack(const felem* src, Word* dst) const { std::copy(src, src + n, dst); }
    void unpack(const Word* src, felem* dst) const { std::copy(src, src + n, dst); }
    void add(Word* acc, const Word* row, std::size_t nw) const {
        for (std::size_t i = 0; i < nw; ++i) {
            std::uint32_t t = static_cast<std::uint32_t>(acc[i]) + row[i];
            acc[i] = static_cast<Word>(t >= l ? t - l : t);
        }
    }
    unsigned weight(const Word* acc, std::size_t nw) const {
        unsigned w = 0;
        for (std::size_t i = 0; i < nw; ++i) w += acc[i] != 0;
        return w;
    }
};

// Rows of one systematic generator packed with all l-1 scalar multiples.
template <class Pack>
struct ScaledRows {
    std::vector<typename Pack::Word> storage;
    std::size_t nw = 0;
    unsigned nscal = 1;

    void build(const Pack& pk, const FieldSpec& f, const GfMatrix& rows) {
        nw = pk.words();
        nscal = f.order() - 1;
        storage.assign(rows.rows() * nscal * nw, 0);
        std::vector<felem> tmp(rows.cols());
        for (std::size_t r = 0; r < rows.rows(); ++r) {
            for (felem s = 1; s < f.order(); ++s) {
                for (std::size_t j = 0; j < rows.cols(); ++j) tmp[j] = f.mul(rows(r, j), s);
                pk.pack(tmp.data(), &storage[(r * nscal + (s - 1)) * nw]);
            }
        }
    }
    // scalar is the element code, 1 <= scalar <= l-1
    const typename Pack::Word* row(std::size_t r, felem scalar) const {
        return &storage[(r * nscal + (scalar - 1)) * nw];
    }
};

// Enumeration state shared by both methods: accumulator, running best
// (weight, lexicographically least certificate) and abort checks.
template <class Pack>
struct Kernel {
    const Pack& pk;
    const ScaledRows<Pack>& rows;
    const std::vector<felem>& negcode;  // negcode[s] = code of -s
    std::atomic<bool>* stop = nullptr;
    Clock::time_point deadline{};
    bool timed = false;

    std::vector<typename Pack::Word> acc;
    std::vector<felem> scratch;
    std::vector<felem> best;
    unsigned best_wt = kNoWeight;
    std::uint64_t evals = 0;
    std::uint64_t tick = 0;

    Kernel(const Pack& p, const ScaledRows<Pack>& r, const std::vector<felem>& neg)
        : pk(p), rows(r), negcode(neg), acc(r.nw, 0), scratch(p.n, 0) {}

    void check_abort() {
        if ((++tick & 0x3FFF) != 0) return;
        if (stop && stop->load(std::memory_order_relaxed)) throw LevelAborted{};
        if (timed && Clock::now() > deadline) {
            if (stop) stop->store(true, std::memory_order_relaxed);
            throw LevelAborted{};
        }
    }

    void eval() {
        ++evals;
        check_abort();
        unsigned wt = pk.weight(acc.data(), rows.nw);
        if (wt > best_wt) return;
        pk.unpack(acc.data(), scratch.data());
        if (wt < best_wt ||
            std::lexicographical_compare(scratch.begin(), scratch.end(), best.begin(),
                                         best.end())) {
            best_wt = wt;
            best = scratch;
        }
    }

    // combinations r0 < r1 < ... of k rows, depth coordinates after the
    // first carry every nonzero scalar; the caller fixes the first row's
    // scalar to 1 (weights are scalar-invariant)
    void walk(unsigned depth, unsigned start, unsigned w, unsigned k) {
        if (depth == w) {
            eval();
            return;
        }
        for (unsigned r = start; r + (w - depth) <= k; ++r) {
            for (felem s = 1; s <= rows.nscal; ++s) {
                pk.add(acc.data(), rows.row(r, s), rows.nw);
                walk(depth + 1, r + 1, w, k);
                pk.add(acc.data(), rows.row(r, negcode[s]), rows.nw);
            }
        }
    }
};

struct SystematicSet {
    GfMatrix rows;   // k x N, reduced
    unsigned delta;  // pivots that were already covered by earlier sets
};

std::vector<SystematicSet> systematic_sets(const GfMatrix& basis) {
    const std::size_t k = basis.rows(), ncols = basis.cols();
    std::vector<SystematicSet> sets;
    std::vector<bool> used(ncols, false);
    std::size_t covered = 0;
    while (covered < ncols) {
        std::vector<std::size_t> order;
        order.reserve(ncols);
        for (std::size_t c = 0; c < ncols; ++c)
            if (!used[c]) order.push_back(c);
        for (std::size_t c = 0; c < ncols; ++c)
            if (used[c]) order.push_back(c);
        RrefResult rr = rref(basis, order);
        unsigned fresh = 0;
        for (std::size_t c : rr.pivots)
            if (!used[c]) ++fresh;
        if (fresh == 0) break;
        for (std::size_t c : rr.pivots) {
            if (!used[c]) {
                used[c] = true;
                ++covered;
            }
        }
        sets.push_back({std::move(rr.reduced), static_cast<unsigned>(k - fresh)});
    }
    return sets;
}

std::vector<felem> neg_codes(const FieldSpec& f) {
    std::vector<felem> neg(f.order(), 0);
    for (felem s = 1; s < f.order(); ++s) neg[s] = f.neg(s);
    return neg;
}

template <class Pack>
DistanceResult run_infoset(const Pack& pk, const GfMatrix& basis, const FieldSpec& f,
                           const DistanceBudget& budget, unsigned workers,
                           Clock::time_point deadline, bool timed) {
    const unsigned k = static_cast<unsigned>(basis.rows());
    const std::uint64_t max_evals =
        budget.max_evaluations ? budget.max_evaluations : kSaturated;

    std::vector<SystematicSet> sets = systematic_sets(basis);
    std::vector<ScaledRows<Pack>> packed(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) packed[i].build(pk, f, sets[i].rows);
    const std::vector<felem> neg = neg_codes(f);

    std::uint64_t evals_done = 0;
    unsigned upper = kNoWeight;
    std::vector<felem> cert;
    unsigned lower = 1;

    auto budget_error = [&](const char* what) {
        unsigned up = upper == kNoWeight ? static_cast<unsigned>(basis.cols()) : upper;
        return BudgetExhausted(std::string(what) + ": proven interval [" +
                                   std::to_string(lower) + ", " + std::to_string(up) + "]",
                               lower, up, cert, evals_done);
    };

    for (unsigned w = 1; w <= k; ++w) {
        std::uint64_t level_evals =
            mul_sat(mul_sat(sets.size(), comb_sat(k, w)), pow_sat(f.order() - 1, w - 1));
        if (evals_done + level_evals > max_evals) throw budget_error("evaluation budget exhausted");
        if (timed && Clock::now() > deadline) throw budget_error("time budget exhausted");

        struct TaskOut {
            unsigned wt = kNoWeight;
            std::vector<felem> cert;
            std::uint64_t evals = 0;
            bool aborted = false;
        };
        std::vector<std::pair<std::size_t, unsigned>> tasks;  // (set index, first row)
        for (std::size_t mi = 0; mi < sets.size(); ++mi)
            for (unsigned r0 = 0; r0 + w <= k; ++r0) tasks.emplace_back(mi, r0);
        std::vector<TaskOut> out(tasks.size());
        std::atomic<bool> stop{false};
        std::atomic<std::size_t> next{0};

        auto run_task = [&](std::size_t ti) {
            auto [mi, r0] = tasks[ti];
            Kernel<Pack> kern(pk, packed[mi], neg);
            kern.stop = &stop;
            kern.deadline = deadline;
            kern.timed = timed;
            try {
                pk.add(kern.acc.data(), packed[mi].row(r0, 1), packed[mi].nw);
                kern.walk(1, r0 + 1, w, k);
            } catch (const LevelAborted&) {
                out[ti].aborted = true;
            }
            out[ti].wt = kern.best_wt;
            out[ti].cert = std::move(kern.best);
            out[ti].evals = kern.evals;
        };

        unsigned nthreads = static_cast<unsigned>(std::min<std::size_t>(workers, tasks.size()));
        if (nthreads <= 1) {
            for (std::size_t ti = 0; ti < tasks.size() && !stop.load(); ++ti) run_task(ti);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(nthreads);
            for (unsigned t = 0; t < nthreads; ++t)
                pool.emplace_back([&] {
                    for (;;) {
                        std::size_t ti = next.fetch_add(1);
                        if (ti >= tasks.size()) return;
                        run_task(ti);
                    }
                });
            for (auto& th : pool) th.join();
        }
        if (stop.load() || std::any_of(out.begin(), out.end(),
                                       [](const TaskOut& t) { return t.aborted; }))
            throw budget_error("time budget exhausted");

        // deterministic merge: completed levels always merge in task order
        for (const TaskOut& t : out) {
            evals_done += t.evals;
            if (t.wt == kNoWeight) continue;
            if (t.wt < upper ||
                (t.wt == upper && std::lexicographical_compare(t.cert.begin(), t.cert.end(),
                                                               cert.begin(), cert.end()))) {
                upper = t.wt;
                cert = t.cert;
            }
        }

        lower = 0;
        for (const SystematicSet& s : sets)
            lower += (w + 1 > s.delta) ? (w + 1 - s.delta) : 0;
        if (lower >= upper || w == k)
            return {upper, cert, DistanceMethod::InfoSet, evals_done};
    }
    return {upper, cert, DistanceMethod::InfoSet, evals_done};  // unreachable for k >= 1
}

template <class Pack>
DistanceResult run_exhaustive(const Pack& pk, const GfMatrix& basis, const FieldSpec& f,
                              const DistanceBudget& budget, Clock::time_point deadline,
                              bool timed) {
    const unsigned k = static_cast<unsigned>(basis.rows());
    const std::uint32_t l = f.order();
    const std::uint64_t max_evals =
        budget.max_evaluations ? budget.max_evaluations : kSaturated;
    const std::uint64_t total = pow_sat(l, k) - 1;

    ScaledRows<Pack> packed;
    packed.build(pk, f, basis);
    const std::vector<felem> neg = neg_codes(f);
    Kernel<Pack> kern(pk, packed, neg);
    std::atomic<bool> stop{false};
    kern.stop = &stop;
    kern.deadline = deadline;
    kern.timed = timed;

    // steps a -> a+1 and a -> a-1 on element codes, as field deltas
    std::vector<felem> up(l, 0), down(l, 0);
    for (std::uint32_t a = 0; a + 1 < l; ++a) {
        up[a] = f.sub(static_cast<felem>(a + 1), static_cast<felem>(a));
        down[a + 1] = f.neg(up[a]);
    }

    // loopless reflected mixed-radix walk over all message tuples
    std::vector<std::uint32_t> digit(k, 0);
    std::vector<int> dir(k, 1);
    std::vector<unsigned> focus(k + 1);
    for (unsigned j = 0; j <= k; ++j) focus[j] = j;

    auto budget_error = [&](const char* what) {
        unsigned up_bound = kern.best_wt == kNoWeight ? static_cast<unsigned>(basis.cols())
                                                      : kern.best_wt;
        return BudgetExhausted(std::string(what) + ": proven interval [1, " +
                                   std::to_string(up_bound) + "]",
                               1, up_bound, kern.best, kern.evals);
    };

    try {
        for (std::uint64_t step = 0; step < total; ++step) {
            if (kern.evals >= max_evals) throw budget_error("evaluation budget exhausted");
            unsigned j = focus[0];
            focus[0] = 0;
            if (j == k) break;  // walk finished early (defensive; total bounds the loop)
            std::uint32_t old = digit[j];
            digit[j] = old + static_cast<std::uint32_t>(dir[j]);
            if (digit[j] == 0 || digit[j] == l - 1) {
                dir[j] = -dir[j];
                focus[j] = focus[j + 1];
                focus[j + 1] = j + 1;
            }
            felem delta = digit[j] > old ? up[old] : down[old];
            pk.add(kern.acc.data(), packed.row(static_cast<std::size_t>(j), delta), packed.nw);
            kern.eval();
        }
    } catch (const LevelAborted&) {
        throw budget_error("time budget exhausted");
    }
    return {kern.best_wt, kern.best, DistanceMethod::Exhaustive, kern.evals};
}

}  // namespace

const char* distance_method_name(DistanceMethod m) {
    switch (m) {
        case DistanceMethod::Exhaustive: return "exhaustive";
        case DistanceMethod::InfoSet: return "infoset";
        case DistanceMethod::Auto: return "auto";
    }
    return "?";
}

unsigned vector_weight(const std::vector<felem>& v) {
    unsigned w = 0;
    for (felem x : v) w += x != 0;
    return w;
}

DistanceResult min_distance(const LinearCode& code, DistanceMethod method,
                            const DistanceBudget& budget, unsigned workers) {
    if (code.dimension == 0)
        throw std::invalid_argument("minimum distance is undefined for a code of dimension 0");

    const FieldSpec& f = code.field;
    const unsigned k = static_cast<unsigned>(code.dimension);

    RrefResult rr = rref(code.generator);
    GfMatrix basis(f, k, code.length);
    for (unsigned r = 0; r < k; ++r)
        for (std::size_t c = 0; c < code.length; ++c) basis(r, c) = rr.reduced(r, c);

    if (method == DistanceMethod::Auto)
        method = pow_sat(f.order(), k) <= (std::uint64_t{1} << 26) ? DistanceMethod::Exhaustive
                                                                   : DistanceMethod::InfoSet;

    unsigned nworkers = resolve_workers(workers);
    bool timed = budget.max_seconds > 0;
    Clock::time_point deadline =
        timed ? Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(budget.max_seconds))
              : Clock::time_point::max();

    auto dispatch = [&](auto pk) {
        if (method == DistanceMethod::Exhaustive)
            return run_exhaustive(pk, basis, f, budget, deadline, timed);
        return run_infoset(pk, basis, f, budget, nworkers, deadline, timed);
    };
    if (f.order() == 2) return dispatch(Gf2Pack{code.length});
    if (f.order() == 4) return dispatch(Gf4Pack{code.length});
    return dispatch(GenericPack{code.length, f.order()});
}

}  // namespace cyclocode

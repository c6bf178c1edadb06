#pragma once

// Finite-window decision procedures: does every r-coloring of the window
// contain a monochromatic instance of the family? The three searches share
// one instance enumeration (lexicographic over the free-parameter box,
// filtered to instances fully inside the window) and the avoider core.
//
// Windows are colored in order of increasing absolute value (ties: the
// negative element first), the first element in that order has its color
// fixed to 0 as symmetry reduction, and avoiding colorings are verified by an
// independent re-scan before they are returned. Degenerate instances
// (collided elements) are excluded unless explicitly allowed, matching the
// theorems' pairwise-distinctness stipulation.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "symmcfg/avoider.hpp"
#include "symmcfg/coloring.hpp"
#include "symmcfg/families.hpp"

namespace symmcfg {

enum class Domain { nat, integers };

struct Window {
    long long lo = 1;
    long long hi = 1;
};

inline Window window_for(Domain dom, long long n) {
    return dom == Domain::nat ? Window{1, n} : Window{-n, n};
}

struct ParamRange {
    Int lo = 0;
    Int hi = 0;
};

struct SearchBudget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();  // per search branch
    std::uint64_t max_instances = 50'000'000;  // parameter tuples examined per enumeration
    double time_limit_s = 0.0;                 // 0: none (triggering it forfeits reproducibility)
    std::vector<ParamRange> param_box;         // empty: derived from the window
};

enum class SearchOutcome {
    regular,
    avoiding_coloring_found,
    witness_found,
    no_witness,
    budget_exhausted,
};

inline const char* outcome_name(SearchOutcome o) {
    switch (o) {
        case SearchOutcome::regular: return "regular";
        case SearchOutcome::avoiding_coloring_found: return "avoiding_coloring_found";
        case SearchOutcome::witness_found: return "witness_found";
        case SearchOutcome::no_witness: return "no_witness";
        case SearchOutcome::budget_exhausted: return "budget_exhausted";
    }
    return "?";
}

struct WitnessInfo {
    std::vector<Int> params;
    std::vector<Int> elements;
    int color = 0;
};

struct SearchStats {
    std::uint64_t nodes = 0;      // backtracking nodes (0 for witness scans)
    std::uint64_t instances = 0;  // instances enumerated inside the window
    std::uint64_t skipped = 0;    // parameter tuples rejected as non-integral/invalid
    std::uint64_t branches = 0;
    double wall_ms = 0;           // informational only; never serialized
};

struct SearchReport {
    SearchOutcome outcome = SearchOutcome::no_witness;
    std::optional<WitnessInfo> witness;
    std::optional<Coloring> avoiding;
    SearchStats stats;
};

inline std::vector<ParamRange> default_param_box(const FamilyDescriptor& desc, Domain dom,
                                                 long long n) {
    const std::size_t count = free_param_count(desc);
    ParamRange r;
    if (dom == Domain::nat) {
        r.lo = 1;
        r.hi = Int(n);
    } else {
        r.lo = Int(-n);
        r.hi = Int(n);
    }
    return std::vector<ParamRange>(count, r);
}

namespace detail {

inline bool skippable(errc code) {
    return code == errc::non_integral_element || code == errc::division_by_zero_image ||
           code == errc::bad_descriptor;
}

} // namespace detail

/// Streams the instances whose free parameters lie in the box and whose
/// elements all lie inside the window, in lexicographic parameter order
/// (first parameter most significant). Tuples whose generation fails with a
/// non-integrality condition are counted in stats.skipped. The callback
/// returns false to stop; enumerate_instances then returns false.
/// Returns false as well when the instance budget ran out.
inline bool enumerate_instances(const FamilyDescriptor& desc, Window window,
                                std::span<const ParamRange> box, const SearchBudget& budget,
                                SearchStats& stats,
                                const std::function<bool(const Instance&)>& fn,
                                bool allow_degenerate = false) {
    validate(desc);
    const std::size_t arity = free_param_count(desc);
    if (box.size() != arity)
        throw SymmError(errc::bad_argument,
                        "box needs one range per free parameter (" + std::to_string(arity) + ")");
    for (const auto& r : box)
        if (r.hi < r.lo) return true;  // empty box, empty stream

    if (arity == 0) return true;
    std::vector<Int> tuple(arity);
    for (std::size_t i = 0; i < arity; ++i) tuple[i] = box[i].lo;
    const Int wlo(window.lo), whi(window.hi);
    std::uint64_t examined = 0;

    while (true) {
        if (++examined > budget.max_instances) return false;
        bool usable = true;
        Instance ins;
        try {
            ins = generate_at(desc, tuple);
        } catch (const SymmError& e) {
            if (!detail::skippable(e.code())) throw;
            ++stats.skipped;
            usable = false;
        }
        if (usable && (allow_degenerate || !ins.degenerate)) {
            bool inside = true;
            for (const Int& e : ins.elements)
                if (e < wlo || e > whi) {
                    inside = false;
                    break;
                }
            if (inside) {
                ++stats.instances;
                if (!fn(ins)) return false;
            }
        }
        std::size_t i = arity;
        while (i > 0 && tuple[i - 1] == box[i - 1].hi) {
            tuple[i - 1] = box[i - 1].lo;
            --i;
        }
        if (i == 0) return true;
        ++tuple[i - 1];
    }
}

/// First instance (lexicographically by parameters) that is monochromatic
/// under the given total coloring.
inline SearchReport find_witness(const Coloring& coloring, const FamilyDescriptor& desc,
                                 std::span<const ParamRange> box, const SearchBudget& budget,
                                 bool allow_degenerate = false) {
    const auto t0 = std::chrono::steady_clock::now();
    SearchReport rep;
    Window window{coloring.lo, coloring.hi};
    bool stopped_early = false;
    bool completed = enumerate_instances(
        desc, window, box, budget, rep.stats,
        [&](const Instance& ins) {
            const int col = coloring.color_of(ins.elements.front().convert_to<long long>());
            for (const Int& e : ins.elements)
                if (coloring.color_of(e.convert_to<long long>()) != col) return true;
            rep.outcome = SearchOutcome::witness_found;
            rep.witness = WitnessInfo{ins.provenance, ins.elements, col};
            stopped_early = true;
            return false;
        },
        allow_degenerate);
    if (!completed && !stopped_early)
        rep.outcome = SearchOutcome::budget_exhausted;
    else if (!rep.witness)
        rep.outcome = SearchOutcome::no_witness;
    rep.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

/// Exhaustive search for a total r-coloring of the window containing no
/// monochromatic instance. A returned coloring has passed an independent
/// full re-scan; outcome regular means the backtracking tree was exhausted.
inline SearchReport find_avoiding_coloring(const FamilyDescriptor& desc, int r, Window window,
                                           std::span<const ParamRange> box,
                                           const SearchBudget& budget, bool allow_degenerate = false,
                                           int workers = 1, int split_depth = -1) {
    const auto t0 = std::chrono::steady_clock::now();
    if (window.hi < window.lo) throw SymmError(errc::bad_argument, "empty window");
    if (r < 1 || r > 31) throw SymmError(errc::bad_argument, "color count must be in [1,31]");
    SearchReport rep;

    // window elements in assignment order: increasing |v|, negative first on ties
    const long long width = window.hi - window.lo + 1;
    std::vector<long long> order(static_cast<std::size_t>(width));
    for (long long i = 0; i < width; ++i) order[static_cast<std::size_t>(i)] = window.lo + i;
    std::sort(order.begin(), order.end(), [](long long a, long long b) {
        auto aa = a < 0 ? -a : a, ab = b < 0 ? -b : b;
        return aa != ab ? aa < ab : a < b;
    });
    std::vector<int> slot_of(static_cast<std::size_t>(width));
    for (std::size_t i = 0; i < order.size(); ++i)
        slot_of[static_cast<std::size_t>(order[i] - window.lo)] = static_cast<int>(i);

    AvoiderProblem problem;
    problem.elements = static_cast<int>(width);
    problem.colors = r;
    bool completed = enumerate_instances(
        desc, window, box, budget, rep.stats,
        [&](const Instance& ins) {
            std::vector<int> idx;
            idx.reserve(ins.elements.size());
            for (const Int& e : ins.elements)
                idx.push_back(slot_of[static_cast<std::size_t>(e.convert_to<long long>() - window.lo)]);
            problem.instances.push_back(std::move(idx));
            return true;
        },
        allow_degenerate);
    if (!completed) {
        rep.outcome = SearchOutcome::budget_exhausted;
        return rep;
    }

    AvoiderOptions opts;
    opts.workers = workers;
    opts.split_depth = split_depth;
    opts.max_nodes = budget.max_nodes;
    opts.time_limit_s = budget.time_limit_s;
    AvoiderResult res = find_avoiding_assignment(problem, opts);
    rep.stats.nodes = res.nodes;
    rep.stats.branches = res.branches;

    switch (res.verdict) {
        case AvoiderVerdict::budget_exhausted: rep.outcome = SearchOutcome::budget_exhausted; break;
        case AvoiderVerdict::regular: rep.outcome = SearchOutcome::regular; break;
        case AvoiderVerdict::avoider_found: {
            Coloring col;
            col.lo = window.lo;
            col.hi = window.hi;
            col.r = r;
            col.colors.resize(static_cast<std::size_t>(width));
            for (long long i = 0; i < width; ++i)
                col.colors[static_cast<std::size_t>(i)] =
                    res.coloring[static_cast<std::size_t>(slot_of[static_cast<std::size_t>(i)])];
            // independent full re-scan straight from the generators
            SearchStats rescan_stats;
            bool clean = true;
            enumerate_instances(
                desc, window, box, budget, rescan_stats,
                [&](const Instance& ins) {
                    const int c0 = col.color_of(ins.elements.front().convert_to<long long>());
                    bool mono = true;
                    for (const Int& e : ins.elements)
                        if (col.color_of(e.convert_to<long long>()) != c0) {
                            mono = false;
                            break;
                        }
                    if (mono) clean = false;
                    return !mono;
                },
                allow_degenerate);
            if (!clean)
                throw std::logic_error("avoiding coloring failed the verification re-scan");
            rep.outcome = SearchOutcome::avoiding_coloring_found;
            rep.avoiding = std::move(col);
            break;
        }
    }
    rep.stats.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

struct MinimalWindowResult {
    std::optional<long long> value;  // least n with a regular window
    std::optional<Coloring> avoider_below;  // verified avoider at n-1 (when value > 1)
    SearchOutcome last_outcome = SearchOutcome::budget_exhausted;
    SearchStats totals;
};

/// Least n <= n_max such that [1,n] (nat) or [-n,n] (integers) is regular for
/// the family; scans n upward, so the per-n verdicts are monotone by
/// construction. An explicit box is used unchanged for every n; the default
/// box grows with the window.
inline MinimalWindowResult minimal_window(const FamilyDescriptor& desc, int r, Domain dom,
                                          long long n_max, const SearchBudget& budget,
                                          bool allow_degenerate = false, int workers = 1,
                                          int split_depth = -1) {
    MinimalWindowResult res;
    for (long long n = 1; n <= n_max; ++n) {
        Window w = window_for(dom, n);
        std::vector<ParamRange> box =
            budget.param_box.empty() ? default_param_box(desc, dom, n) : budget.param_box;
        SearchReport rep =
            find_avoiding_coloring(desc, r, w, box, budget, allow_degenerate, workers, split_depth);
        res.totals.nodes += rep.stats.nodes;
        res.totals.instances += rep.stats.instances;
        res.totals.skipped += rep.stats.skipped;
        res.totals.branches += rep.stats.branches;
        res.totals.wall_ms += rep.stats.wall_ms;
        res.last_outcome = rep.outcome;
        if (rep.outcome == SearchOutcome::budget_exhausted) return res;
        if (rep.outcome == SearchOutcome::regular) {
            res.value = n;
            return res;
        }
        res.avoider_below = std::move(rep.avoiding);
    }
    return res;
}

} // namespace symmcfg

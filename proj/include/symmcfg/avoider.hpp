#pragma once

// Shared backtracking core that decides whether an r-coloring of a finite
// ground set can avoid making any of the given instances monochromatic. Both
// the integer-window searches and the Hales-Jewett number search run on it.
//
// Semantics, fixed so results are independent of the worker count:
//   * Ground elements are colored in index order; colors are tried in
//     increasing order, so the returned coloring is the lexicographically
//     least avoiding assignment (elements occurring in no instance take 0).
//   * The tree splits into branches at a depth derived from the color count
//     only. A branch is abandoned only when an earlier branch already holds
//     an avoider, and abandoned branches never contribute to the statistics,
//     so outcome, coloring and node count are reproducible byte for byte.
//   * max_nodes bounds each branch separately (schedule-independent budget);
//     the optional wall-clock limit is a safety valve that sacrifices
//     reproducibility when it triggers.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

#include "symmcfg/error.hpp"

namespace symmcfg {

struct AvoiderProblem {
    int elements = 0;   // ground set 0..elements-1, already in assignment order
    int colors = 1;
    std::vector<std::vector<int>> instances;
};

struct AvoiderOptions {
    int workers = 1;
    int split_depth = -1;  // -1: derived from the color count
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();  // per branch
    double time_limit_s = 0.0;  // 0: none
    bool fix_first_color = true;
};

enum class AvoiderVerdict { regular, avoider_found, budget_exhausted };

struct AvoiderResult {
    AvoiderVerdict verdict = AvoiderVerdict::regular;
    std::vector<std::uint8_t> coloring;  // total assignment when avoider_found
    std::uint64_t nodes = 0;
    std::uint64_t branches = 0;
};

namespace detail {

// Backtracking state over the constrained slots. Per instance it tracks the
// number of assigned elements, the common color while the instance is still
// uniform, and the slot-id sum of unassigned elements (locating the last free
// element in O(1)). An instance that has seen two colors is dead until the
// trail unwinds past that point. When an instance is one element short of
// monochromatic, that color is forbidden on the missing element; an emptied
// color domain is a conflict.
class BacktrackState {
public:
    BacktrackState(const std::vector<std::vector<int>>& inst_slots, int slot_count, int colors,
                   bool fix_first)
        : colors_(colors), fix_first_(fix_first) {
        slot_assign_.assign(slot_count, -1);
        forb_.assign(slot_count, 0u);
        full_mask_ = (1u << colors) - 1u;
        const std::size_t m = inst_slots.size();
        inst_cnt_.assign(m, 0);
        inst_color_.assign(m, 0);
        inst_dead_.assign(m, 0);
        inst_sum_.assign(m, 0);
        inst_size_.assign(m, 0);
        std::vector<int> degree(slot_count, 0);
        for (std::size_t j = 0; j < m; ++j) {
            inst_size_[j] = static_cast<int>(inst_slots[j].size());
            for (int s : inst_slots[j]) {
                inst_sum_[j] += s;
                ++degree[s];
            }
        }
        touch_off_.assign(slot_count + 1, 0);
        for (int s = 0; s < slot_count; ++s) touch_off_[s + 1] = touch_off_[s] + degree[s];
        touch_.assign(touch_off_[slot_count], 0);
        std::vector<int> fill(touch_off_.begin(), touch_off_.end() - 1);
        for (std::size_t j = 0; j < m; ++j)
            for (int s : inst_slots[j]) touch_[fill[s]++] = static_cast<int>(j);
    }

    int colors() const { return colors_; }
    int slot_count() const { return static_cast<int>(slot_assign_.size()); }

    std::uint32_t allowed_mask(int slot) const {
        std::uint32_t m = full_mask_ & ~forb_[slot];
        if (slot == 0 && fix_first_) m &= 1u;
        return m;
    }

    // Applies color c to slot s with propagation. Returns false on conflict;
    // the caller must undo() either way before trying anything else.
    bool assign(int s, int c) {
        trail_marks_.push_back(static_cast<int>(trail_.size()));
        trail_.push_back({TrailKind::slot, s, 0});
        slot_assign_[s] = c;
        for (int ti = touch_off_[s]; ti < touch_off_[s + 1]; ++ti) {
            const int j = touch_[ti];
            if (inst_dead_[j]) continue;
            if (inst_cnt_[j] == 0) {
                trail_.push_back({TrailKind::joined, j, 0});
                inst_color_[j] = static_cast<std::uint8_t>(c);
                inst_cnt_[j] = 1;
                inst_sum_[j] -= s;
            } else if (inst_color_[j] == c) {
                trail_.push_back({TrailKind::grew, j, 0});
                ++inst_cnt_[j];
                inst_sum_[j] -= s;
            } else {
                trail_.push_back({TrailKind::died, j, 0});
                inst_dead_[j] = 1;
                continue;
            }
            if (inst_cnt_[j] == inst_size_[j]) return false;  // monochromatic
            if (inst_cnt_[j] == inst_size_[j] - 1) {
                const int last = static_cast<int>(inst_sum_[j]);
                if (!(forb_[last] & (1u << c))) {
                    trail_.push_back({TrailKind::forbade, last, forb_[last]});
                    forb_[last] |= (1u << c);
                    if (allowed_mask(last) == 0u && slot_assign_[last] < 0) return false;
                }
            }
        }
        return true;
    }

    void undo() {
        const int mark = trail_marks_.back();
        trail_marks_.pop_back();
        const int dec_slot = trail_[mark].idx;
        while (static_cast<int>(trail_.size()) > mark) {
            const TrailRec& r = trail_.back();
            switch (r.kind) {
                case TrailKind::slot: slot_assign_[r.idx] = -1; break;
                case TrailKind::joined:
                    inst_cnt_[r.idx] = 0;
                    inst_sum_[r.idx] += dec_slot;
                    break;
                case TrailKind::grew:
                    --inst_cnt_[r.idx];
                    inst_sum_[r.idx] += dec_slot;
                    break;
                case TrailKind::died: inst_dead_[r.idx] = 0; break;
                case TrailKind::forbade: forb_[r.idx] = r.saved; break;
            }
            trail_.pop_back();
        }
    }

    int assigned(int slot) const { return slot_assign_[slot]; }

private:
    enum class TrailKind : std::uint8_t { slot, joined, grew, died, forbade };
    struct TrailRec {
        TrailKind kind;
        int idx;
        std::uint32_t saved;
    };

    int colors_;
    bool fix_first_;
    std::uint32_t full_mask_;
    std::vector<int> slot_assign_;
    std::vector<std::uint32_t> forb_;
    std::vector<int> inst_cnt_;
    std::vector<std::uint8_t> inst_color_;
    std::vector<std::uint8_t> inst_dead_;
    std::vector<long long> inst_sum_;
    std::vector<int> inst_size_;
    std::vector<int> touch_off_;
    std::vector<int> touch_;
    std::vector<TrailRec> trail_;
    std::vector<int> trail_marks_;
};

enum class DfsStatus { exhausted, found, budget, aborted };

using Deadline = std::chrono::steady_clock::time_point;

inline bool past(const Deadline& d) {
    return d != Deadline() && std::chrono::steady_clock::now() >= d;
}

// Depth-first search over slots [lo, hi). In enumerate mode every assignment
// reaching depth hi is recorded and treated as a dead end; otherwise the
// first complete assignment is returned as the (branch-locally lex-least)
// avoider.
struct DfsDriver {
    BacktrackState& st;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    Deadline deadline{};
    const std::atomic<long>* abort_below = nullptr;  // abandon if *abort_below < my_branch
    long my_branch = 0;

    DfsStatus run(int lo, int hi, bool enumerate, std::vector<std::vector<std::uint8_t>>* prefixes,
                  std::vector<std::uint8_t>* avoider) {
        if (lo >= hi) {
            if (enumerate) {
                prefixes->emplace_back();
                return DfsStatus::exhausted;
            }
            capture(avoider, hi);
            return DfsStatus::found;
        }
        std::vector<int> next(hi - lo, 0);
        int depth = lo;
        while (true) {
            const std::uint32_t allowed = st.allowed_mask(depth);
            int c = next[depth - lo];
            while (c < st.colors() && !((allowed >> c) & 1u)) ++c;
            if (c >= st.colors()) {
                if (depth == lo) return DfsStatus::exhausted;
                --depth;
                st.undo();
                continue;
            }
            next[depth - lo] = c + 1;
            ++nodes;
            if (nodes > budget) return DfsStatus::budget;
            if ((nodes & 0x3FFu) == 0) {
                if (abort_below && abort_below->load(std::memory_order_relaxed) < my_branch)
                    return DfsStatus::aborted;
                if (past(deadline)) return DfsStatus::budget;
            }
            if (!st.assign(depth, c)) {
                st.undo();
                continue;
            }
            if (depth + 1 == hi) {
                if (enumerate) {
                    std::vector<std::uint8_t> pfx(hi - lo);
                    for (int s = lo; s < hi; ++s) pfx[s - lo] = static_cast<std::uint8_t>(st.assigned(s));
                    prefixes->push_back(std::move(pfx));
                    st.undo();
                    continue;
                }
                capture(avoider, hi);
                return DfsStatus::found;
            }
            ++depth;
            next[depth - lo] = 0;
        }
    }

private:
    void capture(std::vector<std::uint8_t>* out, int hi) {
        out->resize(st.slot_count());
        for (int s = 0; s < hi; ++s) (*out)[s] = static_cast<std::uint8_t>(st.assigned(s));
    }
};

struct BranchOutcome {
    DfsStatus status = DfsStatus::aborted;
    std::vector<std::uint8_t> slot_colors;
    std::uint64_t nodes = 0;
};

} // namespace detail

inline AvoiderResult find_avoiding_assignment(const AvoiderProblem& problem,
                                              const AvoiderOptions& options = {}) {
    if (problem.colors < 1 || problem.colors > 31)
        throw SymmError(errc::bad_argument, "color count must be in [1,31]");
    if (problem.elements < 0) throw SymmError(errc::bad_argument, "negative ground set");

    AvoiderResult res;
    res.coloring.assign(problem.elements, 0);

    // Constrained elements, in assignment order, become slots.
    std::vector<int> slot_of(problem.elements, -1);
    std::vector<int> element_of;
    std::vector<std::vector<int>> inst_slots;
    {
        std::vector<char> used(problem.elements, 0);
        for (const auto& ins : problem.instances)
            for (int e : ins) {
                if (e < 0 || e >= problem.elements)
                    throw SymmError(errc::bad_argument, "instance element out of range");
                used[e] = 1;
            }
        for (int e = 0; e < problem.elements; ++e)
            if (used[e]) {
                slot_of[e] = static_cast<int>(element_of.size());
                element_of.push_back(e);
            }
        inst_slots.reserve(problem.instances.size());
        for (const auto& ins : problem.instances) {
            std::vector<int> s;
            s.reserve(ins.size());
            for (int e : ins) s.push_back(slot_of[e]);
            std::sort(s.begin(), s.end());
            s.erase(std::unique(s.begin(), s.end()), s.end());
            inst_slots.push_back(std::move(s));
        }
        std::sort(inst_slots.begin(), inst_slots.end());
        inst_slots.erase(std::unique(inst_slots.begin(), inst_slots.end()), inst_slots.end());
    }

    const int slots = static_cast<int>(element_of.size());
    if (inst_slots.empty()) {
        res.verdict = AvoiderVerdict::avoider_found;
        res.branches = 0;
        return res;
    }

    detail::Deadline deadline{};
    if (options.time_limit_s > 0.0)
        deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(options.time_limit_s));

    // Split depth from the color count only, never from the worker count.
    int split = options.split_depth;
    if (split < 0) {
        split = 0;
        if (problem.colors >= 2) {
            std::uint64_t width = 1;
            while (split < 24 && width * problem.colors <= 512) {
                width *= problem.colors;
                ++split;
            }
        }
    }
    split = std::min(split, slots);

    // Phase 1: enumerate viable prefixes at the split depth.
    std::vector<std::vector<std::uint8_t>> prefixes;
    std::uint64_t prefix_nodes = 0;
    {
        detail::BacktrackState st(inst_slots, slots, problem.colors, options.fix_first_color);
        detail::DfsDriver drv{st, options.max_nodes};
        drv.deadline = deadline;
        auto status = drv.run(0, split, /*enumerate=*/true, &prefixes, nullptr);
        prefix_nodes = drv.nodes;
        if (status == detail::DfsStatus::budget) {
            res.verdict = AvoiderVerdict::budget_exhausted;
            res.nodes = prefix_nodes;
            return res;
        }
    }
    res.branches = prefixes.size();
    if (prefixes.empty()) {
        res.verdict = AvoiderVerdict::regular;
        res.nodes = prefix_nodes;
        res.coloring.clear();
        return res;
    }

    // Phase 2: run the branches. A branch may be abandoned only when an
    // earlier branch already found an avoider.
    const long nbranches = static_cast<long>(prefixes.size());
    std::vector<detail::BranchOutcome> outcomes(prefixes.size());
    std::atomic<long> next_branch{0};
    std::atomic<long> best_found{std::numeric_limits<long>::max()};

    auto run_branch = [&](long b) {
        detail::BranchOutcome& out = outcomes[static_cast<std::size_t>(b)];
        detail::BacktrackState st(inst_slots, slots, problem.colors, options.fix_first_color);
        detail::DfsDriver drv{st, options.max_nodes};
        drv.deadline = deadline;
        drv.abort_below = &best_found;
        drv.my_branch = b;
        const auto& pfx = prefixes[static_cast<std::size_t>(b)];
        bool replay_ok = true;
        for (int s = 0; s < static_cast<int>(pfx.size()); ++s) {
            ++drv.nodes;
            if (!st.assign(s, pfx[s])) {
                replay_ok = false;  // cannot happen: prefixes were viable
                break;
            }
        }
        if (!replay_ok) {
            out.status = detail::DfsStatus::exhausted;
            out.nodes = drv.nodes;
            return;
        }
        out.status = drv.run(split, slots, /*enumerate=*/false, nullptr, &out.slot_colors);
        out.nodes = drv.nodes;
        if (out.status == detail::DfsStatus::found) {
            long cur = best_found.load(std::memory_order_relaxed);
            while (b < cur && !best_found.compare_exchange_weak(cur, b, std::memory_order_relaxed)) {
            }
        }
    };

    auto worker_loop = [&]() {
        while (true) {
            long b = next_branch.fetch_add(1, std::memory_order_relaxed);
            if (b >= nbranches) break;
            if (best_found.load(std::memory_order_relaxed) < b) {
                outcomes[static_cast<std::size_t>(b)].status = detail::DfsStatus::aborted;
                continue;
            }
            run_branch(b);
        }
    };

    const int nworkers = std::max(1, std::min<int>(options.workers, static_cast<int>(nbranches)));
    if (nworkers == 1) {
        worker_loop();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(nworkers));
        for (int w = 0; w < nworkers; ++w) pool.emplace_back(worker_loop);
        for (auto& t : pool) t.join();
    }

    // Decide in branch order; branches after the decisive one are ignored.
    res.nodes = prefix_nodes;
    for (long b = 0; b < nbranches; ++b) {
        const auto& out = outcomes[static_cast<std::size_t>(b)];
        if (out.status == detail::DfsStatus::aborted)
            throw std::logic_error("abandoned branch reached before a decisive one");
        res.nodes += out.nodes;
        if (out.status == detail::DfsStatus::exhausted) continue;
        if (out.status == detail::DfsStatus::budget) {
            res.verdict = AvoiderVerdict::budget_exhausted;
            return res;
        }
        res.verdict = AvoiderVerdict::avoider_found;
        for (int s = 0; s < slots; ++s) res.coloring[element_of[s]] = out.slot_colors[s];
        return res;
    }
    res.verdict = AvoiderVerdict::regular;
    res.coloring.clear();
    return res;
}

} // namespace symmcfg

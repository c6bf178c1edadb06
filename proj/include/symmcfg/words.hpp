#pragma once

// Word spaces and combinatorial lines: variable words over [t] = {1..t},
// located words (finite partial maps from positions to letters), the
// Beiglboeck pattern, the word-to-integer star evaluation used to transfer
// colorings, polynomial Hales-Jewett grids, and the exhaustive HJ(r,t)
// search on top of the shared avoider core.

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "symmcfg/avoider.hpp"
#include "symmcfg/star_algebra.hpp"

namespace symmcfg {

using Word = std::vector<int>;  // letters in [1..t], fixed length

/// Word over [t] plus the variable, encoded as 0; at least one 0 required.
struct VariableWord {
    std::vector<int> letters;
};

inline std::vector<Word> line_points(const VariableWord& w, int t) {
    if (t < 1) throw SymmError(errc::bad_argument, "alphabet size must be >= 1");
    bool has_var = false;
    for (int ch : w.letters) {
        if (ch == 0) has_var = true;
        else if (ch < 1 || ch > t)
            throw SymmError(errc::bad_argument, "letter outside [1..t]");
    }
    if (!has_var) throw SymmError(errc::no_variable, "variable word without a variable");
    std::vector<Word> line;
    line.reserve(static_cast<std::size_t>(t));
    for (int a = 1; a <= t; ++a) {
        Word p = w.letters;
        for (int& ch : p)
            if (ch == 0) ch = a;
        line.push_back(std::move(p));
    }
    return line;
}

/// Number of combinatorial lines of [t]^N, one per variable word:
/// (t+1)^N - t^N.
inline Int count_lines(int t, int N) {
    if (t < 1 || N < 1) throw SymmError(errc::bad_argument, "need t >= 1 and N >= 1");
    return ipow(Int(t + 1), static_cast<unsigned long long>(N)) -
           ipow(Int(t), static_cast<unsigned long long>(N));
}

using LocatedWord = std::map<int, int>;  // position -> letter

/// The located words {alpha ∪ (gamma ∪ {t}) x {s} : s in alphabet, t in F};
/// Dom(alpha), gamma and F must be pairwise disjoint.
inline std::vector<LocatedWord> beiglboeck_pattern(const LocatedWord& alpha,
                                                   const std::set<int>& gamma,
                                                   const std::set<int>& F,
                                                   const std::vector<int>& alphabet) {
    for (int g : gamma)
        if (alpha.count(g) || F.count(g))
            throw SymmError(errc::domain_overlap, "gamma overlaps Dom(alpha) or F");
    for (int t : F)
        if (alpha.count(t)) throw SymmError(errc::domain_overlap, "F overlaps Dom(alpha)");
    std::vector<LocatedWord> out;
    out.reserve(alphabet.size() * F.size());
    for (int s : alphabet)
        for (int t : F) {
            LocatedWord w = alpha;
            for (int g : gamma) w[g] = s;
            w[t] = s;
            out.push_back(std::move(w));
        }
    return out;
}

/// f(alpha) = star-product over Dom(alpha) of position^(letter): gfold of the
/// multiset holding each position repeated letter-many times. Zero letters
/// contribute the identity, so they need a unital context.
inline Int eval_word_star(const SymmetricContext& ctx, const LocatedWord& alpha) {
    std::vector<Int> multiset;
    bool any_zero = alpha.empty();
    for (const auto& [pos, letter] : alpha) {
        if (pos < 1) throw SymmError(errc::non_positive, "positions start at 1");
        if (letter < 0) throw SymmError(errc::bad_argument, "letters are exponents >= 0");
        if (letter == 0) any_zero = true;
        for (int i = 0; i < letter; ++i) multiset.push_back(Int(pos));
    }
    if (any_zero && !ctx.unital)
        throw SymmError(errc::non_unital_identity,
                        "zero letters need the identity, absent in a non-unital context");
    if (multiset.empty()) return ctx.identity();
    return gfold(ctx, multiset);
}

/// Point of the polynomial grid Q(N) = [q]^N x [q]^(N^2) x ... x [q]^(N^d);
/// component i holds N^i letters, indexed lexicographically by i-tuples
/// over [N].
struct PhjPoint {
    std::vector<std::vector<int>> comps;
};

struct PhjPattern {
    PhjPoint base;
    std::vector<int> gamma;  // nonempty subset of [1..N]
    int N = 0;
    int q = 0;
    int d = 1;
};

namespace detail {

inline void overwrite_gamma_block(std::vector<int>& comp, const std::vector<int>& gamma, int N,
                                  int i, int x) {
    // all indexes of gamma^i inside the lexicographic [N]^i block
    std::vector<std::size_t> stack_idx(static_cast<std::size_t>(i), 0);
    while (true) {
        std::size_t flat = 0;
        for (int j = 0; j < i; ++j)
            flat = flat * static_cast<std::size_t>(N) +
                   static_cast<std::size_t>(gamma[stack_idx[static_cast<std::size_t>(j)]] - 1);
        comp[flat] = x;
        int j = i - 1;
        while (j >= 0 && stack_idx[static_cast<std::size_t>(j)] == gamma.size() - 1)
            stack_idx[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
        ++stack_idx[static_cast<std::size_t>(j)];
    }
}

} // namespace detail

/// The q^d points a ⊕ x_1 gamma ⊕ x_2 (gamma x gamma) ⊕ ... ⊕ x_d gamma^d for
/// x_i in [1..q]; ⊕ overwrites the gamma^i block of component i with x_i.
inline std::vector<PhjPoint> phj_points(const PhjPattern& p) {
    if (p.d < 1 || p.q < 1 || p.N < 1) throw SymmError(errc::bad_argument, "need d,q,N >= 1");
    if (p.gamma.empty()) throw SymmError(errc::bad_argument, "gamma must be nonempty");
    for (int g : p.gamma)
        if (g < 1 || g > p.N) throw SymmError(errc::bad_argument, "gamma outside [1..N]");
    if (static_cast<int>(p.base.comps.size()) != p.d)
        throw SymmError(errc::bad_argument, "base point needs d components");
    std::size_t want = 1;
    for (int i = 1; i <= p.d; ++i) {
        want *= static_cast<std::size_t>(p.N);
        if (p.base.comps[static_cast<std::size_t>(i - 1)].size() != want)
            throw SymmError(errc::bad_argument, "component i must hold N^i letters");
    }

    std::vector<PhjPoint> points;
    std::vector<int> xs(static_cast<std::size_t>(p.d), 1);
    while (true) {
        PhjPoint pt = p.base;
        for (int i = 1; i <= p.d; ++i)
            detail::overwrite_gamma_block(pt.comps[static_cast<std::size_t>(i - 1)], p.gamma, p.N,
                                          i, xs[static_cast<std::size_t>(i - 1)]);
        points.push_back(std::move(pt));
        int i = p.d - 1;
        while (i >= 0 && xs[static_cast<std::size_t>(i)] == p.q) xs[static_cast<std::size_t>(i--)] = 1;
        if (i < 0) break;
        ++xs[static_cast<std::size_t>(i)];
    }
    return points;
}

/// Enumerates the combinatorial lines of [t]^N as index sets into the
/// lexicographic word order (first letter most significant).
template <class Fn>
void for_each_line(int t, int N, Fn&& fn) {
    if (t < 1 || N < 1) throw SymmError(errc::bad_argument, "need t >= 1 and N >= 1");
    // patterns over [0..t], 0 = variable, at least one 0
    std::vector<int> pat(static_cast<std::size_t>(N), 0);
    std::vector<int> line(static_cast<std::size_t>(t), 0);
    while (true) {
        bool has_var = false;
        for (int ch : pat)
            if (ch == 0) {
                has_var = true;
                break;
            }
        if (has_var) {
            for (int a = 1; a <= t; ++a) {
                long long idx = 0;
                for (int ch : pat) idx = idx * t + ((ch == 0 ? a : ch) - 1);
                line[static_cast<std::size_t>(a - 1)] = static_cast<int>(idx);
            }
            fn(line);
        }
        int i = N - 1;
        while (i >= 0 && pat[static_cast<std::size_t>(i)] == t) pat[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) break;
        ++pat[static_cast<std::size_t>(i)];
    }
}

struct HjNumberResult {
    std::optional<int> value;    // least N <= n_max with every r-coloring forced
    std::uint64_t nodes = 0;     // engine nodes summed over the Ns tried
    std::uint64_t lines = 0;     // instances summed over the Ns tried
    std::uint64_t branches = 0;  // branches of the decisive window
};

/// Exhaustive HJ(r,t) search: least N <= n_max such that every r-coloring of
/// [t]^N contains a monochromatic line, decided window by window on the
/// shared avoider core.
inline HjNumberResult hj_number(int t, int r, int n_max, const AvoiderOptions& options = {}) {
    if (t < 1 || r < 1 || n_max < 1)
        throw SymmError(errc::bad_argument, "need t, r, n_max >= 1");
    HjNumberResult res;
    for (int N = 1; N <= n_max; ++N) {
        double words = 1;
        for (int i = 0; i < N; ++i) words *= t;
        if (words > (1 << 22))
            throw SymmError(errc::length_exceeded, "word space beyond 2^22 points");
        AvoiderProblem problem;
        problem.elements = static_cast<int>(words);
        problem.colors = r;
        for_each_line(t, N, [&](const std::vector<int>& line) {
            problem.instances.push_back(line);
        });
        res.lines += problem.instances.size();
        AvoiderResult a = find_avoiding_assignment(problem, options);
        res.nodes += a.nodes;
        res.branches = a.branches;
        if (a.verdict == AvoiderVerdict::budget_exhausted) return res;  // value stays empty
        if (a.verdict == AvoiderVerdict::regular) {
            res.value = N;
            return res;
        }
    }
    return res;
}

} // namespace symmcfg

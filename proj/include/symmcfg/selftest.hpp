#pragma once

// The algebraic property suite behind `verify-identities` and the acceptance
// criteria: every module invariant as a runnable check with a case count.
// All randomness is drawn from the caller's seed, so a fixed seed reproduces
// the run bit for bit.

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "symmcfg/dyadic.hpp"
#include "symmcfg/families.hpp"
#include "symmcfg/star_polynomial.hpp"
#include "symmcfg/words.hpp"

namespace symmcfg {

struct CheckResult {
    std::string name;
    std::uint64_t cases = 0;
    bool ok = true;
    std::string detail;  // first counterexample, when !ok
};

namespace selftest {

inline std::vector<SymmetricContext> pinned_contexts() {
    return {make_context(1, 0), make_context(1, 1), make_context(2, 1),
            make_context(3, 1), make_context(2, 3), make_context(-1, 2)};
}

inline Int rnd(std::mt19937_64& rng, long lo, long hi) {
    return Int(std::uniform_int_distribution<long>(lo, hi)(rng));
}

inline std::string ctx_str(const SymmetricContext& ctx) {
    return "(" + ctx.l.str() + "," + ctx.k.str() + ")";
}

template <class Body>
CheckResult run_check(const std::string& name, Body&& body) {
    CheckResult res;
    res.name = name;
    body(res);
    return res;
}

inline void fail(CheckResult& res, const std::string& detail) {
    res.ok = false;
    if (res.detail.empty()) res.detail = detail;
}

// --- star algebra -----------------------------------------------------------

inline CheckResult check_star_axioms(std::uint64_t seed, std::uint64_t cases) {
    return run_check("star associativity/commutativity/identity", [&](CheckResult& res) {
        std::mt19937_64 rng(seed);
        for (const auto& ctx : pinned_contexts()) {
            const Int id = ctx.identity();
            for (std::uint64_t i = 0; i < cases && res.ok; ++i) {
                Int a = rnd(rng, -80, 80), b = rnd(rng, -80, 80), c = rnd(rng, -80, 80);
                ++res.cases;
                if (star(ctx, star(ctx, a, b), c) != star(ctx, a, star(ctx, b, c)))
                    fail(res, "associativity at " + ctx_str(ctx));
                if (star(ctx, a, b) != star(ctx, b, a)) fail(res, "commutativity at " + ctx_str(ctx));
                if (star(ctx, id, a) != a) fail(res, "identity law at " + ctx_str(ctx));
            }
        }
    });
}

inline CheckResult check_affine_isomorphism(std::uint64_t seed, std::uint64_t cases) {
    return run_check("affine isomorphism prod(l x_i + k) = l gfold + k", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 1);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t i = 0; i < cases && res.ok; ++i) {
                auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
                std::vector<Int> xs;
                for (std::size_t t = 0; t < n; ++t) xs.push_back(rnd(rng, -30, 30));
                Int prod = 1;
                for (const Int& x : xs) prod *= affine_image(ctx, x);
                ++res.cases;
                if (prod != ctx.l * gfold(ctx, xs) + ctx.k) fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

inline CheckResult check_permutation_and_merge(std::uint64_t seed, std::uint64_t cases) {
    return run_check("gfold permutation invariance + merge law", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 2);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t i = 0; i < cases && res.ok; ++i) {
                std::vector<Int> xs;
                for (int t = 0; t < 5; ++t) xs.push_back(rnd(rng, -30, 30));
                auto shuffled = xs;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                ++res.cases;
                if (gfold(ctx, xs) != gfold(ctx, shuffled))
                    fail(res, "permutation at " + ctx_str(ctx));
                std::vector<Int> left(xs.begin(), xs.begin() + 2);
                std::vector<Int> right(xs.begin() + 2, xs.end());
                if (star(ctx, gfold(ctx, left), gfold(ctx, right)) != gfold(ctx, xs))
                    fail(res, "merge law at " + ctx_str(ctx));
            }
        }
    });
}

/// gfold == gfold_esp for every xs in [lo,hi]^n, n <= nmax, all contexts.
inline CheckResult check_dual_path(long lo = -3, long hi = 3, int nmax = 5) {
    return run_check("dual path gfold == gfold_esp (exhaustive)", [&](CheckResult& res) {
        for (const auto& ctx : pinned_contexts()) {
            for (int n = 1; n <= nmax && res.ok; ++n) {
                std::vector<long> odo(static_cast<std::size_t>(n), lo);
                while (res.ok) {
                    std::vector<Int> xs(odo.begin(), odo.end());
                    ++res.cases;
                    if (gfold(ctx, xs) != gfold_esp(ctx, xs))
                        fail(res, "mismatch at " + ctx_str(ctx));
                    int i = n - 1;
                    while (i >= 0 && odo[static_cast<std::size_t>(i)] == hi)
                        odo[static_cast<std::size_t>(i--)] = lo;
                    if (i < 0) break;
                    ++odo[static_cast<std::size_t>(i)];
                }
            }
        }
    });
}

/// b (*) (a + i d) = y + i z with y = star(b,a) and z = (l b + k) d (the
/// constants obtained by expanding the defining quotient).
inline CheckResult check_linear_form(std::uint64_t seed, std::uint64_t cases) {
    return run_check("linear form b (*) (a + i d) = y + i z", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 3);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                Int a = rnd(rng, -50, 50), b = rnd(rng, -50, 50), d = rnd(rng, -50, 50);
                Int i = rnd(rng, -12, 12);
                Int y = star(ctx, b, a);
                Int z = (ctx.l * b + ctx.k) * d;
                ++res.cases;
                if (star(ctx, b, a + i * d) != y + i * z) fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

/// x (*) (a + b P(d)) = p + q P(d) with p = l a x + k x + a k + (k^2-k)/l and
/// q = (l x + k) b, for random zero-constant integer polynomials P.
inline CheckResult check_poly_translation(std::uint64_t seed, std::uint64_t cases) {
    return run_check("polynomial progression translation p + q P(d)", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 4);
        for (const auto& ctx : pinned_contexts()) {
            const Int l = ctx.l, k = ctx.k;
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                Int x = rnd(rng, -30, 30), a = rnd(rng, -30, 30), b = rnd(rng, -30, 30);
                Int d = rnd(rng, -12, 12);
                auto deg = std::uniform_int_distribution<int>(1, 4)(rng);
                std::vector<Int> coeffs;  // of x^1..x^deg
                for (int j = 0; j < deg; ++j) coeffs.push_back(rnd(rng, -6, 6));
                Int pd = 0;
                for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) pd = pd * d + *it;
                pd *= d;
                Int p = l * a * x + k * x + a * k + exact_div(k * k - k, l);
                Int q = (l * x + k) * b;
                ++res.cases;
                if (star(ctx, x, a + b * pd) != p + q * pd) fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

inline CheckResult check_power_laws(std::uint64_t seed, std::uint64_t cases) {
    return run_check("star-power laws a^(c+d), a^(cd)", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 5);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                Int a = rnd(rng, -8, 8), c = rnd(rng, -4, 4), d = rnd(rng, -4, 4);
                if (affine_image(ctx, a) == 0 && (c < 0 || d < 0 || c * d < 0)) continue;
                ++res.cases;
                auto pc = star_power(ctx, a, c), pd_ = star_power(ctx, a, d);
                if (star_rat(ctx, pc, pd_) != star_power(ctx, a, c + d))
                    fail(res, "a^(c+d) at " + ctx_str(ctx));
                if (star_power(ctx, pc, d) != star_power(ctx, a, c * d))
                    fail(res, "a^(cd) at " + ctx_str(ctx));
            }
        }
    });
}

// --- configuration families --------------------------------------------------

/// GeoArithAdd at (1,0) equals direct evaluation of x (y + i z)^j.
inline CheckResult check_geo_specialization(std::uint64_t seed, std::uint64_t cases) {
    return run_check("geo_arith_add at (1,0) == x (y+iz)^j", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 6);
        const auto ctx = make_context(1, 0);
        for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
            FamilyDescriptor d;
            d.kind = FamilyKind::geo_arith_add;
            d.ctx = ctx;
            d.m = std::uniform_int_distribution<long>(0, 3)(rng);
            d.values = {rnd(rng, -9, 9), rnd(rng, -9, 9), rnd(rng, -9, 9)};
            std::set<Int> direct;
            for (long i = 0; i <= d.m; ++i)
                for (long j = 0; j <= d.m; ++j)
                    direct.insert(d.values[0] *
                                  ipow(d.values[1] + Int(i) * d.values[2],
                                       static_cast<unsigned long long>(j)));
            Instance ins = generate(d);
            ++res.cases;
            if (std::vector<Int>(direct.begin(), direct.end()) != ins.elements)
                fail(res, "grid mismatch");
        }
    });
}

/// star(x, GAP(a_0..a_m)) is the GAP with coefficients P_0..P_m.
inline CheckResult check_gap_translation(std::uint64_t seed, std::uint64_t cases) {
    return run_check("GAP invariance under star translation", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 7);
        for (const auto& ctx : pinned_contexts()) {
            const Int l = ctx.l, k = ctx.k;
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                FamilyDescriptor d;
                d.kind = FamilyKind::gap;
                d.m = std::uniform_int_distribution<long>(0, 3)(rng);
                d.n = std::uniform_int_distribution<long>(0, 3)(rng);
                for (long j = 0; j <= d.m; ++j) d.values.push_back(rnd(rng, -9, 9));
                Int x = rnd(rng, -9, 9);
                Instance base = generate(d);
                std::set<Int> translated;
                for (const Int& e : base.elements) translated.insert(star(ctx, x, e));
                FamilyDescriptor d2 = d;
                d2.values.clear();
                d2.values.push_back(l * d.values[0] * x + k * x + k * d.values[0] +
                                    exact_div(k * k - k, l));
                for (long j = 1; j <= d.m; ++j)
                    d2.values.push_back(l * d.values[static_cast<std::size_t>(j)] * x +
                                        k * d.values[static_cast<std::size_t>(j)]);
                Instance shifted = generate(d2);
                ++res.cases;
                if (std::vector<Int>(translated.begin(), translated.end()) != shifted.elements)
                    fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

/// Every symmetric-system element is the gfold_esp of its subsequence.
inline CheckResult check_symmetric_system(std::uint64_t seed, std::uint64_t cases) {
    return run_check("symmetric system vs per-subsequence gfold_esp", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 8);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                auto n = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
                std::vector<Int> xs;
                for (std::size_t i = 0; i < n; ++i) xs.push_back(rnd(rng, -12, 12));
                Instance ins = gen_symmetric_system(ctx, xs);
                std::set<Int> expect;
                for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                    std::vector<Int> sub;
                    for (std::size_t i = 0; i < n; ++i)
                        if (mask & (std::uint64_t{1} << i)) sub.push_back(xs[i]);
                    expect.insert(gfold_esp(ctx, sub));
                }
                ++res.cases;
                if (std::vector<Int>(expect.begin(), expect.end()) != ins.elements ||
                    ins.elements.size() > (std::size_t{1} << n) - 1)
                    fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

/// P(x+h) (*) P(x)^(-1) agrees with the derived degree-(n-1) polynomial, as
/// rational affine images, on a grid; n <= 3.
inline CheckResult check_degree_law(std::uint64_t seed, std::uint64_t cases) {
    return run_check("difference polynomial has degree n-1", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 9);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                auto n = std::uniform_int_distribution<int>(1, 3)(rng);
                StarPolynomial p;
                p.ctx = ctx;
                bool unit_ok = true;
                for (int i = 0; i <= n; ++i) {
                    Int coeff = rnd(rng, -6, 6);
                    if (i > 0 && affine_image(ctx, coeff) == 0) unit_ok = false;
                    p.coeffs.push_back(coeff);
                }
                if (!unit_ok || affine_image(ctx, p.coeffs[0]) == 0) continue;
                Int h = rnd(rng, 1, 4);
                for (Int x = -3; x <= 3; ++x) {
                    ++res.cases;
                    ExactScalar lhs = rat_image(ctx, eval_star_poly(p, x + h)) /
                                      rat_image(ctx, eval_star_poly(p, x));
                    ExactScalar rhs(1);
                    for (int deg = 0; deg < n; ++deg) {
                        // image coefficient of x^deg: prod_i img(a_i)^(C(i,i-deg) h^(i-deg))
                        ExactScalar bimg(1);
                        for (int i = deg + 1; i <= n; ++i) {
                            Int binom = 1;
                            for (int j = 0; j < i - deg; ++j)
                                binom = binom * Int(i - j) / Int(j + 1);
                            bimg *= ExactScalar(affine_image(ctx, p.coeffs[static_cast<std::size_t>(i)]))
                                        .pow(binom * ipow(h, static_cast<unsigned long long>(i - deg)));
                        }
                        rhs *= bimg.pow(ipow(x, static_cast<unsigned long long>(deg)));
                    }
                    if (lhs != rhs) fail(res, "at " + ctx_str(ctx));
                }
            }
        }
    });
}

/// CST corollary with singleton beta reduces to the poly-vdW shape.
inline CheckResult check_cst_singleton(std::uint64_t seed, std::uint64_t cases) {
    return run_check("CST corollary singleton-beta == poly_vdw", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 10);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                auto deg = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
                auto m = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
                std::vector<std::vector<Int>> tuples;
                for (std::size_t i = 0; i < m; ++i) {
                    std::vector<Int> tup;
                    for (std::size_t s = 0; s < deg; ++s) tup.push_back(rnd(rng, -5, 5));
                    tuples.push_back(std::move(tup));
                }
                Int x1 = rnd(rng, -6, 6), z1 = rnd(rng, 0, 3);

                FamilyDescriptor cst;
                cst.kind = FamilyKind::cst_corollary;
                cst.ctx = ctx;
                cst.L = 1;
                cst.tuples = tuples;
                cst.values = {x1, z1};

                FamilyDescriptor vdw;
                vdw.kind = FamilyKind::poly_vdw;
                vdw.ctx = ctx;
                vdw.tuples = tuples;
                vdw.values = {x1, z1};

                ++res.cases;
                if (generate(cst).elements != generate(vdw).elements)
                    fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

// --- dyadic operations --------------------------------------------------------

inline CheckResult check_phi_rho_roundtrip(long max_n = 100000) {
    return run_check("phi/rho round-trips on [1,max]", [&](CheckResult& res) {
        for (long n = 1; n <= max_n && res.ok; ++n) {
            auto [xv, yv] = phi(Int(n));
            auto [xr, er] = rho(Int(n));
            res.cases += 2;
            if (phi_inverse(xv, yv) != n) fail(res, "phi at n=" + std::to_string(n));
            if (rho_inverse(xr, er) != n) fail(res, "rho at n=" + std::to_string(n));
        }
    });
}

inline CheckResult check_dyadic_homomorphisms(long max_n = 300) {
    return run_check("phi(m (+) n) = phi(m)+phi(n); f(m (x) n) = f(m) f(n)", [&](CheckResult& res) {
        for (long m = 1; m <= max_n && res.ok; m += 3) {
            for (long n = 1; n <= max_n && res.ok; n += 5) {
                auto pm = phi(Int(m)), pn = phi(Int(n));
                auto ps = phi(oplus(Int(m), Int(n)));
                ++res.cases;
                if (ps.first != pm.first + pn.first || ps.second != pm.second + pn.second)
                    fail(res, "oplus homomorphism");
                if (decompose(otimes(Int(m), Int(n))).valuation !=
                    decompose(Int(m)).valuation * decompose(Int(n)).valuation)
                    fail(res, "otimes valuation");
            }
        }
    });
}

inline CheckResult check_dyadic_assoc_comm(long grid_max = 200, long stride = 7) {
    return run_check("oplus/otimes associativity + commutativity", [&](CheckResult& res) {
        for (long a = 1; a <= grid_max && res.ok; a += stride)
            for (long b = 1; b <= grid_max && res.ok; b += stride) {
                Int ia(a), ib(b);
                ++res.cases;
                if (oplus(ia, ib) != oplus(ib, ia)) fail(res, "oplus comm");
                if (otimes(ia, ib) != otimes(ib, ia)) fail(res, "otimes comm");
                for (long c = 1; c <= grid_max && res.ok; c += stride) {
                    Int ic(c);
                    ++res.cases;
                    if (oplus(oplus(ia, ib), ic) != oplus(ia, oplus(ib, ic)))
                        fail(res, "oplus assoc");
                    if (otimes(otimes(ia, ib), ic) != otimes(ia, otimes(ib, ic)))
                        fail(res, "otimes assoc");
                }
            }
    });
}

inline CheckResult check_odd_otimes_star(long max_odd = 999) {
    return run_check("odd (x) odd == star_{1,1}", [&](CheckResult& res) {
        const auto ctx = make_context(1, 1);
        for (long m = 1; m <= max_odd && res.ok; m += 2)
            for (long n = 1; n <= max_odd && res.ok; n += 2) {
                ++res.cases;
                if (otimes(Int(m), Int(n)) != star(ctx, Int(m), Int(n)))
                    fail(res, "at (" + std::to_string(m) + "," + std::to_string(n) + ")");
            }
    });
}

inline CheckResult check_fold_vs_binary(std::uint64_t seed, std::uint64_t cases) {
    return run_check("n-ary folds equal binary left folds", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 11);
        for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
            auto n = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
            std::vector<Int> xs;
            for (std::size_t i = 0; i < n; ++i) xs.push_back(rnd(rng, 1, 500));
            Int accp = xs[0], acct = xs[0];
            for (std::size_t i = 1; i < n; ++i) {
                accp = oplus(accp, xs[i]);
                acct = otimes(acct, xs[i]);
            }
            ++res.cases;
            if (oplus_fold(xs) != accp) fail(res, "oplus fold");
            if (otimes_fold(xs) != acct) fail(res, "otimes fold");
        }
    });
}

// --- words -------------------------------------------------------------------

inline CheckResult check_line_counts(int tmax = 3, int nmax = 4) {
    return run_check("line enumeration count == (t+1)^N - t^N", [&](CheckResult& res) {
        for (int t = 1; t <= tmax; ++t)
            for (int N = 1; N <= nmax && res.ok; ++N) {
                Int cnt = 0;
                for_each_line(t, N, [&](const std::vector<int>&) { ++cnt; });
                ++res.cases;
                if (cnt != count_lines(t, N))
                    fail(res, "t=" + std::to_string(t) + " N=" + std::to_string(N));
            }
    });
}

inline CheckResult check_located_word_count(int tmax = 3, int nmax = 5) {
    return run_check("located words over [n] count (t+1)^n", [&](CheckResult& res) {
        for (int t = 1; t <= tmax; ++t)
            for (int n = 1; n <= nmax && res.ok; ++n) {
                // odometer over {absent, 1..t}^n
                std::vector<int> odo(static_cast<std::size_t>(n), 0);
                Int cnt = 0;
                while (true) {
                    ++cnt;
                    int i = n - 1;
                    while (i >= 0 && odo[static_cast<std::size_t>(i)] == t)
                        odo[static_cast<std::size_t>(i--)] = 0;
                    if (i < 0) break;
                    ++odo[static_cast<std::size_t>(i)];
                }
                ++res.cases;
                if (cnt != ipow(Int(t + 1), static_cast<unsigned long long>(n)))
                    fail(res, "t=" + std::to_string(t) + " n=" + std::to_string(n));
            }
    });
}

inline CheckResult check_word_star_homomorphism(std::uint64_t seed, std::uint64_t cases) {
    return run_check("eval_word_star(alpha u beta) = star(f(alpha), f(beta))", [&](CheckResult& res) {
        std::mt19937_64 rng(seed + 12);
        for (const auto& ctx : pinned_contexts()) {
            for (std::uint64_t t = 0; t < cases && res.ok; ++t) {
                LocatedWord alpha, beta, both;
                for (int pos = 1; pos <= 5; ++pos)
                    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
                        int letter = std::uniform_int_distribution<int>(0, 3)(rng);
                        alpha[pos] = letter;
                        both[pos] = letter;
                    }
                for (int pos = 6; pos <= 10; ++pos)
                    if (std::uniform_int_distribution<int>(0, 1)(rng)) {
                        int letter = std::uniform_int_distribution<int>(0, 3)(rng);
                        beta[pos] = letter;
                        both[pos] = letter;
                    }
                ++res.cases;
                if (eval_word_star(ctx, both) !=
                    star(ctx, eval_word_star(ctx, alpha), eval_word_star(ctx, beta)))
                    fail(res, "at " + ctx_str(ctx));
            }
        }
    });
}

inline CheckResult check_phj_diagonal() {
    return run_check("phj d=1 full gamma reproduces the all-variable line", [&](CheckResult& res) {
        for (int q = 1; q <= 3; ++q)
            for (int N = 1; N <= 3; ++N) {
                PhjPattern p;
                p.N = N;
                p.q = q;
                p.d = 1;
                for (int g = 1; g <= N; ++g) p.gamma.push_back(g);
                p.base.comps = {std::vector<int>(static_cast<std::size_t>(N), 1)};
                auto points = phj_points(p);
                VariableWord w;
                w.letters.assign(static_cast<std::size_t>(N), 0);
                auto line = line_points(w, q);
                ++res.cases;
                if (points.size() != line.size()) {
                    fail(res, "cardinality");
                    continue;
                }
                for (std::size_t i = 0; i < points.size(); ++i)
                    if (points[i].comps[0] != line[i]) fail(res, "points differ");
            }
    });
}

// --- driver -------------------------------------------------------------------

struct Config {
    std::uint64_t seed = 20240801;
    std::uint64_t algebra_cases = 10000;  // per context
    std::uint64_t family_cases = 300;
    long dyadic_roundtrip_max = 100000;
    long odd_pair_max = 999;
};

inline std::vector<CheckResult> run_all(const Config& cfg = {}) {
    std::vector<CheckResult> out;
    out.push_back(check_star_axioms(cfg.seed, cfg.algebra_cases));
    out.push_back(check_affine_isomorphism(cfg.seed, cfg.algebra_cases));
    out.push_back(check_permutation_and_merge(cfg.seed, cfg.algebra_cases));
    out.push_back(check_dual_path());
    out.push_back(check_linear_form(cfg.seed, cfg.algebra_cases));
    out.push_back(check_poly_translation(cfg.seed, cfg.algebra_cases));
    out.push_back(check_power_laws(cfg.seed, cfg.algebra_cases / 10));
    out.push_back(check_geo_specialization(cfg.seed, cfg.family_cases));
    out.push_back(check_gap_translation(cfg.seed, cfg.family_cases));
    out.push_back(check_symmetric_system(cfg.seed, cfg.family_cases));
    out.push_back(check_degree_law(cfg.seed, cfg.family_cases / 3));
    out.push_back(check_cst_singleton(cfg.seed, cfg.family_cases));
    out.push_back(check_phi_rho_roundtrip(cfg.dyadic_roundtrip_max));
    out.push_back(check_dyadic_homomorphisms());
    out.push_back(check_dyadic_assoc_comm());
    out.push_back(check_odd_otimes_star(cfg.odd_pair_max));
    out.push_back(check_fold_vs_binary(cfg.seed, cfg.family_cases));
    out.push_back(check_line_counts());
    out.push_back(check_located_word_count());
    out.push_back(check_word_star_homomorphism(cfg.seed, cfg.family_cases));
    out.push_back(check_phj_diagonal());
    return out;
}

} // namespace selftest
} // namespace symmcfg

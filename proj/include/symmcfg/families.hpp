#pragma once

// Configuration-family generators: each kind turns a parameter tuple into the
// explicit finite integer set its theorem asserts monochromatic. Parameters
// split into a structural part carried by the descriptor (lengths, exponent
// ranges, coefficient tuples, polynomial lists) and a free part (the
// existentially quantified integers) supplied either in the descriptor or by
// the search layer, one tuple per generated instance.
//
// Elements are Z-exact; any division by l that leaves Z reports
// non_integral_element, signalling invalid parameters for the chosen (l,k)
// rather than silently producing a rational.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "symmcfg/star_algebra.hpp"
#include "symmcfg/star_polynomial.hpp"

namespace symmcfg {

enum class FamilyKind {
    ap_plain,          // {a + t*d : 0 <= t < len}
    star_schur,        // {x, y, x (*) y}
    geo_arith_add,     // preimage of (lx+k) (l(y+iz)+k)^j,  i,j in [0,m]
    geo_arith_star,    // preimage of (lx+k) (ly+k)^j (lz+k)^(i*j)
    gap,               // {a0 + i1 a1 + ... + im am : i in [0,n]^m}
    poly_progression,  // {a + b*P_i(d)}
    poly_vdw,          // preimage of (ld'+k) prod_s (l a_s + k)^(c^s), one per tuple
    symmetric_system,  // gfold over every nonempty subsequence of xs
    mpc_set,           // Deuber staircase rows i0 s0 + ... + c s_j, i in [-p,p]
    deuber_star,       // star-variant Deuber rows (see DeuberSpec)
    cst_corollary,     // preimage of prod_{j in beta}(lx_j+k) prod_s (l a_s+k)^(z_beta^s)
};

inline const char* family_kind_name(FamilyKind k) {
    switch (k) {
        case FamilyKind::ap_plain: return "ap";
        case FamilyKind::star_schur: return "star_schur";
        case FamilyKind::geo_arith_add: return "geo_arith_add";
        case FamilyKind::geo_arith_star: return "geo_arith_star";
        case FamilyKind::gap: return "gap";
        case FamilyKind::poly_progression: return "poly_progression";
        case FamilyKind::poly_vdw: return "poly_vdw";
        case FamilyKind::symmetric_system: return "symmetric_system";
        case FamilyKind::mpc_set: return "mpc_set";
        case FamilyKind::deuber_star: return "deuber_star";
        case FamilyKind::cst_corollary: return "cst_corollary";
    }
    return "?";
}

inline std::optional<FamilyKind> family_kind_from(const std::string& s) {
    for (FamilyKind k :
         {FamilyKind::ap_plain, FamilyKind::star_schur, FamilyKind::geo_arith_add,
          FamilyKind::geo_arith_star, FamilyKind::gap, FamilyKind::poly_progression,
          FamilyKind::poly_vdw, FamilyKind::symmetric_system, FamilyKind::mpc_set,
          FamilyKind::deuber_star, FamilyKind::cst_corollary})
        if (s == family_kind_name(k)) return k;
    return std::nullopt;
}

/// One generated configuration. Elements are deduplicated and sorted; the
/// theorems stipulate pairwise-distinct values, so collisions are recorded in
/// the degenerate flag rather than enforced, and consumers choose.
struct Instance {
    std::vector<Int> elements;    // strictly ascending
    std::size_t raw_count = 0;    // values generated before deduplication
    bool degenerate = false;      // raw_count > elements.size()
    std::vector<Int> provenance;  // the free-parameter tuple
};

/// Data of the star-variant Deuber set D(m, F, S, B): base sequences B_0..B_m,
/// one index selection into each base, and per level j a finite list of
/// arity-j polynomials applied to the selection sums of levels 0..j-1.
struct DeuberSpec {
    int m = 0;
    std::vector<std::vector<Int>> bases;                     // m+1 sequences
    std::vector<std::vector<int>> selections;                // m+1 sorted index subsets
    std::vector<std::vector<MultiStarPolynomial>> families;  // families[j-1] has arity j
};

struct FamilyDescriptor {
    FamilyKind kind = FamilyKind::ap_plain;
    std::optional<SymmetricContext> ctx;

    // structural parameters (per kind; unused ones stay at defaults)
    long len = 0;                     // ap: progression length
    long m = 0;                       // geo_*: exponent range; gap: order; mpc: depth
    long n = 0;                       // gap: length; symmetric_system: variable count
    long p = 0;                       // mpc: coefficient box half-width
    Int c = 0;                        // mpc: multiplier
    long L = 0;                       // cst_corollary: index count
    std::vector<std::vector<Int>> tuples;  // poly_vdw / cst_corollary coefficient tuples
    std::vector<std::vector<Int>> polys;   // poly_progression: coeffs of x^1..x^deg
    std::optional<DeuberSpec> deuber;

    // free-parameter values for direct generation
    std::vector<Int> values;
};

namespace detail {

inline void need(bool cond, const std::string& msg) {
    if (!cond) throw SymmError(errc::bad_descriptor, msg);
}

inline const SymmetricContext& need_ctx(const FamilyDescriptor& d) {
    need(d.ctx.has_value(), std::string(family_kind_name(d.kind)) + " needs a (l,k) context");
    return *d.ctx;
}

inline Int poly_value(const std::vector<Int>& coeffs, const Int& x) {
    // coeffs[i] multiplies x^(i+1); evaluated by Horner from the top
    Int acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc * x;
}

inline Instance finish(std::vector<Int> raw, std::vector<Int> provenance) {
    Instance ins;
    ins.raw_count = raw.size();
    ins.provenance = std::move(provenance);
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    ins.degenerate = ins.raw_count > raw.size();
    ins.elements = std::move(raw);
    return ins;
}

} // namespace detail

inline constexpr std::size_t kSymmetricSystemMaxLen = 20;

/// Every gfold of a nonempty subsequence of xs (the finite truncation of the
/// symmetric system of a sequence); 2^n - 1 values before deduplication.
inline Instance gen_symmetric_system(const SymmetricContext& ctx, std::span<const Int> xs,
                                     std::size_t max_len = kSymmetricSystemMaxLen) {
    if (xs.empty()) throw SymmError(errc::bad_argument, "empty variable list");
    if (xs.size() > max_len)
        throw SymmError(errc::length_exceeded,
                        "symmetric system limited to " + std::to_string(max_len) + " variables");
    const std::size_t n = xs.size();
    std::vector<Int> raw;
    raw.reserve((std::size_t{1} << n) - 1);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        Int prod = 1;
        for (std::size_t i = 0; i < n; ++i)
            if (mask & (std::uint64_t{1} << i)) prod *= affine_image(ctx, xs[i]);
        raw.push_back(affine_preimage(ctx, prod));
    }
    return detail::finish(std::move(raw), std::vector<Int>(xs.begin(), xs.end()));
}

/// Rows of D(m, F, (*), S, B): the gfold of the level-0 selection, then for
/// each level j and each f in F_j the gfold of the level-j selection extended
/// by f evaluated at the selection sums of levels 0..j-1.
inline Instance gen_deuber_star(const SymmetricContext& ctx, const DeuberSpec& spec) {
    detail::need(spec.m >= 0, "deuber: m must be >= 0");
    detail::need(spec.bases.size() == static_cast<std::size_t>(spec.m) + 1,
                 "deuber: need m+1 base sequences");
    detail::need(spec.selections.size() == spec.bases.size(), "deuber: need m+1 selections");
    detail::need(spec.families.size() == static_cast<std::size_t>(spec.m),
                 "deuber: need m polynomial families");

    std::vector<std::vector<Int>> sel_vals(spec.bases.size());
    std::vector<Int> sums(spec.bases.size(), 0);
    for (std::size_t j = 0; j < spec.bases.size(); ++j) {
        detail::need(!spec.selections[j].empty(), "deuber: empty selection");
        for (int idx : spec.selections[j]) {
            detail::need(idx >= 0 && idx < static_cast<int>(spec.bases[j].size()),
                         "deuber: selection index out of range");
            sel_vals[j].push_back(spec.bases[j][idx]);
            sums[j] += spec.bases[j][idx];
        }
    }

    std::vector<Int> raw;
    raw.push_back(gfold(ctx, sel_vals[0]));
    for (int j = 1; j <= spec.m; ++j) {
        std::vector<Int> args(sums.begin(), sums.begin() + j);
        for (const MultiStarPolynomial& f : spec.families[static_cast<std::size_t>(j) - 1]) {
            detail::need(f.arity == j, "deuber: F_j polynomial arity must be j");
            detail::need(f.ctx == ctx, "deuber: polynomial context mismatch");
            Int fv = eval_multi_star_poly(f, args).as_integer();
            std::vector<Int> row = sel_vals[static_cast<std::size_t>(j)];
            row.push_back(fv);
            raw.push_back(gfold(ctx, row));
        }
    }

    std::vector<Int> provenance;
    for (const auto& base : spec.bases) provenance.insert(provenance.end(), base.begin(), base.end());
    return detail::finish(std::move(raw), std::move(provenance));
}

/// Number of free (existential) parameters of the kind.
inline std::size_t free_param_count(const FamilyDescriptor& d) {
    switch (d.kind) {
        case FamilyKind::ap_plain: return 2;
        case FamilyKind::star_schur: return 2;
        case FamilyKind::geo_arith_add:
        case FamilyKind::geo_arith_star: return 3;
        case FamilyKind::gap: return static_cast<std::size_t>(d.m) + 1;
        case FamilyKind::poly_progression: return 3;
        case FamilyKind::poly_vdw: return 2;
        case FamilyKind::symmetric_system: return static_cast<std::size_t>(d.n);
        case FamilyKind::mpc_set: return static_cast<std::size_t>(d.m) + 1;
        case FamilyKind::deuber_star: {
            if (!d.deuber) return 0;
            std::size_t total = 0;
            for (const auto& base : d.deuber->bases) total += base.size();
            return total;
        }
        case FamilyKind::cst_corollary: return 2 * static_cast<std::size_t>(d.L);
    }
    return 0;
}

inline std::vector<std::string> free_param_names(const FamilyDescriptor& d) {
    switch (d.kind) {
        case FamilyKind::ap_plain: return {"a", "d"};
        case FamilyKind::star_schur: return {"x", "y"};
        case FamilyKind::geo_arith_add:
        case FamilyKind::geo_arith_star: return {"x", "y", "z"};
        case FamilyKind::poly_progression: return {"a", "b", "d"};
        case FamilyKind::poly_vdw: return {"dprime", "c"};
        default: break;
    }
    std::vector<std::string> names;
    const std::size_t count = free_param_count(d);
    if (d.kind == FamilyKind::gap)
        for (std::size_t i = 0; i < count; ++i) names.push_back("a" + std::to_string(i));
    else if (d.kind == FamilyKind::mpc_set)
        for (std::size_t i = 0; i < count; ++i) names.push_back("s" + std::to_string(i));
    else if (d.kind == FamilyKind::symmetric_system)
        for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i + 1));
    else if (d.kind == FamilyKind::cst_corollary) {
        for (long i = 1; i <= d.L; ++i) names.push_back("x" + std::to_string(i));
        for (long i = 1; i <= d.L; ++i) names.push_back("z" + std::to_string(i));
    } else if (d.kind == FamilyKind::deuber_star && d.deuber) {
        for (std::size_t j = 0; j < d.deuber->bases.size(); ++j)
            for (std::size_t i = 0; i < d.deuber->bases[j].size(); ++i)
                names.push_back("b" + std::to_string(j) + "_" + std::to_string(i));
    }
    return names;
}

/// Structural validation; throws bad_descriptor with a reason.
inline void validate(const FamilyDescriptor& d) {
    using detail::need;
    switch (d.kind) {
        case FamilyKind::ap_plain:
            need(d.len >= 1, "ap: len must be >= 1");
            break;
        case FamilyKind::star_schur:
            detail::need_ctx(d);
            break;
        case FamilyKind::geo_arith_add:
        case FamilyKind::geo_arith_star:
            detail::need_ctx(d);
            need(d.m >= 0, "geo: m must be >= 0");
            break;
        case FamilyKind::gap:
            need(d.m >= 0, "gap: order must be >= 0");
            need(d.n >= 0, "gap: length must be >= 0");
            break;
        case FamilyKind::poly_progression:
            need(!d.polys.empty(), "poly_progression: need at least one polynomial");
            for (const auto& poly : d.polys)
                need(!poly.empty(), "poly_progression: polynomial of degree >= 1 required");
            break;
        case FamilyKind::poly_vdw: {
            detail::need_ctx(d);
            need(!d.tuples.empty(), "poly_vdw: need at least one coefficient tuple");
            const std::size_t arity = d.tuples.front().size();
            need(arity >= 1, "poly_vdw: tuples must be nonempty");
            for (const auto& t : d.tuples)
                need(t.size() == arity, "poly_vdw: tuples must share one arity");
            break;
        }
        case FamilyKind::symmetric_system:
            detail::need_ctx(d);
            need(d.n >= 1 && d.n <= static_cast<long>(kSymmetricSystemMaxLen),
                 "symmetric_system: n must be in [1,20]");
            break;
        case FamilyKind::mpc_set:
            need(d.m >= 0, "mpc: m must be >= 0");
            need(d.p >= 1, "mpc: p must be >= 1");
            need(d.c >= 1, "mpc: c must be >= 1");
            break;
        case FamilyKind::deuber_star:
            detail::need_ctx(d);
            need(d.deuber.has_value(), "deuber: spec required");
            break;
        case FamilyKind::cst_corollary: {
            detail::need_ctx(d);
            need(d.L >= 1 && d.L <= 16, "cst: L must be in [1,16]");
            need(!d.tuples.empty(), "cst: need at least one coefficient tuple");
            const std::size_t arity = d.tuples.front().size();
            need(arity >= 1, "cst: tuples must be nonempty");
            for (const auto& t : d.tuples) need(t.size() == arity, "cst: tuples must share one arity");
            break;
        }
    }
}

/// Generates the instance for the stored free-parameter values. The free
/// tuple must have exactly free_param_count entries (for deuber_star it is
/// the concatenation of the base sequences, which the descriptor pre-fills).
inline Instance generate(const FamilyDescriptor& d) {
    validate(d);
    const std::vector<Int>& v = d.values;
    // deuber_star reads its parameters from the base sequences; values, when
    // present, were scattered there by generate_at already.
    if (d.kind != FamilyKind::deuber_star || !v.empty())
        detail::need(v.size() == free_param_count(d),
                     std::string(family_kind_name(d.kind)) + ": expected " +
                         std::to_string(free_param_count(d)) + " free parameters, got " +
                         std::to_string(v.size()));

    switch (d.kind) {
        case FamilyKind::ap_plain: {
            std::vector<Int> raw;
            for (long t = 0; t < d.len; ++t) raw.push_back(v[0] + Int(t) * v[1]);
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::star_schur: {
            const auto& ctx = *d.ctx;
            return detail::finish({v[0], v[1], star(ctx, v[0], v[1])}, v);
        }
        case FamilyKind::geo_arith_add: {
            const auto& ctx = *d.ctx;
            std::vector<Int> raw;
            const Int ix = affine_image(ctx, v[0]);
            for (long i = 0; i <= d.m; ++i) {
                const Int base = affine_image(ctx, v[1] + Int(i) * v[2]);
                for (long j = 0; j <= d.m; ++j)
                    raw.push_back(affine_preimage(
                        ctx, ix * ipow(base, static_cast<unsigned long long>(j))));
            }
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::geo_arith_star: {
            const auto& ctx = *d.ctx;
            std::vector<Int> raw;
            const Int ix = affine_image(ctx, v[0]);
            const Int iy = affine_image(ctx, v[1]);
            const Int iz = affine_image(ctx, v[2]);
            for (long i = 0; i <= d.m; ++i)
                for (long j = 0; j <= d.m; ++j)
                    raw.push_back(affine_preimage(
                        ctx, ix * ipow(iy, static_cast<unsigned long long>(j)) *
                                 ipow(iz, static_cast<unsigned long long>(i * j))));
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::gap: {
            std::vector<Int> raw;
            std::vector<long> odo(static_cast<std::size_t>(d.m), 0);
            while (true) {
                Int val = v[0];
                for (long j = 1; j <= d.m; ++j)
                    val += Int(odo[static_cast<std::size_t>(j - 1)]) * v[static_cast<std::size_t>(j)];
                raw.push_back(val);
                long i = d.m - 1;
                while (i >= 0 && odo[static_cast<std::size_t>(i)] == d.n)
                    odo[static_cast<std::size_t>(i--)] = 0;
                if (i < 0) break;
                ++odo[static_cast<std::size_t>(i)];
            }
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::poly_progression: {
            std::vector<Int> raw;
            for (const auto& poly : d.polys)
                raw.push_back(v[0] + v[1] * detail::poly_value(poly, v[2]));
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::poly_vdw: {
            const auto& ctx = *d.ctx;
            std::vector<Int> raw;
            const Int id_img = affine_image(ctx, v[0]);
            for (const auto& tuple : d.tuples) {
                ExactScalar image(id_img);
                Int cpow = 1;
                for (const Int& coeff : tuple) {
                    cpow *= v[1];  // c^s
                    image *= ExactScalar(affine_image(ctx, coeff)).pow(cpow);
                }
                raw.push_back(rat_preimage(ctx, image).as_integer());
            }
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::symmetric_system:
            return gen_symmetric_system(*d.ctx, v);
        case FamilyKind::mpc_set: {
            for (const Int& s : v)
                if (s == 0)
                    throw SymmError(errc::bad_descriptor, "mpc: generators must be nonzero");
            std::vector<Int> raw;
            raw.push_back(d.c * v[0]);
            for (long j = 1; j <= d.m; ++j) {
                std::vector<long> odo(static_cast<std::size_t>(j), -d.p);
                while (true) {
                    Int val = d.c * v[static_cast<std::size_t>(j)];
                    for (long t = 0; t < j; ++t)
                        val += Int(odo[static_cast<std::size_t>(t)]) * v[static_cast<std::size_t>(t)];
                    raw.push_back(val);
                    long i = j - 1;
                    while (i >= 0 && odo[static_cast<std::size_t>(i)] == d.p)
                        odo[static_cast<std::size_t>(i--)] = -d.p;
                    if (i < 0) break;
                    ++odo[static_cast<std::size_t>(i)];
                }
            }
            return detail::finish(std::move(raw), v);
        }
        case FamilyKind::deuber_star:
            return gen_deuber_star(*d.ctx, *d.deuber);
        case FamilyKind::cst_corollary: {
            const auto& ctx = *d.ctx;
            const std::size_t L = static_cast<std::size_t>(d.L);
            std::vector<Int> raw;
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << L); ++mask) {
                Int zb = 0;
                Int xprod = 1;
                for (std::size_t j = 0; j < L; ++j)
                    if (mask & (std::uint64_t{1} << j)) {
                        xprod *= affine_image(ctx, v[j]);
                        zb += v[L + j];
                    }
                for (const auto& tuple : d.tuples) {
                    ExactScalar image(xprod);
                    for (std::size_t s = 1; s <= tuple.size(); ++s)
                        image *= ExactScalar(affine_image(ctx, tuple[s - 1]))
                                     .pow(ipow(zb, static_cast<unsigned long long>(s)));
                    raw.push_back(rat_preimage(ctx, image).as_integer());
                }
            }
            return detail::finish(std::move(raw), v);
        }
    }
    throw SymmError(errc::bad_descriptor, "unknown family kind");
}

/// generate() with an explicit free-parameter tuple; deuber_star scatters the
/// tuple back into its base sequences.
inline Instance generate_at(const FamilyDescriptor& d, std::span<const Int> params) {
    FamilyDescriptor copy = d;
    if (d.kind == FamilyKind::deuber_star) {
        detail::need(copy.deuber.has_value(), "deuber: spec required");
        std::size_t at = 0;
        for (auto& base : copy.deuber->bases)
            for (auto& entry : base) {
                if (at >= params.size())
                    throw SymmError(errc::bad_argument, "deuber: not enough free parameters");
                entry = params[at++];
            }
        if (at != params.size())
            throw SymmError(errc::bad_argument, "deuber: too many free parameters");
    }
    copy.values.assign(params.begin(), params.end());
    return generate(copy);
}

} // namespace symmcfg

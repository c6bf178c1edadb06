#pragma once

// The star operation on Z obtained by pulling integer multiplication back
// along the affine map a -> l*a + k:
//
//     a (*) b  =  l*a*b + k*(a + b) + (k^2 - k)/l,
//
// so that (l*a + k)(l*b + k) = l*(a (*) b) + k. The iterated product of
// x_1..x_n equals the (l,k)-symmetric polynomial
//
//     G(x_1..x_n) = sum_{j=1..n} l^(j-1) k^(n-j) e_j(x) + (k^n - k)/l,
//
// with e_j the elementary symmetric polynomials; both routes are implemented
// (the e_j route as an independently computed cross-check path).
//
// The operation is total on Z exactly when l != 0 divides k*(k-1). When l
// additionally divides k-1 the element -(k-1)/l is a two-sided identity
// ("unital" context) and star-powers with exponent 0 are defined.

#include <span>
#include <vector>

#include "symmcfg/exact.hpp"

namespace symmcfg {

/// Validated (l,k) pair. Construct through make_context.
struct SymmetricContext {
    Int l;
    Int k;
    bool unital = false;  // l | k-1

    /// The identity -(k-1)/l. Only meaningful when unital.
    Int identity() const {
        if (!unital)
            throw SymmError(errc::non_unital_identity,
                            "(" + l.str() + "," + k.str() + ") has no integer identity");
        return exact_div(-(k - 1), l);
    }

    friend bool operator==(const SymmetricContext& a, const SymmetricContext& b) {
        return a.l == b.l && a.k == b.k;
    }
};

inline SymmetricContext make_context(const Int& l, const Int& k) {
    if (l == 0) throw SymmError(errc::zero_l, "l must be nonzero");
    if (!divides(l, k * (k - 1)))
        throw SymmError(errc::divisibility_violation,
                        l.str() + " does not divide k*(k-1) = " + Int(k * (k - 1)).str());
    SymmetricContext ctx;
    ctx.l = l;
    ctx.k = k;
    ctx.unital = divides(l, k - 1);
    return ctx;
}

inline Int affine_image(const SymmetricContext& ctx, const Int& a) { return ctx.l * a + ctx.k; }

/// Preimage of the affine map; throws non_integral_element when v - k is not
/// divisible by l.
inline Int affine_preimage(const SymmetricContext& ctx, const Int& v) {
    Int num = v - ctx.k;
    if (!divides(ctx.l, num))
        throw SymmError(errc::non_integral_element,
                        "(" + v.str() + " - k)/l is not an integer");
    return exact_div(num, ctx.l);
}

inline Int star(const SymmetricContext& ctx, const Int& a, const Int& b) {
    return ctx.l * a * b + ctx.k * (a + b) + exact_div(ctx.k * ctx.k - ctx.k, ctx.l);
}

/// Iterated star product of a nonempty list, computed through the affine
/// image product: (prod_i (l*x_i + k) - k) / l.
inline Int gfold(const SymmetricContext& ctx, std::span<const Int> xs) {
    if (xs.empty()) throw SymmError(errc::bad_argument, "gfold of an empty list");
    Int prod = 1;
    for (const Int& x : xs) prod *= affine_image(ctx, x);
    return exact_div(prod - ctx.k, ctx.l);
}

inline Int gfold(const SymmetricContext& ctx, const std::vector<Int>& xs) {
    return gfold(ctx, std::span<const Int>(xs));
}

inline constexpr std::size_t kGfoldEspMaxLen = 20;

/// The same value as gfold, evaluated through the elementary symmetric
/// polynomials: sum_j l^(j-1) k^(n-j) e_j + (k^n - k)/l. Quadratic in n and
/// deliberately never used by the production path; it exists as the second,
/// independent route for cross-checks.
inline Int gfold_esp(const SymmetricContext& ctx, std::span<const Int> xs,
                     std::size_t max_len = kGfoldEspMaxLen) {
    if (xs.empty()) throw SymmError(errc::bad_argument, "gfold_esp of an empty list");
    if (xs.size() > max_len)
        throw SymmError(errc::length_exceeded,
                        "gfold_esp limited to " + std::to_string(max_len) + " variables");
    const std::size_t n = xs.size();
    // e[j] after processing i variables holds e_j of those variables.
    std::vector<Int> e(n + 1);
    e[0] = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = std::min(i + 1, n); j >= 1; --j) e[j] += xs[i] * e[j - 1];
    Int acc = exact_div(ipow(ctx.k, n) - ctx.k, ctx.l);
    Int lpow = 1;
    for (std::size_t j = 1; j <= n; ++j) {
        acc += lpow * ipow(ctx.k, n - j) * e[j];
        lpow *= ctx.l;
    }
    return acc;
}

inline Int gfold_esp(const SymmetricContext& ctx, const std::vector<Int>& xs,
                     std::size_t max_len = kGfoldEspMaxLen) {
    return gfold_esp(ctx, std::span<const Int>(xs), max_len);
}

/// Star product extended to exact rationals; used by the negative-power and
/// difference-polynomial identities whose intermediate values leave Z.
inline ExactScalar star_rat(const SymmetricContext& ctx, const ExactScalar& a,
                            const ExactScalar& b) {
    ExactScalar l(ctx.l), k(ctx.k);
    return l * a * b + k * (a + b) + ExactScalar(ctx.k * ctx.k - ctx.k, ctx.l);
}

inline ExactScalar rat_image(const SymmetricContext& ctx, const ExactScalar& a) {
    return ExactScalar(ctx.l) * a + ExactScalar(ctx.k);
}

inline ExactScalar rat_preimage(const SymmetricContext& ctx, const ExactScalar& v) {
    return (v - ExactScalar(ctx.k)) / ExactScalar(ctx.l);
}

/// Star-power a^(c): the value v with l*v + k = (l*a + k)^c, evaluated in
/// exact rationals. For c >= 1 the result is an integer; c = 0 yields the
/// identity and requires a unital context; c < 0 is a genuine rational unless
/// the affine image is a unit.
inline ExactScalar star_power(const SymmetricContext& ctx, const ExactScalar& a, const Int& c) {
    if (c == 0) return ExactScalar(ctx.identity());
    ExactScalar img = rat_image(ctx, a);
    if (img.is_zero() && c < 0)
        throw SymmError(errc::division_by_zero_image,
                        "negative star-power of an element with affine image 0");
    return rat_preimage(ctx, img.pow(c));
}

inline ExactScalar star_power(const SymmetricContext& ctx, const Int& a, const Int& c) {
    return star_power(ctx, ExactScalar(a), c);
}

/// Star-power known to land in Z (c >= 0, or the caller vouches for the
/// parameters); throws non_integral_element otherwise.
inline Int star_power_int(const SymmetricContext& ctx, const Int& a, const Int& c) {
    return star_power(ctx, a, c).as_integer();
}

/// Partial inverse: a' with a (*) a' = identity. Over Z it exists iff the
/// affine image of a is -1 or +1, and then a is its own inverse.
inline Int star_inverse(const SymmetricContext& ctx, const Int& a) {
    Int id = ctx.identity();  // throws non_unital_identity first
    Int img = affine_image(ctx, a);
    if (img != 1 && img != -1)
        throw SymmError(errc::not_invertible,
                        a.str() + " has affine image " + img.str() + ", not a unit");
    (void)id;
    return a;
}

} // namespace symmcfg

#pragma once

// Polynomials from (Z,+) — or (Z^m,+) — into the star structure. A coefficient
// a contributes through its star-power a^(e), so the value of
//
//     P(x) = a_n^(x^n) (*) a_{n-1}^(x^{n-1}) (*) ... (*) a_0
//
// is the affine preimage of prod_i (l*a_i + k)^(x^i). Negative arguments make
// some exponents negative and the value can leave Z; evaluation is exact
// rational and the caller decides whether to demand integrality.

#include <utility>
#include <vector>

#include "symmcfg/star_algebra.hpp"

namespace symmcfg {

struct StarPolynomial {
    SymmetricContext ctx;
    std::vector<Int> coeffs;  // ascending: coeffs[0] = constant a_0, back() = leading a_n

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
};

/// True when the constant term equals the identity -(k-1)/l, i.e. P(0) is the
/// identity and P belongs to the pointed polynomial class the configuration
/// theorems quantify over. Never forced at construction; families like the
/// polynomial van der Waerden tuples use free constants.
inline bool constant_is_identity(const StarPolynomial& p) {
    if (!p.ctx.unital || p.coeffs.empty()) return false;
    return p.coeffs.front() == p.ctx.identity();
}

inline ExactScalar eval_star_poly(const StarPolynomial& p, const Int& x) {
    if (p.coeffs.empty()) throw SymmError(errc::bad_argument, "polynomial without coefficients");
    if (p.coeffs.size() > 65) throw SymmError(errc::length_exceeded, "degree exceeds 64");
    ExactScalar image(1);
    Int xpow = 1;  // x^i
    for (std::size_t i = 0; i < p.coeffs.size(); ++i) {
        image *= ExactScalar(affine_image(p.ctx, p.coeffs[i])).pow(xpow);
        xpow *= x;
    }
    return rat_preimage(p.ctx, image);
}

/// Multivariable form: a map from exponent vectors (i_1..i_m) to coefficients,
/// star-folded as alpha^(x_1^{i_1} ... x_m^{i_m}).
struct MultiStarPolynomial {
    SymmetricContext ctx;
    int arity = 0;
    std::vector<std::pair<std::vector<Int>, Int>> monomials;  // (exponents, coefficient)

    Int total_degree() const {
        Int deg = 0;
        for (const auto& [exps, coeff] : monomials) {
            Int s = 0;
            for (const Int& e : exps) s += e;
            if (s > deg) deg = s;
        }
        return deg;
    }
};

inline void validate(const MultiStarPolynomial& p) {
    for (const auto& [exps, coeff] : p.monomials) {
        if (static_cast<int>(exps.size()) != p.arity)
            throw SymmError(errc::bad_argument, "monomial arity mismatch");
        for (const Int& e : exps) {
            if (e < 0) throw SymmError(errc::bad_argument, "negative monomial exponent");
            if (e > 64) throw SymmError(errc::length_exceeded, "monomial exponent exceeds 64");
        }
    }
}

inline ExactScalar eval_multi_star_poly(const MultiStarPolynomial& p,
                                        std::span<const Int> xs) {
    if (static_cast<int>(xs.size()) != p.arity)
        throw SymmError(errc::bad_argument, "argument arity mismatch");
    validate(p);
    if (p.monomials.empty()) return ExactScalar(p.ctx.identity());  // empty star product
    ExactScalar image(1);
    for (const auto& [exps, coeff] : p.monomials) {
        Int e = 1;
        for (std::size_t j = 0; j < exps.size(); ++j)
            e *= ipow(xs[j], exps[j].convert_to<unsigned long long>());
        image *= ExactScalar(affine_image(p.ctx, coeff)).pow(e);
    }
    return rat_preimage(p.ctx, image);
}

inline ExactScalar eval_multi_star_poly(const MultiStarPolynomial& p, const std::vector<Int>& xs) {
    return eval_multi_star_poly(p, std::span<const Int>(xs));
}

} // namespace symmcfg

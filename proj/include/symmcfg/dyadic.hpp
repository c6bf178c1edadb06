#pragma once

// Two operations on N = {1,2,...} transported along the 2-adic splitting
// n = 2^f(n) * odd(n):
//
//   oplus:  componentwise addition of (f(n), odd-index);
//           m (+) n = 2^(f(m)+f(n)) (odd(m) + odd(n) + 1)
//   otimes: componentwise multiplication of (f(n), odd(n)+1);
//           m (x) n = 2^(f(m)*f(n)) * G_{1,1}(odd(m), odd(n))
//
// plus their iterated folds and the per-letter Hales-Jewett configuration
// values built from them. On odd arguments otimes coincides with the (1,1)
// star operation.

#include <vector>

#include "symmcfg/star_algebra.hpp"

namespace symmcfg {

struct DyadicDecomposition {
    Int valuation;  // f(n), the largest x with 2^x | n
    Int odd_part;   // n / 2^f(n)
};

inline DyadicDecomposition decompose(const Int& n) {
    if (n < 1) throw SymmError(errc::non_positive, "dyadic domain is {1,2,...}");
    DyadicDecomposition d{0, n};
    while (d.odd_part % 2 == 0) {
        d.odd_part /= 2;
        ++d.valuation;
    }
    return d;
}

/// phi(n) = (f(n), (odd(n)+1)/2), a bijection N -> omega x N.
inline std::pair<Int, Int> phi(const Int& n) {
    auto d = decompose(n);
    return {d.valuation, (d.odd_part + 1) / 2};
}

inline Int phi_inverse(const Int& valuation, const Int& y) {
    if (valuation < 0 || y < 1) throw SymmError(errc::bad_argument, "phi_inverse domain");
    return ipow(Int(2), valuation.convert_to<unsigned long long>()) * (2 * y - 1);
}

/// rho(n) = (f(n), odd(n)+1), a bijection N -> omega x 2N.
inline std::pair<Int, Int> rho(const Int& n) {
    auto d = decompose(n);
    return {d.valuation, d.odd_part + 1};
}

inline Int rho_inverse(const Int& valuation, const Int& even) {
    if (valuation < 0 || even < 2 || even % 2 != 0)
        throw SymmError(errc::bad_argument, "rho_inverse domain");
    return ipow(Int(2), valuation.convert_to<unsigned long long>()) * (even - 1);
}

inline Int oplus(const Int& m, const Int& n) {
    auto dm = decompose(m), dn = decompose(n);
    return ipow(Int(2), Int(dm.valuation + dn.valuation).convert_to<unsigned long long>()) *
           (dm.odd_part + dn.odd_part + 1);
}

inline Int otimes(const Int& m, const Int& n) {
    auto dm = decompose(m), dn = decompose(n);
    static const SymmetricContext ctx11 = make_context(1, 1);
    return ipow(Int(2), Int(dm.valuation * dn.valuation).convert_to<unsigned long long>()) *
           star(ctx11, dm.odd_part, dn.odd_part);
}

/// 2^(sum f(a_i)) (sum odd(a_i) + (n-1)), evaluated directly from the display.
inline Int oplus_fold(std::span<const Int> xs) {
    if (xs.empty()) throw SymmError(errc::bad_argument, "fold of an empty list");
    Int vsum = 0, osum = 0;
    for (const Int& x : xs) {
        auto d = decompose(x);
        vsum += d.valuation;
        osum += d.odd_part;
    }
    return ipow(Int(2), vsum.convert_to<unsigned long long>()) *
           (osum + Int(static_cast<long long>(xs.size()) - 1));
}

/// 2^(prod f(a_i)) * G_{1,1}(odd(a_1), ..., odd(a_n)).
inline Int otimes_fold(std::span<const Int> xs) {
    if (xs.empty()) throw SymmError(errc::bad_argument, "fold of an empty list");
    static const SymmetricContext ctx11 = make_context(1, 1);
    Int vprod = 1;
    std::vector<Int> odds;
    odds.reserve(xs.size());
    for (const Int& x : xs) {
        auto d = decompose(x);
        vprod *= d.valuation;
        odds.push_back(d.odd_part);
    }
    return ipow(Int(2), vprod.convert_to<unsigned long long>()) * gfold(ctx11, odds);
}

inline Int oplus_fold(const std::vector<Int>& xs) { return oplus_fold(std::span<const Int>(xs)); }
inline Int otimes_fold(const std::vector<Int>& xs) { return otimes_fold(std::span<const Int>(xs)); }

enum class DyadicFamilyKind { oplus_hj, otimes_hj };

/// Per-letter value of the dyadic Hales-Jewett configuration: the fold of the
/// fixed letters with the letter substituted into all c variable positions.
/// The fold is the ground truth; the theorem's closed forms are evaluated
/// alongside and compared, because the otimes display carries its prefactor
/// x = prod f(b_i) multiplicatively while the fold puts x into the exponent
/// of 2. Both readings are reported per letter.
struct DyadicFamilyValue {
    Int letter;
    Int value;                 // fold over fixed_part + c copies of letter
    Int closed_form;           // the display's value, x read multiplicatively
    Int exponent_form;         // 2^(x * f(a)^c) variant (otimes only; oplus repeats closed_form)
    bool closed_form_matches;
    bool exponent_form_matches;
};

inline std::vector<DyadicFamilyValue> gen_dyadic_family(DyadicFamilyKind kind,
                                                        std::span<const Int> fixed_part,
                                                        std::span<const Int> letters,
                                                        const Int& c) {
    if (c < 1) throw SymmError(errc::bad_argument, "need c >= 1 variable positions");
    static const SymmetricContext ctx11 = make_context(1, 1);

    Int fixed_vsum = 0, fixed_osum = 0, fixed_vprod = 1;
    std::vector<Int> fixed_odds;
    for (const Int& b : fixed_part) {
        auto d = decompose(b);
        fixed_vsum += d.valuation;
        fixed_osum += d.odd_part;
        fixed_vprod *= d.valuation;
        fixed_odds.push_back(d.odd_part);
    }

    std::vector<DyadicFamilyValue> out;
    const unsigned long long cc = c.convert_to<unsigned long long>();
    for (const Int& a : letters) {
        auto da = decompose(a);
        std::vector<Int> word(fixed_part.begin(), fixed_part.end());
        for (unsigned long long i = 0; i < cc; ++i) word.push_back(a);

        DyadicFamilyValue val;
        val.letter = a;
        if (kind == DyadicFamilyKind::oplus_hj) {
            val.value = oplus_fold(word);
            // x 2^(c f(a)) (y + c*odd(a)) with x = 2^(sum f(b)), y = sum odd(b) + (N-1)
            Int x = ipow(Int(2), fixed_vsum.convert_to<unsigned long long>());
            Int y = fixed_osum + Int(static_cast<long long>(fixed_part.size()) + c - 1);
            val.closed_form = x * ipow(Int(2), Int(c * da.valuation).convert_to<unsigned long long>()) *
                              (y + c * da.odd_part);
            val.exponent_form = val.closed_form;
        } else {
            val.value = otimes_fold(word);
            // G_{1,1}(y, odd(a)^(c)) with y the gfold of the fixed odd parts
            Int odd_power = star_power_int(ctx11, da.odd_part, c);
            Int g = odd_power;
            if (!fixed_odds.empty()) {
                std::vector<Int> args = fixed_odds;
                args.push_back(odd_power);
                g = gfold(ctx11, args);
            }
            Int fa_pow_c = ipow(da.valuation, cc);
            val.closed_form =
                fixed_vprod * ipow(Int(2), fa_pow_c.convert_to<unsigned long long>()) * g;
            val.exponent_form =
                ipow(Int(2), Int(fixed_vprod * fa_pow_c).convert_to<unsigned long long>()) * g;
        }
        val.closed_form_matches = val.closed_form == val.value;
        val.exponent_form_matches = val.exponent_form == val.value;
        out.push_back(std::move(val));
    }
    return out;
}

} // namespace symmcfg

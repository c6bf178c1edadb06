#pragma once

// Exact arithmetic carriers: arbitrary-precision integers and canonical
// rationals. Every numeric result in the library is exact; there is no
// floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>

#include "symmcfg/error.hpp"

namespace symmcfg {

using Int = boost::multiprecision::cpp_int;

/// Quotient of an exact division. Throws if the division leaves a remainder;
/// the callers rely on divisibility invariants and treat a remainder as a
/// broken precondition.
inline Int exact_div(const Int& num, const Int& den) {
    if (den == 0) throw SymmError(errc::inexact_division, "division by zero");
    Int q = num / den;
    if (q * den != num)
        throw SymmError(errc::inexact_division,
                        num.str() + " is not divisible by " + den.str());
    return q;
}

inline bool divides(const Int& d, const Int& n) {
    if (d == 0) return n == 0;
    return n % d == 0;
}

/// Integer power with a non-negative exponent.
inline Int ipow(Int base, unsigned long long e) {
    Int r = 1;
    while (e) {
        if (e & 1ull) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

/// Canonical exact rational: coprime numerator/denominator, denominator >= 1.
/// Results of negative star-powers live here; integer-valued results report
/// is_integer() and convert back via as_integer().
class ExactScalar {
public:
    ExactScalar() : q_(0) {}
    ExactScalar(int v) : q_(v) {}
    ExactScalar(long long v) : q_(static_cast<long long>(v)) {}
    ExactScalar(Int v) : q_(std::move(v)) {}
    ExactScalar(const Int& num, const Int& den) {
        if (den == 0) throw SymmError(errc::bad_argument, "zero denominator");
        q_ = Rep(num) / Rep(den);
    }

    Int numerator() const { return boost::multiprecision::numerator(q_); }
    Int denominator() const { return boost::multiprecision::denominator(q_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return q_ == 0; }

    Int as_integer() const {
        if (!is_integer())
            throw SymmError(errc::non_integral_element, "value " + str() + " is not an integer");
        return numerator();
    }

    ExactScalar operator-() const { return ExactScalar(Rep(-q_)); }
    ExactScalar& operator+=(const ExactScalar& o) { q_ += o.q_; return *this; }
    ExactScalar& operator-=(const ExactScalar& o) { q_ -= o.q_; return *this; }
    ExactScalar& operator*=(const ExactScalar& o) { q_ *= o.q_; return *this; }
    ExactScalar& operator/=(const ExactScalar& o) {
        if (o.q_ == 0) throw SymmError(errc::bad_argument, "division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) { return a.q_ == b.q_; }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return a.q_ != b.q_; }
    friend bool operator<(const ExactScalar& a, const ExactScalar& b) { return a.q_ < b.q_; }

    /// Rational power with an arbitrary integer exponent. A negative exponent
    /// of zero is reported as division_by_zero_image: the only caller context
    /// is a star-power of an element whose affine image vanished.
    ExactScalar pow(const Int& e) const {
        if (e == 0) return ExactScalar(1);
        if (q_ == 0 && e < 0)
            throw SymmError(errc::division_by_zero_image, "0 raised to a negative exponent");
        Int mag = abs(e);
        if (mag > Int(1000000))
            throw SymmError(errc::length_exceeded, "exponent magnitude exceeds 10^6");
        ExactScalar base = *this;
        ExactScalar r(1);
        unsigned long long m = mag.convert_to<unsigned long long>();
        while (m) {
            if (m & 1ull) r *= base;
            base *= base;
            m >>= 1;
        }
        if (e < 0) return ExactScalar(1) / r;
        return r;
    }

    std::string str() const {
        if (is_integer()) return numerator().str();
        return numerator().str() + "/" + denominator().str();
    }

private:
    using Rep = boost::multiprecision::cpp_rational;
    explicit ExactScalar(Rep q) : q_(std::move(q)) {}
    Rep q_;
};

} // namespace symmcfg

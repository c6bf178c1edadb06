#pragma once

#include <stdexcept>
#include <string>

namespace symmcfg {

/// Failure categories surfaced by the library. Each maps to one documented
/// error condition of the public API.
enum class errc {
    zero_l,                  // context with l = 0
    divisibility_violation,  // l does not divide k*(k-1)
    non_unital_identity,     // identity -(k-1)/l requested but l does not divide k-1
    division_by_zero_image,  // negative power of an element whose affine image is 0
    not_invertible,          // affine image not in {-1, +1}
    length_exceeded,         // input longer than the configured bound
    non_integral_element,    // a generated element is not an integer
    non_positive,            // dyadic operations need n >= 1
    no_variable,             // variable word without a variable
    domain_overlap,          // located-word domains are not pairwise disjoint
    bad_descriptor,          // malformed family descriptor
    bad_argument,            // contract violation (empty list, arity mismatch, ...)
    inexact_division,        // internal exactness assertion failed
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::zero_l: return "ZeroL";
        case errc::divisibility_violation: return "DivisibilityViolation";
        case errc::non_unital_identity: return "NonUnitalIdentity";
        case errc::division_by_zero_image: return "DivisionByZeroImage";
        case errc::not_invertible: return "NotInvertible";
        case errc::length_exceeded: return "LengthExceeded";
        case errc::non_integral_element: return "NonIntegralElement";
        case errc::non_positive: return "NonPositive";
        case errc::no_variable: return "NoVariable";
        case errc::domain_overlap: return "DomainOverlap";
        case errc::bad_descriptor: return "BadDescriptor";
        case errc::bad_argument: return "BadArgument";
        case errc::inexact_division: return "InexactDivision";
    }
    return "UnknownError";
}

class SymmError : public std::runtime_error {
public:
    SymmError(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace symmcfg

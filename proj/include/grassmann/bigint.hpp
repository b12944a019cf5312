#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>

namespace grassmann::exact {

// Exact signed integers and rationals of unbounded size. BigRat is kept in
// lowest terms with a positive denominator by the backing type.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1u) r *= b;
        b *= b;
        exp >>= 1u;
    }
    return r;
}

inline bool divides(const BigInt& d, const BigInt& n) {
    if (d == 0) return n == 0;
    return n % d == 0;
}

/// Quotient n/d, throwing if d does not divide n exactly.
inline BigInt exact_div(const BigInt& n, const BigInt& d) {
    if (d == 0 || n % d != 0)
        throw std::domain_error("exact_div: non-exact division");
    return n / d;
}

inline BigInt num(const BigRat& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const BigRat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integral(const BigRat& r) { return den(r) == 1; }

/// Converts an integral rational to BigInt; throws on a fractional value.
inline BigInt to_integer(const BigRat& r) {
    if (!is_integral(r)) throw std::domain_error("to_integer: value is not an integer");
    return num(r);
}

}  // namespace grassmann::exact

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace hilbwalls {

/// Arbitrary precision integer. Every lattice quantity in the library uses it.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

struct degenerate_input : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct gcd_violation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a self-check that holds mathematically fails at runtime.
struct internal_inconsistency : std::logic_error {
    using std::logic_error::logic_error;
};

inline Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer gcd_of(const Integer& a, const Integer& b) {
    return boost::multiprecision::gcd(abs_of(a), abs_of(b));
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw degenerate_input("rational with zero denominator");
    // Boost 1.74 rejects a negative denominator in the two-argument constructor.
    return den < 0 ? Rational(Integer(-num), Integer(-den)) : Rational(num, den);
}

/// Exact square root if `n` is a perfect square, otherwise -1.
inline Integer exact_sqrt(const Integer& n) {
    if (n < 0) return -1;
    Integer r = boost::multiprecision::sqrt(n);
    return r * r == n ? r : Integer(-1);
}

inline bool is_square(const Integer& n) { return exact_sqrt(n) >= 0; }

/// Smallest integer >= q.
inline Integer ceil_of(const Rational& q) {
    Integer num = numerator_of(q), den = denominator_of(q);
    Integer quot = num / den;  // truncates toward zero
    if (quot * den != num && num > 0) ++quot;
    return quot;
}

/// Largest integer <= q.
inline Integer floor_of(const Rational& q) {
    Integer num = numerator_of(q), den = denominator_of(q);
    Integer quot = num / den;
    if (quot * den != num && num < 0) --quot;
    return quot;
}

/// Always "num/den", including integers ("5/1"). Used by serialized output.
inline std::string fraction_string(const Rational& q) {
    return numerator_of(q).str() + "/" + denominator_of(q).str();
}

/// "num/den", or just "num" when the denominator is 1. Used for display.
inline std::string display_string(const Rational& q) {
    if (denominator_of(q) == 1) return numerator_of(q).str();
    return fraction_string(q);
}

/// Parses "num/den" or "num".
inline Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    return make_rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

}  // namespace hilbwalls

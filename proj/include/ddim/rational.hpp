#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace ddim {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Errors raised by parsers and input validation (exit code 1 at the CLI).
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Errors raised when a mathematically guaranteed property fails to hold
// (oracle disagreement, 2^n divisibility, ...); exit code 2 at the CLI.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Prints "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

Rational rational_factorial(int k);

// Exact binomial coefficient C(a, k) of an integer a and natural k.
Rational rational_binomial(long long a, int k);

}  // namespace ddim

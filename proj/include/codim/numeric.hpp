#ifndef CODIM_NUMERIC_HPP
#define CODIM_NUMERIC_HPP

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace codim {

using BigInt = boost::multiprecision::cpp_int;

// Radii such as K_n = (n - d) / 2 are half-integral; keep them exact.
using Rational = boost::rational<std::int64_t>;

std::int64_t floor_of(const Rational& r);
std::int64_t ceil_of(const Rational& r);

/// Parses "5", "-3", "5/2" or a terminating decimal such as "2.5".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& r);

inline std::string to_string(const BigInt& value) { return value.str(); }

BigInt factorial(int n);
BigInt power(const BigInt& base, unsigned exponent);
/// Binomial coefficient; zero when the lower index is negative or exceeds
/// a nonnegative upper index.
BigInt binomial(std::int64_t upper, std::int64_t lower);

}  // namespace codim

#endif  // CODIM_NUMERIC_HPP

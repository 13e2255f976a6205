#include "codim/numeric.hpp"

#include <charconv>

#include "codim/errors.hpp"

namespace codim {
namespace {

std::int64_t parse_int64(const std::string& text) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ValidationError("cannot parse '" + text + "' as an integer");
  }
  return value;
}

}  // namespace

std::int64_t floor_of(const Rational& r) {
  const std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();  // always positive
  std::int64_t q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

std::int64_t ceil_of(const Rational& r) {
  const std::int64_t num = r.numerator();
  const std::int64_t den = r.denominator();
  std::int64_t q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

Rational parse_rational(const std::string& text) {
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const std::int64_t den = parse_int64(text.substr(slash + 1));
    if (den == 0) throw ValidationError("zero denominator in '" + text + "'");
    return Rational(parse_int64(text.substr(0, slash)), den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string whole = text.substr(0, dot);
    const std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15 ||
        frac.find_first_not_of("0123456789") != std::string::npos) {
      throw ValidationError("cannot parse '" + text + "' as a rational");
    }
    const bool negative = !whole.empty() && whole.front() == '-';
    const std::int64_t int_part =
        whole.empty() || whole == "-" ? 0 : parse_int64(whole);
    std::int64_t scale = 1;
    for (std::size_t t = 0; t < frac.size(); ++t) scale *= 10;
    const std::int64_t frac_part = parse_int64(frac);
    const std::int64_t magnitude =
        (int_part < 0 ? -int_part : int_part) * scale + frac_part;
    return Rational(negative ? -magnitude : magnitude, scale);
  }
  return Rational(parse_int64(text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

BigInt factorial(int n) {
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt power(const BigInt& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

BigInt binomial(std::int64_t upper, std::int64_t lower) {
  if (lower < 0) return 0;
  if (upper >= 0 && lower > upper) return 0;
  // Falling-factorial form is valid for negative upper indices as well.
  BigInt out = 1;
  for (std::int64_t t = 0; t < lower; ++t) {
    out *= upper - t;
    out /= t + 1;
  }
  return out;
}

}  // namespace codim

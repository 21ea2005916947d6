#include "irrlab/number.hpp"

#include <sstream>

namespace irrlab {

BigInt factorial(int k) {
  BigInt r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

BigInt power(long base, int exponent) {
  BigInt r = 1;
  for (int i = 0; i < exponent; ++i) r *= base;
  return r;
}

BigInt floor(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;  // truncates toward zero
  if (num % den != 0 && num < 0) quotient -= 1;
  return quotient;
}

BigInt ceil(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;
  if (num % den != 0 && num > 0) quotient += 1;
  return quotient;
}

namespace {

std::optional<BigInt> exact_isqrt(const BigInt& v) {
  if (v < 0) return std::nullopt;
  BigInt r = boost::multiprecision::sqrt(v);
  if (r * r == v) return r;
  return std::nullopt;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& q) {
  auto num = exact_isqrt(boost::multiprecision::numerator(q));
  auto den = exact_isqrt(boost::multiprecision::denominator(q));
  if (!num || !den) return std::nullopt;
  return Rational(*num, *den);
}

Float to_float(const Rational& q) {
  return Float(boost::multiprecision::numerator(q)) / Float(boost::multiprecision::denominator(q));
}

std::string to_decimal(const Float& x, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << x;
  return out.str();
}

std::string to_decimal(const Rational& q, int digits) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return to_decimal(to_float(q), digits);
}

}  // namespace irrlab

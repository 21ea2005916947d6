#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <string>

namespace irrlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
// IEEE binary128-equivalent; used only where a square root is irrational.
using Float = boost::multiprecision::cpp_bin_float_quad;

BigInt factorial(int k);
BigInt power(long base, int exponent);

// Ceiling of a rational.
BigInt ceil(const Rational& q);
BigInt floor(const Rational& q);

// Exact square root when q is the square of a rational; nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& q);

Float to_float(const Rational& q);

// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Float& x, int digits = 15);
std::string to_decimal(const Rational& q, int digits = 15);

// A claim side: exact when representable as a rational, otherwise a
// high-precision approximation.
class Number {
 public:
  Number() = default;
  Number(const Rational& q) : exact_(q), approx_(to_float(q)) {}  // NOLINT(google-explicit-constructor)
  Number(long long v) : Number(Rational(v)) {}                   // NOLINT(google-explicit-constructor)
  static Number approximate(const Float& x) {
    Number n;
    n.approx_ = x;
    return n;
  }
  // coefficient * sqrt(radicand) with an irrational root, kept symbolically.
  static Number radical(const Rational& coefficient, const Rational& radicand, const Float& x) {
    Number n = approximate(x);
    n.radical_ = std::make_pair(coefficient, radicand);
    return n;
  }

  bool is_exact() const noexcept { return exact_.has_value(); }
  bool is_radical() const noexcept { return radical_.has_value(); }
  const std::pair<Rational, Rational>& radical() const { return *radical_; }
  // Exact either as a rational or as a symbolic square root.
  bool is_closed_form() const noexcept { return is_exact() || is_radical(); }
  const Rational& exact() const { return *exact_; }
  const Float& approx() const noexcept { return approx_; }

  std::string decimal() const { return exact_ ? to_decimal(*exact_) : to_decimal(approx_); }

 private:
  std::optional<Rational> exact_;
  std::optional<std::pair<Rational, Rational>> radical_;
  Float approx_{0};
};

}  // namespace irrlab

#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "resval/exact.hpp"

namespace resval {

/// Dense univariate polynomial over the integers, coefficients in ascending
/// degree order. Trailing zeros are stripped on construction, so the zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  /// x - root
  static Polynomial linear(const Integer& root);
  static Polynomial constant(const Integer& c);
  static Polynomial x();

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

  std::span<const Integer> coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Integer coefficient(int i) const;
  const Integer& leading() const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator-(Polynomial a);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Horner evaluation.
  Integer operator()(const Integer& at) const;

  Polynomial pow(unsigned exponent) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// f(x + shift).
Polynomial compose_shift(const Polynomial& f, const Integer& shift);

Integer evaluate(const Polynomial& f, const Integer& at);

/// Human-readable form accepted back by parse_polynomial, e.g. "x^2+5*x+6".
std::string render(const Polynomial& f);

/// Ascending coefficient list as decimal strings.
std::vector<std::string> coefficient_strings(const Polynomial& f);

}  // namespace resval

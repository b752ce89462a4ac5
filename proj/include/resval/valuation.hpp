#pragma once

#include <compare>
#include <optional>
#include <string>

#include "resval/exact.hpp"
#include "resval/prime.hpp"

namespace resval {

/// p-adic valuation: a non-negative rational or infinity (the valuation of 0).
class Valuation {
 public:
  /// Throws std::invalid_argument for negative values.
  explicit Valuation(Rational value);
  explicit Valuation(long value) : Valuation(Rational(value)) {}
  static Valuation infinity() { return Valuation(); }

  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  const Rational& value() const;

  /// Infinity absorbs.
  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  std::string str() const;

 private:
  Valuation() = default;
  std::optional<Rational> value_;
};

Valuation min(const Valuation& a, const Valuation& b);

/// Largest e with p^e | n; infinity for n = 0.
Valuation int_valuation(const Integer& n, const Prime& p);

/// Finite valuation of a nonzero integer. Throws std::domain_error on zero.
long valuation_of_nonzero(const Integer& n, const Prime& p);

}  // namespace resval

#include "resval/valuation.hpp"

#include <stdexcept>

namespace resval {

Valuation::Valuation(Rational value) : value_(std::move(value)) {
  if (*value_ < 0) throw std::invalid_argument("valuation must be non-negative");
}

const Rational& Valuation::value() const {
  if (!value_) throw std::logic_error("infinite valuation has no finite value");
  return *value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.value_ + *b.value_);
}

bool operator==(const Valuation& a, const Valuation& b) { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  const int c = cmp(*a.value_, *b.value_);
  return c <=> 0;
}

std::string Valuation::str() const { return value_ ? to_string(*value_) : "inf"; }

Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

long valuation_of_nonzero(const Integer& n, const Prime& p) {
  if (n == 0) throw std::domain_error("valuation of zero is infinite");
  if (p.value() == 2) return static_cast<long>(mpz_scan1(n.get_mpz_t(), 0));
  Integer rest;
  const Integer prime(p.value());
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation int_valuation(const Integer& n, const Prime& p) {
  if (n == 0) return Valuation::infinity();
  return Valuation(valuation_of_nonzero(n, p));
}

}  // namespace resval

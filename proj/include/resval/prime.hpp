#pragma once

#include "resval/exact.hpp"

namespace resval {

/// Trial division. Desk-scale inputs only.
bool is_prime(long n);

/// A validated prime modulus. Construction throws NotPrimeError otherwise.
class Prime {
 public:
  explicit Prime(long value);

  long value() const noexcept { return value_; }
  Integer pow(unsigned long exponent) const { return ipow(value_, exponent); }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  long value_;
};

}  // namespace resval

#include "resval/prime.hpp"

#include <string>

#include "resval/errors.hpp"

namespace resval {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

Prime::Prime(long value) : value_(value) {
  if (!is_prime(value)) throw NotPrimeError(std::to_string(value) + " is not prime");
}

}  // namespace resval

#pragma once

// Minimal resolutions of a weight omega at a prime p.
//
// A resolution is a finitely supported sequence gamma_0, gamma_1, ... with
// gamma_i >= p * gamma_(i+1) and sum omega. Real resolutions take values in
// {0} U [1, inf); integral ones are non-negative integers. "Minimal" is the
// lexicographically least sequence of the kind.

#include <string>
#include <string_view>
#include <vector>

#include "resval/exact.hpp"
#include "resval/prime.hpp"

namespace resval {

enum class ResolutionKind { Real, Integral };

std::string_view to_string(ResolutionKind kind);
/// Accepts "real" / "integral". Throws std::invalid_argument otherwise.
ResolutionKind parse_resolution_kind(std::string_view text);

struct Resolution {
  ResolutionKind kind = ResolutionKind::Integral;
  long p = 2;
  Rational omega;
  std::vector<Rational> terms;  // trailing zeros trimmed

  /// gamma_i, zero past the support.
  Rational operator[](std::size_t i) const { return i < terms.size() ? terms[i] : Rational(0); }
  std::size_t support() const noexcept { return terms.size(); }
};

/// Empty string when `r` satisfies every resolution constraint, otherwise a
/// description of the first violated one.
std::string resolution_violation(const Resolution& r);

/// Largest e with p^e <= (p-1)*omega + 1, minus one. Integer arithmetic only.
/// Throws EmptyResolutionError for omega == 0.
long depth_k(long omega, const Prime& p);
/// Same for a rational weight. Throws DomainError for 0 < omega < 1.
long depth_k(const Rational& omega, const Prime& p);

Resolution real_minimal(long omega, const Prime& p);
Resolution real_minimal(const Rational& omega, const Prime& p);
Resolution integral_minimal(long omega, const Prime& p);

/// Brute force: enumerates every integral resolution and takes the
/// lexicographic minimum. omega <= 40, otherwise LimitError.
Resolution integral_minimal_oracle(long omega, const Prime& p);

Resolution minimal_resolution(long omega, const Prime& p, ResolutionKind kind);

/// sum_i p^i * a_i * b_i
Rational weighted_product(const Resolution& a, const Resolution& b);

}  // namespace resval

#pragma once

// Lower bounds for v_p(res(f, g)) in terms of the guaranteed valuations s1, s2
// and the joint maximum S, plus the earlier bounds they are compared against.

#include <optional>
#include <string>
#include <vector>

#include "resval/exact.hpp"
#include "resval/prime.hpp"
#include "resval/resolution.hpp"

namespace resval {

/// p * sum_i p^i gamma_i(s1) gamma_i(s2) with minimal resolutions of `kind`.
Rational bound_main(const Prime& p, long s1, long s2, ResolutionKind kind);

/// S - max(s1, s2) + bound_main. Throws DomainError when S < max(s1, s2).
Rational bound_with_S(const Prime& p, long s1, long s2, long S, ResolutionKind kind);

/// S - max(s1, s2) + p s1 s2 (p-1)/(p - p^-k), k = depth_k(max(s1, s2)).
/// Throws DomainError when S < max(s1, s2) or max(s1, s2) == 0.
Rational bound_closed_form(const Prime& p, long s1, long s2, long S);

struct NamedBound {
  std::string name;
  Rational value;
  friend bool operator==(const NamedBound&, const NamedBound&) = default;
};

/// "trivial" = S, "FZ-general" = S - s + (p-1)s^2, and "FZ-small-s" =
/// S - s + p s^2 only when s <= p. Throws DomainError when S < s.
std::vector<NamedBound> baseline_bounds(const Prime& p, long s, long S);

/// Every invariant and bound for one (f, g, p) instance. Optional fields are
/// absent when their preconditions fail (e.g. S < max(s1, s2)).
struct BoundReport {
  long p = 2;
  long s1 = 0;
  long s2 = 0;
  std::optional<long> S;
  std::optional<long> vp_r;
  std::optional<long> chi_sum;
  Rational bound_main_real;
  Integer bound_main_integral;
  std::optional<Rational> bound_with_S_real;
  std::optional<Integer> bound_with_S_integral;
  std::optional<Rational> bound_closed_form;
  std::vector<NamedBound> baselines;

  /// Every proven lower bound present in the report, by name.
  std::vector<NamedBound> proven_bounds() const;
  /// vp_r - bound for each proven bound; empty without vp_r.
  std::vector<NamedBound> gaps() const;
  /// Names of proven bounds exceeding vp_r.
  std::vector<std::string> violations() const;
};

/// Evaluates every bound from the invariants. S, vp_r and chi_sum may be absent.
BoundReport make_bound_report(const Prime& p, long s1, long s2, std::optional<long> S,
                              std::optional<long> vp_r, std::optional<long> chi_sum);

}  // namespace resval

#pragma once

// Pairs (f, g) on which the resultant bound is attained.
//
// With s = (p^(k+1) - 1)/(p - 1) a base-p repunit, take h0 the first monic
// irreducible of degree s1 over F_p, lift it to h(x) = p^s1 h0(x/p), and set
//   f(x) = h(x) h(x+1) ... h(x+p-1),
//   g(x) = x (x+1) ... (x + p^(k2+1) - 1).
// Then v_p(f(n)) >= s1, v_p(g(n)) >= s2 and v_p(res(f, g)) = p^(k2+1) s1.

#include <utility>

#include "resval/analysis.hpp"
#include "resval/polynomial.hpp"
#include "resval/prime.hpp"

namespace resval {

class ConstructionSpec {
 public:
  /// Throws std::invalid_argument unless k1 >= k2 >= 0.
  ConstructionSpec(const Prime& p, long k1, long k2);

  const Prime& p() const noexcept { return p_; }
  long k1() const noexcept { return k1_; }
  long k2() const noexcept { return k2_; }
  long s1() const noexcept { return s1_; }
  long s2() const noexcept { return s2_; }

 private:
  Prime p_;
  long k1_;
  long k2_;
  long s1_;
  long s2_;
};

/// 1 + p + ... + p^k
long repunit(const Prime& p, long k);

/// First monic degree-d irreducible over F_p with nonzero constant term, in
/// lexicographic order of (c_(d-1), ..., c_1, c_0) with c_i in [0, p), i.e. by
/// the integer sum c_i p^i.
/// Throws LimitError when p^d > 10^6.
Polynomial irreducible_mod_p(const Prime& p, long d);

/// Trial division by every monic polynomial of degree <= d/2 over F_p.
/// Coefficients are reduced mod p first.
bool is_irreducible_mod_p(const Polynomial& f, const Prime& p);

/// h with coefficient c_i p^(d-i). Throws DomainError unless h0 is monic with
/// constant term nonzero mod p.
Polynomial lift_h(const Polynomial& h0, const Prime& p);

/// Throws LimitError when deg f + deg g exceeds 128.
std::pair<Polynomial, Polynomial> build_extremal_pair(const ConstructionSpec& spec);

struct TightnessReport {
  ConstructionSpec spec;
  PairAnalysis analysis;
  long expected_vp_r = 0;  // p^(k2+1) s1
  /// k1 == k2 and v_p(r) equals both the real main bound and the closed form.
  bool attains_bound = false;
};

/// Builds the pair and analyzes it. Throws InvariantViolation if v_p(r) is
/// not p^(k2+1) s1 or the measured guaranteed valuations fall below s1, s2.
TightnessReport verify_tightness(const ConstructionSpec& spec);

}  // namespace resval

#pragma once

// Instance parameters of a pair (f, g) at a prime p: the guaranteed
// valuations s1, s2, the joint maximum S, the valuation of the resultant, and
// the chi_hat double sum that sits between the combinatorial bound and v_p(r).

#include <vector>

#include "resval/exact.hpp"
#include "resval/polynomial.hpp"
#include "resval/prime.hpp"
#include "resval/valuation.hpp"

namespace resval {

/// min over all integers n of v_p(f(n)). Requires f monic nonconstant.
long guaranteed_valuation(const Polynomial& f, const Prime& p);

/// v_p(resultant(f, g)); throws ZeroResultantError when the resultant is 0.
long resultant_valuation(const Polynomial& f, const Polynomial& g, const Prime& p);

/// max over integers n of min(v_p(f(n)), v_p(g(n))), by level-wise residue
/// search. Throws ZeroResultantError when the resultant is 0.
long joint_max_S(const Polynomial& f, const Polynomial& g, const Prime& p);

/// min(v_p(f(n)), v_p(g(n))) = v_p(gcd(f(n), g(n))).
Valuation gcd_valuation(const Polynomial& f, const Polynomial& g, const Integer& n, const Prime& p);

/// Level sums L_t = sum over m mod p^t of chi_hat_t^f(m) * chi_hat_t^g(m),
/// for t = 1, 2, ... up to the last nonzero level. Only residues whose parent
/// has both factors positive are visited: a positive chi_hat_t(m) needs a root
/// within valuation > t-1 of m, which is then within > t-2 of m mod p^(t-1).
/// Throws ZeroResultantError when the resultant is 0.
std::vector<long> chi_sum_levels(const Polynomial& f, const Polynomial& g, const Prime& p);

/// Sum of chi_sum_levels.
long chi_sum_lower_bound(const Polynomial& f, const Polynomial& g, const Prime& p);

struct JointInvariants {
  long s1 = 0;
  long s2 = 0;
  long S = 0;
  long vp_r = 0;
};

JointInvariants joint_invariants(const Polynomial& f, const Polynomial& g, const Prime& p);

}  // namespace resval

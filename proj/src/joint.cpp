#include "resval/joint.hpp"

#include <string>

#include "resval/errors.hpp"
#include "resval/newton.hpp"
#include "resval/resultant.hpp"

namespace resval {

namespace {

bool divisible(const Integer& n, const Integer& modulus) {
  return mpz_divisible_p(n.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

void require_monic_nonconstant(const Polynomial& f) {
  if (!f.is_monic() || f.degree() < 1) throw NotMonicError("expected a monic nonconstant polynomial");
}

}  // namespace

long guaranteed_valuation(const Polynomial& f, const Prime& p) {
  require_monic_nonconstant(f);
  // A monic f cannot vanish at deg f + 1 points, so some sample caps the answer.
  long cap = -1;
  for (long n = 0; n <= f.degree() && cap < 0; ++n) {
    const Integer value = f(n);
    if (value != 0) cap = valuation_of_nonzero(value, p);
  }
  for (long t = 1; t <= cap; ++t) {
    const Integer modulus = p.pow(static_cast<unsigned long>(t));
    for (Integer m = 0; m < modulus; ++m) {
      if (!divisible(f(m), modulus)) return t - 1;
    }
  }
  return cap;
}

long resultant_valuation(const Polynomial& f, const Polynomial& g, const Prime& p) {
  const Integer r = resultant(f, g);
  if (r == 0) throw ZeroResultantError("resultant is zero");
  return valuation_of_nonzero(r, p);
}

long joint_max_S(const Polynomial& f, const Polynomial& g, const Prime& p) {
  const long vp_r = resultant_valuation(f, g, p);
  std::vector<Integer> level{Integer(0)};
  Integer step = 1;  // p^(t-1)
  for (long t = 1;; ++t) {
    const Integer modulus = step * p.value();
    std::vector<Integer> next;
    for (const auto& m : level) {
      for (long i = 0; i < p.value(); ++i) {
        Integer child = m + i * step;
        if (divisible(f(child), modulus) && divisible(g(child), modulus)) next.push_back(std::move(child));
      }
    }
    if (next.empty()) return t - 1;
    if (t > vp_r) {
      throw InvariantViolation("joint maximum S exceeds v_p(r) = " + std::to_string(vp_r));
    }
    level = std::move(next);
    step = modulus;
  }
}

Valuation gcd_valuation(const Polynomial& f, const Polynomial& g, const Integer& n, const Prime& p) {
  return min(int_valuation(f(n), p), int_valuation(g(n), p));
}

std::vector<long> chi_sum_levels(const Polynomial& f, const Polynomial& g, const Prime& p) {
  const long vp_r = resultant_valuation(f, g, p);
  std::vector<long> sums;
  std::vector<Integer> frontier;
  for (long m = 0; m < p.value(); ++m) frontier.emplace_back(m);
  Integer modulus = p.value();  // p^t
  for (long t = 1; !frontier.empty(); ++t) {
    if (t > vp_r + 2) {
      throw InvariantViolation("chi_hat double sum has support beyond v_p(r) + 2 at t=" + std::to_string(t));
    }
    long level_sum = 0;
    std::vector<Integer> next;
    for (const auto& m : frontier) {
      const long a = chi_hat_integral(root_valuation_profile(f, m, p), t);
      if (a == 0) continue;
      const long b = chi_hat_integral(root_valuation_profile(g, m, p), t);
      if (b == 0) continue;
      level_sum += a * b;
      for (long i = 0; i < p.value(); ++i) next.push_back(m + i * modulus);
    }
    sums.push_back(level_sum);
    frontier = std::move(next);
    modulus *= p.value();
  }
  while (!sums.empty() && sums.back() == 0) sums.pop_back();
  return sums;
}

long chi_sum_lower_bound(const Polynomial& f, const Polynomial& g, const Prime& p) {
  long total = 0;
  for (long level : chi_sum_levels(f, g, p)) total += level;
  return total;
}

JointInvariants joint_invariants(const Polynomial& f, const Polynomial& g, const Prime& p) {
  JointInvariants out;
  out.s1 = guaranteed_valuation(f, p);
  out.s2 = guaranteed_valuation(g, p);
  out.vp_r = resultant_valuation(f, g, p);
  out.S = joint_max_S(f, g, p);
  return out;
}

}  // namespace resval

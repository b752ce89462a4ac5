#include "resval/construction.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "resval/errors.hpp"
#include "resval/joint.hpp"

namespace resval {

namespace {

using ModPoly = std::vector<long>;  // ascending coefficients in [0, p)

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

long inverse_mod(long a, long p) {
  // p is prime: a^(p-2)
  long result = 1;
  long base = a % p;
  for (long e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

// Remainder of a modulo a nonzero b over F_p.
ModPoly remainder_mod(ModPoly a, const ModPoly& b, long p) {
  trim(a);
  const long lead_inv = inverse_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const long factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = ((a[shift + i] - factor * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

ModPoly reduce(const Polynomial& f, long p) {
  ModPoly out;
  for (const auto& c : f.coefficients()) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(p));
    out.push_back(r.get_si());
  }
  trim(out);
  return out;
}

Integer checked_power(long p, long d) {
  const Integer total = ipow(p, static_cast<unsigned long>(d));
  if (total > 1000000) throw LimitError("p^d exceeds 10^6 for irreducible search");
  return total;
}

}  // namespace

ConstructionSpec::ConstructionSpec(const Prime& p, long k1, long k2)
    : p_(p), k1_(k1), k2_(k2), s1_(0), s2_(0) {
  if (k2 < 0 || k1 < k2) throw std::invalid_argument("construction needs k1 >= k2 >= 0");
  s1_ = repunit(p, k1);
  s2_ = repunit(p, k2);
}

long repunit(const Prime& p, long k) {
  long total = 0;
  long power = 1;
  for (long i = 0; i <= k; ++i) {
    total += power;
    power *= p.value();
  }
  return total;
}

bool is_irreducible_mod_p(const Polynomial& f, const Prime& p) {
  const long prime = p.value();
  const ModPoly a = reduce(f, prime);
  const long d = static_cast<long>(a.size()) - 1;
  if (d < 1) return false;
  for (long e = 1; e <= d / 2; ++e) {
    const long count = to_int64(checked_power(prime, e));
    for (long code = 0; code < count; ++code) {
      ModPoly divisor(static_cast<std::size_t>(e) + 1, 0);
      divisor[static_cast<std::size_t>(e)] = 1;
      long rest = code;
      for (long i = 0; i < e; ++i) {
        divisor[static_cast<std::size_t>(i)] = rest % prime;
        rest /= prime;
      }
      if (remainder_mod(a, divisor, prime).empty()) return false;
    }
  }
  return true;
}

Polynomial irreducible_mod_p(const Prime& p, long d) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  const long prime = p.value();
  const long count = to_int64(checked_power(prime, d));
  for (long code = 0; code < count; ++code) {
    // c_0 is the least significant digit of the code.
    std::vector<Integer> coeffs(static_cast<std::size_t>(d) + 1, 0);
    coeffs[static_cast<std::size_t>(d)] = 1;
    long rest = code;
    for (long i = 0; i < d; ++i) {
      coeffs[static_cast<std::size_t>(i)] = rest % prime;
      rest /= prime;
    }
    if (coeffs[0] == 0) continue;
    Polynomial candidate(std::move(coeffs));
    if (is_irreducible_mod_p(candidate, p)) return candidate;
  }
  throw InvariantViolation("no irreducible polynomial of degree " + std::to_string(d) + " over F_" +
                           std::to_string(prime));
}

Polynomial lift_h(const Polynomial& h0, const Prime& p) {
  if (!h0.is_monic()) throw DomainError("h0 must be monic");
  const Integer c0 = h0.coefficient(0);
  if (mpz_divisible_ui_p(c0.get_mpz_t(), static_cast<unsigned long>(p.value())) != 0) {
    throw DomainError("h0 must have constant term nonzero mod p");
  }
  const int d = h0.degree();
  std::vector<Integer> coeffs;
  for (int i = 0; i <= d; ++i) coeffs.push_back(h0.coefficient(i) * p.pow(static_cast<unsigned long>(d - i)));
  return Polynomial(std::move(coeffs));
}

std::pair<Polynomial, Polynomial> build_extremal_pair(const ConstructionSpec& spec) {
  const long p = spec.p().value();
  const long g_factors = repunit(spec.p(), spec.k2()) * (p - 1) + 1;  // p^(k2+1)
  if (p * spec.s1() + g_factors > 128) {
    throw LimitError("construction degrees exceed the desk-scale limit of 128");
  }
  const Polynomial h = lift_h(irreducible_mod_p(spec.p(), spec.s1()), spec.p());
  Polynomial f = Polynomial::constant(1);
  for (long t = 0; t < p; ++t) f *= compose_shift(h, t);
  Polynomial g = Polynomial::constant(1);
  for (long t = 0; t < g_factors; ++t) g *= Polynomial::linear(-t);
  return {std::move(f), std::move(g)};
}

TightnessReport verify_tightness(const ConstructionSpec& spec) {
  auto [f, g] = build_extremal_pair(spec);
  TightnessReport out{spec, analyze_pair(f, g, spec.p()), 0, false};
  const auto& report = out.analysis.report;
  out.expected_vp_r = (repunit(spec.p(), spec.k2()) * (spec.p().value() - 1) + 1) * spec.s1();
  if (report.vp_r != out.expected_vp_r) {
    throw InvariantViolation("construction v_p(r) = " + std::to_string(*report.vp_r) + ", expected " +
                             std::to_string(out.expected_vp_r));
  }
  if (report.s1 < spec.s1() || report.s2 < spec.s2()) {
    throw InvariantViolation("construction misses its guaranteed valuations");
  }
  out.attains_bound = spec.k1() == spec.k2() && report.bound_closed_form &&
                      Rational(*report.vp_r) == report.bound_main_real &&
                      Rational(*report.vp_r) == *report.bound_closed_form;
  return out;
}

}  // namespace resval

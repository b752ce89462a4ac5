#include "resval/bounds.hpp"

#include <algorithm>

#include "resval/errors.hpp"

namespace resval {

Rational bound_main(const Prime& p, long s1, long s2, ResolutionKind kind) {
  if (s1 < 0 || s2 < 0) throw std::invalid_argument("guaranteed valuations must be non-negative");
  const Resolution a = minimal_resolution(s1, p, kind);
  const Resolution b = minimal_resolution(s2, p, kind);
  return Rational(p.value()) * weighted_product(a, b);
}

namespace {

void require_S_at_least_max(long s1, long s2, long S) {
  if (S < std::max(s1, s2)) {
    throw DomainError("S = " + std::to_string(S) + " is below max(s1, s2) = " + std::to_string(std::max(s1, s2)));
  }
}

}  // namespace

Rational bound_with_S(const Prime& p, long s1, long s2, long S, ResolutionKind kind) {
  require_S_at_least_max(s1, s2, S);
  return Rational(S - std::max(s1, s2)) + bound_main(p, s1, s2, kind);
}

Rational bound_closed_form(const Prime& p, long s1, long s2, long S) {
  require_S_at_least_max(s1, s2, S);
  const long s = std::max(s1, s2);
  if (s == 0) throw DomainError("closed-form bound needs max(s1, s2) >= 1");
  const long k = depth_k(s, p);
  // (p-1)/(p - p^-k) = (p-1) p^k / (p^(k+1) - 1)
  const Integer pk = p.pow(static_cast<unsigned long>(k));
  const Rational factor = make_rational(Integer(p.value() - 1) * pk, pk * p.value() - 1);
  return Rational(S - s) + Rational(p.value()) * s1 * s2 * factor;
}

std::vector<NamedBound> baseline_bounds(const Prime& p, long s, long S) {
  if (S < s) throw DomainError("baseline bounds need S >= s");
  std::vector<NamedBound> out;
  out.push_back({"trivial", Rational(S)});
  out.push_back({"FZ-general", Rational(S - s + (p.value() - 1) * s * s)});
  if (s <= p.value()) out.push_back({"FZ-small-s", Rational(S - s + p.value() * s * s)});
  return out;
}

std::vector<NamedBound> BoundReport::proven_bounds() const {
  std::vector<NamedBound> out;
  if (chi_sum) out.push_back({"chi_sum_lower_bound", Rational(*chi_sum)});
  out.push_back({"bound_main_real", bound_main_real});
  out.push_back({"bound_main_integral", Rational(bound_main_integral)});
  if (bound_with_S_real) out.push_back({"bound_with_S_real", *bound_with_S_real});
  if (bound_with_S_integral) out.push_back({"bound_with_S_integral", Rational(*bound_with_S_integral)});
  if (bound_closed_form) out.push_back({"bound_closed_form", *bound_closed_form});
  out.insert(out.end(), baselines.begin(), baselines.end());
  return out;
}

std::vector<NamedBound> BoundReport::gaps() const {
  std::vector<NamedBound> out;
  if (!vp_r) return out;
  for (auto& bound : proven_bounds()) out.push_back({bound.name, Rational(*vp_r) - bound.value});
  return out;
}

std::vector<std::string> BoundReport::violations() const {
  std::vector<std::string> out;
  for (const auto& gap : gaps()) {
    if (gap.value < 0) out.push_back(gap.name);
  }
  return out;
}

BoundReport make_bound_report(const Prime& p, long s1, long s2, std::optional<long> S,
                              std::optional<long> vp_r, std::optional<long> chi_sum) {
  BoundReport report;
  report.p = p.value();
  report.s1 = s1;
  report.s2 = s2;
  report.S = S;
  report.vp_r = vp_r;
  report.chi_sum = chi_sum;
  report.bound_main_real = bound_main(p, s1, s2, ResolutionKind::Real);
  report.bound_main_integral = bound_main(p, s1, s2, ResolutionKind::Integral).get_num();
  if (S && *S >= std::max(s1, s2)) {
    report.bound_with_S_real = bound_with_S(p, s1, s2, *S, ResolutionKind::Real);
    report.bound_with_S_integral = bound_with_S(p, s1, s2, *S, ResolutionKind::Integral).get_num();
    if (std::max(s1, s2) >= 1) report.bound_closed_form = bound_closed_form(p, s1, s2, *S);
  }
  if (S) report.baselines = baseline_bounds(p, std::min(s1, s2), *S);
  return report;
}

}  // namespace resval

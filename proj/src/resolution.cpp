#include "resval/resolution.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "resval/errors.hpp"

namespace resval {

std::string_view to_string(ResolutionKind kind) { return kind == ResolutionKind::Real ? "real" : "integral"; }

ResolutionKind parse_resolution_kind(std::string_view text) {
  if (text == "real") return ResolutionKind::Real;
  if (text == "integral") return ResolutionKind::Integral;
  throw std::invalid_argument("unknown resolution kind '" + std::string(text) + "'");
}

std::string resolution_violation(const Resolution& r) {
  Rational sum = 0;
  for (std::size_t i = 0; i < r.terms.size(); ++i) {
    const Rational& term = r.terms[i];
    const std::string where = "gamma_" + std::to_string(i) + " = " + to_string(term);
    if (term < 0) return where + " is negative";
    if (r.kind == ResolutionKind::Integral && !is_integral(term)) return where + " is not an integer";
    if (r.kind == ResolutionKind::Real && term != 0 && term < 1) return where + " lies in (0, 1)";
    if (term < r.p * r[i + 1]) return where + " < p * gamma_" + std::to_string(i + 1);
    sum += term;
  }
  if (!r.terms.empty() && r.terms.back() == 0) return "trailing zero term";
  if (sum != r.omega) return "terms sum to " + to_string(sum) + ", expected " + to_string(r.omega);
  return {};
}

long depth_k(long omega, const Prime& p) { return depth_k(Rational(omega), p); }

long depth_k(const Rational& omega, const Prime& p) {
  if (omega <= 0) throw EmptyResolutionError("resolution of weight 0 has no depth");
  if (omega < 1) throw DomainError("real resolutions need weight 0 or at least 1, got " + to_string(omega));
  const Rational bound = Rational(p.value() - 1) * omega + 1;
  long e = 0;
  Integer power = p.value();
  while (power <= bound) {
    power *= p.value();
    ++e;
  }
  return e - 1;
}

Resolution real_minimal(long omega, const Prime& p) { return real_minimal(Rational(omega), p); }

Resolution real_minimal(const Rational& omega, const Prime& p) {
  Resolution r{ResolutionKind::Real, p.value(), omega, {}};
  if (omega == 0) return r;
  const long k = depth_k(omega, p);
  // gamma_0 = (p-1)/(p - p^-k) * omega = (p-1) p^k omega / (p^(k+1) - 1)
  const Integer pk = p.pow(static_cast<unsigned long>(k));
  Rational term = Rational(Integer(p.value() - 1) * pk) * omega / Rational(pk * p.value() - 1);
  for (long i = 0; i <= k; ++i) {
    r.terms.push_back(term);
    term /= p.value();
  }
  return r;
}

namespace {

// Largest total an integral resolution starting with g can reach:
// sum_i floor(g / p^i).
Integer tail_capacity(const Integer& g, long p) {
  Integer total = 0;
  for (Integer q = g; q > 0; q /= p) total += q;
  return total;
}

}  // namespace

Resolution integral_minimal(long omega, const Prime& p) {
  if (omega < 0) throw std::invalid_argument("negative weight");
  Resolution r{ResolutionKind::Integral, p.value(), Rational(omega), {}};
  Integer remaining = omega;
  while (remaining > 0) {
    // Capacity is monotone in g and capacity(remaining) >= remaining.
    Integer lo = 1;
    Integer hi = remaining;
    while (lo < hi) {
      Integer mid = (lo + hi) / 2;
      if (tail_capacity(mid, p.value()) >= remaining) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    r.terms.emplace_back(lo);
    remaining -= lo;
  }
  return r;
}

Resolution integral_minimal_oracle(long omega, const Prime& p) {
  if (omega < 0) throw std::invalid_argument("negative weight");
  if (omega > 40) throw LimitError("integral_minimal_oracle supports omega <= 40");
  std::vector<std::vector<long>> all;
  std::vector<long> current;
  const long prime = p.value();
  std::function<void(long, long)> extend = [&](long remaining, long ceiling) {
    if (remaining == 0) {
      all.push_back(current);
      return;
    }
    for (long g = 1; g <= std::min(remaining, ceiling); ++g) {
      current.push_back(g);
      extend(remaining - g, g / prime);
      current.pop_back();
    }
  };
  extend(omega, omega);
  // Shorter sequences are padded with zeros for the comparison.
  auto padded = [&](const std::vector<long>& v) {
    std::vector<long> out(v);
    out.resize(static_cast<std::size_t>(omega) + 1, 0);
    return out;
  };
  const auto best = std::min_element(all.begin(), all.end(), [&](const auto& a, const auto& b) {
    return padded(a) < padded(b);
  });
  Resolution r{ResolutionKind::Integral, prime, Rational(omega), {}};
  for (long g : *best) r.terms.emplace_back(g);
  return r;
}

Resolution minimal_resolution(long omega, const Prime& p, ResolutionKind kind) {
  return kind == ResolutionKind::Real ? real_minimal(omega, p) : integral_minimal(omega, p);
}

Rational weighted_product(const Resolution& a, const Resolution& b) {
  if (a.p != b.p) throw std::invalid_argument("resolutions over different primes");
  Rational total = 0;
  Integer power = 1;
  const std::size_t n = std::min(a.support(), b.support());
  for (std::size_t i = 0; i < n; ++i) {
    total += Rational(power) * a.terms[i] * b.terms[i];
    power *= a.p;
  }
  return total;
}

}  // namespace resval

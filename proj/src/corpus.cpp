#include "resval/corpus.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "resval/errors.hpp"
#include "resval/joint.hpp"
#include "resval/newton.hpp"
#include "resval/resultant.hpp"
#include "resval/weight_tree.hpp"

namespace resval {

void validate_config(const GeneratorConfig& config) {
  if (config.degree_min < 1 || config.degree_max < config.degree_min) {
    throw std::invalid_argument("degree range must satisfy 1 <= degree_min <= degree_max");
  }
  if (config.coeff_bound < 0) throw std::invalid_argument("coefficient bound must be non-negative");
  if (config.primes.empty()) throw std::invalid_argument("at least one prime is required");
  for (long p : config.primes) Prime{p};
  if (config.degree_max > kMaxCorpusDegree) throw LimitError("degree_max is limited to 4");
  if (config.coeff_bound > kMaxCorpusCoeffBound) throw LimitError("coeff_bound is limited to 100");
  if (config.mode == GeneratorMode::Random && config.count > kMaxCorpusCount) {
    throw LimitError("count is limited to 100000");
  }
}

std::int64_t CorpusRng::uniform(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("empty draw range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(engine_());
  // Largest multiple of range not exceeding 2^64, as 2^64 - (2^64 mod range).
  const std::uint64_t reject_from = std::numeric_limits<std::uint64_t>::max() - (~range + 1) % range;
  std::uint64_t x = engine_();
  while (x > reject_from) x = engine_();
  return lo + static_cast<std::int64_t>(x % range);
}

namespace {

Polynomial random_monic(CorpusRng& rng, const GeneratorConfig& config) {
  const auto degree = rng.uniform(config.degree_min, config.degree_max);
  std::vector<Integer> coeffs;
  for (std::int64_t i = 0; i < degree; ++i) coeffs.emplace_back(rng.uniform(-config.coeff_bound, config.coeff_bound));
  coeffs.emplace_back(1);
  return Polynomial(std::move(coeffs));
}

std::vector<Polynomial> all_monic(const GeneratorConfig& config) {
  std::vector<Polynomial> out;
  const long width = 2 * config.coeff_bound + 1;
  for (long d = config.degree_min; d <= config.degree_max; ++d) {
    std::vector<long> digits(static_cast<std::size_t>(d), 0);
    for (;;) {
      std::vector<Integer> coeffs;
      for (long digit : digits) coeffs.emplace_back(digit - config.coeff_bound);
      coeffs.emplace_back(1);
      out.emplace_back(std::move(coeffs));
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == width) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return out;
}

}  // namespace

GeneratedCorpus generate_pairs(const GeneratorConfig& config) {
  validate_config(config);
  GeneratedCorpus out;
  if (config.mode == GeneratorMode::Random) {
    CorpusRng rng(config.seed);
    const std::size_t max_attempts = 100 * std::max<std::size_t>(config.count, 1);
    for (std::size_t attempt = 0; out.instances.size() < config.count; ++attempt) {
      if (attempt == max_attempts) throw LimitError("too many zero-resultant draws");
      Polynomial f = random_monic(rng, config);
      Polynomial g = random_monic(rng, config);
      const long p = config.primes[static_cast<std::size_t>(
          rng.uniform(0, static_cast<std::int64_t>(config.primes.size()) - 1))];
      if (resultant(f, g) == 0) {
        ++out.zero_resultant_skipped;
        continue;
      }
      out.instances.push_back({std::move(f), std::move(g), p});
    }
    return out;
  }
  const auto polys = all_monic(config);
  const double pairs = static_cast<double>(polys.size()) * static_cast<double>(polys.size()) *
                       static_cast<double>(config.primes.size());
  if (pairs > static_cast<double>(kMaxCorpusCount)) throw LimitError("exhaustive corpus exceeds 100000 instances");
  for (const auto& f : polys) {
    for (const auto& g : polys) {
      if (resultant(f, g) == 0) {
        ++out.zero_resultant_skipped;
        continue;
      }
      for (long p : config.primes) out.instances.push_back({f, g, p});
    }
  }
  return out;
}

InvariantContext make_invariant_context(const Polynomial& f, const Polynomial& g, const Prime& p) {
  InvariantContext context{f, g, p, analyze_pair(f, g, p), {}};
  context.chi_levels = chi_sum_levels(f, g, p);
  return context;
}

namespace {

constexpr long kSampleRadius = 24;

InvariantResult pass(const std::string& name) { return {name, true, {}}; }
InvariantResult fail(const std::string& name, const std::string& witness) { return {name, false, witness}; }

bool always(const InvariantContext&) { return true; }

std::string rat(const Rational& q) { return to_string(q); }

long vp_r_of(const InvariantContext& c) { return *c.analysis.report.vp_r; }
long S_of(const InvariantContext& c) { return *c.analysis.report.S; }

// Depth of the chi_hat trees used for reconciliation: at most vp_r + 1 and
// small enough that each tree has at most 256 vertices at the deepest level.
long reconciliation_depth(const InvariantContext& c) {
  long depth = 0;
  Integer leaves = c.p.value();
  while (depth < vp_r_of(c) + 1 && leaves * c.p.value() <= 256) {
    leaves *= c.p.value();
    ++depth;
  }
  return depth;
}

std::size_t audit_residues(long p, long max_level) {
  std::size_t total = 0;
  std::size_t level = 1;
  for (long t = 1; t <= max_level; ++t) {
    if (level > kAuditResidueBudget / static_cast<std::size_t>(p)) return kAuditResidueBudget + 1;
    level *= static_cast<std::size_t>(p);
    total += level;
  }
  return total;
}

std::vector<InvariantRule> build_table() {
  std::vector<InvariantRule> table;

  table.push_back({"resultant_symmetric", always, [](const InvariantContext& c) {
                     const Integer forward = abs(resultant(c.f, c.g));
                     const Integer backward = abs(resultant(c.g, c.f));
                     if (forward == backward) return pass("resultant_symmetric");
                     return fail("resultant_symmetric", "|res(f,g)|=" + forward.get_str() +
                                                            " |res(g,f)|=" + backward.get_str());
                   }});

  table.push_back({"gcd_valuation_divides_resultant", always, [](const InvariantContext& c) {
                     const std::string name = "gcd_valuation_divides_resultant";
                     const Valuation cap(vp_r_of(c));
                     const Valuation joint(S_of(c));
                     for (long n = -kSampleRadius; n <= kSampleRadius; ++n) {
                       const Valuation v = gcd_valuation(c.f, c.g, n, c.p);
                       if (v > cap || v > joint) {
                         return fail(name, "n=" + std::to_string(n) + " gcd valuation " + v.str() + " vp_r=" +
                                               std::to_string(vp_r_of(c)) + " S=" + std::to_string(S_of(c)));
                       }
                     }
                     return pass(name);
                   }});

  table.push_back({"guaranteed_valuation_floor", always, [](const InvariantContext& c) {
                     const std::string name = "guaranteed_valuation_floor";
                     const auto& r = c.analysis.report;
                     for (long n = -kSampleRadius; n <= kSampleRadius; ++n) {
                       if (int_valuation(c.f(n), c.p) < Valuation(r.s1) || int_valuation(c.g(n), c.p) < Valuation(r.s2)) {
                         return fail(name, "n=" + std::to_string(n) + " below s1=" + std::to_string(r.s1) +
                                               " or s2=" + std::to_string(r.s2));
                       }
                     }
                     return pass(name);
                   }});

  table.push_back({"s_min_le_S_le_vp_r", always, [](const InvariantContext& c) {
                     const auto& r = c.analysis.report;
                     if (std::min(r.s1, r.s2) <= S_of(c) && S_of(c) <= vp_r_of(c)) return pass("s_min_le_S_le_vp_r");
                     return fail("s_min_le_S_le_vp_r", "s1=" + std::to_string(r.s1) + " s2=" + std::to_string(r.s2) +
                                                           " S=" + std::to_string(S_of(c)) +
                                                           " vp_r=" + std::to_string(vp_r_of(c)));
                   }});

  table.push_back({"profile_matches_valuation", always, [](const InvariantContext& c) {
                     const std::string name = "profile_matches_valuation";
                     for (long n = -kSampleRadius; n <= kSampleRadius; ++n) {
                       for (const Polynomial* h : {&c.f, &c.g}) {
                         const Valuation direct = int_valuation((*h)(n), c.p);
                         const Valuation via = valuation_from_profile(root_valuation_profile(*h, n, c.p));
                         if (direct != via) {
                           return fail(name, "h=" + render(*h) + " n=" + std::to_string(n) + " direct=" + direct.str() +
                                                 " profile=" + via.str());
                         }
                       }
                     }
                     return pass(name);
                   }});

  table.push_back({"sandwich", always, [](const InvariantContext& c) {
                     const auto& r = c.analysis.report;
                     const Rational chi(*r.chi_sum);
                     const Rational integral(r.bound_main_integral);
                     if (r.bound_main_real <= integral && integral <= chi && chi <= Rational(vp_r_of(c))) {
                       return pass("sandwich");
                     }
                     return fail("sandwich", "real=" + rat(r.bound_main_real) + " integral=" + rat(integral) +
                                                 " chi_sum=" + rat(chi) + " vp_r=" + std::to_string(vp_r_of(c)));
                   }});

  table.push_back({"bound_with_S_sound",
                   [](const InvariantContext& c) { return c.analysis.report.bound_with_S_integral.has_value(); },
                   [](const InvariantContext& c) {
                     const auto& r = c.analysis.report;
                     const Rational integral(*r.bound_with_S_integral);
                     if (*r.bound_with_S_real <= integral && integral <= Rational(vp_r_of(c))) {
                       return pass("bound_with_S_sound");
                     }
                     return fail("bound_with_S_sound", "real=" + rat(*r.bound_with_S_real) + " integral=" +
                                                           rat(integral) + " vp_r=" + std::to_string(vp_r_of(c)));
                   }});

  table.push_back({"bound_with_S_above_trivial",
                   [](const InvariantContext& c) {
                     const auto& r = c.analysis.report;
                     return r.bound_with_S_real.has_value() && std::min(r.s1, r.s2) >= 1;
                   },
                   [](const InvariantContext& c) {
                     const auto& r = c.analysis.report;
                     if (*r.bound_with_S_real >= Rational(S_of(c))) return pass("bound_with_S_above_trivial");
                     return fail("bound_with_S_above_trivial",
                                 "real=" + rat(*r.bound_with_S_real) + " S=" + std::to_string(S_of(c)));
                   }});

  table.push_back({"closed_form_matches_real_resolution",
                   [](const InvariantContext& c) { return c.analysis.report.bound_closed_form.has_value(); },
                   [](const InvariantContext& c) {
                     const auto& r = c.analysis.report;
                     if (*r.bound_closed_form == *r.bound_with_S_real) return pass("closed_form_matches_real_resolution");
                     return fail("closed_form_matches_real_resolution",
                                 "closed=" + rat(*r.bound_closed_form) + " real=" + rat(*r.bound_with_S_real));
                   }});

  table.push_back({"no_bound_exceeds_vp_r", always, [](const InvariantContext& c) {
                     const auto bad = c.analysis.report.violations();
                     if (bad.empty()) return pass("no_bound_exceeds_vp_r");
                     std::string witness = "vp_r=" + std::to_string(vp_r_of(c));
                     for (const auto& gap : c.analysis.report.gaps()) {
                       if (gap.value < 0) witness += " " + gap.name + " gap " + rat(gap.value);
                     }
                     return fail("no_bound_exceeds_vp_r", witness);
                   }});

  table.push_back({"chi_hat_structure",
                   [](const InvariantContext& c) {
                     return audit_residues(c.p.value(), vp_r_of(c) + 2) <= kAuditResidueBudget;
                   },
                   [](const InvariantContext& c) {
                     const auto audit = audit_chi_hat(c.f, c.g, c.p, vp_r_of(c) + 2);
                     if (!audit.passed) return fail("chi_hat_structure", audit.witness);
                     if (audit.level_sums != c.chi_levels) {
                       return fail("chi_hat_structure", "pruned and full chi_hat level sums differ");
                     }
                     return pass("chi_hat_structure");
                   }});

  table.push_back({"tree_reconciliation", always, [](const InvariantContext& c) {
                     const std::string name = "tree_reconciliation";
                     const long depth = reconciliation_depth(c);
                     Rational total = 0;
                     for (long k = 0; k < c.p.value(); ++k) {
                       const auto a = chi_weight_from_poly(c.f, c.p, k, depth);
                       const auto b = chi_weight_from_poly(c.g, c.p, k, depth);
                       for (const auto* w : {&a, &b}) {
                         const auto why = weight_violation(*w);
                         if (!why.empty()) {
                           return fail(name, "tree " + std::to_string(k) + " depth " + std::to_string(depth) + ": " + why);
                         }
                       }
                       total += scalar_product(a, b);
                     }
                     long expected = 0;
                     for (std::size_t t = 0; t < c.chi_levels.size() && static_cast<long>(t) <= depth; ++t) {
                       expected += c.chi_levels[t];
                     }
                     if (total == expected) return pass(name);
                     return fail(name, "sum of scalar products " + rat(total) + " != truncated chi sum " +
                                           std::to_string(expected) + " at depth " + std::to_string(depth));
                   }});

  return table;
}

}  // namespace

const std::vector<InvariantRule>& invariant_table() {
  static const std::vector<InvariantRule> table = build_table();
  return table;
}

std::vector<InvariantResult> check_invariants(const InvariantContext& context) {
  std::vector<InvariantResult> out;
  for (const auto& rule : invariant_table()) {
    if (rule.applies(context)) out.push_back(rule.evaluate(context));
  }
  return out;
}

std::vector<InvariantResult> check_all_invariants(const Polynomial& f, const Polynomial& g, const Prime& p) {
  return check_invariants(make_invariant_context(f, g, p));
}

namespace {

struct AuditSide {
  const Polynomial* poly;
  const char* label;
  std::vector<long> previous;
  std::vector<long> current;
};

}  // namespace

ChiHatAudit audit_chi_hat(const Polynomial& f, const Polynomial& g, const Prime& p, long max_level) {
  ChiHatAudit audit;
  const auto prime = static_cast<std::size_t>(p.value());
  AuditSide sides[2] = {{&f, "f", {}, {}}, {&g, "g", {}, {}}};
  auto failure = [&](const std::string& what) {
    audit.passed = false;
    audit.witness = what;
    return audit;
  };
  std::size_t parent_count = 1;
  for (long t = 1; t <= max_level; ++t) {
    const std::size_t count = parent_count * prime;
    for (auto& side : sides) side.current.assign(count, 0);
    long level_sum = 0;
    for (std::size_t m = 0; m < count; ++m) {
      const Integer at(static_cast<unsigned long>(m));
      for (auto& side : sides) {
        const ValuationProfile profile = root_valuation_profile(*side.poly, at, p);
        const std::string where =
            std::string(side.label) + " m=" + std::to_string(m) + " t=" + std::to_string(t);
        const Rational here = chi_hat(profile, t);
        if (!is_integral(here)) return failure(where + ": chi_hat " + to_string(here) + " not integral");
        if (chi_hat(profile, t + 1) > here) return failure(where + ": chi_hat increases in t");
        // Each integer m is new at the first level where it appears.
        if (m >= parent_count || t == 1) {
          const Integer value = (*side.poly)(at);
          if (value != 0) {
            const long direct = valuation_of_nonzero(value, p);
            const long horizon = floor(profile.max_finite()).get_si() + 1;
            Rational summed = 0;
            for (long u = 1; u <= horizon; ++u) summed += chi_hat(profile, u);
            if (summed != direct) {
              return failure(where + ": sum of chi_hat " + to_string(summed) + " != v_p " + std::to_string(direct));
            }
          }
        }
        side.current[m] = here.get_num().get_si();
      }
      level_sum += sides[0].current[m] * sides[1].current[m];
      ++audit.residues_checked;
    }
    if (t >= 2) {
      for (auto& side : sides) {
        for (std::size_t parent = 0; parent < parent_count; ++parent) {
          long children = 0;
          for (std::size_t i = 0; i < prime; ++i) children += side.current[parent + i * parent_count];
          if (children > side.previous[parent]) {
            return failure(std::string(side.label) + " t=" + std::to_string(t) + " parent m=" +
                           std::to_string(parent) + ": children sum " + std::to_string(children) + " > " +
                           std::to_string(side.previous[parent]));
          }
        }
      }
    }
    audit.level_sums.push_back(level_sum);
    for (auto& side : sides) side.previous.swap(side.current);
    parent_count = count;
  }
  while (!audit.level_sums.empty() && audit.level_sums.back() == 0) audit.level_sums.pop_back();
  return audit;
}

}  // namespace resval

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "resval/analysis.hpp"
#include "resval/bounds.hpp"
#include "resval/commands.hpp"
#include "resval/corpus.hpp"
#include "resval/errors.hpp"
#include "resval/newton.hpp"
#include "resval/resolution.hpp"
#include "resval/valuation.hpp"
#include "resval/weight_tree.hpp"

using namespace resval;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

// Collects the first few failures of a criterion.
class Checker {
 public:
  void require(bool condition, const std::string& what) {
    if (condition) return;
    ++failures_;
    if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
  }
  Outcome outcome(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, std::to_string(failures_) + " failure(s): " + notes_.str()};
  }

 private:
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::string str(const Rational& q) { return to_string(q); }

Outcome construct_smallest() {
  Checker c;
  const Json out = cmd_construct(2, 0, 0);
  c.require(out["f_text"] == "x^2+5*x+6", "f = " + out["f_text"].get<std::string>());
  c.require(out["g_text"] == "x^2+x", "g = " + out["g_text"].get<std::string>());
  c.require(out["vp_r"] == 2, "v_2(r) = " + out["vp_r"].dump());
  c.require(bound_closed_form(Prime(2), 1, 1, 1) == 2, "closed form (2,1,1,1) != 2");
  c.require(out["bound_closed_form"] == "2", "report closed form " + out["bound_closed_form"].dump());
  c.require(out["gap"] == 0, "gap " + out["gap"].dump());
  return c.outcome("f=(x+2)(x+3), g=x(x+1), v_2(r)=2=closed form, gap 0");
}

Outcome construct_s3() {
  Checker c;
  const Json two = cmd_construct(2, 1, 1);
  c.require(two["vp_r"] == 12, "p=2 v_2(r) = " + two["vp_r"].dump());
  c.require(two["bound_closed_form"] == "12" && two["bound_main_real"] == "12", "p=2 bound is not 12");
  c.require(two["attains_bound"] == true, "p=2 bound not attained");
  const Json three = cmd_construct(3, 0, 0);
  c.require(three["vp_r"] == 3, "p=3 v_3(r) = " + three["vp_r"].dump());
  c.require(three["bound_closed_form"] == "3" && three["bound_main_real"] == "3", "p=3 bound is not 3");
  c.require(three["attains_bound"] == true, "p=3 bound not attained");
  return c.outcome("p=2,k=1: v=12=bound; p=3,k=0: v=3=bound");
}

Outcome resolution_oracle() {
  Checker c;
  std::size_t checks = 0;
  for (long p : {2L, 3L, 5L}) {
    const Prime prime(p);
    const auto tag = [p](long omega) { return "p=" + std::to_string(p) + " omega=" + std::to_string(omega); };
    std::vector<Resolution> real;
    std::vector<Resolution> integral;
    for (long omega = 0; omega <= 40; ++omega) {
      real.push_back(real_minimal(omega, prime));
      integral.push_back(integral_minimal(omega, prime));
      const auto oracle = integral_minimal_oracle(omega, prime);
      c.require(integral.back().terms == oracle.terms, "integral != oracle at " + tag(omega));
      const auto violation = resolution_violation(real.back());
      c.require(violation.empty(), "real " + tag(omega) + ": " + violation);
      checks += 2;
    }
    for (long omega = 1; omega <= 40; ++omega) {
      // gamma_1(omega) = gamma_0(omega - gamma_0(omega))
      const Resolution& r = real[omega];
      c.require(r[1] == real_minimal(r.omega - r[0], prime)[0], "real gamma_1 recursion at " + tag(omega));
      const Resolution& z = integral[omega];
      c.require(z[1] == integral_minimal(Rational(z.omega - z[0]).get_num().get_si(), prime)[0],
                "integral gamma_1 recursion at " + tag(omega));
      // Each gamma_i is non-decreasing in omega.
      for (std::size_t i = 0; i < real[omega].support() + 1; ++i) {
        c.require(real[omega - 1][i] <= real[omega][i], "real monotonicity at " + tag(omega));
        c.require(integral[omega - 1][i] <= integral[omega][i], "integral monotonicity at " + tag(omega));
      }
      // omega < sum_{i<=k} p^i implies omega - gamma_0 < sum_{i<k} p^i.
      Integer below = 0;
      Integer power = 1;
      for (long k = 0; k <= 8; ++k) {
        const Integer upto = below + power;
        if (omega < upto) {
          c.require(r.omega - r[0] < Rational(below), "real range bound at " + tag(omega) + " k=" + std::to_string(k));
          c.require(z.omega - z[0] < Rational(below),
                    "integral range bound at " + tag(omega) + " k=" + std::to_string(k));
        }
        below = upto;
        power *= p;
      }
      checks += 4;
    }
  }
  return c.outcome(std::to_string(checks) + " resolution checks, omega <= 40, p in {2,3,5}");
}

Outcome tree_minimum() {
  Checker c;
  const Prime two(2);
  for (long a = 1; a <= 4; ++a) {
    for (long b = 1; b <= 4; ++b) {
      const Rational minimum = min_scalar_exhaustive(two, a, b, 3);
      const Rational predicted = weighted_product(integral_minimal(a, two), integral_minimal(b, two));
      c.require(minimum == predicted, "omega=(" + std::to_string(a) + "," + std::to_string(b) + ") min " +
                                          str(minimum) + " predicted " + str(predicted));
    }
  }
  return c.outcome("16 pairs omega_a, omega_b in 1..4 at depth 3 match sum 2^i g_i g_i");
}

GeneratedCorpus acceptance_corpus() {
  GeneratorConfig config;
  config.seed = 1;
  config.count = 500;
  config.degree_max = 3;
  config.coeff_bound = 20;
  config.primes = {2, 3};
  return generate_pairs(config);
}

Outcome corpus_soundness() {
  Checker c;
  const auto corpus = acceptance_corpus();
  std::size_t with_s = 0;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    const auto& inst = corpus.instances[i];
    const auto analysis = analyze_pair(inst.f, inst.g, Prime(inst.p));
    const auto& r = analysis.report;
    const Rational vp_r(*r.vp_r);
    const std::string tag = "#" + std::to_string(i) + " " + render(inst.f) + ", " + render(inst.g) +
                            " p=" + std::to_string(inst.p);
    c.require(vp_r >= *r.chi_sum, tag + ": chi_sum exceeds v_p(r)");
    c.require(Rational(*r.chi_sum) >= Rational(r.bound_main_integral), tag + ": integral main exceeds chi_sum");
    c.require(Rational(r.bound_main_integral) >= r.bound_main_real, tag + ": real main exceeds integral main");
    if (r.bound_with_S_integral) {
      ++with_s;
      c.require(vp_r >= Rational(*r.bound_with_S_integral), tag + ": S-refined bound exceeds v_p(r)");
    }
    c.require(r.violations().empty(), tag + ": report lists violations");
  }
  return c.outcome(std::to_string(corpus.instances.size()) + " pairs (" + std::to_string(with_s) +
                   " with S >= max(s1,s2)), " + std::to_string(corpus.zero_resultant_skipped) +
                   " zero-resultant draws skipped, 0 violations");
}

Outcome chi_hat_structure() {
  Checker c;
  const auto corpus = acceptance_corpus();
  std::size_t residues = 0;
  for (std::size_t i = 0; i < corpus.instances.size(); ++i) {
    const auto& inst = corpus.instances[i];
    const Prime p(inst.p);
    const auto analysis = analyze_pair(inst.f, inst.g, p);
    const auto audit = audit_chi_hat(inst.f, inst.g, p, *analysis.report.vp_r + 2);
    residues += audit.residues_checked;
    const std::string tag = "#" + std::to_string(i);
    c.require(audit.passed, tag + ": " + audit.witness);
    long total = 0;
    for (long level : audit.level_sums) total += level;
    c.require(total == *analysis.report.chi_sum, tag + ": full double sum differs from the pruned one");
  }
  return c.outcome(std::to_string(corpus.instances.size()) + " pairs, " + std::to_string(residues) +
                   " (polynomial, level, residue) evaluations");
}

Outcome profile_consistency() {
  Checker c;
  CorpusRng rng(20261018);
  const std::vector<long> primes{2, 3, 5, 7};
  std::size_t roots = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const long degree = rng.uniform(1, 5);
    std::vector<Integer> coefficients;
    for (long i = 0; i < degree; ++i) coefficients.emplace_back(rng.uniform(-50, 50));
    coefficients.emplace_back(1);
    const Polynomial f(std::move(coefficients));
    const Integer m = rng.uniform(-200, 200);
    const Prime p(primes[rng.uniform(0, 3)]);
    const Valuation from_profile = valuation_from_profile(root_valuation_profile(f, m, p));
    const Valuation direct = int_valuation(f(m), p);
    roots += direct.is_infinite() ? 1 : 0;
    c.require(from_profile == direct, render(f) + " at m=" + m.get_str() + " p=" + std::to_string(p.value()) +
                                          ": " + from_profile.str() + " vs " + direct.str());
  }
  return c.outcome("1000 seeded (f, m, p) triples agree (" + std::to_string(roots) + " at roots)");
}

Outcome corollary_identity() {
  Checker c;
  std::size_t checks = 0;
  for (long p : {2L, 3L, 5L}) {
    const Prime prime(p);
    for (long a = 1; a <= 40; ++a) {
      for (long b = 1; b <= 40; ++b) {
        const long k = std::max(depth_k(a, prime), depth_k(b, prime));
        const Rational p_to_minus_k(Integer(1), prime.pow(static_cast<unsigned long>(k)));
        const Rational expected = Rational((p - 1) * a * b) / (Rational(p) - p_to_minus_k);
        const Rational actual = weighted_product(real_minimal(a, prime), real_minimal(b, prime));
        c.require(actual == expected, "p=" + std::to_string(p) + " (" + std::to_string(a) + "," +
                                          std::to_string(b) + "): " + str(actual) + " vs " + str(expected));
        ++checks;
      }
    }
  }
  return c.outcome(std::to_string(checks) + " exact identities, omega <= 40, p in {2,3,5}");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "sharpness, smallest case", 1, construct_smallest},
      {2, "sharpness, s = 3", 5, construct_s3},
      {3, "resolution oracle equivalence", 10, resolution_oracle},
      {4, "tree minimum equals resolution product", 300, tree_minimum},
      {5, "bound soundness on corpus", 120, corpus_soundness},
      {6, "chi_hat structure on corpus", 120, chi_hat_structure},
      {7, "profile consistency", 10, profile_consistency},
      {8, "real resolution product identity", 10, corollary_identity},
  };

  int failed = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.passed && seconds > criterion.limit_seconds) {
      outcome = {false, "exceeded the " + std::to_string(static_cast<int>(criterion.limit_seconds)) + " s limit"};
    }
    failed += outcome.passed ? 0 : 1;
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", outcome.passed ? "PASS" : "FAIL", criterion.id,
                criterion.title.c_str(), outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

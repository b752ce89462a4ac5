#include "resval/commands.hpp"

#include <algorithm>
#include <exception>
#include <fstream>
#include <map>
#include <stdexcept>
#include <thread>

#include "resval/analysis.hpp"
#include "resval/construction.hpp"
#include "resval/errors.hpp"
#include "resval/joint.hpp"
#include "resval/poly_parser.hpp"
#include "resval/weight_tree.hpp"

namespace resval {

namespace {

Polynomial parse_monic(const std::string& text, const char* label) {
  Polynomial f = parse_polynomial(text);
  if (!f.is_monic() || f.degree() < 1) {
    throw NotMonicError(std::string(label) + " = " + render(f) + " is not monic and nonconstant");
  }
  return f;
}

}  // namespace

Json cmd_analyze(const std::string& f, const std::string& g, long p) {
  const Prime prime(p);
  return analysis_json(analyze_pair(parse_monic(f, "f"), parse_monic(g, "g"), prime));
}

Json cmd_chi_sum(const std::string& f, const std::string& g, long p) {
  const Prime prime(p);
  const Polynomial pf = parse_monic(f, "f");
  const Polynomial pg = parse_monic(g, "g");
  const auto levels = chi_sum_levels(pf, pg, prime);
  long total = 0;
  for (long level : levels) total += level;
  Json out;
  out["p"] = p;
  out["levels"] = levels;
  out["chi_sum_lower_bound"] = total;
  out["vp_r"] = resultant_valuation(pf, pg, prime);
  return out;
}

Json cmd_resolution(long omega, long p, ResolutionKind kind) {
  if (omega < 0) throw std::invalid_argument("omega must be non-negative");
  return resolution_json(minimal_resolution(omega, Prime(p), kind));
}

Json cmd_construct(long p, long k1, long k2) {
  const ConstructionSpec spec(Prime(p), k1, k2);
  const TightnessReport tightness = verify_tightness(spec);
  const Polynomial h0 = irreducible_mod_p(spec.p(), spec.s1());
  Json out;
  out["p"] = p;
  out["k1"] = k1;
  out["k2"] = k2;
  out["spec_s1"] = spec.s1();
  out["spec_s2"] = spec.s2();
  out["h0"] = polynomial_json(h0);
  out["h"] = polynomial_json(lift_h(h0, spec.p()));
  Json analysis = analysis_json(tightness.analysis);
  for (auto& [key, value] : analysis.items()) out[key] = value;
  out["expected_vp_r"] = tightness.expected_vp_r;
  out["attains_bound"] = tightness.attains_bound;
  return out;
}

Json cmd_tree_min(long p, long omega_a, long omega_b, long depth) {
  const Prime prime(p);
  const Rational minimum = min_scalar_exhaustive(prime, omega_a, omega_b, depth);
  const Rational theorem = weighted_product(integral_minimal(omega_a, prime), integral_minimal(omega_b, prime));
  Json out;
  out["p"] = p;
  out["omega_a"] = omega_a;
  out["omega_b"] = omega_b;
  out["depth"] = depth;
  out["minimum"] = rational_json(minimum);
  out["theorem_bound"] = rational_json(theorem);
  out["matches_theorem"] = minimum == theorem;
  return out;
}

namespace {

// Largest proven bound and its name.
NamedBound best_bound(const BoundReport& report) {
  const auto bounds = report.proven_bounds();
  return *std::max_element(bounds.begin(), bounds.end(),
                           [](const NamedBound& a, const NamedBound& b) { return a.value < b.value; });
}

struct Evaluated {
  Json record;
  bool violated = false;
  std::size_t failed_checks = 0;
  Rational best_gap;
};

Evaluated evaluate_instance(std::size_t index, const Instance& instance, bool check) {
  const Prime p(instance.p);
  const InvariantContext context = make_invariant_context(instance.f, instance.g, p);
  std::vector<InvariantResult> results;
  if (check) results = check_invariants(context);
  Evaluated out;
  out.record = corpus_record(index, context, results);
  out.violated = out.record["violated"].get<bool>();
  for (const auto& r : results) out.failed_checks += r.passed ? 0 : 1;
  out.best_gap = Rational(*context.analysis.report.vp_r) - best_bound(context.analysis.report).value;
  return out;
}

}  // namespace

Json corpus_record(std::size_t index, const InvariantContext& context, const std::vector<InvariantResult>& results) {
  Json record;
  record["index"] = index;
  Json analysis = analysis_json(context.analysis);
  for (auto& [key, value] : analysis.items()) record[key] = value;
  record["violated"] = !context.analysis.report.violations().empty();
  Json failed = Json::array();
  for (const auto& r : results) {
    if (!r.passed) failed.push_back({{"name", r.name}, {"witness", r.witness}});
  }
  record["failed_invariants"] = std::move(failed);
  return record;
}

Json cmd_corpus(const CorpusRunOptions& options) {
  const GeneratedCorpus corpus = generate_pairs(options.config);
  std::ofstream out(options.out_path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write corpus to '" + options.out_path + "'");

  const std::size_t n = corpus.instances.size();
  std::vector<Evaluated> evaluated(n);
  std::vector<std::exception_ptr> errors(n);
  std::size_t workers = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(n, 1));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = w; i < n; i += workers) {
          try {
            evaluated[i] = evaluate_instance(i, corpus.instances[i], options.check_invariants);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  std::size_t violations = 0;
  std::size_t failed_checks = 0;
  std::map<Rational, std::size_t> histogram;
  for (const auto& e : evaluated) {
    out << e.record.dump() << '\n';
    violations += e.violated ? 1 : 0;
    failed_checks += e.failed_checks;
    ++histogram[e.best_gap];
  }
  if (!out) throw std::runtime_error("failed writing corpus to '" + options.out_path + "'");

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return evaluated[a].best_gap < evaluated[b].best_gap; });
  Json tightest = Json::array();
  for (std::size_t i = 0; i < std::min<std::size_t>(5, n); ++i) {
    const Json& r = evaluated[order[i]].record;
    tightest.push_back({{"index", r["index"]},
                        {"f", r["f_text"]},
                        {"g", r["g_text"]},
                        {"p", r["p"]},
                        {"vp_r", r["vp_r"]},
                        {"gap", rational_json(evaluated[order[i]].best_gap)}});
  }
  Json gap_histogram = Json::object();
  for (const auto& [gap, count] : histogram) gap_histogram[to_string(gap)] = count;

  Json summary;
  summary["records"] = n;
  summary["zero_resultant_skipped"] = corpus.zero_resultant_skipped;
  summary["violations"] = violations;
  summary["invariant_failures"] = failed_checks;
  summary["gap_histogram"] = std::move(gap_histogram);
  summary["tightest"] = std::move(tightest);
  summary["out"] = options.out_path;
  return summary;
}

}  // namespace resval

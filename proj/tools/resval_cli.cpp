// resval: bounds on the p-adic valuation of resultants of monic integer
// polynomials.
//
// Exit codes: 0 success, 1 usage or parse error, 2 mathematical precondition
// failure (zero resultant, composite p, non-monic input), 3 internal
// invariant violation.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "resval/commands.hpp"
#include "resval/errors.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kPrecondition = 2, kInvariant = 3 };

void print(const resval::Json& value, const std::string& format) {
  if (format == "json") {
    std::cout << value.dump(2) << '\n';
    return;
  }
  if (!value.is_object()) {
    std::cout << value.dump() << '\n';
    return;
  }
  for (const auto& [key, item] : value.items()) {
    std::cout << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump()) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds and exact values for v_p(res(f, g)) of monic integer polynomials"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

  long p = 2;
  std::string f_text;
  std::string g_text;

  auto* analyze = app.add_subcommand("analyze", "Invariants and every bound for one pair");
  analyze->add_option("--f", f_text, "Monic polynomial f, e.g. \"x^2+5*x+6\" or \"[6,5,1]\"")->required();
  analyze->add_option("--g", g_text, "Monic polynomial g")->required();
  analyze->add_option("--p", p, "Prime")->required();

  auto* chi_sum = app.add_subcommand("chi-sum", "Level sums of the chi_hat double sum");
  chi_sum->add_option("--f", f_text)->required();
  chi_sum->add_option("--g", g_text)->required();
  chi_sum->add_option("--p", p)->required();

  long omega = 0;
  std::string kind = "integral";
  auto* resolution = app.add_subcommand("resolution", "Minimal resolution of a weight");
  resolution->add_option("--omega", omega, "Weight")->required();
  resolution->add_option("--p", p)->required();
  resolution->add_option("--kind", kind)->check(CLI::IsMember({"real", "integral"}));

  long k1 = 0;
  long k2 = 0;
  auto* construct = app.add_subcommand("construct", "Extremal pair attaining the bound");
  construct->add_option("--p", p)->required();
  construct->add_option("--k1", k1)->required();
  construct->add_option("--k2", k2)->required();

  long omega_a = 0;
  long omega_b = 0;
  long depth = 3;
  auto* tree_min = app.add_subcommand("tree-min", "Exhaustive minimum scalar product of weight functions");
  tree_min->add_option("--p", p)->required();
  tree_min->add_option("--omega-a", omega_a)->required();
  tree_min->add_option("--omega-b", omega_b)->required();
  tree_min->add_option("--depth", depth);

  resval::CorpusRunOptions corpus_options;
  std::string mode = "random";
  auto& config = corpus_options.config;
  auto* corpus = app.add_subcommand("corpus", "Generate pairs, write JSONL records, check every invariant");
  corpus->add_option("--degree-max", config.degree_max);
  corpus->add_option("--coeff-bound", config.coeff_bound);
  corpus->add_option("--primes", config.primes)->delimiter(',');
  corpus->add_option("--count", config.count);
  corpus->add_option("--seed", config.seed);
  corpus->add_option("--mode", mode)->check(CLI::IsMember({"random", "exhaustive"}));
  corpus->add_option("--threads", corpus_options.threads, "Worker threads (0: all cores)");
  corpus->add_option("--out", corpus_options.out_path, "JSONL output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze) {
      print(resval::cmd_analyze(f_text, g_text, p), format);
    } else if (*chi_sum) {
      print(resval::cmd_chi_sum(f_text, g_text, p), format);
    } else if (*resolution) {
      print(resval::cmd_resolution(omega, p, resval::parse_resolution_kind(kind)), format);
    } else if (*construct) {
      print(resval::cmd_construct(p, k1, k2), format);
    } else if (*tree_min) {
      print(resval::cmd_tree_min(p, omega_a, omega_b, depth), format);
    } else if (*corpus) {
      config.mode = mode == "random" ? resval::GeneratorMode::Random : resval::GeneratorMode::Exhaustive;
      const auto summary = resval::cmd_corpus(corpus_options);
      print(summary, format);
      if (summary["violations"].get<std::size_t>() > 0 || summary["invariant_failures"].get<std::size_t>() > 0) {
        return kInvariant;
      }
    }
  } catch (const resval::InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInvariant;
  } catch (const resval::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

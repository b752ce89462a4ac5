#pragma once

// The CLI subcommands as library calls returning JSON, so the tool and the
// tests share one code path. Errors propagate as exceptions; the tool maps
// them to exit codes.

#include <cstddef>
#include <string>

#include "resval/corpus.hpp"
#include "resval/report_json.hpp"
#include "resval/resolution.hpp"

namespace resval {

/// Full bound report for f, g (polynomial expressions) at p.
Json cmd_analyze(const std::string& f, const std::string& g, long p);

/// Pruned chi_hat level sums and their total.
Json cmd_chi_sum(const std::string& f, const std::string& g, long p);

/// The minimal resolution's terms.
Json cmd_resolution(long omega, long p, ResolutionKind kind);

/// Extremal pair and its tightness report.
Json cmd_construct(long p, long k1, long k2);

/// {"minimum", "theorem_bound", "matches_theorem"}
Json cmd_tree_min(long p, long omega_a, long omega_b, long depth);

struct CorpusRunOptions {
  GeneratorConfig config;
  std::string out_path;
  std::size_t threads = 0;  // 0: hardware concurrency
  bool check_invariants = true;
};

/// One JSON line per instance, written in generation order.
Json corpus_record(std::size_t index, const InvariantContext& context, const std::vector<InvariantResult>& results);

/// Writes the JSONL corpus to out_path and returns the summary (records,
/// skipped pairs, violations, invariant failures, gap histogram, tightest
/// instances). Throws std::runtime_error when out_path cannot be written.
Json cmd_corpus(const CorpusRunOptions& options);

}  // namespace resval

#pragma once

// Instance generation and bulk invariant checking.
//
// Random mode draws from std::mt19937_64 seeded with the configured seed.
// A bounded draw in [lo, hi] takes raw 64-bit outputs, rejects those at or
// above the largest multiple of (hi - lo + 1) below 2^64, and returns
// lo + x mod (hi - lo + 1). Each instance consumes, in order: deg f in
// [degree_min, degree_max], the deg f non-leading coefficients of f
// (constant term first) in [-coeff_bound, coeff_bound], the same for g, and
// an index into `primes`. Pairs with zero resultant are skipped and counted.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "resval/analysis.hpp"
#include "resval/polynomial.hpp"
#include "resval/prime.hpp"

namespace resval {

enum class GeneratorMode { Random, Exhaustive };

struct GeneratorConfig {
  long degree_min = 1;
  long degree_max = 3;
  long coeff_bound = 20;
  std::vector<long> primes{2, 3};
  GeneratorMode mode = GeneratorMode::Random;
  std::uint64_t seed = 1;
  std::size_t count = 500;  // Random mode only
};

inline constexpr long kMaxCorpusDegree = 4;
inline constexpr long kMaxCorpusCoeffBound = 100;
inline constexpr std::size_t kMaxCorpusCount = 100000;

/// Throws std::invalid_argument for malformed configs (degree < 1, no primes),
/// NotPrimeError for composite entries, and LimitError beyond the desk-scale
/// limits.
void validate_config(const GeneratorConfig& config);

struct Instance {
  Polynomial f;
  Polynomial g;
  long p = 2;
};

struct GeneratedCorpus {
  std::vector<Instance> instances;
  std::size_t zero_resultant_skipped = 0;
};

/// Random: `count` instances. Exhaustive: every ordered pair of monic
/// polynomials in range, crossed with every prime.
GeneratedCorpus generate_pairs(const GeneratorConfig& config);

/// The documented generator: mt19937_64 plus rejection-sampled bounded draws.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : engine_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

struct InvariantResult {
  std::string name;
  bool passed = true;
  std::string witness;  // failing numbers, empty on success
};

/// Everything the invariant table reads, computed once per instance.
struct InvariantContext {
  Polynomial f;
  Polynomial g;
  Prime p;
  PairAnalysis analysis;
  std::vector<long> chi_levels;  // pruned level sums of the chi_hat double sum
};

InvariantContext make_invariant_context(const Polynomial& f, const Polynomial& g, const Prime& p);

struct InvariantRule {
  std::string name;
  std::function<bool(const InvariantContext&)> applies;
  std::function<InvariantResult(const InvariantContext&)> evaluate;
};

/// The registered cross-module invariants.
const std::vector<InvariantRule>& invariant_table();

/// Results for every applicable rule, in table order.
std::vector<InvariantResult> check_invariants(const InvariantContext& context);
std::vector<InvariantResult> check_all_invariants(const Polynomial& f, const Polynomial& g, const Prime& p);

/// Full enumeration of chi_hat over every residue m mod p^t, t <= max_level,
/// for both f and g: integrality, monotonicity in t, summation to v_p(h(m)),
/// the parent/children division inequality, and the unpruned level sums.
struct ChiHatAudit {
  bool passed = true;
  std::string witness;
  std::vector<long> level_sums;  // index t-1, trailing zeros trimmed
  std::size_t residues_checked = 0;
};

ChiHatAudit audit_chi_hat(const Polynomial& f, const Polynomial& g, const Prime& p, long max_level);

/// Residues the invariant table will enumerate in audit_chi_hat at most.
inline constexpr std::size_t kAuditResidueBudget = std::size_t{1} << 21;

}  // namespace resval

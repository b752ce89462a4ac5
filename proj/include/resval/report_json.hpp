#pragma once

// JSON rendering. Integer-typed fields are JSON numbers when they fit in 64
// bits (decimal strings otherwise); rational-typed fields are always strings,
// "n" or "n/d", so no precision is lost.

#include "json.hpp"

#include "resval/analysis.hpp"
#include "resval/bounds.hpp"
#include "resval/corpus.hpp"
#include "resval/polynomial.hpp"
#include "resval/resolution.hpp"

namespace resval {

using Json = nlohmann::ordered_json;

Json integer_json(const Integer& n);
Json rational_json(const Rational& q);
Json polynomial_json(const Polynomial& f);

/// Integral resolutions as numbers, real ones as rational strings.
Json resolution_json(const Resolution& r);

Json report_json(const BoundReport& report);

/// report_json plus f, g (coefficients and text) and the resultant.
Json analysis_json(const PairAnalysis& analysis);

Json invariant_results_json(const std::vector<InvariantResult>& results);

}  // namespace resval

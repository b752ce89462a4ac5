#pragma once

#include "resval/bounds.hpp"
#include "resval/joint.hpp"
#include "resval/polynomial.hpp"
#include "resval/prime.hpp"

namespace resval {

struct PairAnalysis {
  Polynomial f;
  Polynomial g;
  Integer resultant;
  BoundReport report;
};

/// Computes s1, s2, S, v_p(r), the chi_hat double sum and every bound.
/// Throws NotMonicError or ZeroResultantError on invalid pairs.
PairAnalysis analyze_pair(const Polynomial& f, const Polynomial& g, const Prime& p);

}  // namespace resval

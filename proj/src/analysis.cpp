#include "resval/analysis.hpp"

#include "resval/errors.hpp"
#include "resval/resultant.hpp"
#include "resval/valuation.hpp"

namespace resval {

PairAnalysis analyze_pair(const Polynomial& f, const Polynomial& g, const Prime& p) {
  PairAnalysis out{f, g, resultant(f, g), {}};
  if (out.resultant == 0) throw ZeroResultantError("resultant is zero; f and g share a root");
  const long vp_r = valuation_of_nonzero(out.resultant, p);
  const long s1 = guaranteed_valuation(f, p);
  const long s2 = guaranteed_valuation(g, p);
  const long S = joint_max_S(f, g, p);
  const long chi_sum = chi_sum_lower_bound(f, g, p);
  out.report = make_bound_report(p, s1, s2, S, vp_r, chi_sum);
  return out;
}

}  // namespace resval

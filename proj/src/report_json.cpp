#include "resval/report_json.hpp"

namespace resval {

Json integer_json(const Integer& n) {
  if (fits_int64(n)) return to_int64(n);
  return n.get_str();
}

Json rational_json(const Rational& q) { return to_string(q); }

Json polynomial_json(const Polynomial& f) {
  Json out = Json::array();
  for (const auto& c : f.coefficients()) out.push_back(integer_json(c));
  return out;
}

Json resolution_json(const Resolution& r) {
  Json out = Json::array();
  for (const auto& term : r.terms) {
    if (r.kind == ResolutionKind::Integral) {
      out.push_back(integer_json(term.get_num()));
    } else {
      out.push_back(rational_json(term));
    }
  }
  return out;
}

namespace {

template <typename T, typename F>
Json optional_json(const std::optional<T>& value, F&& render) {
  return value ? render(*value) : Json(nullptr);
}

}  // namespace

Json report_json(const BoundReport& report) {
  Json out;
  out["p"] = report.p;
  out["s1"] = report.s1;
  out["s2"] = report.s2;
  out["S"] = optional_json(report.S, [](long v) { return Json(v); });
  out["vp_r"] = optional_json(report.vp_r, [](long v) { return Json(v); });
  out["chi_sum_lower_bound"] = optional_json(report.chi_sum, [](long v) { return Json(v); });
  out["bound_main_real"] = rational_json(report.bound_main_real);
  out["bound_main_integral"] = integer_json(report.bound_main_integral);
  out["bound_with_S_real"] = optional_json(report.bound_with_S_real, rational_json);
  out["bound_with_S_integral"] = optional_json(report.bound_with_S_integral, integer_json);
  out["bound_closed_form"] = optional_json(report.bound_closed_form, rational_json);
  Json baselines = Json::array();
  for (const auto& b : report.baselines) baselines.push_back({{"name", b.name}, {"value", rational_json(b.value)}});
  out["baselines"] = std::move(baselines);
  Json gaps = Json::object();
  for (const auto& gap : report.gaps()) gaps[gap.name] = rational_json(gap.value);
  out["gaps"] = std::move(gaps);
  // Headline gap: v_p(r) against the S-refined integral bound.
  if (report.vp_r && report.bound_with_S_integral) {
    out["gap"] = integer_json(Integer(*report.vp_r) - *report.bound_with_S_integral);
  } else {
    out["gap"] = nullptr;
  }
  return out;
}

Json analysis_json(const PairAnalysis& analysis) {
  Json out;
  out["f"] = polynomial_json(analysis.f);
  out["g"] = polynomial_json(analysis.g);
  out["f_text"] = render(analysis.f);
  out["g_text"] = render(analysis.g);
  out["resultant"] = integer_json(analysis.resultant);
  Json report = report_json(analysis.report);
  for (auto& [key, value] : report.items()) out[key] = value;
  return out;
}

Json invariant_results_json(const std::vector<InvariantResult>& results) {
  Json out = Json::array();
  for (const auto& r : results) {
    Json item{{"name", r.name}, {"passed", r.passed}};
    if (!r.passed) item["witness"] = r.witness;
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace resval

#include "resval/newton.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "resval/errors.hpp"

namespace resval {

namespace {

struct HullPoint {
  long x;
  long y;
};

// Cross product sign of (b - a) x (c - a); <= 0 means b is not strictly below ac.
bool not_below(const HullPoint& a, const HullPoint& b, const HullPoint& c) {
  const long cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cross <= 0;
}

}  // namespace

NewtonPolygon newton_polygon(const Polynomial& f, const Prime& p) {
  if (f.is_zero()) throw DomainError("Newton polygon of the zero polynomial");
  std::vector<HullPoint> hull;
  const auto coeffs = f.coefficients();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    const HullPoint next{static_cast<long>(i), valuation_of_nonzero(coeffs[i], p)};
    while (hull.size() >= 2 && not_below(hull[hull.size() - 2], hull.back(), next)) hull.pop_back();
    hull.push_back(next);
  }
  NewtonPolygon polygon;
  polygon.origin = hull.front().x;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    const long length = hull[i].x - hull[i - 1].x;
    polygon.segments.push_back({make_rational(hull[i].y - hull[i - 1].y, length), length});
  }
  return polygon;
}

long ValuationProfile::total_multiplicity() const {
  long total = infinite_multiplicity;
  for (const auto& e : finite) total += e.multiplicity;
  return total;
}

Rational ValuationProfile::max_finite() const { return finite.empty() ? Rational(0) : finite.front().valuation; }

ValuationProfile profile_from_polygon(const NewtonPolygon& polygon) {
  ValuationProfile profile;
  profile.infinite_multiplicity = polygon.origin;
  // Increasing slopes give decreasing root valuations.
  for (const auto& segment : polygon.segments) {
    profile.finite.push_back({-segment.slope, segment.length});
  }
  return profile;
}

ValuationProfile root_valuation_profile(const Polynomial& f, const Integer& m, const Prime& p) {
  if (!f.is_monic()) throw NotMonicError("root valuation profile requires a monic polynomial");
  return profile_from_polygon(newton_polygon(compose_shift(f, m), p));
}

long chi(const ValuationProfile& profile, const Rational& t) {
  long count = profile.infinite_multiplicity;
  for (const auto& e : profile.finite) {
    if (e.valuation >= t) count += e.multiplicity;
  }
  return count;
}

Rational chi_hat(const ValuationProfile& profile, long t) {
  if (t < 1) throw std::invalid_argument("chi_hat needs t >= 1, got " + std::to_string(t));
  Rational total = profile.infinite_multiplicity;
  for (const auto& e : profile.finite) {
    Rational overlap = e.valuation - (t - 1);
    if (overlap <= 0) continue;
    if (overlap > 1) overlap = 1;
    total += overlap * e.multiplicity;
  }
  return total;
}

long chi_hat_integral(const ValuationProfile& profile, long t) {
  const Rational value = chi_hat(profile, t);
  if (!is_integral(value)) {
    throw InvariantViolation("chi_hat at t=" + std::to_string(t) + " is not integral: " + to_string(value));
  }
  return value.get_num().get_si();
}

Valuation valuation_from_profile(const ValuationProfile& profile) {
  if (profile.infinite_multiplicity > 0) return Valuation::infinity();
  Rational total = 0;
  for (const auto& e : profile.finite) total += e.valuation * e.multiplicity;
  return Valuation(total);
}

}  // namespace resval

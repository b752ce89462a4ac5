#pragma once

// Newton polygons and root-valuation profiles.
//
// The valuations v_p(m - alpha_i) over the roots alpha_i of a monic integer
// polynomial f are read off the Newton polygon of f(x + m): a segment of
// slope s and horizontal length l contributes l roots of valuation -s. A
// factor x^e of f(x + m) (m is a root of multiplicity e) contributes e roots
// of infinite valuation.

#include <vector>

#include "resval/exact.hpp"
#include "resval/polynomial.hpp"
#include "resval/prime.hpp"
#include "resval/valuation.hpp"

namespace resval {

struct NewtonSegment {
  Rational slope;
  long length = 0;
  friend bool operator==(const NewtonSegment&, const NewtonSegment&) = default;
};

/// Lower convex hull of {(i, v_p(c_i)) : c_i != 0}. Slopes strictly increase.
/// `origin` is the lowest index with a nonzero coefficient, so
/// origin + sum of lengths == degree.
struct NewtonPolygon {
  long origin = 0;
  std::vector<NewtonSegment> segments;
};

/// Throws DomainError for the zero polynomial.
NewtonPolygon newton_polygon(const Polynomial& f, const Prime& p);

struct ProfileEntry {
  Rational valuation;
  long multiplicity = 0;
  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

/// Multiset of v_p(m - alpha_i). Finite entries are kept in decreasing
/// valuation order with distinct valuations.
struct ValuationProfile {
  std::vector<ProfileEntry> finite;
  long infinite_multiplicity = 0;

  long total_multiplicity() const;
  /// Largest finite valuation, or 0 when there is none.
  Rational max_finite() const;
  friend bool operator==(const ValuationProfile&, const ValuationProfile&) = default;
};

ValuationProfile profile_from_polygon(const NewtonPolygon& polygon);

/// Profile of f at the integer m. Requires f monic (throws NotMonicError).
ValuationProfile root_valuation_profile(const Polynomial& f, const Integer& m, const Prime& p);

/// Number of roots (with multiplicity) with v_p(m - alpha) >= t.
long chi(const ValuationProfile& profile, const Rational& t);

/// Integral of chi over [t-1, t]; t >= 1. Throws std::invalid_argument otherwise.
Rational chi_hat(const ValuationProfile& profile, long t);

/// chi_hat for profiles of integer polynomials, where it is integral.
/// Throws InvariantViolation if the value is not an integer.
long chi_hat_integral(const ValuationProfile& profile, long t);

/// Sum of multiplicity * valuation; infinite if any entry is.
Valuation valuation_from_profile(const ValuationProfile& profile);

}  // namespace resval

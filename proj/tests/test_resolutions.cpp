#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resval/bounds.hpp"
#include "resval/errors.hpp"
#include "resval/resolution.hpp"

using namespace resval;

namespace {

std::vector<Rational> terms(std::initializer_list<Rational> values) { return std::vector<Rational>(values); }

}  // namespace

TEST_CASE("depth_k") {
  const Prime two(2);
  CHECK(depth_k(1, two) == 0);
  CHECK(depth_k(3, two) == 1);
  CHECK(depth_k(4, two) == 1);
  CHECK(depth_k(7, two) == 2);
  CHECK(depth_k(4, Prime(3)) == 1);
  CHECK_THROWS_AS(depth_k(0, two), EmptyResolutionError);
}

TEST_CASE("real minimal resolutions") {
  const Prime two(2);
  CHECK(real_minimal(3, two).terms == terms({2, 1}));
  CHECK(real_minimal(1, Prime(5)).terms == terms({1}));
  CHECK(real_minimal(4, two).terms == terms({Rational(8, 3), Rational(4, 3)}));
  CHECK(real_minimal(0, two).terms.empty());
  CHECK(resolution_violation(real_minimal(4, two)).empty());
}

TEST_CASE("integral minimal resolutions") {
  const Prime two(2);
  CHECK(integral_minimal(4, two).terms == terms({3, 1}));
  CHECK(integral_minimal(3, two).terms == terms({2, 1}));
  CHECK(integral_minimal(1, Prime(7)).terms == terms({1}));
  CHECK(integral_minimal(7, two).terms == terms({4, 2, 1}));
  CHECK(integral_minimal(2, two).terms == terms({2}));
}

TEST_CASE("oracle") {
  const Prime two(2);
  CHECK(integral_minimal_oracle(4, two).terms == terms({3, 1}));
  CHECK(integral_minimal_oracle(7, two).terms == terms({4, 2, 1}));
  CHECK(integral_minimal_oracle(2, two).terms == terms({2}));
  CHECK_THROWS_AS(integral_minimal_oracle(41, two), LimitError);
  for (long p : {2L, 3L, 5L, 7L}) {
    for (long omega = 0; omega <= 40; ++omega) {
      CAPTURE(p);
      CAPTURE(omega);
      CHECK(integral_minimal(omega, Prime(p)).terms == integral_minimal_oracle(omega, Prime(p)).terms);
    }
  }
}

TEST_CASE("resolution constraints are enforced") {
  Resolution r{ResolutionKind::Integral, 2, 2, terms({1, 1})};
  CHECK_FALSE(resolution_violation(r).empty());
  r.terms = terms({2});
  CHECK(resolution_violation(r).empty());
  r.terms = terms({3});
  CHECK_FALSE(resolution_violation(r).empty());
  Resolution real{ResolutionKind::Real, 2, 1, terms({Rational(2, 3), Rational(1, 3)})};
  CHECK_FALSE(resolution_violation(real).empty());
  CHECK(parse_resolution_kind("real") == ResolutionKind::Real);
  CHECK_THROWS_AS(parse_resolution_kind("complex"), std::invalid_argument);
}

TEST_CASE("real resolutions scale and stay below integral ones") {
  for (long p : {2L, 3L, 5L}) {
    const Prime prime(p);
    for (long omega = 1; omega <= 60; ++omega) {
      const auto real = real_minimal(omega, prime);
      const auto integral = integral_minimal(omega, prime);
      CHECK(resolution_violation(real).empty());
      CHECK(resolution_violation(integral).empty());
      CHECK(real.terms[0] <= integral.terms[0]);
      CHECK(weighted_product(real, real) <= weighted_product(integral, integral));
    }
  }
}

TEST_CASE("bound_main") {
  const Prime two(2);
  CHECK(bound_main(two, 1, 1, ResolutionKind::Integral) == 2);
  CHECK(bound_main(two, 4, 4, ResolutionKind::Integral) == 22);
  CHECK(bound_main(two, 4, 4, ResolutionKind::Real) == Rational(64, 3));
  CHECK(bound_main(two, 0, 5, ResolutionKind::Integral) == 0);
}

TEST_CASE("bound_with_S") {
  const Prime two(2);
  CHECK(bound_with_S(two, 1, 1, 1, ResolutionKind::Integral) == 2);
  CHECK(bound_with_S(two, 1, 1, 5, ResolutionKind::Integral) == 6);
  CHECK(bound_with_S(two, 3, 3, 3, ResolutionKind::Integral) == 12);
  CHECK_THROWS_AS(bound_with_S(two, 3, 1, 2, ResolutionKind::Integral), DomainError);
}

TEST_CASE("bound_closed_form") {
  const Prime two(2);
  CHECK(bound_closed_form(two, 1, 1, 1) == 2);
  CHECK(bound_closed_form(two, 3, 3, 3) == 12);
  CHECK(bound_closed_form(two, 4, 4, 4) == Rational(64, 3));
  CHECK_THROWS_AS(bound_closed_form(two, 0, 0, 1), DomainError);
  CHECK_THROWS_AS(bound_closed_form(two, 3, 3, 2), DomainError);
}

TEST_CASE("baselines") {
  const auto b1 = baseline_bounds(Prime(2), 1, 1);
  CHECK(b1 == std::vector<NamedBound>{{"trivial", 1}, {"FZ-general", 1}, {"FZ-small-s", 2}});
  const auto b3 = baseline_bounds(Prime(2), 3, 3);
  CHECK(b3 == std::vector<NamedBound>{{"trivial", 3}, {"FZ-general", 9}});
  const auto b33 = baseline_bounds(Prime(3), 3, 3);
  REQUIRE(b33.size() == 3);
  CHECK(b33[2].value == 27);
  // omega = 3 at p = 3 has depth 0: (p-1) omega + 1 = 7 < 9. The closed form
  // is then 3 * 9 * 2 / (3 - 1) = 27, level with FZ-small-s.
  CHECK(depth_k(3, Prime(3)) == 0);
  CHECK(bound_closed_form(Prime(3), 3, 3, 3) == 27);
}

TEST_CASE("closed form equals the real main bound when S = max") {
  for (long p : {2L, 3L, 5L}) {
    for (long s1 = 1; s1 <= 30; ++s1) {
      for (long s2 = 1; s2 <= 30; s2 += 7) {
        const long top = std::max(s1, s2);
        CHECK(bound_closed_form(Prime(p), s1, s2, top) == bound_main(Prime(p), s1, s2, ResolutionKind::Real));
      }
    }
  }
}

TEST_CASE("bound report") {
  const auto report = make_bound_report(Prime(2), 1, 1, 1, 2, 2);
  CHECK(report.bound_main_integral == 2);
  REQUIRE(report.bound_with_S_integral);
  CHECK(*report.bound_with_S_integral == 2);
  CHECK(report.violations().empty());
  const auto missing_s = make_bound_report(Prime(2), 3, 1, 2, 4, std::nullopt);
  CHECK_FALSE(missing_s.bound_with_S_real);
  CHECK_FALSE(missing_s.bound_closed_form);
  const auto violated = make_bound_report(Prime(2), 3, 3, 3, 11, std::nullopt);
  CHECK_FALSE(violated.violations().empty());
}

TEST_CASE("integral main bound dominates the real one") {
  for (long p : {2L, 3L, 5L}) {
    for (long s1 = 0; s1 <= 40; ++s1) {
      for (long s2 = 0; s2 <= 40; ++s2) {
        CHECK(bound_main(Prime(p), s1, s2, ResolutionKind::Integral) >=
              bound_main(Prime(p), s1, s2, ResolutionKind::Real));
      }
    }
  }
}

TEST_CASE("repunit weights have geometric resolutions of both kinds") {
  for (long p : {2L, 3L, 5L}) {
    Integer omega = 0;
    Integer power = 1;
    for (long k = 0; k <= 4; ++k) {
      omega += power;
      power *= p;
      const auto real = real_minimal(omega.get_si(), Prime(p));
      const auto integral = integral_minimal(omega.get_si(), Prime(p));
      REQUIRE(real.support() == static_cast<std::size_t>(k + 1));
      CHECK(real.terms == integral.terms);
      for (long i = 0; i <= k; ++i) CHECK(real[i] == ipow(p, static_cast<unsigned long>(k - i)));
    }
  }
}

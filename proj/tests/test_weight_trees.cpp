#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "resval/errors.hpp"
#include "resval/joint.hpp"
#include "resval/weight_tree.hpp"

using namespace resval;

TEST_CASE("tree indexing") {
  const TruncatedTree tree(Prime(3), 2);
  CHECK(tree.vertex_count() == 13);
  CHECK(tree.level_size(2) == 9);
  for (std::size_t i = 0; i < tree.vertex_count(); ++i) {
    const Vertex v = tree.vertex_at(i);
    CHECK(tree.index(v) == i);
    CHECK(TruncatedTree::from_digits(tree.digits(v), 3) == v);
  }
  const auto kids = tree.children(Vertex{1, 2});
  REQUIRE(kids.size() == 3);
  CHECK(kids[1] == Vertex{2, 5});
  CHECK(tree.children(Vertex{2, 0}).empty());
}

TEST_CASE("weight validation") {
  const TruncatedTree tree(Prime(2), 2);
  WeightFunction w(tree, 3, ResolutionKind::Integral);
  w[Vertex{0, 0}] = 2;
  w[Vertex{1, 0}] = 1;
  w[Vertex{1, 1}] = 1;
  CHECK(validate_weight(w));
  CHECK(min_path_sum(w) == 3);
  WeightFunction heavier(tree, 4, ResolutionKind::Integral);
  heavier[Vertex{0, 0}] = 2;
  heavier[Vertex{1, 0}] = 1;
  heavier[Vertex{1, 1}] = 1;
  CHECK_FALSE(validate_weight(heavier));
  WeightFunction undominated(TruncatedTree(Prime(2), 1), 2, ResolutionKind::Integral);
  undominated[Vertex{0, 0}] = 1;
  undominated[Vertex{1, 0}] = 1;
  undominated[Vertex{1, 1}] = 1;
  CHECK_FALSE(validate_weight(undominated));
}

TEST_CASE("extremal weights and scalar products") {
  const Prime two(2);
  const TruncatedTree tree(two, 3);
  const auto a3 = extremal_weight(integral_minimal(3, two), tree);
  CHECK(a3[Vertex{0, 0}] == 2);
  CHECK(a3[Vertex{1, 1}] == 1);
  CHECK(a3[Vertex{2, 3}] == 0);
  CHECK(validate_weight(a3));
  CHECK(scalar_product(a3, a3) == 6);
  const auto zero = extremal_weight(integral_minimal(0, two), tree);
  CHECK(scalar_product(a3, zero) == 0);
  const auto a1 = extremal_weight(integral_minimal(1, two), tree);
  CHECK(scalar_product(a1, a1) == 1);
  CHECK(a1[Vertex{1, 0}] == 0);

  const auto r4 = extremal_weight(real_minimal(4, two), TruncatedTree(two, 1));
  CHECK(r4[Vertex{0, 0}] == Rational(8, 3));
  CHECK(r4[Vertex{1, 1}] == Rational(4, 3));
  CHECK(validate_weight(r4));

  CHECK_THROWS_AS(extremal_weight(integral_minimal(7, two), TruncatedTree(two, 1)), std::invalid_argument);
  CHECK_THROWS_AS(scalar_product(a3, r4), std::invalid_argument);
}

TEST_CASE("exhaustive minimum") {
  const Prime two(2);
  CHECK(min_scalar_exhaustive(two, 1, 1, 2) == 1);
  CHECK(min_scalar_exhaustive(two, 3, 3, 3) == 6);
  CHECK(min_scalar_exhaustive(two, 2, 2, 2) == 4);
  CHECK_THROWS_AS(min_scalar_exhaustive(two, 5, 1, 3), LimitError);
  CHECK_THROWS_AS(min_scalar_exhaustive(Prime(3), 1, 1, 2), LimitError);
}

TEST_CASE("tight weight counts") {
  const Prime two(2);
  // A vertex that leaves budget below it needs value >= p, so weight 1 sits
  // on the root alone.
  CHECK(count_tight_weights(two, 1, 0) == 1);
  CHECK(count_tight_weights(two, 1, 3) == 1);
  // 3 | 2/(1,1)
  CHECK(count_tight_weights(two, 3, 1) == 2);
  // 4 | 3/(1,1); 2/(2,2) breaks dominance
  CHECK(count_tight_weights(two, 4, 2) == 2);
  CHECK(count_tight_weights(two, 4, 3) == 2);
  CHECK_THROWS_AS(count_tight_weights(two, 7, 2), LimitError);
}

TEST_CASE("chi_hat weights of polynomials are weight functions") {
  const Prime two(2);
  const Polynomial g{0, 6, 11, 6, 1};  // x(x+1)(x+2)(x+3), s = 3
  for (long residue = 0; residue < 2; ++residue) {
    const auto w = chi_weight_from_poly(g, two, residue, 3);
    CHECK(w.omega() == 3);
    CHECK(weight_violation(w) == "");
    CHECK(min_path_sum(w) >= guaranteed_valuation(g, two));
  }
}

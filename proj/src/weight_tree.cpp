#include "resval/weight_tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

#include "resval/errors.hpp"
#include "resval/joint.hpp"
#include "resval/newton.hpp"

namespace resval {

TruncatedTree::TruncatedTree(const Prime& p, long depth) : p_(p.value()), depth_(depth) {
  if (depth < 0) throw std::invalid_argument("tree depth must be non-negative");
  std::size_t offset = 0;
  std::size_t level = 1;
  for (long l = 0; l <= depth; ++l) {
    offsets_.push_back(offset);
    offset += level;
    level *= static_cast<std::size_t>(p_);
  }
  offsets_.push_back(offset);
}

std::size_t TruncatedTree::level_size(long level) const {
  return offsets_.at(static_cast<std::size_t>(level) + 1) - offsets_.at(static_cast<std::size_t>(level));
}

std::size_t TruncatedTree::index(const Vertex& v) const {
  if (v.depth < 0 || v.depth > depth_ || v.position >= level_size(v.depth)) {
    throw std::out_of_range("vertex outside the tree");
  }
  return offsets_[static_cast<std::size_t>(v.depth)] + v.position;
}

Vertex TruncatedTree::vertex_at(std::size_t index) const {
  if (index >= vertex_count()) throw std::out_of_range("vertex index outside the tree");
  const auto level = std::upper_bound(offsets_.begin(), offsets_.end(), index) - offsets_.begin() - 1;
  return {static_cast<long>(level), index - offsets_[static_cast<std::size_t>(level)]};
}

std::vector<Vertex> TruncatedTree::children(const Vertex& v) const {
  std::vector<Vertex> out;
  if (v.depth >= depth_) return out;
  const std::size_t stride = level_size(v.depth);
  for (long i = 0; i < p_; ++i) out.push_back({v.depth + 1, v.position + static_cast<std::size_t>(i) * stride});
  return out;
}

std::vector<long> TruncatedTree::digits(const Vertex& v) const {
  std::vector<long> out;
  std::size_t rest = v.position;
  for (long l = 0; l < v.depth; ++l) {
    out.push_back(static_cast<long>(rest % static_cast<std::size_t>(p_)));
    rest /= static_cast<std::size_t>(p_);
  }
  return out;
}

Vertex TruncatedTree::from_digits(const std::vector<long>& digits, long p) {
  std::size_t position = 0;
  std::size_t scale = 1;
  for (long d : digits) {
    position += static_cast<std::size_t>(d) * scale;
    scale *= static_cast<std::size_t>(p);
  }
  return {static_cast<long>(digits.size()), position};
}

WeightFunction::WeightFunction(TruncatedTree tree, Rational omega, ResolutionKind kind)
    : tree_(std::move(tree)), omega_(std::move(omega)), kind_(kind), values_(tree_.vertex_count(), Rational(0)) {}

Rational min_path_sum(const WeightFunction& w) {
  const auto& tree = w.tree();
  std::vector<Rational> best(tree.vertex_count());
  for (std::size_t i = tree.vertex_count(); i-- > 0;) {
    const Vertex v = tree.vertex_at(i);
    best[i] = w[v];
    const auto kids = tree.children(v);
    if (kids.empty()) continue;
    Rational below = best[tree.index(kids.front())];
    for (const auto& u : kids) below = std::min(below, best[tree.index(u)]);
    best[i] += below;
  }
  return best[0];
}

std::string weight_violation(const WeightFunction& w) {
  const auto& tree = w.tree();
  for (std::size_t i = 0; i < tree.vertex_count(); ++i) {
    const Vertex v = tree.vertex_at(i);
    const Rational& value = w[v];
    const std::string where = "vertex (" + std::to_string(v.depth) + "," + std::to_string(v.position) + ")";
    if (value < 0) return where + " is negative";
    if (w.kind() == ResolutionKind::Integral && !is_integral(value)) return where + " is not an integer";
    if (w.kind() == ResolutionKind::Real && value != 0 && value < 1) return where + " lies in (0, 1)";
    Rational children_sum = 0;
    for (const auto& u : tree.children(v)) children_sum += w[u];
    if (value < children_sum) {
      return where + " value " + to_string(value) + " < children sum " + to_string(children_sum);
    }
  }
  const Rational path = min_path_sum(w);
  if (path < w.omega()) return "path sum " + to_string(path) + " < omega " + to_string(w.omega());
  return {};
}

bool validate_weight(const WeightFunction& w) { return weight_violation(w).empty(); }

Rational scalar_product(const WeightFunction& a, const WeightFunction& b) {
  if (!(a.tree() == b.tree())) throw std::invalid_argument("scalar product of weights on different trees");
  Rational total = 0;
  for (std::size_t i = 0; i < a.values().size(); ++i) total += a.values()[i] * b.values()[i];
  return total;
}

WeightFunction extremal_weight(const Resolution& gamma, const TruncatedTree& tree) {
  if (gamma.p != tree.p()) throw std::invalid_argument("resolution and tree use different primes");
  if (static_cast<long>(gamma.support()) > tree.depth() + 1) {
    throw std::invalid_argument("tree of depth " + std::to_string(tree.depth()) + " cannot hold " +
                                std::to_string(gamma.support()) + " resolution terms");
  }
  WeightFunction w(tree, gamma.omega, gamma.kind);
  for (std::size_t i = 0; i < tree.vertex_count(); ++i) {
    const Vertex v = tree.vertex_at(i);
    w[v] = gamma[static_cast<std::size_t>(v.depth)];
  }
  return w;
}

namespace {

using TightWeight = std::vector<int>;

// All integral weight functions with every root-to-leaf path summing to
// exactly omega, values in flat tree order. Any weight function dominates
// (pointwise) one of these: cap each value at what its path still needs.
std::vector<TightWeight> enumerate_tight(const TruncatedTree& tree, int omega) {
  const std::size_t n = tree.vertex_count();
  const int p = static_cast<int>(tree.p());
  std::vector<std::size_t> parent(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& u : tree.children(tree.vertex_at(i))) parent[tree.index(u)] = i;
  }
  std::vector<TightWeight> out;
  TightWeight value(n, 0);
  std::vector<int> path(n, 0);        // sum from the root through i
  std::vector<int> children_sum(n, 0);

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == n) {
      out.push_back(value);
      return;
    }
    const Vertex v = tree.vertex_at(i);
    const int above = i == 0 ? 0 : path[parent[i]];
    const int need = omega - above;
    const int allowance = i == 0 ? omega : value[parent[i]] - children_sum[parent[i]];
    auto place = [&](int x) {
      value[i] = x;
      path[i] = above + x;
      if (i > 0) children_sum[parent[i]] += x;
      assign(i + 1);
      if (i > 0) children_sum[parent[i]] -= x;
      value[i] = 0;
    };
    if (v.depth == tree.depth()) {
      if (need <= allowance) place(need);
      return;
    }
    for (int x = 0; x <= std::min(need, allowance); ++x) {
      // Below a short value every one of the p children must be positive.
      if (x < need && x < p) continue;
      place(x);
    }
  };
  assign(0);
  return out;
}

void require_exhaustive_scale(const Prime& p, long omega_a, long omega_b, long depth) {
  if (p.value() != 2 || omega_a < 0 || omega_b < 0 || omega_a > 4 || omega_b > 4 || depth < 0 || depth > 3) {
    throw LimitError("exhaustive minimization is limited to p = 2, omega <= 4, depth <= 3");
  }
}

}  // namespace

std::size_t count_tight_weights(const Prime& p, long omega, long depth) {
  require_exhaustive_scale(p, omega, omega, depth);
  return enumerate_tight(TruncatedTree(p, depth), static_cast<int>(omega)).size();
}

Rational min_scalar_exhaustive(const Prime& p, long omega_a, long omega_b, long depth) {
  require_exhaustive_scale(p, omega_a, omega_b, depth);
  const TruncatedTree tree(p, depth);
  const auto as = enumerate_tight(tree, static_cast<int>(omega_a));
  const auto bs = enumerate_tight(tree, static_cast<int>(omega_b));
  long best = std::numeric_limits<long>::max();
  for (const auto& a : as) {
    for (const auto& b : bs) {
      long dot = 0;
      for (std::size_t i = 0; i < a.size(); ++i) dot += static_cast<long>(a[i]) * b[i];
      best = std::min(best, dot);
    }
  }
  return Rational(best);
}

WeightFunction chi_weight_from_poly(const Polynomial& f, const Prime& p, long residue, long depth) {
  if (residue < 0 || residue >= p.value()) throw std::invalid_argument("residue must lie in [0, p)");
  const TruncatedTree tree(p, depth);
  const long omega = std::min(guaranteed_valuation(f, p), depth + 1);
  WeightFunction w(tree, Rational(omega), ResolutionKind::Integral);
  for (std::size_t i = 0; i < tree.vertex_count(); ++i) {
    const Vertex v = tree.vertex_at(i);
    const Integer m = Integer(residue) + Integer(p.value()) * static_cast<unsigned long>(v.position);
    w[v] = chi_hat(root_valuation_profile(f, m, p), v.depth + 1);
  }
  return w;
}

}  // namespace resval

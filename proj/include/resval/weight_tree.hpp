#pragma once

// Weight functions on a p-ary tree truncated at a finite depth.
//
// A vertex at depth l is addressed by its digit string (d_1, ..., d_l) with
// d_j in [0, p). Its position within the level is sum_j d_j p^(j-1), so on the
// tree attached to a residue k mod p the vertex stands for the residue
// k + p * position mod p^(l+1). A weight function on the truncation stands for
// its extension by zeros.

#include <cstddef>
#include <string>
#include <vector>

#include "resval/exact.hpp"
#include "resval/polynomial.hpp"
#include "resval/prime.hpp"
#include "resval/resolution.hpp"

namespace resval {

struct Vertex {
  long depth = 0;
  std::size_t position = 0;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

class TruncatedTree {
 public:
  TruncatedTree(const Prime& p, long depth);

  long p() const noexcept { return p_; }
  long depth() const noexcept { return depth_; }
  std::size_t vertex_count() const noexcept { return offsets_.back(); }
  std::size_t level_size(long level) const;

  /// Flat index; levels are stored consecutively, root first.
  std::size_t index(const Vertex& v) const;
  Vertex vertex_at(std::size_t index) const;
  std::vector<Vertex> children(const Vertex& v) const;
  std::vector<long> digits(const Vertex& v) const;
  static Vertex from_digits(const std::vector<long>& digits, long p);

  friend bool operator==(const TruncatedTree& a, const TruncatedTree& b) {
    return a.p_ == b.p_ && a.depth_ == b.depth_;
  }

 private:
  long p_;
  long depth_;
  std::vector<std::size_t> offsets_;  // offsets_[l] = first index of level l
};

class WeightFunction {
 public:
  WeightFunction(TruncatedTree tree, Rational omega, ResolutionKind kind);

  const TruncatedTree& tree() const noexcept { return tree_; }
  const Rational& omega() const noexcept { return omega_; }
  ResolutionKind kind() const noexcept { return kind_; }

  const Rational& operator[](const Vertex& v) const { return values_[tree_.index(v)]; }
  Rational& operator[](const Vertex& v) { return values_[tree_.index(v)]; }
  const std::vector<Rational>& values() const noexcept { return values_; }

 private:
  TruncatedTree tree_;
  Rational omega_;
  ResolutionKind kind_;
  std::vector<Rational> values_;
};

/// Empty when `w` is a weight function of weight omega(); otherwise the first
/// violated condition (path sum, parent dominance, value range).
std::string weight_violation(const WeightFunction& w);
bool validate_weight(const WeightFunction& w);

/// Smallest root-to-leaf path sum.
Rational min_path_sum(const WeightFunction& w);

/// Throws std::invalid_argument on differing tree shapes.
Rational scalar_product(const WeightFunction& a, const WeightFunction& b);

/// value(v) = gamma_(depth of v). Throws std::invalid_argument when the tree
/// has fewer levels than the resolution has terms.
WeightFunction extremal_weight(const Resolution& gamma, const TruncatedTree& tree);

/// Exact minimum of <a, b> over integral weight functions of weights
/// omega_a, omega_b on the binary tree of the given depth. Limited to
/// p = 2, omega <= 4, depth <= 3; LimitError otherwise.
Rational min_scalar_exhaustive(const Prime& p, long omega_a, long omega_b, long depth);

/// Number of integral weight functions of weight omega whose root-to-leaf
/// path sums all equal omega. Minimizing over this family loses nothing.
/// Same limits as min_scalar_exhaustive.
std::size_t count_tight_weights(const Prime& p, long omega, long depth);

/// chi_hat weights of f on the tree of residues congruent to `residue` mod p:
/// vertex (l, position) carries chi_hat_(l+1)(residue + p * position).
/// omega is min(guaranteed_valuation(f, p), depth + 1), the weight the
/// truncation is guaranteed to carry.
WeightFunction chi_weight_from_poly(const Polynomial& f, const Prime& p, long residue, long depth);

}  // namespace resval

#pragma once

#include "affcell/cells.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

namespace affcell {

struct AValue {
  int value = 0;
  bool exact = false;
  /// (P, max degree over pairs with l(x) + l(y) <= P); -1 when no pair fits.
  std::vector<std::pair<int, int>> estimates;
};

/// Element of J (x) A: t_w -> coefficient.
using JElement = std::map<Index, LaurentPoly>;

/// Sparse t_x t_y = sum_z c_z t_z.
using JProduct = std::vector<std::pair<Index, Integer>>;

struct JfData {
  int cell = 0;
  std::vector<Index> basis; // W^f inside the cell, ball indices
  Index duflo = kNone;    // d^f
};

/// The asymptotic ring on the covered ball of a cell partition.
///
/// All products C_x C_y with x, y in one cell and l(x) + l(y) <= a_bound are
/// computed up front and a(c) is read off from them. Longer products, up to
/// the partition bound, are computed on demand.
class AsymptoticRing {
public:
  explicit AsymptoticRing(const CellPartition& partition, int jobs = 1, std::optional<int> a_bound = std::nullopt);

  const CellPartition& partition() const { return *partition_; }
  const KLTable& table() const { return partition_->table(); }
  int bound() const { return partition_->bound(); }
  int a_bound() const { return a_bound_; }

  const AValue& a_value(int cell) const { return a_.at(static_cast<std::size_t>(cell)); }
  /// Throws InexactAValue unless the cell's a-value is exact.
  int exact_a(int cell) const;

  /// h_{x,y,z} for x, y, z in one cell.
  LaurentPoly h(Index x, Index y, Index z) const;
  /// Computes and stores the in-cell parts of C_x C_y for all listed pairs
  /// that are not stored yet, sharing work between pairs with the same y.
  void prefetch(const std::vector<Index>& xs, const std::vector<Index>& ys) const;

  /// t_x t_y. Zero across different cells. BoundExceeded if the pair was
  /// not computed (l(x) + l(y) > bound); InexactAValue if a is inexact.
  JProduct t_product(Index x, Index y) const;
  bool has_product(Index x, Index y) const;
  /// gamma_{x,y,z} = coefficient of t_{z^-1} in t_x t_y.
  Integer gamma(Index x, Index y, Index z) const;

  JElement multiply(const JElement& a, const JElement& b) const;
  /// Duflo involutions of the cell inside the ball (requires exact a).
  std::vector<Index> duflo(int cell) const;
  /// sum_d t_d over the cell.
  JElement unit(int cell) const;

  /// J^f of the cell; checks closure and throws ClosureViolation.
  JfData jf(int cell) const;

private:
  const CellPartition* partition_;
  int a_bound_;
  std::vector<AValue> a_;
  using Terms = std::vector<std::pair<Index, LaurentPoly>>;
  // (x, y) -> h_{x,y,z} restricted to z in the common cell.
  mutable std::mutex h_mutex_;
  mutable std::map<std::pair<Index, Index>, Terms> h_;

  const Terms& terms(Index x, Index y) const;
  Terms in_cell_terms(const CVec& prod, int cell) const;
};

} // namespace affcell

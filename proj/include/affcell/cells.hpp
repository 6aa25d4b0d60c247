#pragma once

#include "affcell/kl_table.hpp"

#include <utility>
#include <vector>

namespace affcell {

/// Extra radius the KL table must have beyond the reported bound: cells are
/// read off the preorder on a ball of radius bound + kCellMargin and
/// re-checked on radius bound + kCellMargin + 2.
inline constexpr int kCellMargin = 4;
inline constexpr int kCellCheckMargin = kCellMargin + 2;

int required_table_bound(int bound);

struct TwoSidedCell {
  int index = 0;
  std::vector<Index> members; // ball indices, length <= bound, ascending
  bool complete = false;
  bool is_lowest = false;
  std::vector<int> left_cells;  // indices into CellPartition::left_cells()
  std::vector<int> right_cells;
};

/// Left, right and two-sided cells of the elements of length <= bound.
class CellPartition {
public:
  CellPartition(const KLTable& table, int bound);

  const KLTable& table() const { return *table_; }
  int bound() const { return bound_; }
  /// Number of ball elements covered (those with length <= bound).
  Index covered() const { return covered_; }

  const std::vector<TwoSidedCell>& cells() const { return cells_; }
  const TwoSidedCell& cell(int i) const { return cells_.at(static_cast<std::size_t>(i)); }
  const std::vector<std::vector<Index>>& left_cells() const { return left_cells_; }
  const std::vector<std::vector<Index>>& right_cells() const { return right_cells_; }

  /// Two-sided cell index of x, or -1 when x has length > bound.
  int cell_of(Index x) const;
  int left_cell_of(Index x) const;
  int right_cell_of(Index x) const;
  int cell_of_identity() const { return cell_of(0); }
  int lowest_cell() const;

  /// Strict order: strictly_below(i, j) iff c_i <_LR c_j (c_j closer to {e}).
  bool strictly_below(int i, int j) const;
  bool leq(int i, int j) const { return i == j || strictly_below(i, j); }
  /// All pairs [i, j] with c_i <_LR c_j.
  std::vector<std::pair<int, int>> order_pairs() const;

  bool all_complete() const;

private:
  const KLTable* table_;
  int bound_;
  Index covered_;
  std::vector<TwoSidedCell> cells_;
  std::vector<int> cell_of_, left_of_, right_of_;
  std::vector<std::vector<Index>> left_cells_, right_cells_;
  std::vector<std::vector<char>> below_; // below_[i][j]: c_i < c_j
};

CellPartition cell_partition(const KLTable& table, int bound);

} // namespace affcell

#pragma once

#include "affcell/affine_weyl.hpp"
#include "affcell/cells.hpp"
#include "affcell/hecke.hpp"
#include "affcell/jring.hpp"
#include "affcell/kl_cache.hpp"
#include "affcell/kl_table.hpp"

#include <memory>
#include <optional>

namespace affcell {

/// Hard ceiling on user-supplied bounds.
inline constexpr int kBoundCeiling = 24;

/// Bound at which all cells of the type are complete (checked, not assumed).
int default_bound(TypeLabel type);

/// Everything computed for one type at one cell bound: the KL table of
/// radius bound + kCellCheckMargin, the cell partition and the J-ring.
class Workspace {
public:
  Workspace(TypeLabel type, int bound, KLCache* cache = nullptr, int jobs = 1,
            std::optional<int> a_bound = std::nullopt);
  Workspace(const Workspace&) = delete;
  Workspace& operator=(const Workspace&) = delete;

  TypeLabel type() const { return group_->label(); }
  int bound() const { return partition_->bound(); }
  const AffineWeylGroup& group() const { return *group_; }
  const CartanDatum& datum() const { return group_->datum(); }
  const HeckeAlgebra& hecke() const { return *hecke_; }
  const KLTable& table() const { return *table_; }
  const CellPartition& partition() const { return *partition_; }
  const AsymptoticRing& ring() const { return *ring_; }

private:
  std::unique_ptr<AffineWeylGroup> group_;
  std::unique_ptr<HeckeAlgebra> hecke_;
  std::unique_ptr<KLTable> table_;
  std::unique_ptr<CellPartition> partition_;
  std::unique_ptr<AsymptoticRing> ring_;
};

} // namespace affcell

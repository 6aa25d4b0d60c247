#include "affcell/workspace.hpp"

namespace affcell {

int default_bound(TypeLabel type) {
  switch (type) {
  case TypeLabel::A1: return 8;
  case TypeLabel::A2: return 12;
  case TypeLabel::C2: return 16;
  case TypeLabel::G2: return 20;
  }
  return 12;
}

Workspace::Workspace(TypeLabel type, int bound, KLCache* cache, int jobs, std::optional<int> a_bound)
    : group_(std::make_unique<AffineWeylGroup>(type)),
      hecke_(std::make_unique<HeckeAlgebra>(*group_)),
      table_(std::make_unique<KLTable>(*group_, required_table_bound(bound), cache, jobs)),
      partition_(std::make_unique<CellPartition>(*table_, bound)),
      ring_(std::make_unique<AsymptoticRing>(*partition_, jobs, a_bound)) {}

} // namespace affcell

#pragma once

#include "affcell/jring.hpp"
#include "affcell/root_data.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

/// Unipotent class of the adjoint dual group. `dynkin_marks[i]` is the
/// value of h on the simple root alpha_i^vee of the dual group, i.e. on the
/// i-th simple coroot of G.
struct UnipotentClass {
  std::string label;
  std::vector<int> dynkin_marks;
  int dim_orbit = 0;
  int dim_centralizer = 0;
  int springer_dim = 0;
  std::string reductive_centralizer_label;
};

/// Class list with every dimension recomputed from the marks. Throws Error
/// if a stored dimension disagrees with the recomputation.
std::vector<UnipotentClass> unipotent_classes(const CartanDatum& datum);

/// <mu, h> for a weight mu of the dual group.
int grade_of(const CartanDatum& datum, const Coweight& mu, const UnipotentClass& cls);

/// i -> dimension of the grade-i part of V_lambda under h.
std::map<int, long long> jm_graded_dims(const CartanDatum& datum, const Coweight& lambda,
                                        const UnipotentClass& cls);

/// sum_i dim(grade i) v^i.
LaurentPoly trace_sv(const CartanDatum& datum, const Coweight& lambda, const UnipotentClass& cls);

struct CellSummary {
  int index = 0;
  int a_value = 0;
  bool a_exact = false;
  bool complete = false;
};

std::vector<CellSummary> summarize_cells(const AsymptoticRing& ring);

/// (cell index, class label) pairs matched by a(c) = springer_dim. Throws
/// NoBijection with diagnostics unless the matching is a bijection.
std::vector<std::pair<int, std::string>> match_cells_to_classes(const std::vector<CellSummary>& cells,
                                                                const std::vector<UnipotentClass>& classes);

} // namespace affcell

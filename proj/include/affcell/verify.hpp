#pragma once

#include "affcell/bernstein.hpp"
#include "affcell/dual.hpp"
#include "affcell/workspace.hpp"

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace affcell {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

using CheckList = std::vector<CheckResult>;

bool all_passed(const CheckList& checks);

/// Runs body and turns affcell errors into a failed check.
CheckResult run_check(const std::string& name, const std::function<std::string(bool&)>& body);

/// Independent oracle: p_{x,w} for every x in the Bruhat interval below w,
/// obtained by solving bar-invariance against the T-basis bar involution.
std::map<Index, LaurentPoly> kl_row_by_bar_solve(const HeckeAlgebra& hecke, const KLTable& table, Index w);

/// Bar-invariance, positivity, degree bounds, Bruhat support and basis
/// round-trip for all w with length <= bound, plus the oracle comparison for
/// length <= oracle_length.
CheckList check_kl_layer(const HeckeAlgebra& hecke, const KLTable& table, int bound, int oracle_length);

CheckList check_cell_structure(const Workspace& ws);

/// gamma symmetry and nonnegativity, associativity, Duflo idempotents and
/// the unit of each J_c on the computed range.
CheckList check_jring(const Workspace& ws);

/// Closure of J^f in every cell and the unit property of t_{d^f}.
CheckList check_jf(const Workspace& ws);

/// Dominant weight attached to a J^f basis element of the lowest cell.
Coweight jf_label(const Workspace& ws, const JfData& jf, Index b);

/// Compares products of lowest-cell J^f basis elements with tensor product
/// multiplicities of the dual group, for the listed pairs of labels.
CheckList check_lowest_cell_products(const Workspace& ws,
                                     const std::vector<std::pair<Coweight, Coweight>>& pairs);

/// The first `count` lowest-cell J^f basis elements' labels, by length.
std::vector<Coweight> first_lowest_labels(const Workspace& ws, std::size_t count);

/// theta identities, centrality and multiplicativity of B([V]).
CheckList check_bernstein(const Workspace& ws, const std::vector<Coweight>& lambdas);

/// phi_c for every cell: unit, homomorphism on all pairs, stability between
/// ws and ws_larger (bound + 2).
CheckList check_phi(const Workspace& ws, const Workspace& ws_larger, const std::vector<Coweight>& lambdas);

/// t_e coefficient against trace_sv at the regular class, and the
/// v-independence of the lowest-cell J^f part.
CheckList check_phi_traces(const Workspace& ws, const std::vector<Coweight>& lambdas);

CheckList check_dual(const CartanDatum& datum, const std::vector<Coweight>& lambdas);
CheckList check_bijection(const Workspace& ws);

/// Smallest cell bound >= start (and <= kBoundCeiling) at which phi_c of
/// all products of the given central elements fits in the ball.
int phi_bound(TypeLabel type, const std::vector<Coweight>& lambdas, int start, KLCache* cache = nullptr,
              int jobs = 1);

/// Central element for each lambda and each product of two of them.
struct PhiInputs {
  std::vector<HeckeElement> singles;
  std::map<std::pair<std::size_t, std::size_t>, HeckeElement> pairs;
};
PhiInputs phi_inputs(const HeckeAlgebra& hecke, const std::vector<Coweight>& lambdas);

/// Named suites used by `affcell verify`: kl, cells, jring, phi, dual, paper-suite.
CheckList run_suite(const std::string& suite, TypeLabel type, std::optional<int> bound, KLCache* cache, int jobs);
std::vector<std::string> suite_names();

} // namespace affcell

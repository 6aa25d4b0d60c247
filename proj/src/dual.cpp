#include "affcell/dual.hpp"

#include "affcell/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>

namespace affcell {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct Entry {
  const char* label;
  std::vector<int> marks;
  int dim_orbit;
  const char* reductive;
};

std::vector<Entry> table(TypeLabel t) {
  switch (t) {
  case TypeLabel::A1:
    return {{"regular", {2}, 2, "1"}, {"trivial", {0}, 0, "PGL2"}};
  case TypeLabel::A2:
    return {{"regular", {2, 2}, 6, "1"}, {"minimal", {1, 1}, 4, "GL1"}, {"trivial", {0, 0}, 0, "PGL3"}};
  case TypeLabel::C2:
    // Dual group SO5: alpha_1^vee long, alpha_2^vee short.
    return {{"[5]", {2, 2}, 8, "1"},
            {"[3,1,1]", {2, 0}, 6, "O2"},
            {"[2,2,1]", {0, 1}, 4, "SL2"},
            {"[1,1,1,1,1]", {0, 0}, 0, "SO5"}};
  case TypeLabel::G2:
    // Dual group G2: alpha_1^vee long, alpha_2^vee short.
    return {{"G2", {2, 2}, 12, "1"},
            {"G2(a1)", {2, 0}, 10, "S3"},
            {"A1~", {0, 1}, 8, "SL2"},
            {"A1", {1, 0}, 6, "SL2"},
            {"1", {0, 0}, 0, "G2"}};
  }
  return {};
}

/// h in simple-root coordinates of G: solves sum_j A_ij h_j = m_i.
std::vector<Rational> solve_h(const CartanDatum& datum, const std::vector<int>& marks) {
  const std::size_t r = datum.rank();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) m[i][j] = datum.cartan()[i][j];
    m[i][r] = marks[i];
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t p = c;
    while (m[p][c] == 0) ++p;
    std::swap(m[p], m[c]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (std::size_t j = c; j <= r; ++j) m[i][j] -= f * m[c][j];
    }
  }
  std::vector<Rational> h(r);
  for (std::size_t i = 0; i < r; ++i) h[i] = m[i][r] / m[i][i];
  return h;
}

} // namespace

std::vector<UnipotentClass> unipotent_classes(const CartanDatum& datum) {
  const int rank = static_cast<int>(datum.rank());
  const int dim = static_cast<int>(datum.dual_group_dimension());
  std::vector<UnipotentClass> out;
  for (const auto& e : table(datum.label())) {
    int g0 = rank, g1 = 0;
    for (const auto& beta : datum.positive_coroots()) {
      int ev = 0;
      for (std::size_t i = 0; i < datum.rank(); ++i) ev += beta[i] * e.marks[i];
      if (ev == 0) g0 += 2;
      if (ev == 1) g1 += 1;
    }
    UnipotentClass c;
    c.label = e.label;
    c.dynkin_marks = e.marks;
    c.dim_centralizer = g0 + g1;
    c.dim_orbit = dim - c.dim_centralizer;
    if ((c.dim_centralizer - rank) % 2 != 0 || c.dim_centralizer < rank)
      throw Error("class " + c.label + " has centralizer dimension of the wrong parity");
    c.springer_dim = (c.dim_centralizer - rank) / 2;
    c.reductive_centralizer_label = e.reductive;
    if (c.dim_orbit != e.dim_orbit)
      throw Error("class " + c.label + ": orbit dimension " + std::to_string(c.dim_orbit) +
                  " from the marks disagrees with the table value " + std::to_string(e.dim_orbit));
    out.push_back(std::move(c));
  }
  return out;
}

int grade_of(const CartanDatum& datum, const Coweight& mu, const UnipotentClass& cls) {
  const auto h = solve_h(datum, cls.dynkin_marks);
  Rational g = 0;
  for (std::size_t j = 0; j < datum.rank(); ++j) g += h[j] * mu[j];
  if (denominator(g) != 1) throw Error("weight " + mu.to_string() + " has a non-integral grade");
  return static_cast<int>(numerator(g));
}

std::map<int, long long> jm_graded_dims(const CartanDatum& datum, const Coweight& lambda,
                                        const UnipotentClass& cls) {
  std::map<int, long long> out;
  for (const auto& [mu, m] : weight_multiplicities(datum, lambda)) out[grade_of(datum, mu, cls)] += m;
  return out;
}

LaurentPoly trace_sv(const CartanDatum& datum, const Coweight& lambda, const UnipotentClass& cls) {
  LaurentPoly p;
  for (const auto& [i, d] : jm_graded_dims(datum, lambda, cls)) p += LaurentPoly::monomial(i, d);
  return p;
}

std::vector<CellSummary> summarize_cells(const AsymptoticRing& ring) {
  std::vector<CellSummary> out;
  for (const auto& c : ring.partition().cells()) {
    const AValue& a = ring.a_value(c.index);
    out.push_back({c.index, a.value, a.exact, c.complete});
  }
  return out;
}

std::vector<std::pair<int, std::string>> match_cells_to_classes(const std::vector<CellSummary>& cells,
                                                                const std::vector<UnipotentClass>& classes) {
  std::ostringstream diag;
  diag << "cells (index:a) [";
  for (const auto& c : cells)
    diag << ' ' << c.index << ':' << c.a_value << (c.a_exact ? "" : "?") << (c.complete ? "" : "(incomplete)");
  diag << " ] classes (label:springer) [";
  for (const auto& u : classes) diag << ' ' << u.label << ':' << u.springer_dim;
  diag << " ]";
  if (cells.size() != classes.size())
    throw NoBijection(std::to_string(cells.size()) + " cells against " + std::to_string(classes.size()) +
                      " classes; " + diag.str());
  std::vector<std::pair<int, std::string>> out;
  std::vector<int> used(classes.size(), 0);
  for (const auto& c : cells) {
    if (!c.complete || !c.a_exact)
      throw NoBijection("cell " + std::to_string(c.index) + " is not certified; " + diag.str());
    std::vector<std::size_t> hits;
    for (std::size_t k = 0; k < classes.size(); ++k)
      if (classes[k].springer_dim == c.a_value) hits.push_back(k);
    if (hits.size() != 1)
      throw NoBijection("cell " + std::to_string(c.index) + " with a = " + std::to_string(c.a_value) + " matches " +
                        std::to_string(hits.size()) + " classes; " + diag.str());
    if (used[hits[0]]++)
      throw NoBijection("class " + classes[hits[0]].label + " matched twice; " + diag.str());
    out.emplace_back(c.index, classes[hits[0]].label);
  }
  return out;
}

} // namespace affcell

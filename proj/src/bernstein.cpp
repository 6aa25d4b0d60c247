#include "affcell/bernstein.hpp"

#include "affcell/errors.hpp"

#include <algorithm>

namespace affcell {

std::pair<Coweight, Coweight> dominant_split(const CartanDatum& datum, const Coweight& lambda) {
  if (!datum.in_coroot_lattice(lambda))
    throw Error("coweight " + lambda.to_string() + " is not in the coroot lattice");
  if (datum.is_dominant(lambda)) return {lambda, datum.zero()};
  // Search dominant elements of Q^vee with labels just large enough.
  const std::size_t r = datum.rank();
  Coweight lo(r);
  for (std::size_t i = 0; i < r; ++i) lo[i] = std::max(0, -lambda[i]);
  const int slack = 6; // covers the index of Q^vee in the coweight lattice
  std::optional<Coweight> best;
  Coweight cur = lo;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == r) {
      if (!datum.in_coroot_lattice(cur)) return;
      if (!best || datum.translation_length(cur) < datum.translation_length(*best) ||
          (datum.translation_length(cur) == datum.translation_length(*best) && cur < *best))
        best = cur;
      return;
    }
    for (int k = 0; k <= slack; ++k) {
      cur[i] = lo[i] + k;
      walk(i + 1);
    }
  };
  walk(0);
  return {lambda + *best, *best};
}

HeckeElement theta(const HeckeAlgebra& hecke, const Coweight& lambda, std::optional<int> bound) {
  const AffineWeylGroup& g = hecke.group();
  auto [a, b] = dominant_split(g.datum(), lambda);
  if (bound) {
    const int need = std::max(g.datum().translation_length(a), g.datum().translation_length(b));
    if (need > *bound)
      throw BoundExceeded("theta_" + lambda.to_string() + " needs translations of length " + std::to_string(need),
                          need);
  }
  HeckeElement ta = hecke.standard(g.translation(a));
  if (b.is_zero()) return ta;
  return hecke.mul_standard(ta, hecke.inverse_standard(g.translation(b)));
}

CentralElement bernstein_central(const HeckeAlgebra& hecke, const Coweight& lambda, std::optional<int> bound) {
  const CartanDatum& datum = hecke.group().datum();
  CentralElement z{lambda, HeckeElement(Basis::Standard)};
  for (const auto& [mu, m] : weight_multiplicities(datum, lambda))
    z.expansion.add_scaled(theta(hecke, mu, bound), LaurentPoly(m));
  return z;
}

bool is_central(const HeckeAlgebra& hecke, const HeckeElement& z) {
  for (int s = 0; s < hecke.group().generator_count(); ++s)
    if (hecke.left_mul_generator(s, z) != hecke.right_mul_generator(z, s)) return false;
  return true;
}

JElement phi_c(const HeckeElement& z, const AsymptoticRing& ring, int cell) {
  const KLTable& t = ring.table();
  const CellPartition& part = ring.partition();
  HeckeElement zc = t.to_canonical(z);
  std::vector<std::pair<Index, LaurentPoly>> coeffs;
  int top = 0;
  for (const auto& [w, c] : zc.terms()) {
    const Index wi = t.index_of(w);
    coeffs.emplace_back(wi, c);
    top = std::max(top, t.length(wi));
  }
  std::sort(coeffs.begin(), coeffs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

  CVec total(static_cast<std::size_t>(t.size()));
  for (Index d : ring.duflo(cell)) {
    std::size_t next = 0;
    t.for_each_left_product(d, top, [&](Index x, const CVec& prod) {
      if (next >= coeffs.size() || coeffs[next].first != x) return;
      const LaurentPoly& c = coeffs[next++].second;
      for (std::size_t k = 0; k < prod.size(); ++k)
        if (!prod[k].is_zero()) total[k].add_product(c, prod[k]);
    });
  }

  JElement out;
  int needed = 0;
  for (Index w = 0; w < t.size(); ++w)
    if (!total[static_cast<std::size_t>(w)].is_zero()) needed = std::max(needed, t.length(w));
  if (needed > part.bound())
    throw BoundExceeded("phi_c support reaches length " + std::to_string(needed) + " beyond the cell bound " +
                            std::to_string(part.bound()),
                        needed);
  for (Index w = 0; w < t.size(); ++w) {
    auto& c = total[static_cast<std::size_t>(w)];
    if (c.is_zero()) continue;
    const int k = part.cell_of(w);
    if (k == cell) {
      out.emplace(w, std::move(c));
    } else if (!part.strictly_below(k, cell)) {
      throw IdealViolation("z * C_d has the term C_" + t.word(w) + " in cell " + std::to_string(k) +
                           ", which is not below cell " + std::to_string(cell));
    }
  }
  return out;
}

} // namespace affcell

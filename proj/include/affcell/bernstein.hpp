#pragma once

#include "affcell/hecke.hpp"
#include "affcell/jring.hpp"

#include <optional>
#include <utility>

namespace affcell {

struct CentralElement {
  Coweight source;
  HeckeElement expansion; // standard basis
};

/// lambda = first - second with both parts dominant and in Q^vee, choosing
/// the second part with the shortest translation.
std::pair<Coweight, Coweight> dominant_split(const CartanDatum& datum, const Coweight& lambda);

/// theta_lambda = T_{t_a} T_{t_b}^{-1} for lambda = a - b, a and b dominant.
/// With `bound`, throws BoundExceeded when t_a or t_b is longer than it.
HeckeElement theta(const HeckeAlgebra& hecke, const Coweight& lambda, std::optional<int> bound = std::nullopt);

/// B([V_lambda]) = sum over weights mu of m(mu) theta_mu.
CentralElement bernstein_central(const HeckeAlgebra& hecke, const Coweight& lambda,
                                 std::optional<int> bound = std::nullopt);

/// Commutes with every T_s.
bool is_central(const HeckeAlgebra& hecke, const HeckeElement& z);

/// phi_c(z) = z * (sum_d C_d) with lower-cell terms dropped and C_w -> t_w.
/// Throws IdealViolation if a term lies in a cell not below c.
JElement phi_c(const HeckeElement& z, const AsymptoticRing& ring, int cell);

} // namespace affcell

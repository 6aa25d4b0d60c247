#pragma once

#include "affcell/affine_weyl.hpp"
#include "affcell/laurent.hpp"

#include <map>
#include <mutex>
#include <unordered_map>

namespace affcell {

enum class Basis { Standard, Canonical };

/// Finite A-linear combination of T_x (standard) or C_x (canonical).
class HeckeElement {
public:
  using Terms = std::map<AffineElement, LaurentPoly>;

  explicit HeckeElement(Basis basis = Basis::Standard) : basis_(basis) {}
  static HeckeElement basis_element(Basis basis, const AffineElement& x, LaurentPoly c = 1);

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coefficient(const AffineElement& x) const;

  void add(const AffineElement& x, const LaurentPoly& c);
  /// this += c * other.
  void add_scaled(const HeckeElement& other, const LaurentPoly& c);
  HeckeElement scaled(const LaurentPoly& c) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  bool operator==(const HeckeElement&) const = default;

private:
  Basis basis_;
  Terms terms_;
  void require_same_basis(const HeckeElement& o) const;
};

/// Affine Hecke algebra over Z[v, v^-1] with T_s^2 = 1 + (v^-1 - v) T_s.
/// Arithmetic here is in the standard basis and needs no length ball.
class HeckeAlgebra {
public:
  explicit HeckeAlgebra(const AffineWeylGroup& group) : group_(&group) {}

  const AffineWeylGroup& group() const { return *group_; }

  HeckeElement standard(const AffineElement& x) const;
  HeckeElement one() const { return standard(group_->identity()); }

  HeckeElement left_mul_generator(int s, const HeckeElement& h) const;
  HeckeElement right_mul_generator(const HeckeElement& h, int s) const;
  HeckeElement mul_standard(const HeckeElement& a, const HeckeElement& b) const;
  /// T_x^{-1} in the standard basis.
  HeckeElement inverse_standard(const AffineElement& x) const;
  /// Bar involution: v -> v^-1, T_x -> T_{x^-1}^{-1}. Memoizes bar(T_x).
  HeckeElement bar(const HeckeElement& h) const;
  const HeckeElement& bar_of_standard(const AffineElement& x) const;

private:
  const AffineWeylGroup* group_;
  mutable std::mutex bar_mutex_;
  mutable std::unordered_map<AffineElement, HeckeElement> bar_cache_;
  void require_standard(const HeckeElement& h) const;
};

HeckeElement mul_standard(const HeckeAlgebra& hecke, const HeckeElement& a, const HeckeElement& b);

} // namespace affcell

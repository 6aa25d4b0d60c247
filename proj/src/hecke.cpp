#include "affcell/hecke.hpp"

#include "affcell/errors.hpp"

namespace affcell {

namespace {
const LaurentPoly& quadratic_coefficient() {
  static const LaurentPoly q = LaurentPoly::v_inv() - LaurentPoly::v(); // v^-1 - v
  return q;
}
const LaurentPoly& inverse_shift() {
  static const LaurentPoly q = LaurentPoly::v() - LaurentPoly::v_inv(); // v - v^-1
  return q;
}
} // namespace

// ---------------------------------------------------------------- HeckeElement

HeckeElement HeckeElement::basis_element(Basis basis, const AffineElement& x, LaurentPoly c) {
  HeckeElement h(basis);
  h.add(x, c);
  return h;
}

LaurentPoly HeckeElement::coefficient(const AffineElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add(const AffineElement& x, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void HeckeElement::add_scaled(const HeckeElement& other, const LaurentPoly& c) {
  require_same_basis(other);
  for (const auto& [x, p] : other.terms_) add(x, c * p);
}

HeckeElement HeckeElement::scaled(const LaurentPoly& c) const {
  HeckeElement h(basis_);
  h.add_scaled(*this, c);
  return h;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_same_basis(o);
  for (const auto& [x, p] : o.terms_) add(x, p);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_same_basis(o);
  for (const auto& [x, p] : o.terms_) add(x, -p);
  return *this;
}

void HeckeElement::require_same_basis(const HeckeElement& o) const {
  if (o.basis_ != basis_) throw BasisMismatch("Hecke elements are expressed in different bases");
}

// ---------------------------------------------------------------- HeckeAlgebra

void HeckeAlgebra::require_standard(const HeckeElement& h) const {
  if (h.basis() != Basis::Standard) throw BasisMismatch("operation requires the standard basis");
}

HeckeElement HeckeAlgebra::standard(const AffineElement& x) const {
  return HeckeElement::basis_element(Basis::Standard, x);
}

HeckeElement HeckeAlgebra::left_mul_generator(int s, const HeckeElement& h) const {
  require_standard(h);
  HeckeElement out(Basis::Standard);
  for (const auto& [x, c] : h.terms()) {
    AffineElement sx = group_->left_multiply(s, x);
    out.add(sx, c);
    if (group_->length(sx) < group_->length(x)) out.add(x, quadratic_coefficient() * c);
  }
  return out;
}

HeckeElement HeckeAlgebra::right_mul_generator(const HeckeElement& h, int s) const {
  require_standard(h);
  HeckeElement out(Basis::Standard);
  for (const auto& [x, c] : h.terms()) {
    AffineElement xs = group_->right_multiply(x, s);
    out.add(xs, c);
    if (group_->length(xs) < group_->length(x)) out.add(x, quadratic_coefficient() * c);
  }
  return out;
}

HeckeElement HeckeAlgebra::mul_standard(const HeckeElement& a, const HeckeElement& b) const {
  require_standard(a);
  require_standard(b);
  HeckeElement out(Basis::Standard);
  for (const auto& [x, c] : a.terms()) {
    HeckeElement prod = b;
    const auto word = group_->canonical_word(x);
    for (auto it = word.rbegin(); it != word.rend(); ++it) prod = left_mul_generator(*it, prod);
    out.add_scaled(prod, c);
  }
  return out;
}

HeckeElement HeckeAlgebra::inverse_standard(const AffineElement& x) const {
  // (T_{s1}...T_{sk})^{-1} = T_{sk}^{-1}...T_{s1}^{-1}, T_s^{-1} = T_s + (v - v^-1).
  HeckeElement r = one();
  for (int s : group_->canonical_word(x)) {
    HeckeElement next = left_mul_generator(s, r);
    next.add_scaled(r, inverse_shift());
    r = std::move(next);
  }
  return r;
}

const HeckeElement& HeckeAlgebra::bar_of_standard(const AffineElement& x) const {
  {
    std::lock_guard lock(bar_mutex_);
    auto it = bar_cache_.find(x);
    if (it != bar_cache_.end()) return it->second;
  }
  HeckeElement value(Basis::Standard);
  if (group_->length(x) == 0) {
    value = one();
  } else {
    // bar(T_x) = T_s^{-1} bar(T_{sx}) for a left descent s.
    const int s = group_->canonical_word(x).front();
    const HeckeElement& rest = bar_of_standard(group_->left_multiply(s, x));
    value = left_mul_generator(s, rest);
    value.add_scaled(rest, inverse_shift());
  }
  std::lock_guard lock(bar_mutex_);
  return bar_cache_.try_emplace(x, std::move(value)).first->second;
}

HeckeElement HeckeAlgebra::bar(const HeckeElement& h) const {
  require_standard(h);
  HeckeElement out(Basis::Standard);
  for (const auto& [x, c] : h.terms()) out.add_scaled(bar_of_standard(x), c.bar());
  return out;
}

HeckeElement mul_standard(const HeckeAlgebra& hecke, const HeckeElement& a, const HeckeElement& b) {
  return hecke.mul_standard(a, b);
}

} // namespace affcell

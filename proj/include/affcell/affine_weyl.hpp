#pragma once

#include "affcell/root_data.hpp"

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace affcell {

/// Element u * t_lambda of W = Q^vee x| W_f: `finite` indexes u in the finite
/// Weyl group table, `translation` is lambda in Dynkin labels. It acts on the
/// coweight space by x -> u(x + lambda).
struct AffineElement {
  TypeLabel type = TypeLabel::A1;
  FiniteWeylGroup::Index finite = 0;
  Coweight translation;

  bool operator==(const AffineElement&) const = default;
  std::strong_ordering operator<=>(const AffineElement&) const = default;
};

enum class Side { Left, Right };

/// Generator index 0 is the affine reflection, 1..rank the finite ones.
using GeneratorMask = std::uint32_t;

class AffineWeylGroup {
public:
  explicit AffineWeylGroup(TypeLabel label);

  const CartanDatum& datum() const { return *datum_; }
  TypeLabel label() const { return datum_->label(); }
  int generator_count() const { return static_cast<int>(datum_->rank()) + 1; }

  AffineElement identity() const;
  AffineElement generator(int i) const;
  AffineElement translation(const Coweight& lambda) const;
  AffineElement element(FiniteWeylGroup::Index finite, const Coweight& lambda) const;

  AffineElement multiply(const AffineElement& x, const AffineElement& y) const;
  AffineElement inverse(const AffineElement& x) const;
  AffineElement left_multiply(int s, const AffineElement& x) const;
  AffineElement right_multiply(const AffineElement& x, int s) const;

  int length(const AffineElement& x) const;
  GeneratorMask descents(const AffineElement& x, Side side) const;
  bool is_left_descent(int s, const AffineElement& x) const;
  bool is_right_descent(const AffineElement& x, int s) const;

  /// Lexicographically smallest reduced word (generator indices).
  std::vector<int> canonical_word(const AffineElement& x) const;
  AffineElement from_word(const std::vector<int>& word) const;
  /// "0.1.0", or "e" for the identity.
  std::string to_string(const AffineElement& x) const;
  AffineElement parse(std::string_view text) const;

  bool is_min_double_coset_rep(const AffineElement& x) const;
  bool bruhat_leq(const AffineElement& x, const AffineElement& w) const;

  /// Dominant translation labelling the double coset W_f x W_f.
  Coweight double_coset_weight(const AffineElement& x) const;

  /// All elements of length <= bound, sorted by (length, canonical word).
  std::vector<AffineElement> enumerate_ball(int bound) const;

  /// Coxeter matrix entry m(s,t); 0 stands for infinity.
  int coxeter_entry(int s, int t) const { return coxeter_[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }

private:
  std::shared_ptr<const CartanDatum> datum_;
  FiniteWeylGroup::Index s_theta_ = 0;
  Coweight theta_coroot_;
  std::vector<std::vector<int>> coxeter_;

  void check_type(const AffineElement& x) const;
  void verify_presentation() const;
};

/// Compares canonical reduced words.
bool word_less(const std::vector<int>& a, const std::vector<int>& b);

std::vector<AffineElement> enumerate_ball(const AffineWeylGroup& group, int bound);

} // namespace affcell

template <>
struct std::hash<affcell::AffineElement> {
  std::size_t operator()(const affcell::AffineElement& x) const noexcept {
    return std::hash<affcell::IntVec>{}(x.translation) * 31u + x.finite * 7u +
           static_cast<std::size_t>(x.type);
  }
};

#pragma once

#include "affcell/laurent.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace affcell {

inline constexpr int kMaxRank = 4;

/// Integer vector of length <= kMaxRank. Used for roots (in simple-root
/// coordinates) and for coweights (in fundamental-coweight coordinates).
struct IntVec {
  std::array<int, kMaxRank> c{};
  std::uint8_t n = 0;

  IntVec() = default;
  explicit IntVec(std::size_t size) : n(static_cast<std::uint8_t>(size)) {}
  IntVec(std::initializer_list<int> values);

  std::size_t size() const { return n; }
  int& operator[](std::size_t i) { return c[i]; }
  int operator[](std::size_t i) const { return c[i]; }

  IntVec& operator+=(const IntVec& o);
  IntVec& operator-=(const IntVec& o);
  friend IntVec operator+(IntVec a, const IntVec& b) { return a += b; }
  friend IntVec operator-(IntVec a, const IntVec& b) { return a -= b; }
  IntVec operator-() const;
  IntVec scaled(int k) const;
  bool is_zero() const;

  bool operator==(const IntVec& o) const;
  std::strong_ordering operator<=>(const IntVec& o) const;

  std::vector<int> to_vector() const { return {c.begin(), c.begin() + n}; }
  std::string to_string() const; // "(1,-1)"
};

/// A coweight of G, i.e. a weight of the dual group, stored by its values
/// <lambda, alpha_j> on the simple roots of G (Dynkin labels). Translations
/// of the affine Weyl group are the coweights lying in the coroot lattice.
using Coweight = IntVec;

enum class TypeLabel : std::uint8_t { A1, A2, C2, G2 };

std::string_view type_name(TypeLabel t);     // "A2"
std::string_view affine_name(TypeLabel t);   // "A2~"
/// Accepts "A1~", "A2~", "C2~", "B2~" (same group as C2~), "G2~"; tilde optional.
TypeLabel parse_type_label(std::string_view s);

/// Finite Weyl group of a rank <= kMaxRank root system, as an explicit table.
class FiniteWeylGroup {
public:
  using Index = std::uint8_t;

  FiniteWeylGroup() = default;
  FiniteWeylGroup(const std::vector<std::vector<int>>& cartan,
                  const std::vector<IntVec>& positive_roots,
                  const std::vector<Coweight>& positive_coroots);

  std::size_t size() const { return length_.size(); }
  Index identity() const { return 0; }
  Index simple(int i) const { return simple_[static_cast<std::size_t>(i)]; }
  Index longest() const { return longest_; }
  Index multiply(Index a, Index b) const { return mul_[a * size() + b]; }
  Index inverse(Index a) const { return inv_[a]; }
  int length(Index a) const { return length_[a]; }
  const std::vector<int>& word(Index a) const { return word_[a]; }
  /// Index of a reflection s_alpha for a positive root (by root index).
  Index reflection(std::size_t root_index) const { return reflection_[root_index]; }

  Coweight act_coweight(Index u, const Coweight& lambda) const;
  IntVec act_root(Index u, const IntVec& root) const;
  /// Whether u maps the positive root with this index to a negative root.
  bool sends_negative(Index u, std::size_t root_index) const {
    return negative_[u * positive_count_ + root_index];
  }

private:
  std::size_t rank_ = 0;
  std::size_t positive_count_ = 0;
  std::vector<std::vector<Coweight>> coweight_rows_; // images of basis coweights
  std::vector<std::vector<IntVec>> root_rows_;       // images of simple roots
  std::vector<int> length_;
  std::vector<std::vector<int>> word_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
  std::vector<Index> simple_;
  std::vector<Index> reflection_;
  std::vector<bool> negative_;
  Index longest_ = 0;
};

/// Root datum of the simply connected group G together with the data of its
/// adjoint dual. Roots are in simple-root coordinates, coroots in
/// simple-coroot coordinates, and index k of each list refers to the same
/// (root, coroot) pair.
class CartanDatum {
public:
  explicit CartanDatum(TypeLabel label);

  TypeLabel label() const { return label_; }
  std::size_t rank() const { return rank_; }
  /// cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  const std::vector<IntVec>& positive_roots() const { return roots_; }
  const std::vector<IntVec>& positive_coroots() const { return coroots_; }
  std::size_t highest_root_index() const { return highest_; }
  const FiniteWeylGroup& weyl() const { return weyl_; }

  /// <lambda, alpha> for the positive root with this index.
  int pairing(const Coweight& lambda, std::size_t root_index) const;
  /// Dynkin labels of the coroot with this index.
  Coweight coroot_coweight(std::size_t root_index) const;
  Coweight simple_coroot(int i) const;
  Coweight zero() const { return Coweight(rank_); }
  Coweight reflect(int i, const Coweight& lambda) const;

  bool is_dominant(const Coweight& lambda) const;
  bool in_coroot_lattice(const Coweight& lambda) const;
  Coweight from_coroot_coords(const IntVec& m) const;
  /// Dominant representative of the W_f-orbit.
  Coweight dominant_representative(const Coweight& lambda) const;
  /// sum over positive roots of |<lambda, alpha>|: the length of t_lambda.
  int translation_length(const Coweight& lambda) const;
  /// Number of positive roots, which is the length of w_0.
  std::size_t positive_root_count() const { return roots_.size(); }

  /// W-invariant integral form (x, y) = sum_{alpha > 0} <x,alpha><y,alpha>.
  long long form(const Coweight& x, const Coweight& y) const;
  /// rho of the dual group: Dynkin labels all 1.
  Coweight dual_rho() const;

  /// Cartan matrix and positive roots of the dual group (transposed data).
  std::vector<std::vector<int>> dual_cartan() const;
  std::size_t dual_group_dimension() const { return rank_ + 2 * roots_.size(); }

private:
  TypeLabel label_;
  std::size_t rank_;
  std::vector<std::vector<int>> cartan_;
  std::vector<IntVec> roots_;
  std::vector<IntVec> coroots_;
  std::size_t highest_ = 0;
  FiniteWeylGroup weyl_;
};

using WeightMultiplicities = std::map<Coweight, long long>;

std::set<Coweight> weyl_orbit(const CartanDatum& datum, const Coweight& lambda);

/// Weight multiplicities of the irreducible dual-group representation with
/// highest weight lambda (Freudenthal's recursion). Throws NonDominant.
WeightMultiplicities weight_multiplicities(const CartanDatum& datum, const Coweight& lambda);

/// Weyl dimension formula for the dual-group irreducible V_lambda.
Integer weyl_dimension(const CartanDatum& datum, const Coweight& lambda);

/// Multiplicities of irreducibles in V_lambda (x) V_mu (Klimyk's rule).
WeightMultiplicities tensor_decompose(const CartanDatum& datum, const Coweight& lambda,
                                      const Coweight& mu);

/// Nonzero dominant coweights in the coroot lattice ordered by the length of
/// the corresponding translation, then lexicographically; capped at `count`.
std::vector<Coweight> small_dominant_coweights(const CartanDatum& datum, std::size_t count);

} // namespace affcell

template <>
struct std::hash<affcell::IntVec> {
  std::size_t operator()(const affcell::IntVec& v) const noexcept {
    std::size_t h = v.n;
    for (std::size_t i = 0; i < v.n; ++i)
      h = h * 1000003u ^ static_cast<std::size_t>(static_cast<unsigned>(v.c[i]));
    return h;
  }
};

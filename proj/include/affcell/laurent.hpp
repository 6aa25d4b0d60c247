#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace affcell {

using Integer = boost::multiprecision::cpp_int;

/// Exact element of A = Z[v, v^-1].
///
/// Terms are kept sorted by exponent with no zero coefficients, so two
/// polynomials are equal iff their term vectors are equal.
class LaurentPoly {
public:
  struct Term {
    int exponent;
    Integer coefficient;
    bool operator==(const Term&) const = default;
  };

  LaurentPoly() = default;
  LaurentPoly(long long constant); // NOLINT: implicit from integers is intended
  LaurentPoly(const Integer& constant);

  static LaurentPoly monomial(int exponent, Integer coefficient = 1);
  /// Builds from arbitrary (exponent, coefficient) pairs; merges duplicates.
  static LaurentPoly from_terms(std::vector<std::pair<int, Integer>> terms);
  /// Takes the terms as they are when already normalized, else normalizes.
  static LaurentPoly from_sorted_terms(std::vector<Term> terms);
  static LaurentPoly v() { return monomial(1); }
  static LaurentPoly v_inv() { return monomial(-1); }

  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Lowest and highest exponent; nullopt for the zero polynomial.
  std::optional<int> min_exponent() const;
  std::optional<int> max_exponent() const;

  Integer coeff_at(int exponent) const;
  LaurentPoly bar() const;
  /// Multiplication by v^k.
  LaurentPoly shifted(int k) const;
  bool is_bar_invariant() const { return *this == bar(); }
  bool has_nonnegative_coefficients() const;
  /// Part with strictly positive exponents.
  LaurentPoly positive_part() const;
  /// Value at v = 1.
  Integer at_one() const;

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  LaurentPoly& operator*=(const LaurentPoly& other);
  /// this += factor * other, without a temporary product.
  void add_product(const LaurentPoly& factor, const LaurentPoly& other);
  /// this += c * v^k * other.
  void add_scaled(const LaurentPoly& other, const Integer& c, int k = 0);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& other) const = default;
  /// Total order used for deterministic containers; not an algebraic order.
  std::strong_ordering operator<=>(const LaurentPoly& other) const;

  /// Sorted (exponent, coefficient) pairs; coefficients as decimal strings
  /// when they do not fit in 64 bits.
  std::vector<std::pair<int, Integer>> to_pairs() const;
  /// Human-readable form such as "v^2 + 2 + v^-2".
  std::string to_string() const;

private:
  std::vector<Term> terms_;
  void normalize();
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly bar_involute(const LaurentPoly& a);
Integer coeff_at(const LaurentPoly& a, int exponent);

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

} // namespace affcell

#pragma once

#include "affcell/affine_weyl.hpp"
#include "affcell/hecke.hpp"
#include "affcell/kl_cache.hpp"
#include "affcell/laurent.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace affcell {

using Index = std::int32_t;
inline constexpr Index kNone = -1;

struct MuEdge {
  Index z;
  Integer mu;
};

/// Dense coefficient vector over the ball, in the canonical basis.
using CVec = std::vector<LaurentPoly>;

/// KL polynomials p_{x,w} for every pair in a length ball, with the
/// W-graph data (mu, descents) needed to multiply canonical basis elements.
///
/// Row w is computed from C_s C_{sw} minus mu-corrections, where s is the
/// first letter of the canonical word of w.
class KLTable {
public:
  KLTable(const AffineWeylGroup& group, int bound, KLCache* cache = nullptr, int jobs = 1);

  const AffineWeylGroup& group() const { return *group_; }
  int bound() const { return bound_; }
  Index size() const { return static_cast<Index>(ball_.size()); }
  /// Number of ball elements of length <= len.
  Index count_up_to(int len) const;

  const AffineElement& element(Index i) const { return ball_[static_cast<std::size_t>(i)]; }
  const std::string& word(Index i) const { return words_[static_cast<std::size_t>(i)]; }
  int length(Index i) const { return lengths_[static_cast<std::size_t>(i)]; }
  std::optional<Index> find(const AffineElement& x) const;
  std::optional<Index> find_word(std::string_view word) const;
  /// Throws BoundExceeded when x is outside the ball.
  Index index_of(const AffineElement& x) const;

  /// Index of s*x (resp. x*s), or kNone when it leaves the ball.
  Index left_neighbor(int s, Index x) const { return left_nb_[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]; }
  Index right_neighbor(Index x, int s) const { return right_nb_[static_cast<std::size_t>(x)][static_cast<std::size_t>(s)]; }
  Index inverse(Index x) const { return inverse_[static_cast<std::size_t>(x)]; }
  GeneratorMask left_descents(Index x) const { return ld_[static_cast<std::size_t>(x)]; }
  GeneratorMask right_descents(Index x) const { return rd_[static_cast<std::size_t>(x)]; }

  /// p_{x,w}; zero unless x <= w.
  const LaurentPoly& p(Index x, Index w) const;
  Integer mu(Index z, Index w) const;
  /// All z < w with mu(z,w) != 0.
  const std::vector<MuEdge>& mu_below(Index w) const { return mu_below_[static_cast<std::size_t>(w)]; }
  /// Those z < w with mu != 0 and s a left (resp. right) descent of z.
  const std::vector<MuEdge>& mu_below_left(int s, Index w) const;
  const std::vector<MuEdge>& mu_below_right(int s, Index w) const;

  std::size_t rows_from_cache() const { return rows_from_cache_; }
  KLCache* cache() const { return cache_; }

  // Canonical-basis arithmetic. All of these throw BoundExceeded instead of
  // truncating when a term would leave the ball.
  CVec unit_vector(Index w) const;
  CVec left_mul_cs(int s, const CVec& h) const;
  CVec right_mul_cs(const CVec& h, int s) const;
  /// C_x C_y.
  CVec product(Index x, Index y) const;
  /// Visits C_x C_y for every x with length(x) <= max_left_length, in index order.
  void for_each_left_product(Index y, int max_left_length,
                             const std::function<void(Index, const CVec&)>& visit) const;

  HeckeElement canonical_element(Index w) const;
  HeckeElement to_canonical(const HeckeElement& standard) const;
  HeckeElement to_standard(const HeckeElement& canonical) const;
  CVec to_vec(const HeckeElement& canonical) const;
  HeckeElement from_vec(const CVec& v) const;

private:
  const AffineWeylGroup* group_;
  int bound_;
  std::vector<AffineElement> ball_;
  std::vector<std::string> words_;
  std::vector<int> lengths_;
  std::unordered_map<AffineElement, Index> index_;
  std::unordered_map<std::string_view, Index> word_index_; // views into words_
  std::vector<std::vector<Index>> left_nb_, right_nb_;
  std::vector<Index> inverse_;
  std::vector<GeneratorMask> ld_, rd_;
  std::vector<std::vector<LaurentPoly>> rows_;
  std::vector<std::vector<MuEdge>> mu_below_;
  std::vector<std::vector<std::vector<MuEdge>>> mu_left_, mu_right_; // [s][w]
  std::size_t rows_from_cache_ = 0;
  KLCache* cache_ = nullptr;

  void compute_row(Index w);
  bool load_row(Index w, const KLCache& cache);
  void finish_row(Index w);
  Index require_left(int s, Index x) const;
  Index require_right(Index x, int s) const;
};

/// p_{x,w} from a table that holds w.
LaurentPoly kl_polynomial(const KLTable& table, const AffineElement& x, const AffineElement& w);
HeckeElement canonical_basis_element(const KLTable& table, const AffineElement& w);
/// z -> h_{x,y,z} with C_x C_y = sum_z h_{x,y,z} C_z.
std::map<AffineElement, LaurentPoly> structure_constants(const KLTable& table, const AffineElement& x,
                                                         const AffineElement& y);

/// Runs fn(i) for i in [begin, end) on up to `jobs` threads.
void parallel_for(Index begin, Index end, int jobs, const std::function<void(Index)>& fn);

} // namespace affcell

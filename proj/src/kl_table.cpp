#include "affcell/kl_table.hpp"

#include "affcell/errors.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace affcell {

namespace {
const LaurentPoly& zero_poly() {
  static const LaurentPoly z;
  return z;
}
const LaurentPoly& v_plus_vinv() {
  static const LaurentPoly q = LaurentPoly::v() + LaurentPoly::v_inv();
  return q;
}
} // namespace

void parallel_for(Index begin, Index end, int jobs, const std::function<void(Index)>& fn) {
  if (jobs <= 1 || end - begin < 2) {
    for (Index i = begin; i < end; ++i) fn(i);
    return;
  }
  std::atomic<Index> next{begin};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (Index i = next++; i < end; i = next++) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int n = std::min<int>(jobs, end - begin);
  std::vector<std::thread> pool;
  for (int t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

KLTable::KLTable(const AffineWeylGroup& group, int bound, KLCache* cache, int jobs)
    : group_(&group), bound_(bound), cache_(cache) {
  if (bound < 0) throw Error("ball bound must be nonnegative");
  if (cache && cache->type() != group.label()) throw TypeMismatch("KL cache belongs to a different type");
  ball_ = group.enumerate_ball(bound);
  const std::size_t n = ball_.size();
  const int gens = group.generator_count();
  words_.resize(n);
  lengths_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    words_[i] = group.to_string(ball_[i]);
    lengths_[i] = group.length(ball_[i]);
    index_.emplace(ball_[i], static_cast<Index>(i));
    word_index_.emplace(words_[i], static_cast<Index>(i));
  }
  left_nb_.assign(n, std::vector<Index>(static_cast<std::size_t>(gens), kNone));
  right_nb_.assign(n, std::vector<Index>(static_cast<std::size_t>(gens), kNone));
  inverse_.resize(n);
  ld_.assign(n, 0);
  rd_.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int s = 0; s < gens; ++s) {
      AffineElement l = group.left_multiply(s, ball_[i]);
      AffineElement r = group.right_multiply(ball_[i], s);
      if (auto j = find(l)) left_nb_[i][static_cast<std::size_t>(s)] = *j;
      if (auto j = find(r)) right_nb_[i][static_cast<std::size_t>(s)] = *j;
      if (group.length(l) < lengths_[i]) ld_[i] |= GeneratorMask{1} << s;
      if (group.length(r) < lengths_[i]) rd_[i] |= GeneratorMask{1} << s;
    }
    inverse_[i] = index_of(group.inverse(ball_[i]));
  }

  rows_.resize(n);
  mu_below_.resize(n);
  mu_left_.assign(static_cast<std::size_t>(gens), std::vector<std::vector<MuEdge>>(n));
  mu_right_.assign(static_cast<std::size_t>(gens), std::vector<std::vector<MuEdge>>(n));

  // Rows of one length depend only on shorter rows.
  Index start = 0;
  for (int len = 0; len <= bound; ++len) {
    const Index stop = count_up_to(len);
    parallel_for(start, stop, jobs, [&](Index w) {
      if (!(cache && load_row(w, *cache))) {
        compute_row(w);
        if (cache) {
          KLCache::Row entries;
          for (Index x = 0; x < w; ++x)
            if (!rows_[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)].is_zero())
              entries.emplace_back(words_[static_cast<std::size_t>(x)], rows_[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)]);
          cache->put_row(words_[static_cast<std::size_t>(w)], std::move(entries));
        }
      }
      finish_row(w);
    });
    start = stop;
  }
  if (cache) cache->flush();
}

Index KLTable::count_up_to(int len) const {
  if (len < 0) return 0;
  auto it = std::upper_bound(lengths_.begin(), lengths_.end(), len);
  return static_cast<Index>(it - lengths_.begin());
}

std::optional<Index> KLTable::find(const AffineElement& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<Index> KLTable::find_word(std::string_view word) const {
  auto it = word_index_.find(word);
  if (it == word_index_.end()) return std::nullopt;
  return it->second;
}

Index KLTable::index_of(const AffineElement& x) const {
  if (auto i = find(x)) return *i;
  const int len = group_->length(x);
  throw BoundExceeded("element " + group_->to_string(x) + " of length " + std::to_string(len) +
                          " is outside the ball of radius " + std::to_string(bound_),
                      len);
}

bool KLTable::load_row(Index w, const KLCache& cache) {
  std::vector<LaurentPoly> values(static_cast<std::size_t>(w) + 1);
  const bool found = cache.visit_row(words_[static_cast<std::size_t>(w)], [&](std::string_view xw, LaurentPoly p) {
    auto x = find_word(xw);
    if (!x || *x >= w)
      throw CacheFormatError("cache row " + words_[static_cast<std::size_t>(w)] + " names " + std::string(xw) +
                             ", which is not below it");
    values[static_cast<std::size_t>(*x)] = std::move(p);
  });
  if (!found) return false;
  values[static_cast<std::size_t>(w)] = LaurentPoly(1);
  rows_[static_cast<std::size_t>(w)] = std::move(values);
  ++rows_from_cache_;
  return true;
}

void KLTable::compute_row(Index w) {
  auto& row = rows_[static_cast<std::size_t>(w)];
  row.assign(static_cast<std::size_t>(w) + 1, LaurentPoly{});
  if (w == 0) {
    row[0] = LaurentPoly(1);
    return;
  }
  const auto word = group_->canonical_word(element(w));
  const int s = word.front();
  const Index wp = left_neighbor(s, w); // s*w < w, always in the ball
  const auto& prow = rows_[static_cast<std::size_t>(wp)];
  for (Index y = 0; y <= w; ++y) {
    const Index sy = left_neighbor(s, y);
    LaurentPoly val;
    if (sy != kNone && sy <= wp) val += prow[static_cast<std::size_t>(sy)];
    if (y <= wp && !prow[static_cast<std::size_t>(y)].is_zero())
      val.add_scaled(prow[static_cast<std::size_t>(y)], 1, (left_descents(y) >> s & 1u) ? -1 : 1);
    row[static_cast<std::size_t>(y)] = std::move(val);
  }
  for (const auto& e : mu_below_left(s, wp)) {
    const auto& zrow = rows_[static_cast<std::size_t>(e.z)];
    for (Index y = 0; y <= e.z; ++y)
      if (!zrow[static_cast<std::size_t>(y)].is_zero()) row[static_cast<std::size_t>(y)].add_scaled(zrow[static_cast<std::size_t>(y)], -e.mu);
  }
}

void KLTable::finish_row(Index w) {
  const auto& row = rows_[static_cast<std::size_t>(w)];
  auto& below = mu_below_[static_cast<std::size_t>(w)];
  for (Index z = 0; z < w; ++z) {
    Integer m = row[static_cast<std::size_t>(z)].coeff_at(1);
    if (m != 0) below.push_back({z, m});
  }
  for (int s = 0; s < group_->generator_count(); ++s) {
    for (const auto& e : below) {
      if (left_descents(e.z) >> s & 1u) mu_left_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)].push_back(e);
      if (right_descents(e.z) >> s & 1u) mu_right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)].push_back(e);
    }
  }
}

const LaurentPoly& KLTable::p(Index x, Index w) const {
  if (x > w) return zero_poly();
  return rows_[static_cast<std::size_t>(w)][static_cast<std::size_t>(x)];
}

Integer KLTable::mu(Index z, Index w) const {
  if (z >= w) return 0;
  return p(z, w).coeff_at(1);
}

const std::vector<MuEdge>& KLTable::mu_below_left(int s, Index w) const {
  return mu_left_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)];
}

const std::vector<MuEdge>& KLTable::mu_below_right(int s, Index w) const {
  return mu_right_[static_cast<std::size_t>(s)][static_cast<std::size_t>(w)];
}

Index KLTable::require_left(int s, Index x) const {
  const Index j = left_neighbor(s, x);
  if (j == kNone)
    throw BoundExceeded("product leaves the ball of radius " + std::to_string(bound_) + " at " +
                            std::to_string(s) + "." + words_[static_cast<std::size_t>(x)],
                        length(x) + 1);
  return j;
}

Index KLTable::require_right(Index x, int s) const {
  const Index j = right_neighbor(x, s);
  if (j == kNone)
    throw BoundExceeded("product leaves the ball of radius " + std::to_string(bound_) + " at " +
                            words_[static_cast<std::size_t>(x)] + "." + std::to_string(s),
                        length(x) + 1);
  return j;
}

CVec KLTable::unit_vector(Index w) const {
  CVec v(ball_.size());
  v[static_cast<std::size_t>(w)] = LaurentPoly(1);
  return v;
}

CVec KLTable::left_mul_cs(int s, const CVec& h) const {
  CVec out(ball_.size());
  for (Index w = 0; w < size(); ++w) {
    const auto& c = h[static_cast<std::size_t>(w)];
    if (c.is_zero()) continue;
    if (left_descents(w) >> s & 1u) {
      out[static_cast<std::size_t>(w)].add_product(v_plus_vinv(), c);
      continue;
    }
    out[static_cast<std::size_t>(require_left(s, w))] += c;
    for (const auto& e : mu_below_left(s, w)) out[static_cast<std::size_t>(e.z)].add_scaled(c, e.mu);
  }
  return out;
}

CVec KLTable::right_mul_cs(const CVec& h, int s) const {
  CVec out(ball_.size());
  for (Index w = 0; w < size(); ++w) {
    const auto& c = h[static_cast<std::size_t>(w)];
    if (c.is_zero()) continue;
    if (right_descents(w) >> s & 1u) {
      out[static_cast<std::size_t>(w)].add_product(v_plus_vinv(), c);
      continue;
    }
    out[static_cast<std::size_t>(require_right(w, s))] += c;
    for (const auto& e : mu_below_right(s, w)) out[static_cast<std::size_t>(e.z)].add_scaled(c, e.mu);
  }
  return out;
}

void KLTable::for_each_left_product(Index y, int max_left_length,
                                    const std::function<void(Index, const CVec&)>& visit) const {
  const Index limit = std::min(count_up_to(max_left_length), size());
  std::vector<CVec> prod(static_cast<std::size_t>(limit));
  for (Index x = 0; x < limit; ++x) {
    if (x == 0) {
      prod[0] = unit_vector(y);
    } else {
      const int s = group_->canonical_word(element(x)).front();
      const Index xp = left_neighbor(s, x);
      CVec r = left_mul_cs(s, prod[static_cast<std::size_t>(xp)]);
      for (const auto& e : mu_below_left(s, xp)) {
        const auto& pz = prod[static_cast<std::size_t>(e.z)];
        for (std::size_t k = 0; k < r.size(); ++k)
          if (!pz[k].is_zero()) r[k].add_scaled(pz[k], -e.mu);
      }
      prod[static_cast<std::size_t>(x)] = std::move(r);
    }
    visit(x, prod[static_cast<std::size_t>(x)]);
  }
}

CVec KLTable::product(Index x, Index y) const {
  // C_x = C_s C_{sx} - sum mu(z, sx) C_z over z < sx with sz < z.
  std::map<Index, CVec> memo;
  std::function<const CVec&(Index)> go = [&](Index u) -> const CVec& {
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    CVec r;
    if (u == 0) {
      r = unit_vector(y);
    } else {
      const int s = group_->canonical_word(element(u)).front();
      const Index up = left_neighbor(s, u);
      r = left_mul_cs(s, go(up));
      for (const auto& e : mu_below_left(s, up)) {
        const CVec& pz = go(e.z);
        for (std::size_t k = 0; k < r.size(); ++k)
          if (!pz[k].is_zero()) r[k].add_scaled(pz[k], -e.mu);
      }
    }
    return memo.emplace(u, std::move(r)).first->second;
  };
  return go(x);
}

HeckeElement KLTable::canonical_element(Index w) const {
  HeckeElement h(Basis::Standard);
  for (Index x = 0; x <= w; ++x) h.add(element(x), p(x, w));
  return h;
}

HeckeElement KLTable::to_canonical(const HeckeElement& standard) const {
  if (standard.basis() != Basis::Standard) throw BasisMismatch("to_canonical expects the standard basis");
  CVec coef(ball_.size());
  for (const auto& [x, c] : standard.terms()) coef[static_cast<std::size_t>(index_of(x))] = c;
  HeckeElement out(Basis::Canonical);
  for (Index w = size() - 1; w >= 0; --w) {
    LaurentPoly c = coef[static_cast<std::size_t>(w)];
    if (c.is_zero()) continue;
    out.add(element(w), c);
    const auto& row = rows_[static_cast<std::size_t>(w)];
    for (Index x = 0; x <= w; ++x)
      if (!row[static_cast<std::size_t>(x)].is_zero()) coef[static_cast<std::size_t>(x)].add_product(-c, row[static_cast<std::size_t>(x)]);
  }
  return out;
}

HeckeElement KLTable::to_standard(const HeckeElement& canonical) const {
  if (canonical.basis() != Basis::Canonical) throw BasisMismatch("to_standard expects the canonical basis");
  HeckeElement out(Basis::Standard);
  for (const auto& [w, c] : canonical.terms()) {
    const Index wi = index_of(w);
    const auto& row = rows_[static_cast<std::size_t>(wi)];
    for (Index x = 0; x <= wi; ++x)
      if (!row[static_cast<std::size_t>(x)].is_zero()) out.add(element(x), c * row[static_cast<std::size_t>(x)]);
  }
  return out;
}

CVec KLTable::to_vec(const HeckeElement& canonical) const {
  if (canonical.basis() != Basis::Canonical) throw BasisMismatch("to_vec expects the canonical basis");
  CVec v(ball_.size());
  for (const auto& [w, c] : canonical.terms()) v[static_cast<std::size_t>(index_of(w))] = c;
  return v;
}

HeckeElement KLTable::from_vec(const CVec& v) const {
  HeckeElement h(Basis::Canonical);
  for (Index w = 0; w < size(); ++w) h.add(element(w), v[static_cast<std::size_t>(w)]);
  return h;
}

LaurentPoly kl_polynomial(const KLTable& table, const AffineElement& x, const AffineElement& w) {
  const Index wi = table.index_of(w);
  auto xi = table.find(x);
  if (!xi) return {};
  return table.p(*xi, wi);
}

HeckeElement canonical_basis_element(const KLTable& table, const AffineElement& w) {
  return table.canonical_element(table.index_of(w));
}

std::map<AffineElement, LaurentPoly> structure_constants(const KLTable& table, const AffineElement& x,
                                                         const AffineElement& y) {
  CVec prod = table.product(table.index_of(x), table.index_of(y));
  std::map<AffineElement, LaurentPoly> out;
  for (Index z = 0; z < table.size(); ++z)
    if (!prod[static_cast<std::size_t>(z)].is_zero()) out.emplace(table.element(z), prod[static_cast<std::size_t>(z)]);
  return out;
}

} // namespace affcell

#include "affcell/jring.hpp"

#include "affcell/errors.hpp"

#include <algorithm>

namespace affcell {

AsymptoticRing::AsymptoticRing(const CellPartition& partition, int jobs, std::optional<int> a_bound)
    : partition_(&partition), a_bound_(std::min(a_bound.value_or(partition.bound()), partition.bound())) {
  const KLTable& t = partition.table();
  const int B = a_bound_;
  const std::size_t ncells = partition.cells().size();
  // best[c][P]: max degree among pairs with l(x) + l(y) == P.
  std::vector<std::vector<int>> best(ncells, std::vector<int>(static_cast<std::size_t>(B) + 1, -1));
  std::mutex merge;

  KLCache* cache = t.cache();
  parallel_for(0, t.count_up_to(B), jobs, [&](Index y) {
    const int cy = partition.cell_of(y);
    const int ly = t.length(y);
    std::vector<Index> xs;
    for (Index x : partition.cell(cy).members)
      if (t.length(x) + ly <= B) xs.push_back(x);
    if (xs.empty()) return;
    std::vector<std::pair<std::pair<Index, Index>, Terms>> found;
    std::vector<int> local(static_cast<std::size_t>(B) + 1, -1);
    auto record = [&](Index x, Terms terms) {
      auto& slot = local[static_cast<std::size_t>(t.length(x) + ly)];
      for (const auto& [z, c] : terms) slot = std::max(slot, *c.max_exponent());
      found.push_back({{x, y}, std::move(terms)});
    };
    const bool cached = cache && std::all_of(xs.begin(), xs.end(), [&](Index x) {
      return cache->has_product(t.word(x), t.word(y));
    });
    if (cached) {
      for (Index x : xs) {
        Terms terms;
        cache->visit_product(t.word(x), t.word(y), [&](std::string_view zw, LaurentPoly c) {
          auto z = t.find_word(zw);
          if (!z) throw CacheFormatError("cached product names unknown element " + std::string(zw));
          const int cz = partition.cell_of(*z);
          if (cz < 0)
            throw BoundExceeded("product term " + t.word(*z) + " lies outside the covered ball", t.length(*z));
          if (cz == cy) terms.emplace_back(*z, std::move(c));
        });
        std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        record(x, std::move(terms));
      }
    } else {
      std::size_t next = 0;
      t.for_each_left_product(y, t.length(xs.back()), [&](Index x, const CVec& prod) {
        if (next >= xs.size() || xs[next] != x) return;
        ++next;
        if (cache) {
          KLCache::Row full;
          for (Index z = 0; z < static_cast<Index>(prod.size()); ++z)
            if (!prod[static_cast<std::size_t>(z)].is_zero()) full.emplace_back(t.word(z), prod[static_cast<std::size_t>(z)]);
          cache->put_product(t.word(x), t.word(y), std::move(full));
        }
        record(x, in_cell_terms(prod, cy));
      });
    }
    std::lock_guard lock(merge);
    for (std::size_t p = 0; p < local.size(); ++p)
      best[static_cast<std::size_t>(cy)][p] = std::max(best[static_cast<std::size_t>(cy)][p], local[p]);
    for (auto& [key, terms] : found) h_.emplace(key, std::move(terms));
  });
  if (cache) cache->flush();

  const int cap = t.group().datum().weyl().length(t.group().datum().weyl().longest());
  a_.resize(ncells);
  for (std::size_t c = 0; c < ncells; ++c) {
    AValue& a = a_[c];
    int running = -1;
    std::vector<int> cumulative(static_cast<std::size_t>(B) + 1);
    for (int p = 0; p <= B; ++p) {
      running = std::max(running, best[c][static_cast<std::size_t>(p)]);
      cumulative[static_cast<std::size_t>(p)] = running;
    }
    for (int p : {B - 4, B - 2, B}) a.estimates.emplace_back(p, p >= 0 ? cumulative[static_cast<std::size_t>(p)] : -1);
    a.value = std::max(0, a.estimates.back().second);
    a.exact = std::all_of(a.estimates.begin(), a.estimates.end(),
                          [&](const auto& e) { return e.second == a.estimates.back().second; }) &&
              a.estimates.back().second >= 0 && a.value <= cap;
  }
}

int AsymptoticRing::exact_a(int cell) const {
  const AValue& a = a_value(cell);
  if (!a.exact)
    throw InexactAValue("a-value of cell " + std::to_string(cell) + " is only a lower bound (" +
                        std::to_string(a.value) + ") at bound " + std::to_string(bound()));
  return a.value;
}

bool AsymptoticRing::has_product(Index x, Index y) const {
  const int cx = partition_->cell_of(x);
  return cx >= 0 && partition_->cell_of(y) >= 0 && table().length(x) + table().length(y) <= bound();
}

AsymptoticRing::Terms AsymptoticRing::in_cell_terms(const CVec& prod, int cell) const {
  Terms out;
  for (Index z = 0; z < static_cast<Index>(prod.size()); ++z) {
    const auto& c = prod[static_cast<std::size_t>(z)];
    if (c.is_zero()) continue;
    const int cz = partition_->cell_of(z);
    if (cz < 0)
      throw BoundExceeded("product term " + table().word(z) + " lies outside the covered ball", table().length(z));
    if (cz == cell) out.emplace_back(z, c);
  }
  return out;
}

void AsymptoticRing::prefetch(const std::vector<Index>& xs, const std::vector<Index>& ys) const {
  const KLTable& t = table();
  for (Index y : ys) {
    const int cy = partition_->cell_of(y);
    std::vector<Index> todo;
    {
      std::lock_guard lock(h_mutex_);
      for (Index x : xs)
        if (partition_->cell_of(x) == cy && cy >= 0 && !h_.count({x, y}) && t.length(x) + t.length(y) <= bound())
          todo.push_back(x);
    }
    if (todo.empty()) continue;
    std::sort(todo.begin(), todo.end());
    std::map<std::pair<Index, Index>, Terms> fresh;
    std::size_t next = 0;
    t.for_each_left_product(y, t.length(todo.back()), [&](Index x, const CVec& prod) {
      if (next < todo.size() && todo[next] == x) {
        fresh.emplace(std::make_pair(x, y), in_cell_terms(prod, cy));
        ++next;
      }
    });
    std::lock_guard lock(h_mutex_);
    for (auto& [k, v] : fresh) h_.emplace(k, std::move(v));
  }
}

const AsymptoticRing::Terms& AsymptoticRing::terms(Index x, Index y) const {
  {
    std::lock_guard lock(h_mutex_);
    auto it = h_.find({x, y});
    if (it != h_.end()) return it->second;
  }
  const KLTable& t = table();
  if (t.length(x) + t.length(y) > bound())
    throw BoundExceeded("t_" + t.word(x) + " t_" + t.word(y) + " needs bound " +
                            std::to_string(t.length(x) + t.length(y)),
                        t.length(x) + t.length(y));
  Terms fresh = in_cell_terms(t.product(x, y), partition_->cell_of(y));
  std::lock_guard lock(h_mutex_);
  return h_.emplace(std::make_pair(x, y), std::move(fresh)).first->second;
}

LaurentPoly AsymptoticRing::h(Index x, Index y, Index z) const {
  const int c = partition_->cell_of(x);
  if (c < 0 || partition_->cell_of(y) != c || partition_->cell_of(z) != c) return {};
  for (const auto& [w, p] : terms(x, y))
    if (w == z) return p;
  return {};
}

JProduct AsymptoticRing::t_product(Index x, Index y) const {
  const int cx = partition_->cell_of(x);
  const int cy = partition_->cell_of(y);
  const KLTable& t = table();
  if (cx < 0 || cy < 0)
    throw BoundExceeded("t-basis element outside the covered ball", std::max(t.length(x), t.length(y)));
  if (cx != cy) return {};
  const int a = exact_a(cx);
  JProduct out;
  for (const auto& [z, c] : terms(x, y)) {
    Integer g = c.coeff_at(a);
    if (g != 0) out.emplace_back(z, g);
  }
  return out;
}

Integer AsymptoticRing::gamma(Index x, Index y, Index z) const {
  const Index zi = table().inverse(z);
  for (const auto& [w, c] : t_product(x, y))
    if (w == zi) return c;
  return 0;
}

JElement AsymptoticRing::multiply(const JElement& a, const JElement& b) const {
  std::vector<Index> xs, ys;
  for (const auto& [x, c] : a) xs.push_back(x);
  for (const auto& [y, c] : b) ys.push_back(y);
  prefetch(xs, ys);
  JElement out;
  for (const auto& [x, cx] : a)
    for (const auto& [y, cy] : b) {
      const LaurentPoly c = cx * cy;
      for (const auto& [z, g] : t_product(x, y)) {
        auto& slot = out[z];
        slot.add_scaled(c, g);
      }
    }
  for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

std::vector<Index> AsymptoticRing::duflo(int cell) const {
  const int a = exact_a(cell);
  const KLTable& t = table();
  std::vector<Index> out;
  for (Index d : partition_->cell(cell).members) {
    if (t.inverse(d) != d) continue;
    // l(d) - 2 deg P_{e,d} is the lowest exponent of p_{e,d}.
    if (auto lo = t.p(0, d).min_exponent(); lo && *lo == a) out.push_back(d);
  }
  return out;
}

JElement AsymptoticRing::unit(int cell) const {
  JElement u;
  for (Index d : duflo(cell)) u[d] = LaurentPoly(1);
  return u;
}

JfData AsymptoticRing::jf(int cell) const {
  const KLTable& t = table();
  const auto& g = t.group();
  JfData out;
  out.cell = cell;
  for (Index w : partition_->cell(cell).members)
    if (g.is_min_double_coset_rep(t.element(w))) out.basis.push_back(w);
  for (Index d : duflo(cell))
    if (g.is_min_double_coset_rep(t.element(d))) {
      if (out.duflo != kNone) throw ClosureViolation("cell " + std::to_string(cell) + " has two Duflo involutions in W^f");
      out.duflo = d;
    }
  for (Index x : out.basis)
    for (Index y : out.basis) {
      if (t.length(x) + t.length(y) > a_bound_) continue;
      for (const auto& [z, c] : t_product(x, y))
        if (!g.is_min_double_coset_rep(t.element(z)))
          throw ClosureViolation("t_" + t.word(x) + " t_" + t.word(y) + " has t_" + t.word(z) + " outside W^f");
    }
  return out;
}

} // namespace affcell

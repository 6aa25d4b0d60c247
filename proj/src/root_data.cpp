#include "affcell/root_data.hpp"

#include "affcell/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace affcell {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------- IntVec

IntVec::IntVec(std::initializer_list<int> values) : n(static_cast<std::uint8_t>(values.size())) {
  std::copy(values.begin(), values.end(), c.begin());
}

IntVec& IntVec::operator+=(const IntVec& o) {
  for (std::size_t i = 0; i < n; ++i) c[i] += o.c[i];
  return *this;
}

IntVec& IntVec::operator-=(const IntVec& o) {
  for (std::size_t i = 0; i < n; ++i) c[i] -= o.c[i];
  return *this;
}

IntVec IntVec::operator-() const {
  IntVec r = *this;
  for (std::size_t i = 0; i < n; ++i) r.c[i] = -r.c[i];
  return r;
}

IntVec IntVec::scaled(int k) const {
  IntVec r = *this;
  for (std::size_t i = 0; i < n; ++i) r.c[i] *= k;
  return r;
}

bool IntVec::is_zero() const {
  return std::all_of(c.begin(), c.begin() + n, [](int x) { return x == 0; });
}

bool IntVec::operator==(const IntVec& o) const {
  return n == o.n && std::equal(c.begin(), c.begin() + n, o.c.begin());
}

std::strong_ordering IntVec::operator<=>(const IntVec& o) const {
  if (auto r = n <=> o.n; r != 0) return r;
  for (std::size_t i = 0; i < n; ++i)
    if (auto r = c[i] <=> o.c[i]; r != 0) return r;
  return std::strong_ordering::equal;
}

std::string IntVec::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < n; ++i) os << (i ? "," : "") << c[i];
  os << ")";
  return os.str();
}

// ---------------------------------------------------------------- labels

std::string_view type_name(TypeLabel t) {
  switch (t) {
  case TypeLabel::A1: return "A1";
  case TypeLabel::A2: return "A2";
  case TypeLabel::C2: return "C2";
  case TypeLabel::G2: return "G2";
  }
  return "?";
}

std::string_view affine_name(TypeLabel t) {
  switch (t) {
  case TypeLabel::A1: return "A1~";
  case TypeLabel::A2: return "A2~";
  case TypeLabel::C2: return "C2~";
  case TypeLabel::G2: return "G2~";
  }
  return "?";
}

TypeLabel parse_type_label(std::string_view s) {
  if (!s.empty() && s.back() == '~') s.remove_suffix(1);
  if (s == "A1") return TypeLabel::A1;
  if (s == "A2") return TypeLabel::A2;
  if (s == "C2" || s == "B2") return TypeLabel::C2;
  if (s == "G2") return TypeLabel::G2;
  throw Error("unknown type label '" + std::string(s) + "' (expected A1~, A2~, C2~ or G2~)");
}

// ---------------------------------------------------------------- helpers

namespace {

int dot(const IntVec& a, const IntVec& b) {
  int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// s_i on a root in simple-root coordinates.
IntVec reflect_root(const std::vector<std::vector<int>>& A, int i, const IntVec& beta) {
  int pair = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pair += A[i][j] * beta[j];
  IntVec r = beta;
  r[i] -= pair;
  return r;
}

// s_i on a coroot in simple-coroot coordinates.
IntVec reflect_coroot(const std::vector<std::vector<int>>& A, int i, const IntVec& beta) {
  int pair = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pair += beta[j] * A[j][i];
  IntVec r = beta;
  r[i] -= pair;
  return r;
}

// s_i on a coweight in Dynkin coordinates.
Coweight reflect_coweight(const std::vector<std::vector<int>>& A, int i, const Coweight& lambda) {
  Coweight r = lambda;
  for (std::size_t j = 0; j < lambda.size(); ++j) r[j] -= lambda[i] * A[i][j];
  return r;
}

bool is_positive(const IntVec& v) {
  bool any = false;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0) return false;
    any = any || v[i] > 0;
  }
  return any;
}

std::vector<std::vector<int>> builtin_cartan(TypeLabel t) {
  switch (t) {
  case TypeLabel::A1: return {{2}};
  case TypeLabel::A2: return {{2, -1}, {-1, 2}};
  // alpha_1 short, alpha_2 long.
  case TypeLabel::C2: return {{2, -2}, {-1, 2}};
  case TypeLabel::G2: return {{2, -3}, {-1, 2}};
  }
  return {};
}

std::size_t expected_positive_roots(TypeLabel t) {
  switch (t) {
  case TypeLabel::A1: return 1;
  case TypeLabel::A2: return 3;
  case TypeLabel::C2: return 4;
  case TypeLabel::G2: return 6;
  }
  return 0;
}

// Solve m * A = lambda for rational m.
std::vector<Rational> solve_left(const std::vector<std::vector<int>>& A, const Coweight& lambda) {
  const std::size_t n = A.size();
  // Work with the transposed system A^T m = lambda.
  std::vector<std::vector<Rational>> M(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) M[i][j] = A[j][i];
    M[i][n] = lambda[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (M[piv][col] == 0) ++piv;
    std::swap(M[piv], M[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || M[r][col] == 0) continue;
      Rational f = M[r][col] / M[col][col];
      for (std::size_t k = col; k <= n; ++k) M[r][k] -= f * M[col][k];
    }
  }
  std::vector<Rational> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = M[i][n] / M[i][i];
  return m;
}

} // namespace

// ---------------------------------------------------------------- FiniteWeylGroup

FiniteWeylGroup::FiniteWeylGroup(const std::vector<std::vector<int>>& A,
                                 const std::vector<IntVec>& positive_roots,
                                 const std::vector<Coweight>& positive_coroots)
    : rank_(A.size()), positive_count_(positive_roots.size()) {
  const std::size_t n = rank_;
  struct Raw {
    std::vector<Coweight> cw;
    std::vector<IntVec> rt;
  };
  std::vector<Raw> elems;
  std::map<std::vector<Coweight>, std::size_t> index;

  Raw id;
  for (std::size_t k = 0; k < n; ++k) {
    Coweight e(n);
    e[k] = 1;
    id.cw.push_back(e);
    id.rt.push_back(e);
  }
  elems.push_back(id);
  index[id.cw] = 0;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    for (std::size_t i = 0; i < n; ++i) {
      Raw next;
      for (const auto& r : elems[head].cw) next.cw.push_back(reflect_coweight(A, static_cast<int>(i), r));
      for (const auto& r : elems[head].rt) next.rt.push_back(reflect_root(A, static_cast<int>(i), r));
      if (!index.count(next.cw)) {
        index[next.cw] = elems.size();
        elems.push_back(std::move(next));
      }
    }
  }

  const std::size_t N = elems.size();
  coweight_rows_.resize(N);
  root_rows_.resize(N);
  for (std::size_t u = 0; u < N; ++u) {
    coweight_rows_[u] = elems[u].cw;
    root_rows_[u] = elems[u].rt;
  }

  negative_.assign(N * positive_count_, false);
  length_.assign(N, 0);
  for (std::size_t u = 0; u < N; ++u) {
    for (std::size_t k = 0; k < positive_count_; ++k) {
      bool neg = !is_positive(act_root(static_cast<Index>(u), positive_roots[k]));
      negative_[u * positive_count_ + k] = neg;
      length_[u] += neg ? 1 : 0;
    }
  }

  auto compose = [&](std::size_t a, std::size_t b) {
    // (ab)(lambda) = a(b(lambda)).
    std::vector<Coweight> rows;
    for (std::size_t k = 0; k < n; ++k)
      rows.push_back(act_coweight(static_cast<Index>(a), coweight_rows_[b][k]));
    return index.at(rows);
  };
  mul_.assign(N * N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b) mul_[a * N + b] = static_cast<Index>(compose(a, b));

  simple_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Coweight> rows;
    for (std::size_t k = 0; k < n; ++k) rows.push_back(reflect_coweight(A, static_cast<int>(i), id.cw[k]));
    simple_[i] = static_cast<Index>(index.at(rows));
  }
  inv_.assign(N, 0);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = 0; b < N; ++b)
      if (mul_[a * N + b] == 0) inv_[a] = static_cast<Index>(b);

  word_.resize(N);
  for (std::size_t u = 0; u < N; ++u) {
    std::size_t cur = u;
    while (length_[cur] > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        std::size_t next = mul_[simple_[i] * N + cur];
        if (length_[next] < length_[cur]) {
          word_[u].push_back(static_cast<int>(i) + 1);
          cur = next;
          break;
        }
      }
    }
  }
  longest_ = static_cast<Index>(std::max_element(length_.begin(), length_.end()) - length_.begin());

  // Reflections: lambda -> lambda - <lambda, gamma> gamma^vee.
  reflection_.assign(positive_count_, 0);
  for (std::size_t k = 0; k < positive_count_; ++k) {
    std::vector<Coweight> rows;
    for (std::size_t j = 0; j < n; ++j) rows.push_back(id.cw[j] - positive_coroots[k].scaled(positive_roots[k][j]));
    reflection_[k] = static_cast<Index>(index.at(rows));
  }
}

Coweight FiniteWeylGroup::act_coweight(Index u, const Coweight& lambda) const {
  Coweight r(rank_);
  const auto& rows = coweight_rows_[u];
  for (std::size_t k = 0; k < rank_; ++k)
    if (lambda[k] != 0) r += rows[k].scaled(lambda[k]);
  return r;
}

IntVec FiniteWeylGroup::act_root(Index u, const IntVec& root) const {
  IntVec r(rank_);
  const auto& rows = root_rows_[u];
  for (std::size_t k = 0; k < rank_; ++k)
    if (root[k] != 0) r += rows[k].scaled(root[k]);
  return r;
}

// ---------------------------------------------------------------- CartanDatum

CartanDatum::CartanDatum(TypeLabel label)
    : label_(label), cartan_(builtin_cartan(label)) {
  rank_ = cartan_.size();
  for (std::size_t i = 0; i < rank_; ++i) {
    if (cartan_[i][i] != 2) throw Error("Cartan matrix diagonal must be 2");
    for (std::size_t j = 0; j < rank_; ++j)
      if (i != j && cartan_[i][j] > 0) throw Error("Cartan matrix off-diagonal must be nonpositive");
  }

  // Orbit of the simple (root, coroot) pairs.
  std::map<IntVec, IntVec> all;   // root -> coroot
  std::deque<std::pair<IntVec, IntVec>> queue;
  for (std::size_t i = 0; i < rank_; ++i) {
    IntVec e(rank_);
    e[i] = 1;
    all[e] = e;
    queue.emplace_back(e, e);
  }
  while (!queue.empty()) {
    auto [r, cr] = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rank_; ++i) {
      IntVec r2 = reflect_root(cartan_, static_cast<int>(i), r);
      IntVec c2 = reflect_coroot(cartan_, static_cast<int>(i), cr);
      if (!all.count(r2)) {
        all[r2] = c2;
        queue.emplace_back(r2, c2);
      }
    }
  }
  std::vector<std::pair<IntVec, IntVec>> pos;
  for (const auto& [r, cr] : all)
    if (is_positive(r)) pos.emplace_back(r, cr);
  // Sort by height then coordinates so that index 0.. are simple roots.
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = std::accumulate(a.first.c.begin(), a.first.c.begin() + a.first.n, 0);
    int hb = std::accumulate(b.first.c.begin(), b.first.c.begin() + b.first.n, 0);
    if (ha != hb) return ha < hb;
    return a.first > b.first;
  });
  for (auto& [r, cr] : pos) {
    roots_.push_back(r);
    coroots_.push_back(cr);
  }
  if (roots_.size() != expected_positive_roots(label))
    throw Error("positive root count does not match the type");
  highest_ = roots_.size() - 1;
  std::vector<Coweight> coroot_weights;
  for (std::size_t k = 0; k < coroots_.size(); ++k) coroot_weights.push_back(coroot_coweight(k));
  weyl_ = FiniteWeylGroup(cartan_, roots_, coroot_weights);
}

int CartanDatum::pairing(const Coweight& lambda, std::size_t root_index) const {
  return dot(lambda, roots_[root_index]);
}

Coweight CartanDatum::coroot_coweight(std::size_t root_index) const {
  return from_coroot_coords(coroots_[root_index]);
}

Coweight CartanDatum::simple_coroot(int i) const {
  IntVec m(rank_);
  m[static_cast<std::size_t>(i)] = 1;
  return from_coroot_coords(m);
}

Coweight CartanDatum::reflect(int i, const Coweight& lambda) const {
  return reflect_coweight(cartan_, i, lambda);
}

bool CartanDatum::is_dominant(const Coweight& lambda) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (lambda[i] < 0) return false;
  return true;
}

bool CartanDatum::in_coroot_lattice(const Coweight& lambda) const {
  for (const auto& m : solve_left(cartan_, lambda))
    if (denominator(m) != 1) return false;
  return true;
}

Coweight CartanDatum::from_coroot_coords(const IntVec& m) const {
  Coweight r(rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t i = 0; i < rank_; ++i) r[j] += m[i] * cartan_[i][j];
  return r;
}

Coweight CartanDatum::dominant_representative(const Coweight& lambda) const {
  Coweight r = lambda;
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < rank_; ++i) {
      if (r[i] < 0) {
        r = reflect(static_cast<int>(i), r);
        changed = true;
      }
    }
    if (!changed) return r;
  }
}

int CartanDatum::translation_length(const Coweight& lambda) const {
  int s = 0;
  for (std::size_t k = 0; k < roots_.size(); ++k) s += std::abs(pairing(lambda, k));
  return s;
}

long long CartanDatum::form(const Coweight& x, const Coweight& y) const {
  long long s = 0;
  for (std::size_t k = 0; k < roots_.size(); ++k)
    s += static_cast<long long>(pairing(x, k)) * pairing(y, k);
  return s;
}

Coweight CartanDatum::dual_rho() const {
  Coweight r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) r[i] = 1;
  return r;
}

std::vector<std::vector<int>> CartanDatum::dual_cartan() const {
  std::vector<std::vector<int>> t(rank_, std::vector<int>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j) t[i][j] = cartan_[j][i];
  return t;
}

// ---------------------------------------------------------------- representations

std::set<Coweight> weyl_orbit(const CartanDatum& datum, const Coweight& lambda) {
  std::set<Coweight> orbit{lambda};
  std::deque<Coweight> queue{lambda};
  while (!queue.empty()) {
    Coweight mu = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < datum.rank(); ++i) {
      Coweight nu = datum.reflect(static_cast<int>(i), mu);
      if (orbit.insert(nu).second) queue.push_back(nu);
    }
  }
  return orbit;
}

namespace {

void require_dominant(const CartanDatum& datum, const Coweight& lambda) {
  if (lambda.size() != datum.rank())
    throw NonDominant("weight " + lambda.to_string() + " has the wrong rank");
  if (!datum.is_dominant(lambda))
    throw NonDominant("weight " + lambda.to_string() + " is not dominant");
}

// Enumerate all nonnegative integer vectors of length n with sum == depth.
void compositions(std::size_t n, int depth, IntVec& cur, std::size_t pos,
                  const std::function<void(const IntVec&)>& f) {
  if (pos + 1 == n) {
    cur[pos] = depth;
    f(cur);
    return;
  }
  for (int k = 0; k <= depth; ++k) {
    cur[pos] = k;
    compositions(n, depth - k, cur, pos + 1, f);
  }
}

} // namespace

WeightMultiplicities weight_multiplicities(const CartanDatum& datum, const Coweight& lambda) {
  require_dominant(datum, lambda);
  const std::size_t n = datum.rank();
  const auto& W = datum.weyl();

  // Depth in simple coroots from lambda down to w0(lambda).
  Coweight lowest = W.act_coweight(W.longest(), lambda);
  auto diff = solve_left(datum.cartan(), lambda - lowest);
  int max_depth = 0;
  for (const auto& d : diff) max_depth += static_cast<int>(numerator(d));

  std::vector<Coweight> simple_coroots;
  for (std::size_t i = 0; i < n; ++i) simple_coroots.push_back(datum.simple_coroot(static_cast<int>(i)));
  std::vector<Coweight> pos_coroots;
  for (std::size_t k = 0; k < datum.positive_coroots().size(); ++k)
    pos_coroots.push_back(datum.coroot_coweight(k));

  const Coweight rho = datum.dual_rho();
  const long long top = datum.form(lambda + rho, lambda + rho);

  WeightMultiplicities mult;
  mult[lambda] = 1;
  for (int depth = 1; depth <= max_depth; ++depth) {
    IntVec cur(n);
    compositions(n, depth, cur, 0, [&](const IntVec& c) {
      Coweight mu = lambda;
      for (std::size_t i = 0; i < n; ++i) mu -= simple_coroots[i].scaled(c[i]);
      const long long denom = top - datum.form(mu + rho, mu + rho);
      if (denom <= 0) return;
      long long num = 0;
      for (std::size_t b = 0; b < pos_coroots.size(); ++b) {
        const IntVec& beta_coords = datum.positive_coroots()[b];
        IntVec above = c;
        for (int k = 1;; ++k) {
          // mu + k*beta stays below lambda only while the depth vector is nonnegative.
          above -= beta_coords;
          bool inside = true;
          for (std::size_t i = 0; i < n; ++i) inside = inside && above[i] >= 0;
          if (!inside) break;
          Coweight up = mu + pos_coroots[b].scaled(k);
          auto it = mult.find(up);
          if (it != mult.end()) num += it->second * datum.form(up, pos_coroots[b]);
        }
      }
      num *= 2;
      if (num == 0) return;
      if (num % denom != 0) throw Error("Freudenthal recursion produced a non-integral multiplicity");
      mult[mu] = num / denom;
    });
  }
  return mult;
}

Integer weyl_dimension(const CartanDatum& datum, const Coweight& lambda) {
  require_dominant(datum, lambda);
  Integer num = 1;
  Integer den = 1;
  const Coweight rho = datum.dual_rho();
  for (std::size_t k = 0; k < datum.positive_roots().size(); ++k) {
    num *= datum.pairing(lambda + rho, k);
    den *= datum.pairing(rho, k);
  }
  return num / den;
}

WeightMultiplicities tensor_decompose(const CartanDatum& datum, const Coweight& lambda,
                                      const Coweight& mu) {
  require_dominant(datum, lambda);
  require_dominant(datum, mu);
  const Coweight rho = datum.dual_rho();
  std::map<Coweight, long long> acc;
  for (const auto& [nu, m] : weight_multiplicities(datum, lambda)) {
    Coweight xi = nu + mu + rho;
    int sign = 1;
    bool singular = false;
    for (;;) {
      std::size_t i = 0;
      while (i < datum.rank() && xi[i] > 0) ++i;
      if (i == datum.rank()) break;
      if (xi[i] == 0) {
        singular = true;
        break;
      }
      xi = datum.reflect(static_cast<int>(i), xi);
      sign = -sign;
    }
    if (singular) continue;
    acc[xi - rho] += sign * m;
  }
  WeightMultiplicities out;
  for (const auto& [k, m] : acc) {
    if (m < 0) throw Error("Klimyk rule produced a negative multiplicity");
    if (m > 0) out[k] = m;
  }
  return out;
}

std::vector<Coweight> small_dominant_coweights(const CartanDatum& datum, std::size_t count) {
  std::vector<Coweight> found;
  const int limit = static_cast<int>(3 * count + 6);
  const std::size_t n = datum.rank();
  for (int depth = 1; depth <= limit; ++depth) {
    IntVec cur(n);
    compositions(n, depth, cur, 0, [&](const IntVec& c) {
      if (datum.in_coroot_lattice(c)) found.push_back(c);
    });
  }
  std::sort(found.begin(), found.end(), [&](const Coweight& a, const Coweight& b) {
    int la = datum.translation_length(a), lb = datum.translation_length(b);
    if (la != lb) return la < lb;
    return a > b;
  });
  if (found.size() > count) found.resize(count);
  return found;
}

} // namespace affcell

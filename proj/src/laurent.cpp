#include "affcell/laurent.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace affcell {

LaurentPoly::LaurentPoly(long long constant) {
  if (constant != 0) terms_.push_back({0, Integer(constant)});
}

LaurentPoly::LaurentPoly(const Integer& constant) {
  if (constant != 0) terms_.push_back({0, constant});
}

LaurentPoly LaurentPoly::monomial(int exponent, Integer coefficient) {
  LaurentPoly p;
  if (coefficient != 0) p.terms_.push_back({exponent, std::move(coefficient)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<std::pair<int, Integer>> terms) {
  LaurentPoly p;
  p.terms_.reserve(terms.size());
  bool sorted = true;
  for (std::size_t i = 1; i < terms.size() && sorted; ++i) sorted = terms[i - 1].first < terms[i].first;
  if (!sorted) std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [e, c] : terms) {
    if (!p.terms_.empty() && p.terms_.back().exponent == e) p.terms_.back().coefficient += c;
    else p.terms_.push_back({e, std::move(c)});
    if (p.terms_.back().coefficient == 0) p.terms_.pop_back();
  }
  return p;
}

LaurentPoly LaurentPoly::from_sorted_terms(std::vector<Term> terms) {
  bool ok = true;
  for (std::size_t i = 0; i < terms.size() && ok; ++i)
    ok = terms[i].coefficient != 0 && (i == 0 || terms[i - 1].exponent < terms[i].exponent);
  if (!ok) {
    std::vector<std::pair<int, Integer>> pairs;
    for (auto& t : terms) pairs.emplace_back(t.exponent, std::move(t.coefficient));
    return from_terms(std::move(pairs));
  }
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

void LaurentPoly::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.coefficient == 0; });
}

std::optional<int> LaurentPoly::min_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().exponent;
}

std::optional<int> LaurentPoly::max_exponent() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.back().exponent;
}

Integer LaurentPoly::coeff_at(int exponent) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                             [](const Term& t, int e) { return t.exponent < e; });
  if (it != terms_.end() && it->exponent == exponent) return it->coefficient;
  return 0;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  r.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    r.terms_.push_back({-it->exponent, it->coefficient});
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.exponent += k;
  return r;
}

bool LaurentPoly::has_nonnegative_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term& t) { return t.coefficient > 0; });
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  for (const auto& t : terms_)
    if (t.exponent > 0) r.terms_.push_back(t);
  return r;
}

Integer LaurentPoly::at_one() const {
  Integer s = 0;
  for (const auto& t : terms_) s += t.coefficient;
  return s;
}

void LaurentPoly::add_scaled(const LaurentPoly& other, const Integer& c, int k) {
  if (other.terms_.empty() || c == 0) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->exponent < b->exponent + k)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == terms_.end() || b->exponent + k < a->exponent) {
      out.push_back({b->exponent + k, b->coefficient * c});
      ++b;
    } else {
      Integer s = a->coefficient + b->coefficient * c;
      if (s != 0) out.push_back({a->exponent, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  add_scaled(other, 1, 0);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  add_scaled(other, -1, 0);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.size() == 1) {
    LaurentPoly r;
    r.add_scaled(b, a.terms_.front().coefficient, a.terms_.front().exponent);
    return r;
  }
  if (b.size() == 1) {
    LaurentPoly r;
    r.add_scaled(a, b.terms_.front().coefficient, b.terms_.front().exponent);
    return r;
  }
  const int lo = a.terms_.front().exponent + b.terms_.front().exponent;
  const int hi = a.terms_.back().exponent + b.terms_.back().exponent;
  std::vector<Integer> dense(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_)
      dense[static_cast<std::size_t>(s.exponent + t.exponent - lo)] += s.coefficient * t.coefficient;
  LaurentPoly r;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0) r.terms_.push_back({lo + static_cast<int>(i), std::move(dense[i])});
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

void LaurentPoly::add_product(const LaurentPoly& factor, const LaurentPoly& other) {
  if (factor.size() == 1) {
    add_scaled(other, factor.terms_.front().coefficient, factor.terms_.front().exponent);
    return;
  }
  *this += factor * other;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& other) const {
  const std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = terms_[i].exponent <=> other.terms_[i].exponent; c != 0) return c;
    if (terms_[i].coefficient != other.terms_[i].coefficient)
      return terms_[i].coefficient < other.terms_[i].coefficient ? std::strong_ordering::less
                                                                 : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

std::vector<std::pair<int, Integer>> LaurentPoly::to_pairs() const {
  std::vector<std::pair<int, Integer>> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.emplace_back(t.exponent, t.coefficient);
  return out;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest power first, matching the usual way of writing these by hand.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coefficient;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (it->exponent == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << "*";
    os << "v";
    if (it->exponent != 1) os << "^" << it->exponent;
  }
  return os.str();
}

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }
LaurentPoly bar_involute(const LaurentPoly& a) { return a.bar(); }
Integer coeff_at(const LaurentPoly& a, int exponent) { return a.coeff_at(exponent); }

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.to_string(); }

} // namespace affcell

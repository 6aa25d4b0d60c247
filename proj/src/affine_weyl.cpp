#include "affcell/affine_weyl.hpp"

#include "affcell/errors.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>

namespace affcell {

namespace {

std::vector<std::vector<int>> builtin_coxeter(TypeLabel t) {
  switch (t) {
  case TypeLabel::A1: return {{1, 0}, {0, 1}};
  case TypeLabel::A2: return {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}};
  case TypeLabel::C2: return {{1, 4, 2}, {4, 1, 4}, {2, 4, 1}};
  case TypeLabel::G2: return {{1, 2, 3}, {2, 1, 6}, {3, 6, 1}};
  }
  return {};
}

} // namespace

bool word_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

AffineWeylGroup::AffineWeylGroup(TypeLabel label)
    : datum_(std::make_shared<const CartanDatum>(label)), coxeter_(builtin_coxeter(label)) {
  const auto& d = *datum_;
  s_theta_ = d.weyl().reflection(d.highest_root_index());
  theta_coroot_ = d.coroot_coweight(d.highest_root_index());
  verify_presentation();
}

void AffineWeylGroup::verify_presentation() const {
  const int n = generator_count();
  for (int s = 0; s < n; ++s) {
    if (length(generator(s)) != 1) throw Error("generator does not have length 1");
    for (int t = 0; t < n; ++t) {
      const int m = coxeter_entry(s, t);
      AffineElement st = multiply(generator(s), generator(t));
      AffineElement p = identity();
      const int limit = m == 0 ? 12 : m;
      for (int k = 1; k <= limit; ++k) {
        p = multiply(p, st);
        const bool is_id = p == identity();
        if (is_id != (k == m)) throw Error("Coxeter presentation check failed");
      }
    }
  }
}

void AffineWeylGroup::check_type(const AffineElement& x) const {
  if (x.type != label() || x.translation.size() != datum_->rank())
    throw TypeMismatch("element of type " + std::string(affine_name(x.type)) +
                       " used with group " + std::string(affine_name(label())));
}

AffineElement AffineWeylGroup::identity() const {
  return {label(), datum_->weyl().identity(), datum_->zero()};
}

AffineElement AffineWeylGroup::generator(int i) const {
  if (i < 0 || i >= generator_count()) throw Error("generator index out of range");
  if (i == 0) return {label(), s_theta_, -theta_coroot_};
  return {label(), datum_->weyl().simple(i - 1), datum_->zero()};
}

AffineElement AffineWeylGroup::translation(const Coweight& lambda) const {
  if (!datum_->in_coroot_lattice(lambda))
    throw Error("coweight " + lambda.to_string() + " is not in the coroot lattice");
  return {label(), datum_->weyl().identity(), lambda};
}

AffineElement AffineWeylGroup::element(FiniteWeylGroup::Index finite, const Coweight& lambda) const {
  return {label(), finite, lambda};
}

AffineElement AffineWeylGroup::multiply(const AffineElement& x, const AffineElement& y) const {
  check_type(x);
  check_type(y);
  const auto& W = datum_->weyl();
  // (u, l)(u', l') = (uu', u'^{-1}(l) + l')
  return {label(), W.multiply(x.finite, y.finite),
          W.act_coweight(W.inverse(y.finite), x.translation) + y.translation};
}

AffineElement AffineWeylGroup::inverse(const AffineElement& x) const {
  check_type(x);
  const auto& W = datum_->weyl();
  return {label(), W.inverse(x.finite), -W.act_coweight(x.finite, x.translation)};
}

AffineElement AffineWeylGroup::left_multiply(int s, const AffineElement& x) const {
  const auto& W = datum_->weyl();
  if (s == 0)
    return {label(), W.multiply(s_theta_, x.finite),
            W.act_coweight(W.inverse(x.finite), -theta_coroot_) + x.translation};
  return {label(), W.multiply(W.simple(s - 1), x.finite), x.translation};
}

AffineElement AffineWeylGroup::right_multiply(const AffineElement& x, int s) const {
  const auto& W = datum_->weyl();
  if (s == 0)
    return {label(), W.multiply(x.finite, s_theta_),
            W.act_coweight(s_theta_, x.translation) - theta_coroot_};
  return {label(), W.multiply(x.finite, W.simple(s - 1)),
          datum_->reflect(s - 1, x.translation)};
}

int AffineWeylGroup::length(const AffineElement& x) const {
  const auto& d = *datum_;
  const auto& W = d.weyl();
  int total = 0;
  for (std::size_t k = 0; k < d.positive_root_count(); ++k)
    total += std::abs(d.pairing(x.translation, k) + (W.sends_negative(x.finite, k) ? 1 : 0));
  return total;
}

bool AffineWeylGroup::is_left_descent(int s, const AffineElement& x) const {
  return length(left_multiply(s, x)) < length(x);
}

bool AffineWeylGroup::is_right_descent(const AffineElement& x, int s) const {
  return length(right_multiply(x, s)) < length(x);
}

GeneratorMask AffineWeylGroup::descents(const AffineElement& x, Side side) const {
  GeneratorMask m = 0;
  const int l = length(x);
  for (int s = 0; s < generator_count(); ++s) {
    const AffineElement y = side == Side::Left ? left_multiply(s, x) : right_multiply(x, s);
    if (length(y) < l) m |= GeneratorMask{1} << s;
  }
  return m;
}

std::vector<int> AffineWeylGroup::canonical_word(const AffineElement& x) const {
  check_type(x);
  std::vector<int> word;
  AffineElement cur = x;
  int l = length(cur);
  while (l > 0) {
    for (int s = 0; s < generator_count(); ++s) {
      AffineElement next = left_multiply(s, cur);
      const int ln = length(next);
      if (ln < l) {
        word.push_back(s);
        cur = next;
        l = ln;
        break;
      }
    }
  }
  return word;
}

AffineElement AffineWeylGroup::from_word(const std::vector<int>& word) const {
  AffineElement x = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= generator_count()) throw Error("generator index out of range in word");
    x = left_multiply(*it, x);
  }
  return x;
}

std::string AffineWeylGroup::to_string(const AffineElement& x) const {
  const auto word = canonical_word(x);
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(word[i]);
  }
  return out;
}

AffineElement AffineWeylGroup::parse(std::string_view text) const {
  if (text == "e" || text.empty()) return identity();
  std::vector<int> word;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t dot = text.find('.', pos);
    if (dot == std::string_view::npos) dot = text.size();
    std::string_view tok = text.substr(pos, dot - pos);
    int value = -1;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty())
      throw Error("malformed element word '" + std::string(text) + "'");
    word.push_back(value);
    pos = dot + 1;
  }
  return from_word(word);
}

bool AffineWeylGroup::is_min_double_coset_rep(const AffineElement& x) const {
  const GeneratorMask finite_mask = ~GeneratorMask{1};
  return (descents(x, Side::Left) & finite_mask) == 0 && (descents(x, Side::Right) & finite_mask) == 0;
}

bool AffineWeylGroup::bruhat_leq(const AffineElement& x, const AffineElement& w) const {
  check_type(x);
  check_type(w);
  AffineElement cur = x;
  int lcur = length(cur);
  const auto word = canonical_word(w);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (lcur > static_cast<int>(word.size() - i)) return false;
    AffineElement next = left_multiply(word[i], cur);
    const int ln = length(next);
    if (ln < lcur) {
      cur = next;
      lcur = ln;
    }
  }
  return lcur == 0;
}

Coweight AffineWeylGroup::double_coset_weight(const AffineElement& x) const {
  return datum_->dominant_representative(x.translation);
}

std::vector<AffineElement> AffineWeylGroup::enumerate_ball(int bound) const {
  if (bound < 0) throw Error("ball bound must be nonnegative");
  std::vector<AffineElement> out{identity()};
  std::vector<AffineElement> shell{identity()};
  for (int l = 1; l <= bound; ++l) {
    std::unordered_set<AffineElement> next;
    for (const auto& x : shell)
      for (int s = 0; s < generator_count(); ++s) {
        AffineElement y = left_multiply(s, x);
        if (length(y) == l) next.insert(y);
      }
    std::vector<std::pair<std::vector<int>, AffineElement>> keyed;
    keyed.reserve(next.size());
    for (const auto& y : next) keyed.emplace_back(canonical_word(y), y);
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    shell.clear();
    for (auto& [w, y] : keyed) {
      shell.push_back(y);
      out.push_back(y);
    }
  }
  return out;
}

std::vector<AffineElement> enumerate_ball(const AffineWeylGroup& group, int bound) {
  return group.enumerate_ball(bound);
}

} // namespace affcell

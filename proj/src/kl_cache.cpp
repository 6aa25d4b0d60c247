#include "affcell/kl_cache.hpp"

#include "affcell/errors.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <mutex>
#include <sstream>

namespace affcell {

namespace {

constexpr const char* kMagic = "affcell-klcache";

} // namespace

std::string encode_poly(const LaurentPoly& p) {
  std::string out;
  for (const auto& t : p.terms()) {
    if (!out.empty()) out += ',';
    out += std::to_string(t.exponent);
    out += ':';
    out += t.coefficient.str();
  }
  return out.empty() ? std::string("0") : out;
}

LaurentPoly decode_poly(std::string_view text) {
  if (text == "0") return {};
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<std::size_t>(std::count(text.begin(), text.end(), ',')) + 1);
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t j = text.find(',', i);
    if (j == std::string_view::npos) j = text.size();
    std::string_view item = text.substr(i, j - i);
    const std::size_t colon = item.find(':');
    int e = 0;
    long long c = 0;
    if (colon == std::string_view::npos ||
        std::from_chars(item.data(), item.data() + colon, e).ec != std::errc())
      throw CacheFormatError("malformed cache term '" + std::string(item) + "'");
    std::string_view cs = item.substr(colon + 1);
    auto [ptr, ec] = std::from_chars(cs.data(), cs.data() + cs.size(), c);
    if (ec == std::errc() && ptr == cs.data() + cs.size()) {
      terms.push_back({e, Integer(c)});
    } else {
      try {
        terms.push_back({e, Integer(std::string(cs))});
      } catch (const std::exception&) {
        throw CacheFormatError("malformed cache coefficient '" + std::string(cs) + "'");
      }
    }
    i = j + 1;
  }
  return LaurentPoly::from_sorted_terms(std::move(terms));
}

std::string cache_header_line(TypeLabel type) {
  return std::string(kMagic) + " " + std::to_string(kCacheFormatVersion) + " " + std::string(affine_name(type)) +
         " " + kConventionId;
}

std::filesystem::path default_cache_file(const std::filesystem::path& dir, TypeLabel type) {
  return dir / (std::string(type_name(type)) + ".klcache");
}

KLCache::KLCache(TypeLabel type) : type_(type) {}

namespace {

/// Up to four space-separated fields of a record line.
struct Fields {
  std::array<std::string_view, 5> f{};
  std::size_t n = 0;
};

Fields fields_of(std::string_view line) {
  Fields out;
  std::size_t i = 0;
  while (i < line.size() && out.n < out.f.size()) {
    std::size_t j = line.find(' ', i);
    if (j == std::string_view::npos) j = line.size();
    if (j > i) out.f[out.n++] = line.substr(i, j - i);
    i = j + 1;
  }
  if (i < line.size()) out.n = out.f.size() + 1; // too many fields
  return out;
}

void decode_lines(std::string_view text, std::size_t key_field, std::size_t poly_field,
                  const std::function<void(std::string_view, LaurentPoly)>& visit) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const Fields f = fields_of(text.substr(pos, end - pos));
    visit(f.f[key_field], decode_poly(f.f[poly_field]));
    pos = end + 1;
  }
}

} // namespace

void KLCache::index_block(std::string_view all) {
  // Open record groups: the text of an unterminated group is dropped when a
  // different group starts or the text ends.
  std::string_view row_key, prod_x, prod_y;
  std::size_t row_start = std::string_view::npos, prod_start = std::string_view::npos;
  std::size_t pos = 0;
  while (pos < all.size()) {
    const std::size_t end = all.find('\n', pos);
    if (end == std::string_view::npos) break; // interrupted final line
    const std::string_view line = all.substr(pos, end - pos);
    const Fields fl = fields_of(line);
    const auto& f = fl.f;
    if (fl.n == 4 && f[0] == "K") {
      if (f[1] == f[2]) {
        if (f[3] != "0:1") throw CacheFormatError("diagonal record for " + std::string(f[2]) + " is not 1");
        std::string_view body;
        if (row_start != std::string_view::npos && row_key == f[2]) body = all.substr(row_start, pos - row_start);
        rows_.insert_or_assign(f[2], body);
        row_start = std::string_view::npos;
      } else {
        if (row_start == std::string_view::npos || row_key != f[2]) {
          row_start = pos;
          row_key = f[2];
        }
      }
    } else if (fl.n == 4 && f[0] == "H" && f[3] == ".") {
      std::string_view body;
      if (prod_start != std::string_view::npos && prod_x == f[1] && prod_y == f[2])
        body = all.substr(prod_start, pos - prod_start);
      products_.insert_or_assign(Key{f[1], f[2]}, body);
      prod_start = std::string_view::npos;
    } else if (fl.n == 5 && f[0] == "H") {
      if (prod_start == std::string_view::npos || prod_x != f[1] || prod_y != f[2]) {
        prod_start = pos;
        prod_x = f[1];
        prod_y = f[2];
      }
    } else {
      throw CacheFormatError("malformed cache record '" + std::string(line) + "'");
    }
    pos = end + 1;
  }
}

void KLCache::open(const std::filesystem::path& path) {
  std::unique_lock lock(mutex_);
  path_ = path;
  rows_.clear();
  products_.clear();
  blocks_.clear();
  pending_blocks_.clear();
  header_on_disk_ = false;
  std::ifstream in(path, std::ios::binary);
  if (!in) return;
  const auto size = std::filesystem::file_size(path);
  std::string content(size, '\0');
  in.read(content.data(), static_cast<std::streamsize>(size));
  content.resize(static_cast<std::size_t>(in.gcount()));
  if (content.empty()) return;
  const std::string_view all(content);
  const std::size_t first = all.find('\n');
  if (first == std::string_view::npos || all.substr(0, first) != cache_header_line(type_))
    throw CacheFormatError("cache file " + path.string() + " has header '" +
                           std::string(all.substr(0, std::min(first, all.size()))) + "', expected '" +
                           cache_header_line(type_) + "'");
  header_on_disk_ = true;
  blocks_.push_back(content.substr(first + 1));
  index_block(blocks_.back());
}

bool KLCache::visit_row(std::string_view w, const std::function<void(std::string_view, LaurentPoly)>& visit) const {
  std::string_view body;
  {
    std::shared_lock lock(mutex_);
    auto it = rows_.find(w);
    if (it == rows_.end()) return false;
    body = it->second;
  }
  decode_lines(body, 1, 3, visit);
  return true;
}

bool KLCache::visit_product(std::string_view x, std::string_view y,
                            const std::function<void(std::string_view, LaurentPoly)>& visit) const {
  std::string_view body;
  {
    std::shared_lock lock(mutex_);
    auto it = products_.find(Key{x, y});
    if (it == products_.end()) return false;
    body = it->second;
  }
  decode_lines(body, 3, 4, visit);
  return true;
}

std::optional<KLCache::Row> KLCache::row(const std::string& w) const {
  Row out;
  if (!visit_row(w, [&](std::string_view x, LaurentPoly p) { out.emplace_back(std::string(x), std::move(p)); }))
    return std::nullopt;
  return out;
}

std::optional<LaurentPoly> KLCache::lookup(const std::string& x, const std::string& w) const {
  if (x == w) {
    std::shared_lock lock(mutex_);
    if (!rows_.count(w)) return std::nullopt;
    return LaurentPoly(1);
  }
  LaurentPoly found;
  if (!visit_row(w, [&](std::string_view key, LaurentPoly p) {
        if (key == x) found = std::move(p);
      }))
    return std::nullopt;
  return found;
}

void KLCache::put_row(const std::string& w, Row entries) {
  std::string text;
  for (const auto& [x, p] : entries) text += "K " + x + ' ' + w + ' ' + encode_poly(p) + '\n';
  text += "K " + w + ' ' + w + " 0:1\n";
  std::unique_lock lock(mutex_);
  if (rows_.count(w)) return;
  blocks_.push_back(std::move(text));
  pending_blocks_.push_back(blocks_.size() - 1);
  index_block(blocks_.back());
}

std::optional<KLCache::Row> KLCache::product(const std::string& x, const std::string& y) const {
  Row out;
  if (!visit_product(x, y, [&](std::string_view z, LaurentPoly p) { out.emplace_back(std::string(z), std::move(p)); }))
    return std::nullopt;
  return out;
}

bool KLCache::has_product(const std::string& x, const std::string& y) const {
  std::shared_lock lock(mutex_);
  return products_.count(Key{x, y}) != 0;
}

void KLCache::put_product(const std::string& x, const std::string& y, Row terms) {
  std::string text;
  for (const auto& [z, p] : terms) text += "H " + x + ' ' + y + ' ' + z + ' ' + encode_poly(p) + '\n';
  text += "H " + x + ' ' + y + " .\n";
  std::unique_lock lock(mutex_);
  if (products_.count(Key{x, y})) return;
  blocks_.push_back(std::move(text));
  pending_blocks_.push_back(blocks_.size() - 1);
  index_block(blocks_.back());
}

std::size_t KLCache::row_count() const {
  std::shared_lock lock(mutex_);
  return rows_.size();
}

std::size_t KLCache::entry_count() const {
  std::shared_lock lock(mutex_);
  std::size_t n = 0;
  for (const auto& [w, body] : rows_) n += static_cast<std::size_t>(std::count(body.begin(), body.end(), '\n')) + 1;
  return n;
}

std::size_t KLCache::product_count() const {
  std::shared_lock lock(mutex_);
  return products_.size();
}

std::size_t KLCache::pending() const {
  std::shared_lock lock(mutex_);
  return pending_blocks_.size();
}

void KLCache::flush() {
  std::unique_lock lock(mutex_);
  if (!path_ || pending_blocks_.empty()) return;
  if (path_->has_parent_path()) std::filesystem::create_directories(path_->parent_path());
  std::ofstream out(*path_, std::ios::binary | std::ios::app);
  if (!out) throw CacheFormatError("cannot write cache file " + path_->string());
  if (!header_on_disk_) out << cache_header_line(type_) << '\n';
  for (std::size_t b : pending_blocks_) out << blocks_[b];
  out.flush();
  if (!out) throw CacheFormatError("failed writing cache file " + path_->string());
  header_on_disk_ = true;
  pending_blocks_.clear();
}

} // namespace affcell

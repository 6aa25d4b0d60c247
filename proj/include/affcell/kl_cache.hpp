#pragma once

#include "affcell/laurent.hpp"
#include "affcell/root_data.hpp"

#include <deque>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace affcell {

/// Normalization bridge stamped into every cache header and report.
inline constexpr const char* kConventionId =
    "T_s^2=1+(v^-1-v)T_s;C_s=T_s+v;p_xw(v)=v^(l(w)-l(x))P_xw(v^-2)";

inline constexpr int kCacheFormatVersion = 1;

/// Persistent memo of KL polynomials and of products C_x C_y, keyed by
/// canonical words.
///
/// File layout: one header line, then records
///   K <x> <w> <poly>       p_{x,w} for x < w
///   K <w> <w> 0:1          closes the row of w
///   H <x> <y> <z> <poly>   h_{x,y,z}
///   H <x> <y> .            closes the product C_x C_y
/// where <poly> is "e:c,e:c,..." sorted by exponent. A row or product whose
/// closing record is missing (interrupted append) is ignored on load.
class KLCache {
public:
  using Row = std::vector<std::pair<std::string, LaurentPoly>>;

  explicit KLCache(TypeLabel type);

  TypeLabel type() const { return type_; }

  /// Reads an existing file, or starts an empty cache bound to `path` if
  /// the file does not exist. Rejects foreign headers with CacheFormatError.
  void open(const std::filesystem::path& path);
  const std::optional<std::filesystem::path>& path() const { return path_; }

  /// Off-diagonal part of the row of w (zero entries omitted).
  std::optional<Row> row(const std::string& w) const;
  /// Decodes the row of w entry by entry; false when it is not cached.
  bool visit_row(std::string_view w, const std::function<void(std::string_view, LaurentPoly)>& visit) const;
  /// Idempotent: a row that is already present is left untouched.
  void put_row(const std::string& w, Row entries);
  /// Single entry lookup; nullopt when the row of w is not cached.
  std::optional<LaurentPoly> lookup(const std::string& x, const std::string& w) const;

  /// z -> h_{x,y,z} for a cached product C_x C_y.
  std::optional<Row> product(const std::string& x, const std::string& y) const;
  bool visit_product(std::string_view x, std::string_view y,
                     const std::function<void(std::string_view, LaurentPoly)>& visit) const;
  bool has_product(const std::string& x, const std::string& y) const;
  void put_product(const std::string& x, const std::string& y, Row terms);

  std::size_t row_count() const;
  std::size_t entry_count() const;
  std::size_t product_count() const;
  std::size_t pending() const;

  /// Appends records added since the last flush to the backing file.
  void flush();

private:
  using Key = std::pair<std::string_view, std::string_view>;
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept {
      const std::hash<std::string_view> h;
      return h(k.first) * 1000003u ^ h(k.second);
    }
  };

  TypeLabel type_;
  std::optional<std::filesystem::path> path_;
  mutable std::shared_mutex mutex_;
  // Records are kept as text and decoded on access. Keys and values view
  // into `blocks_`, whose strings never move.
  std::deque<std::string> blocks_;
  std::unordered_map<std::string_view, std::string_view> rows_;
  std::unordered_map<Key, std::string_view, KeyHash> products_;
  std::vector<std::size_t> pending_blocks_;
  bool header_on_disk_ = false;

  void index_block(std::string_view text);
};

std::string cache_header_line(TypeLabel type);
/// Default cache file for a type inside `dir`.
std::filesystem::path default_cache_file(const std::filesystem::path& dir, TypeLabel type);

std::string encode_poly(const LaurentPoly& p);
/// Inverse of encode_poly; throws CacheFormatError.
LaurentPoly decode_poly(std::string_view text);

} // namespace affcell

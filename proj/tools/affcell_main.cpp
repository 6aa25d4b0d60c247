#include "affcell/bernstein.hpp"
#include "affcell/errors.hpp"
#include "affcell/report.hpp"
#include "affcell/verify.hpp"
#include "affcell/workspace.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <sstream>

using namespace affcell;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

class UsageError : public Error {
public:
  using Error::Error;
};

struct Options {
  std::string type;
  std::optional<int> bound;
  std::string cache;
  std::string out = "text";
  int jobs = 1;
  std::optional<int> cell;
  std::string lambda;
  std::string suite;
  std::string x, w;
};

std::unique_ptr<KLCache> open_cache(const Options& o, TypeLabel type) {
  std::filesystem::path path;
  if (!o.cache.empty()) {
    path = o.cache;
    if (std::filesystem::is_directory(path) || o.cache.back() == '/') path = default_cache_file(path, type);
  } else if (const char* dir = std::getenv("AFFCELL_CACHE_DIR"); dir && *dir) {
    path = default_cache_file(dir, type);
  } else {
    return nullptr;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  auto cache = std::make_unique<KLCache>(type);
  cache->open(path);
  return cache;
}

int checked_bound(const Options& o, TypeLabel type) {
  const int b = o.bound.value_or(default_bound(type));
  if (b < 0 || b > kBoundCeiling)
    throw UsageError("--bound must lie in [0, " + std::to_string(kBoundCeiling) + "], got " + std::to_string(b));
  return b;
}

Coweight parse_lambda(const std::string& s, const CartanDatum& datum) {
  std::vector<int> parts;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("--lambda expects comma-separated integers, got '" + s + "'");
    }
  }
  if (parts.size() != datum.rank())
    throw UsageError("--lambda needs " + std::to_string(datum.rank()) + " Dynkin labels, got '" + s + "'");
  Coweight l(datum.rank());
  for (std::size_t i = 0; i < parts.size(); ++i) l[i] = parts[i];
  if (!datum.is_dominant(l)) throw UsageError("--lambda " + l.to_string() + " is not dominant");
  if (!datum.in_coroot_lattice(l)) throw UsageError("--lambda " + l.to_string() + " is not in the coroot lattice");
  return l;
}

int cell_arg(const Options& o, const Workspace& ws) {
  if (!o.cell) throw UsageError("--cell is required");
  const int n = static_cast<int>(ws.partition().cells().size());
  if (*o.cell < 0 || *o.cell >= n)
    throw UsageError("--cell must lie in [0, " + std::to_string(n - 1) + "] at this bound");
  return *o.cell;
}

Index element_arg(const KLTable& t, const std::string& word) {
  const AffineElement e = t.group().parse(word);
  const int len = t.group().length(e);
  if (len > t.bound())
    throw BoundExceeded(word + " has length " + std::to_string(len) + ", beyond the table bound", len);
  return *t.find(e);
}

Report run(const std::string& command, const Options& o, bool& failed) {
  if (command == "verify") {
    const TypeLabel type = parse_type_label(o.type);
    const int b = checked_bound(o, type);
    auto cache = open_cache(o, type);
    CheckList checks = run_suite(o.suite, type, b, cache.get(), o.jobs);
    failed = !all_passed(checks);
    return verify_report(o.suite, type, b, checks);
  }
  const TypeLabel type = parse_type_label(o.type);
  auto cache = open_cache(o, type);
  if (command == "cache-info") {
    if (!cache) throw UsageError("cache-info needs --cache or AFFCELL_CACHE_DIR");
    return cache_info_report(*cache);
  }
  if (command == "klpoly") {
    AffineWeylGroup group(type);
    const int need = std::max(group.length(group.parse(o.x)), group.length(group.parse(o.w)));
    if (need > kBoundCeiling + kCellCheckMargin)
      throw BoundExceeded(o.w + " is beyond the hard ceiling", need);
    KLTable table(group, need, cache.get(), o.jobs);
    return klpoly_report(table, element_arg(table, o.x), element_arg(table, o.w));
  }
  const int b = checked_bound(o, type);
  if (command == "phi") {
    AffineWeylGroup group(type);
    const Coweight lambda = parse_lambda(o.lambda, group.datum());
    const int pb = phi_bound(type, {lambda}, b, cache.get(), o.jobs);
    Workspace ws(type, pb, cache.get(), o.jobs, std::min(pb, default_bound(type)));
    Workspace larger(type, pb + 2, cache.get(), o.jobs, std::min(pb, default_bound(type)));
    const int c = cell_arg(o, ws);
    const HeckeElement z = bernstein_central(ws.hecke(), lambda).expansion;
    PhiOutcome phi;
    phi.cell = c;
    phi.lambda = lambda;
    phi.bound = pb;
    phi.result = phi_c(z, ws.ring(), c);
    phi.central = is_central(ws.hecke(), z);
    const KLTable& t2 = larger.table();
    const int c2 = larger.partition().cell_of(*t2.find(ws.table().element(ws.partition().cell(c).members.front())));
    const JElement other = phi_c(z, larger.ring(), c2);
    std::map<std::string, LaurentPoly> a, bw;
    for (const auto& [w, v] : phi.result) a.emplace(ws.table().word(w), v);
    for (const auto& [w, v] : other) bw.emplace(t2.word(w), v);
    phi.stable = a == bw;
    failed = !phi.central || !phi.stable;
    return phi_report(ws, phi);
  }
  Workspace ws(type, b, cache.get(), o.jobs);
  if (command == "cells") return cells_report(ws);
  if (command == "jring") return jring_report(ws, cell_arg(o, ws));
  if (command == "duflo") return duflo_report(ws);
  if (command == "bijection") return bijection_report(ws);
  throw UsageError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kazhdan-Lusztig cells, the asymptotic ring J and the Bernstein center for small affine types"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub, bool with_bound) {
    if (with_bound)
      sub->add_option("--bound", o.bound, "cell bound: elements of length <= bound (ceiling 24)");
    sub->add_option("--cache", o.cache, "KL cache file, or a directory holding <type>.klcache");
    sub->add_option("--out", o.out, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::Range(1, 256));
  };
  auto typed = [&](const char* name, const char* help, bool with_bound) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("type", o.type, "affine type: A1~, A2~, C2~, G2~ (tilde optional)")->required();
    common(sub, with_bound);
    return sub;
  };

  typed("cells", "two-sided cells, a-values, Duflo involutions and the cell order", true);
  CLI::App* kl = typed("klpoly", "KL polynomial p_{x,w} and mu(x,w)", false);
  kl->add_option("x", o.x, "lower element as a word, e.g. e or 1.2")->required();
  kl->add_option("w", o.w, "upper element as a word, e.g. 1.2.1")->required();
  typed("jring", "structure constants of J on one two-sided cell", true)
      ->add_option("--cell", o.cell, "cell index")->required();
  typed("duflo", "Duflo involutions and the J^f basis of every cell", true);
  CLI::App* phi = typed("phi", "phi_c applied to the central element B([V_lambda])", true);
  phi->add_option("--cell", o.cell, "cell index")->required();
  phi->add_option("--lambda", o.lambda, "dominant weight of the dual group in Dynkin labels, e.g. 1,1")->required();
  typed("bijection", "match cells with unipotent classes of the dual group", true);
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--type", o.type, "affine type")->required();
  common(verify, true);
  typed("cache-info", "summarize a KL cache file", false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    bool failed = false;
    Report r = run(command, o, failed);
    std::cout << render(r, parse_output_format(o.out));
    return failed ? kExitVerify : kExitOk;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what();
    if (e.required_bound()) std::cerr << " (smallest sufficient bound: " << *e.required_bound() << ")";
    std::cerr << "\n";
    return kExitBound;
  } catch (const NoBijection& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const ClosureViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const IdealViolation& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerify;
  } catch (const CacheFormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

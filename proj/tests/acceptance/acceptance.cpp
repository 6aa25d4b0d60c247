// Acceptance suite: one PASS/FAIL line per criterion, exact comparisons only.

#include "affcell/bernstein.hpp"
#include "affcell/dual.hpp"
#include "affcell/errors.hpp"
#include "affcell/verify.hpp"
#include "affcell/workspace.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <sys/wait.h>

using namespace affcell;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes.push_back("failed: " + what);
    }
  }
  void absorb(const CheckList& checks) {
    for (const auto& c : checks)
      if (!c.passed) require(false, c.name + " (" + c.detail + ")");
  }
};

template <class T>
std::string set_string(const std::multiset<T>& xs) {
  std::ostringstream s;
  s << "{";
  bool first = true;
  for (const auto& x : xs) {
    s << (first ? "" : ",") << x;
    first = false;
  }
  return s.str() + "}";
}

std::set<std::string> words(const KLTable& t, const std::vector<Index>& xs) {
  std::set<std::string> out;
  for (Index x : xs) out.insert(t.word(x));
  return out;
}

std::multiset<int> a_values(const Workspace& ws) {
  std::multiset<int> out;
  for (const auto& c : ws.partition().cells()) out.insert(ws.ring().a_value(c.index).value);
  return out;
}

std::string summary(const Workspace& ws) {
  return std::string(affine_name(ws.type())) + "@" + std::to_string(ws.bound()) + ": " +
         std::to_string(ws.partition().cells().size()) + " cells, a=" + set_string(a_values(ws));
}

int report(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const BoundExceeded& e) {
    o.require(false, std::string("BoundExceeded: ") + e.what());
  } catch (const std::exception& e) {
    o.require(false, e.what());
  }
  std::ostringstream line;
  line << (o.passed ? "PASS" : "FAIL") << " criterion " << number << " (" << title << ")";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", seconds_since(start));
  line << " [" << buf << "]";
  for (const auto& n : o.notes) line << "; " << n;
  std::cout << line.str() << std::endl;
  return o.passed ? 0 : 1;
}

struct Run {
  int code = -1;
  std::string out;
  double seconds = 0;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(AFFCELL_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  const auto start = Clock::now();
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw Error("cannot start " + cmd);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.seconds = seconds_since(start);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path fresh_dir() {
  static std::mt19937_64 rng(std::random_device{}());
  fs::path dir = fs::temp_directory_path() / ("affcell-acceptance-" + std::to_string(rng()));
  fs::create_directories(dir);
  return dir;
}

void criterion1(Outcome& o) {
  for (TypeLabel type : {TypeLabel::A1, TypeLabel::A2}) {
    AffineWeylGroup g(type);
    HeckeAlgebra h(g);
    KLTable t(g, 12);
    const CheckList checks = check_kl_layer(h, t, 12, 8);
    o.absorb(checks);
    o.notes.push_back(std::string(affine_name(type)) + ": " + std::to_string(checks.size()) + " checks on " +
                      std::to_string(t.size()) + " elements");
  }
}

void criterion2(Outcome& o) {
  Workspace a1(TypeLabel::A1, 8);
  o.require(a1.partition().cells().size() == 2, "A1~ has 2 cells");
  o.require(a1.partition().all_complete(), "A1~ cells complete");
  o.require(a_values(a1) == std::multiset<int>{0, 1}, "A1~ a-values {0,1}");
  for (const auto& c : a1.partition().cells()) o.require(a1.ring().a_value(c.index).exact, "A1~ a exact");
  std::set<std::set<std::string>> duflo;
  for (const auto& c : a1.partition().cells()) duflo.insert(words(a1.table(), a1.ring().duflo(c.index)));
  o.require(duflo == std::set<std::set<std::string>>{{"e"}, {"0", "1"}}, "A1~ Duflo sets {e}, {0,1}");
  Workspace a2(TypeLabel::A2, 12);
  o.require(a2.partition().cells().size() == 3, "A2~ has 3 cells");
  o.require(a2.partition().all_complete(), "A2~ cells complete");
  o.require(a_values(a2) == std::multiset<int>{0, 1, 3}, "A2~ a-values {0,1,3}");
  for (const auto& c : a2.partition().cells()) o.require(a2.ring().a_value(c.index).exact, "A2~ a exact");
  o.notes.push_back(summary(a1));
  o.notes.push_back(summary(a2));
}

void criterion3(Outcome& o) {
  for (auto [type, bound, count] : {std::tuple{TypeLabel::C2, 16, 4}, std::tuple{TypeLabel::G2, 20, 5}}) {
    Workspace ws(type, bound);
    const std::string name(affine_name(type));
    o.require(ws.partition().all_complete(), name + " cells complete");
    o.require(static_cast<int>(ws.partition().cells().size()) == count, name + " cell count");
    const auto classes = unipotent_classes(ws.datum());
    o.require(static_cast<int>(classes.size()) == count, name + " class count");
    std::multiset<int> sd;
    for (const auto& c : classes) sd.insert(c.springer_dim);
    o.require(a_values(ws) == sd, name + " a-values equal Springer dimensions " + set_string(sd));
    for (const auto& c : ws.partition().cells()) o.require(ws.ring().a_value(c.index).exact, name + " a exact");
    const auto m = match_cells_to_classes(summarize_cells(ws.ring()), classes);
    o.require(m.size() == classes.size(), name + " bijection");
    o.notes.push_back(summary(ws));
  }
}

void criterion4and5(Outcome& o4, Outcome& o5) {
  for (TypeLabel type : {TypeLabel::A1, TypeLabel::A2, TypeLabel::C2, TypeLabel::G2}) {
    Workspace ws(type, default_bound(type));
    o4.absorb(check_jring(ws));
    o5.absorb(check_jf(ws));
    std::size_t basis = 0;
    for (const auto& c : ws.partition().cells()) basis += ws.ring().jf(c.index).basis.size();
    o4.notes.push_back(std::string(affine_name(type)) + "@" + std::to_string(ws.bound()) + " products with l-sum <= " +
                       std::to_string(ws.ring().a_bound()));
    o5.notes.push_back(std::string(affine_name(type)) + ": " + std::to_string(basis) + " J^f basis elements");
  }
}

void criterion6(Outcome& o) {
  {
    Workspace ws(TypeLabel::A1, 14);
    const auto labels = first_lowest_labels(ws, 4);
    o.require(labels.size() == 4, "A1~ has 4 J^f basis elements in the ball");
    std::vector<std::pair<Coweight, Coweight>> pairs;
    for (const auto& a : labels)
      for (const auto& b : labels)
        if (a[0] + b[0] <= labels.back()[0]) pairs.emplace_back(a, b);
    o.absorb(check_lowest_cell_products(ws, pairs));
    o.notes.push_back("A1~: " + std::to_string(pairs.size()) + " products of V0,V2,V4,V6 closed in the basis");
  }
  {
    Workspace ws(TypeLabel::A2, 22, nullptr, 1, 12);
    const auto lambdas = small_dominant_coweights(ws.datum(), 2);
    std::vector<std::pair<Coweight, Coweight>> pairs;
    const Coweight zero = ws.datum().zero();
    pairs.emplace_back(zero, zero);
    for (const auto& l : lambdas) {
      pairs.emplace_back(zero, l);
      pairs.emplace_back(l, zero);
    }
    pairs.emplace_back(lambdas[0], lambdas[0]);
    pairs.emplace_back(lambdas[0], lambdas[1]);
    pairs.emplace_back(lambdas[1], lambdas[0]);
    o.absorb(check_lowest_cell_products(ws, pairs));
    o.notes.push_back("A2~: products among V0, V" + lambdas[0].to_string() + ", V" + lambdas[1].to_string() +
                      " match tensor_decompose");
  }
}

void criterion7and8(Outcome& o7, Outcome& o8) {
  for (TypeLabel type : {TypeLabel::A1, TypeLabel::A2}) {
    AffineWeylGroup g(type);
    const auto lambdas = small_dominant_coweights(g.datum(), 2);
    const int pb = phi_bound(type, lambdas, default_bound(type));
    const int ab = default_bound(type);
    Workspace ws(type, pb, nullptr, 1, ab);
    Workspace larger(type, pb + 2, nullptr, 1, ab);
    o7.absorb(check_bernstein(ws, lambdas));
    for (const auto& c : check_phi(ws, larger, lambdas)) {
      o7.require(c.passed && c.detail.find("skipped") == std::string::npos, c.name + " (" + c.detail + ")");
    }
    o7.notes.push_back(std::string(affine_name(type)) + ": phi at bounds " + std::to_string(pb) + " and " +
                       std::to_string(pb + 2) + ", weights " + lambdas[0].to_string() + ", " +
                       lambdas[1].to_string());
    // The adjoint representation has highest weight the highest coroot of G.
    const Coweight adj = g.datum().coroot_coweight(g.datum().highest_root_index());
    for (const auto& c : check_phi_traces(ws, {adj}))
      o8.require(c.passed && c.detail.find("skipped") == std::string::npos, c.name + " (" + c.detail + ")");
    const JElement phi = phi_c(bernstein_central(ws.hecke(), adj).expansion, ws.ring(), 0);
    o8.notes.push_back(std::string(affine_name(type)) + " adjoint " + adj.to_string() + ": t_e coefficient " +
                       phi.at(0).to_string() + ", lowest-cell shift 0");
  }
}

void criterion9(Outcome& o) {
  const Run a = run_cli("verify paper-suite --type A2~");
  const Run b = run_cli("verify paper-suite --type A2~");
  o.require(a.code == 0 && b.code == 0, "verify exits 0");
  o.require(!a.out.empty() && a.out == b.out, "repeated verify output byte-identical");
  double cold = 1e9, warm = 1e9;
  for (int rep = 0; rep < 3; ++rep) {
    const fs::path dir = fresh_dir();
    const std::string cmd = " --out json --cache " + dir.string();
    const Run c1 = run_cli("cells A1~ --bound 8" + cmd);
    const Run c2 = run_cli("cells A2~ --bound 12" + cmd);
    const Run w1 = run_cli("cells A1~ --bound 8" + cmd);
    const Run w2 = run_cli("cells A2~ --bound 12" + cmd);
    o.require(c1.code == 0 && c2.code == 0 && w1.code == 0 && w2.code == 0, "cells runs exit 0");
    o.require(c1.out == w1.out && c2.out == w2.out, "cold and warm reports identical");
    cold = std::min(cold, c1.seconds + c2.seconds);
    warm = std::min(warm, w1.seconds + w2.seconds);
    fs::remove_all(dir);
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "cold %.3fs, warm %.3fs, speedup %.1fx", cold, warm, cold / warm);
  o.notes.push_back(buf);
  o.require(cold >= 2 * warm, "warm rerun at least 2x faster");
}

} // namespace

int main() {
  int failures = 0;
  failures += report(1, "KL layer, A1~ and A2~ at bound 12", criterion1);
  failures += report(2, "cells of A1~ at 8 and A2~ at 12", criterion2);
  failures += report(3, "cells of C2~ at 16 and G2~ at 20 match unipotent classes", criterion3);
  Outcome o5;
  failures += report(4, "J-ring identities", [&](Outcome& o4) { criterion4and5(o4, o5); });
  failures += report(5, "J^f closure", [&](Outcome& o) { o = o5; });
  failures += report(6, "lowest cell realizes the representation ring", criterion6);
  Outcome o8;
  failures += report(7, "Bernstein center and phi_c homomorphism", [&](Outcome& o7) { criterion7and8(o7, o8); });
  failures += report(8, "phi of B[V_adj] against Jacobson-Morozov traces", [&](Outcome& o) { o = o8; });
  failures += report(9, "determinism and warm cache", criterion9);
  return failures == 0 ? 0 : 1;
}

#include "affcell/verify.hpp"

#include "affcell/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace affcell {

namespace {

std::string count_detail(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

CheckResult fail(const std::string& name, const std::string& detail) { return {name, false, detail}; }

/// JElement keyed by canonical words, for comparing across tables.
std::map<std::string, LaurentPoly> by_word(const KLTable& t, const JElement& e) {
  std::map<std::string, LaurentPoly> out;
  for (const auto& [w, c] : e) out.emplace(t.word(w), c);
  return out;
}

JElement basis_j(Index w) { return JElement{{w, LaurentPoly(1)}}; }

std::string skip_reason(const BoundExceeded& e) {
  return e.required_bound() ? " (needs bound " + std::to_string(*e.required_bound()) + ")" : "";
}

/// Cells on which phi can be evaluated: complete with an exact a-value.
bool phi_usable(const Workspace& ws, const TwoSidedCell& c) {
  return c.complete && ws.ring().a_value(c.index).exact;
}

std::string skipped_note(const std::vector<std::string>& cells) {
  if (cells.empty()) return {};
  std::string out = "; skipped cells";
  for (const auto& c : cells) out += " " + c;
  return out;
}

} // namespace

bool all_passed(const CheckList& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

CheckResult run_check(const std::string& name, const std::function<std::string(bool&)>& body) {
  bool ok = true;
  try {
    std::string detail = body(ok);
    return {name, ok, detail};
  } catch (const BoundExceeded& e) {
    std::string req = e.required_bound() ? " (needs bound " + std::to_string(*e.required_bound()) + ")" : "";
    return fail(name, std::string("BoundExceeded: ") + e.what() + req);
  } catch (const Error& e) {
    return fail(name, e.what());
  }
}

// ------------------------------------------------------------------ KL layer

std::map<Index, LaurentPoly> kl_row_by_bar_solve(const HeckeAlgebra& hecke, const KLTable& table, Index w) {
  const AffineWeylGroup& g = hecke.group();
  const AffineElement& we = table.element(w);
  std::vector<Index> interval;
  for (Index x = 0; x <= w; ++x)
    if (g.bruhat_leq(table.element(x), we)) interval.push_back(x);
  std::map<Index, LaurentPoly> p;
  p[w] = LaurentPoly(1);
  // bar(T_y) = sum_x R_{x,y} T_x; equate coefficients of bar(C_w) = C_w from the top.
  std::map<Index, HeckeElement> bars;
  for (Index y : interval) bars.emplace(y, hecke.bar_of_standard(table.element(y)));
  for (auto it = interval.rbegin(); it != interval.rend(); ++it) {
    const Index x = *it;
    if (x == w) continue;
    LaurentPoly q;
    for (Index y : interval) {
      if (y <= x || !p.count(y)) continue;
      const LaurentPoly r = bars.at(y).coefficient(table.element(x));
      if (!r.is_zero()) q += p.at(y).bar() * r;
    }
    // q = p_x - bar(p_x) with p_x in vZ[v].
    LaurentPoly px = q.positive_part();
    if (q != px - px.bar()) throw Error("bar-invariance system has no solution at " + table.word(x));
    p[x] = px;
  }
  return p;
}

CheckList check_kl_layer(const HeckeAlgebra& hecke, const KLTable& t, int bound, int oracle_length) {
  CheckList out;
  const Index n = t.count_up_to(bound);
  const AffineWeylGroup& g = hecke.group();

  out.push_back(run_check("kl.bar_invariance", [&](bool& ok) {
    for (Index w = 0; w < n && ok; ++w) {
      HeckeElement c = t.canonical_element(w);
      if (hecke.bar(c) != c) {
        ok = false;
        return "C_" + t.word(w) + " is not bar-invariant";
      }
    }
    return count_detail(static_cast<std::size_t>(n), "elements");
  }));

  out.push_back(run_check("kl.positivity", [&](bool& ok) {
    std::size_t entries = 0;
    for (Index w = 0; w < n; ++w)
      for (Index x = 0; x <= w; ++x) {
        const auto& p = t.p(x, w);
        if (p.is_zero()) continue;
        ++entries;
        if (!p.has_nonnegative_coefficients()) {
          ok = false;
          return "p_{" + t.word(x) + "," + t.word(w) + "} has a negative coefficient";
        }
      }
    return count_detail(entries, "nonzero p");
  }));

  out.push_back(run_check("kl.degree_bounds", [&](bool& ok) {
    for (Index w = 0; w < n; ++w) {
      if (t.p(w, w) != LaurentPoly(1)) {
        ok = false;
        return "p_{w,w} != 1 at " + t.word(w);
      }
      for (Index x = 0; x < w; ++x) {
        const auto& p = t.p(x, w);
        if (p.is_zero()) continue;
        const int d = t.length(w) - t.length(x);
        for (const auto& term : p.terms())
          if (term.exponent < 1 || term.exponent > d || (d - term.exponent) % 2 != 0) {
            ok = false;
            return "p_{" + t.word(x) + "," + t.word(w) + "} = " + p.to_string() + " violates the degree bound";
          }
      }
    }
    return std::string("exponents in [1, l(w)-l(x)] with matching parity");
  }));

  out.push_back(run_check("kl.bruhat_support", [&](bool& ok) {
    for (Index w = 0; w < n; ++w)
      for (Index x = 0; x < n; ++x) {
        const bool le = g.bruhat_leq(t.element(x), t.element(w));
        if (le != !t.p(x, w).is_zero()) {
          ok = false;
          return "support of C_" + t.word(w) + " disagrees with Bruhat order at " + t.word(x);
        }
      }
    return count_detail(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), "pairs");
  }));

  out.push_back(run_check("kl.round_trip", [&](bool& ok) {
    for (Index w = 0; w < n; ++w) {
      HeckeElement tw = hecke.standard(t.element(w));
      if (t.to_standard(t.to_canonical(tw)) != tw) {
        ok = false;
        return "T_" + t.word(w) + " does not survive the round trip";
      }
      HeckeElement cw = HeckeElement::basis_element(Basis::Canonical, t.element(w));
      if (t.to_canonical(t.to_standard(cw)) != cw) {
        ok = false;
        return "C_" + t.word(w) + " does not survive the round trip";
      }
    }
    return count_detail(static_cast<std::size_t>(n), "elements");
  }));

  out.push_back(run_check("kl.bar_solve_oracle", [&](bool& ok) {
    const Index m = t.count_up_to(std::min(oracle_length, bound));
    for (Index w = 0; w < m; ++w) {
      auto row = kl_row_by_bar_solve(hecke, t, w);
      for (Index x = 0; x <= w; ++x) {
        auto it = row.find(x);
        const LaurentPoly expect = it == row.end() ? LaurentPoly{} : it->second;
        if (expect != t.p(x, w)) {
          ok = false;
          return "p_{" + t.word(x) + "," + t.word(w) + "}: recursion " + t.p(x, w).to_string() + ", oracle " +
                 expect.to_string();
        }
      }
    }
    return "recursion equals bar-fixed-point solve for " + count_detail(static_cast<std::size_t>(m), "elements");
  }));
  return out;
}

// --------------------------------------------------------------------- cells

CheckList check_cell_structure(const Workspace& ws) {
  CheckList out;
  const CellPartition& part = ws.partition();
  const KLTable& t = ws.table();
  const AsymptoticRing& ring = ws.ring();

  out.push_back(run_check("cells.identity_singleton", [&](bool& ok) {
    ok = part.cell(part.cell_of_identity()).members == std::vector<Index>{0};
    return std::string(ok ? "{e} is a cell" : "cell of e is not {e}");
  }));
  out.push_back(run_check("cells.inverse_closed", [&](bool& ok) {
    for (Index x = 0; x < part.covered(); ++x)
      if (part.cell_of(x) != part.cell_of(t.inverse(x))) {
        ok = false;
        return t.word(x) + " and its inverse lie in different cells";
      }
    return count_detail(static_cast<std::size_t>(part.covered()), "elements");
  }));
  out.push_back(run_check("cells.refinement", [&](bool& ok) {
    for (const auto* family : {&part.left_cells(), &part.right_cells()})
      for (const auto& cell : *family)
        for (Index x : cell)
          if (part.cell_of(x) != part.cell_of(cell.front())) {
            ok = false;
            return "a one-sided cell meets two two-sided cells at " + t.word(x);
          }
    return count_detail(part.left_cells().size(), "left cells") + ", " +
           count_detail(part.right_cells().size(), "right cells");
  }));
  out.push_back(run_check("cells.order", [&](bool& ok) {
    const int top = part.cell_of_identity();
    const int low = part.lowest_cell();
    for (const auto& c : part.cells()) {
      if (c.index != top && !part.strictly_below(c.index, top)) ok = false;
      if (low >= 0 && c.index != low && !part.strictly_below(low, c.index)) ok = false;
    }
    return std::string(ok ? "{e} is the top cell and the lowest cell is below all others"
                          : "cell order is not bounded by {e} and the lowest cell");
  }));
  out.push_back(run_check("cells.complete", [&](bool& ok) {
    std::ostringstream s;
    for (const auto& c : part.cells()) {
      if (!c.complete) ok = false;
      s << (c.index ? " " : "") << c.index << (c.complete ? ":complete" : ":incomplete");
    }
    return s.str();
  }));
  out.push_back(run_check("cells.a_exact", [&](bool& ok) {
    std::ostringstream s;
    for (const auto& c : part.cells()) {
      const AValue& a = ring.a_value(c.index);
      if (!a.exact) ok = false;
      s << (c.index ? " " : "") << "a(" << c.index << ")=" << a.value << (a.exact ? "" : "?");
    }
    return s.str();
  }));
  out.push_back(run_check("cells.duflo_per_left_cell", [&](bool& ok) {
    std::size_t total = 0;
    for (const auto& c : part.cells()) {
      std::map<int, int> per_left;
      for (Index d : ring.duflo(c.index)) {
        ++total;
        if (++per_left[part.left_cell_of(d)] > 1) {
          ok = false;
          return "left cell of " + t.word(d) + " holds two Duflo involutions";
        }
      }
    }
    return count_detail(total, "Duflo involutions");
  }));
  return out;
}

// --------------------------------------------------------------------- J-ring

CheckList check_jring(const Workspace& ws) {
  CheckList out;
  const CellPartition& part = ws.partition();
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  const int B = ring.a_bound();

  auto members_in = [&](int c) {
    std::vector<Index> m;
    for (Index x : part.cell(c).members)
      if (t.length(x) <= B) m.push_back(x);
    return m;
  };

  out.push_back(run_check("jring.gamma_symmetry", [&](bool& ok) {
    std::size_t checked = 0;
    for (const auto& c : part.cells()) {
      const auto m = members_in(c.index);
      for (Index x : m)
        for (Index y : m) {
          if (t.length(x) + t.length(y) > B) continue;
          for (const auto& [zi, g] : ring.t_product(x, y)) {
            const Index z = t.inverse(zi); // g = gamma_{x,y,z}
            if (t.length(y) + t.length(z) <= B) {
              ++checked;
              if (ring.gamma(y, z, x) != g) {
                ok = false;
                return "gamma_{x,y,z} != gamma_{y,z,x} at (" + t.word(x) + ", " + t.word(y) + ", " + t.word(z) + ")";
              }
            }
            ++checked;
            if (ring.gamma(t.inverse(y), t.inverse(x), t.inverse(z)) != g) {
              ok = false;
              return "gamma_{x,y,z} != gamma_{y^-1,x^-1,z^-1} at (" + t.word(x) + ", " + t.word(y) + ", " +
                     t.word(z) + ")";
            }
          }
        }
    }
    return count_detail(checked, "symmetry relations");
  }));

  out.push_back(run_check("jring.nonnegativity", [&](bool& ok) {
    std::size_t n = 0;
    for (const auto& c : part.cells()) {
      const auto m = members_in(c.index);
      for (Index x : m)
        for (Index y : m) {
          if (t.length(x) + t.length(y) > B) continue;
          for (const auto& [z, g] : ring.t_product(x, y)) {
            ++n;
            if (g < 0) {
              ok = false;
              return "negative gamma in t_" + t.word(x) + " t_" + t.word(y);
            }
          }
          for (Index z : m)
            if (!ring.h(x, y, z).has_nonnegative_coefficients()) {
              ok = false;
              return "h_{" + t.word(x) + "," + t.word(y) + "," + t.word(z) + "} has a negative coefficient";
            }
        }
    }
    return count_detail(n, "nonzero gamma");
  }));

  out.push_back(run_check("jring.associativity", [&](bool& ok) {
    std::size_t n = 0;
    for (const auto& c : part.cells()) {
      const auto m = members_in(c.index);
      for (Index x : m)
        for (Index y : m) {
          if (t.length(x) + t.length(y) > B) continue;
          const JElement xy = ring.multiply(basis_j(x), basis_j(y));
          for (Index z : m) {
            if (t.length(x) + t.length(y) + t.length(z) > B) continue;
            ++n;
            const JElement lhs = ring.multiply(xy, basis_j(z));
            const JElement rhs = ring.multiply(basis_j(x), ring.multiply(basis_j(y), basis_j(z)));
            if (lhs != rhs) {
              ok = false;
              return "(t_x t_y) t_z != t_x (t_y t_z) at (" + t.word(x) + ", " + t.word(y) + ", " + t.word(z) + ")";
            }
          }
        }
    }
    return count_detail(n, "triples");
  }));

  out.push_back(run_check("jring.duflo_idempotents", [&](bool& ok) {
    std::size_t n = 0;
    for (const auto& c : part.cells()) {
      const auto d = ring.duflo(c.index);
      for (Index d1 : d)
        for (Index d2 : d) {
          if (t.length(d1) + t.length(d2) > B) continue;
          ++n;
          const JElement prod = ring.multiply(basis_j(d1), basis_j(d2));
          const JElement expect = d1 == d2 ? basis_j(d1) : JElement{};
          if (prod != expect) {
            ok = false;
            return "t_" + t.word(d1) + " t_" + t.word(d2) + (d1 == d2 ? " != t_d" : " != 0");
          }
        }
    }
    return count_detail(n, "Duflo pairs");
  }));

  out.push_back(run_check("jring.unit", [&](bool& ok) {
    std::size_t n = 0;
    for (const auto& c : part.cells()) {
      const auto d = ring.duflo(c.index);
      int longest = 0;
      for (Index x : d) longest = std::max(longest, t.length(x));
      const JElement u = ring.unit(c.index);
      for (Index w : members_in(c.index)) {
        if (t.length(w) + longest > B) continue;
        ++n;
        if (ring.multiply(u, basis_j(w)) != basis_j(w) || ring.multiply(basis_j(w), u) != basis_j(w)) {
          ok = false;
          return "sum of t_d is not a unit on t_" + t.word(w);
        }
      }
    }
    return count_detail(n, "basis elements");
  }));
  return out;
}

CheckList check_jf(const Workspace& ws) {
  CheckList out;
  const CellPartition& part = ws.partition();
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  out.push_back(run_check("jf.closure", [&](bool&) {
    std::ostringstream s;
    for (const auto& c : part.cells()) {
      JfData jf = ring.jf(c.index);
      s << (c.index ? "; " : "") << "cell " << c.index << ": " << jf.basis.size() << " basis, d^f "
        << (jf.duflo == kNone ? std::string("outside ball") : t.word(jf.duflo));
    }
    return s.str();
  }));
  out.push_back(run_check("jf.duflo_unit", [&](bool& ok) {
    std::size_t n = 0;
    for (const auto& c : part.cells()) {
      JfData jf = ring.jf(c.index);
      if (jf.duflo == kNone) {
        if (!jf.basis.empty()) {
          ok = false;
          return "cell " + std::to_string(c.index) + " has J^f elements but no d^f in the ball";
        }
        continue;
      }
      for (Index b : jf.basis) {
        if (t.length(b) + t.length(jf.duflo) > ring.a_bound()) continue;
        ++n;
        const JElement tb = basis_j(b);
        if (ring.multiply(basis_j(jf.duflo), tb) != tb || ring.multiply(tb, basis_j(jf.duflo)) != tb) {
          ok = false;
          return "t_{d^f} is not a unit on t_" + t.word(b);
        }
      }
    }
    return count_detail(n, "J^f basis elements");
  }));
  return out;
}

// ------------------------------------------------------- lowest cell and R(G^)

Coweight jf_label(const Workspace& ws, const JfData& jf, Index b) {
  const auto& g = ws.group();
  const KLTable& t = ws.table();
  return g.double_coset_weight(t.element(b)) - g.double_coset_weight(t.element(jf.duflo));
}

namespace {

std::map<Coweight, Index> lowest_labels(const Workspace& ws, const JfData& jf) {
  std::map<Coweight, Index> out;
  for (Index b : jf.basis) {
    Coweight l = jf_label(ws, jf, b);
    if (!ws.datum().is_dominant(l)) throw Error("J^f label " + l.to_string() + " is not dominant");
    if (!out.emplace(l, b).second) throw Error("two J^f basis elements share the label " + l.to_string());
  }
  return out;
}

} // namespace

std::vector<Coweight> first_lowest_labels(const Workspace& ws, std::size_t count) {
  const int low = ws.partition().lowest_cell();
  JfData jf = ws.ring().jf(low);
  std::vector<Index> basis = jf.basis;
  std::vector<Coweight> out;
  for (Index b : basis) {
    if (out.size() == count) break;
    out.push_back(jf_label(ws, jf, b));
  }
  return out;
}

CheckList check_lowest_cell_products(const Workspace& ws, const std::vector<std::pair<Coweight, Coweight>>& pairs) {
  CheckList out;
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  const CartanDatum& datum = ws.datum();
  out.push_back(run_check("lowest.tensor_products", [&](bool& ok) {
    const int low = ws.partition().lowest_cell();
    if (low < 0) throw Error("lowest cell not in the ball");
    JfData jf = ring.jf(low);
    if (jf.duflo == kNone) throw Error("d^f of the lowest cell is outside the ball");
    const auto labels = lowest_labels(ws, jf);
    auto element_for = [&](const Coweight& l) -> Index {
      auto it = labels.find(l);
      if (it == labels.end()) throw Error("no J^f basis element with label " + l.to_string() + " in the ball");
      return it->second;
    };
    const auto regular = unipotent_classes(datum).front();
    std::ostringstream s;
    for (const auto& [l1, l2] : pairs) {
      const JElement prod = ring.multiply(basis_j(element_for(l1)), basis_j(element_for(l2)));
      JElement expect;
      LaurentPoly chi;
      for (const auto& [nu, m] : tensor_decompose(datum, l1, l2)) {
        expect[element_for(nu)] = LaurentPoly(m);
        chi += trace_sv(datum, nu, regular) * LaurentPoly(m);
      }
      if (prod != expect) {
        ok = false;
        return "t_b" + l1.to_string() + " t_b" + l2.to_string() + " differs from the tensor product";
      }
      // The same ring map evaluated at the principal semisimple element.
      if (chi != trace_sv(datum, l1, regular) * trace_sv(datum, l2, regular)) {
        ok = false;
        return "character evaluation is not multiplicative at " + l1.to_string() + " x " + l2.to_string();
      }
      s << (s.tellp() ? ", " : "") << l1.to_string() << "x" << l2.to_string() << "->" << expect.size() << " terms";
    }
    return "d^f = " + t.word(jf.duflo) + "; " + s.str();
  }));
  return out;
}

// ------------------------------------------------------------------ Bernstein

PhiInputs phi_inputs(const HeckeAlgebra& hecke, const std::vector<Coweight>& lambdas) {
  PhiInputs in;
  for (const auto& l : lambdas) in.singles.push_back(bernstein_central(hecke, l).expansion);
  for (std::size_t i = 0; i < lambdas.size(); ++i)
    for (std::size_t j = i; j < lambdas.size(); ++j)
      in.pairs.emplace(std::make_pair(i, j), hecke.mul_standard(in.singles[i], in.singles[j]));
  return in;
}

CheckList check_bernstein(const Workspace& ws, const std::vector<Coweight>& lambdas) {
  CheckList out;
  const HeckeAlgebra& hecke = ws.hecke();
  const CartanDatum& datum = ws.datum();

  out.push_back(run_check("bernstein.theta", [&](bool& ok) {
    std::vector<Coweight> ws_small;
    for (const auto& l : lambdas)
      for (const auto& mu : weight_multiplicities(datum, l)) ws_small.push_back(mu.first);
    std::sort(ws_small.begin(), ws_small.end());
    ws_small.erase(std::unique(ws_small.begin(), ws_small.end()), ws_small.end());
    if (theta(hecke, datum.zero()) != hecke.one()) {
      ok = false;
      return std::string("theta_0 != T_e");
    }
    std::size_t n = 0;
    for (const auto& a : ws_small) {
      if (hecke.mul_standard(theta(hecke, a), theta(hecke, -a)) != hecke.one()) {
        ok = false;
        return "theta_l theta_-l != 1 at " + a.to_string();
      }
      // A second decomposition a = (a1 + b) - (a2 + b) with b dominant.
      auto [a1, a2] = dominant_split(datum, a);
      Coweight shift = datum.dominant_representative(lambdas.front());
      HeckeElement alt = hecke.mul_standard(hecke.standard(ws.group().translation(a1 + shift)),
                                            hecke.inverse_standard(ws.group().translation(a2 + shift)));
      if (alt != theta(hecke, a)) {
        ok = false;
        return "theta depends on the decomposition at " + a.to_string();
      }
      ++n;
    }
    for (std::size_t i = 0; i < ws_small.size() && i < 6; ++i)
      for (std::size_t j = 0; j < ws_small.size() && j < 6; ++j) {
        const auto& a = ws_small[i];
        const auto& b = ws_small[j];
        if (hecke.mul_standard(theta(hecke, a), theta(hecke, b)) != theta(hecke, a + b)) {
          ok = false;
          return "theta_a theta_b != theta_{a+b} at " + a.to_string() + ", " + b.to_string();
        }
      }
    return count_detail(n, "weights");
  }));

  out.push_back(run_check("bernstein.central", [&](bool& ok) {
    for (const auto& l : lambdas) {
      if (!is_central(hecke, bernstein_central(hecke, l).expansion)) {
        ok = false;
        return "B([V" + l.to_string() + "]) does not commute with every T_s";
      }
    }
    return count_detail(lambdas.size(), "representations");
  }));

  out.push_back(run_check("bernstein.multiplicative", [&](bool& ok) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      for (std::size_t j = i; j < lambdas.size(); ++j) {
        HeckeElement lhs = hecke.mul_standard(bernstein_central(hecke, lambdas[i]).expansion,
                                              bernstein_central(hecke, lambdas[j]).expansion);
        HeckeElement rhs(Basis::Standard);
        for (const auto& [nu, m] : tensor_decompose(datum, lambdas[i], lambdas[j]))
          rhs.add_scaled(bernstein_central(hecke, nu).expansion, LaurentPoly(m));
        ++n;
        if (lhs != rhs) {
          ok = false;
          return "B(V" + lambdas[i].to_string() + ")B(V" + lambdas[j].to_string() + ") != sum c B(V_nu)";
        }
      }
    return count_detail(n, "pairs");
  }));
  return out;
}

CheckList check_phi(const Workspace& ws, const Workspace& ws_larger, const std::vector<Coweight>& lambdas) {
  CheckList out;
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  const PhiInputs in = phi_inputs(ws.hecke(), lambdas);

  out.push_back(run_check("phi.unit", [&](bool& ok) {
    for (const auto& c : ws.partition().cells())
      if (phi_usable(ws, c) && phi_c(ws.hecke().one(), ring, c.index) != ring.unit(c.index)) {
        ok = false;
        return "phi_c(1) != sum t_d for cell " + std::to_string(c.index);
      }
    return count_detail(ws.partition().cells().size(), "cells");
  }));

  out.push_back(run_check("phi.homomorphism", [&](bool& ok) {
    std::size_t n = 0;
    std::vector<std::string> skipped;
    for (const auto& c : ws.partition().cells()) {
      if (!phi_usable(ws, c)) {
        skipped.push_back(std::to_string(c.index) + " (incomplete)");
        continue;
      }
      try {
        std::vector<JElement> single;
        for (const auto& z : in.singles) single.push_back(phi_c(z, ring, c.index));
        for (const auto& [ij, z] : in.pairs) {
          if (phi_c(z, ring, c.index) != ring.multiply(single[ij.first], single[ij.second])) {
            ok = false;
            return "phi_c(z1 z2) != phi_c(z1) phi_c(z2) in cell " + std::to_string(c.index) + " for " +
                   lambdas[ij.first].to_string() + ", " + lambdas[ij.second].to_string();
          }
          ++n;
        }
      } catch (const BoundExceeded& e) {
        skipped.push_back(std::to_string(c.index) + skip_reason(e));
      }
    }
    return count_detail(n, "(cell, pair) cases") + skipped_note(skipped);
  }));

  out.push_back(run_check("phi.stable", [&](bool& ok) {
    const KLTable& t2 = ws_larger.table();
    std::size_t n = 0;
    std::vector<std::string> skipped;
    for (const auto& c : ws.partition().cells()) {
      if (!phi_usable(ws, c)) {
        skipped.push_back(std::to_string(c.index) + " (incomplete)");
        continue;
      }
      const int c2 = ws_larger.partition().cell_of(*t2.find(t.element(c.members.front())));
      std::vector<const HeckeElement*> zs;
      for (const auto& z : in.singles) zs.push_back(&z);
      for (const auto& [ij, z] : in.pairs) zs.push_back(&z);
      try {
        for (const HeckeElement* z : zs) {
          if (by_word(t, phi_c(*z, ring, c.index)) != by_word(t2, phi_c(*z, ws_larger.ring(), c2))) {
            ok = false;
            return "phi changes between bounds " + std::to_string(ws.bound()) + " and " +
                   std::to_string(ws_larger.bound()) + " in cell " + std::to_string(c.index);
          }
          ++n;
        }
      } catch (const BoundExceeded& e) {
        skipped.push_back(std::to_string(c.index) + skip_reason(e));
      }
    }
    return count_detail(n, "values") + " agree at bounds " + std::to_string(ws.bound()) + " and " +
           std::to_string(ws_larger.bound()) + skipped_note(skipped);
  }));
  return out;
}

CheckList check_phi_traces(const Workspace& ws, const std::vector<Coweight>& lambdas) {
  CheckList out;
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  const CartanDatum& datum = ws.datum();
  const auto classes = unipotent_classes(datum);

  out.push_back(run_check("phi.identity_cell_trace", [&](bool& ok) {
    const int top = ws.partition().cell_of_identity();
    std::ostringstream s;
    for (const auto& l : lambdas) {
      JElement phi = phi_c(bernstein_central(ws.hecke(), l).expansion, ring, top);
      const LaurentPoly got = phi.count(0) ? phi.at(0) : LaurentPoly{};
      const LaurentPoly want = trace_sv(datum, l, classes.front());
      if (got != want) {
        ok = false;
        return "t_e coefficient " + got.to_string() + " != trace " + want.to_string() + " at " + l.to_string();
      }
      s << (s.tellp() ? "; " : "") << l.to_string() << ": " << got.to_string();
    }
    return s.str();
  }));

  out.push_back(run_check("phi.lowest_cell_constant", [&](bool& ok) {
    const int low = ws.partition().lowest_cell();
    if (low < 0 || !phi_usable(ws, ws.partition().cell(low))) return std::string("skipped: lowest cell incomplete");
    JfData jf = ring.jf(low);
    std::ostringstream s;
    for (const auto& l : lambdas) {
      JElement phi;
      try {
        phi = phi_c(bernstein_central(ws.hecke(), l).expansion, ring, low);
      } catch (const BoundExceeded& e) {
        s << (s.tellp() ? "; " : "") << l.to_string() << ": skipped" << skip_reason(e);
        continue;
      }
      std::size_t parts = 0;
      for (Index b : jf.basis) {
        auto it = phi.find(b);
        if (it == phi.end()) continue;
        ++parts;
        if (it->second.size() != 1 || it->second.terms().front().exponent != 0) {
          ok = false;
          return "coefficient of t_" + t.word(b) + " is " + it->second.to_string() + ", not a constant";
        }
      }
      s << (s.tellp() ? "; " : "") << l.to_string() << ": " << parts << " J^f terms";
    }
    return s.str() + "; global shift 0";
  }));
  return out;
}

// ---------------------------------------------------------------- dual side

CheckList check_dual(const CartanDatum& datum, const std::vector<Coweight>& lambdas) {
  CheckList out;
  out.push_back(run_check("dual.classes", [&](bool& ok) {
    const auto classes = unipotent_classes(datum);
    std::ostringstream s;
    for (const auto& c : classes) {
      if (c.dim_orbit + c.dim_centralizer != static_cast<int>(datum.dual_group_dimension())) ok = false;
      s << (s.tellp() ? " " : "") << c.label << ":" << c.springer_dim;
    }
    return std::to_string(classes.size()) + " classes, springer dims " + s.str();
  }));
  out.push_back(run_check("dual.jm_grading", [&](bool& ok) {
    std::size_t n = 0;
    for (const auto& c : unipotent_classes(datum)) {
      for (const auto& l : lambdas) {
        auto g = jm_graded_dims(datum, l, c);
        long long total = 0;
        for (const auto& [i, d] : g) {
          total += d;
          const long long mirror = g.count(-i) ? g.at(-i) : 0;
          const long long next = g.count(i + 2) ? g.at(i + 2) : 0;
          if (mirror != d || (i >= 0 && next > d)) {
            ok = false;
            return "grading of V" + l.to_string() + " at class " + c.label + " is not an sl2 grading";
          }
        }
        if (Integer(total) != weyl_dimension(datum, l)) {
          ok = false;
          return "graded dimensions of V" + l.to_string() + " do not add up";
        }
        ++n;
      }
      if (trace_sv(datum, datum.zero(), c) != LaurentPoly(1)) ok = false;
    }
    return count_detail(n, "(class, representation) gradings");
  }));
  return out;
}

CheckList check_bijection(const Workspace& ws) {
  CheckList out;
  out.push_back(run_check("dual.bijection", [&](bool&) {
    auto m = match_cells_to_classes(summarize_cells(ws.ring()), unipotent_classes(ws.datum()));
    std::ostringstream s;
    for (const auto& [c, label] : m) s << (s.tellp() ? " " : "") << c << "->" << label;
    return s.str();
  }));
  return out;
}

// ------------------------------------------------------------------- suites

int phi_bound(TypeLabel type, const std::vector<Coweight>& lambdas, int start, KLCache* cache, int jobs) {
  int bound = start;
  while (true) {
    try {
      Workspace ws(type, bound, cache, jobs, std::min(bound, default_bound(type)));
      PhiInputs in = phi_inputs(ws.hecke(), lambdas);
      for (const auto& c : ws.partition().cells()) {
        std::vector<JElement> single;
        for (const auto& z : in.singles) single.push_back(phi_c(z, ws.ring(), c.index));
        for (const auto& [ij, z] : in.pairs) {
          phi_c(z, ws.ring(), c.index);
          ws.ring().multiply(single[ij.first], single[ij.second]);
        }
      }
      return bound;
    } catch (const BoundExceeded& e) {
      const int next = std::max(bound + 2, e.required_bound().value_or(bound + 2));
      if (next > kBoundCeiling) throw;
      bound = next;
    }
  }
}

std::vector<std::string> suite_names() { return {"kl", "cells", "jring", "phi", "dual", "paper-suite"}; }

CheckList run_suite(const std::string& suite, TypeLabel type, std::optional<int> bound, KLCache* cache, int jobs) {
  const auto known = suite_names();
  if (std::find(known.begin(), known.end(), suite) == known.end()) throw Error("unknown suite '" + suite + "'");
  const bool all = suite == "paper-suite";
  const int b = bound.value_or(default_bound(type));
  CheckList out;
  auto append = [&](CheckList more) {
    for (auto& c : more) out.push_back(std::move(c));
  };
  AffineWeylGroup group(type);
  const auto lambdas = small_dominant_coweights(group.datum(), 2);
  std::unique_ptr<Workspace> ws;
  auto workspace = [&]() -> const Workspace& {
    if (!ws) ws = std::make_unique<Workspace>(type, b, cache, jobs);
    return *ws;
  };
  if (all || suite == "kl") {
    const Workspace& w = workspace();
    append(check_kl_layer(w.hecke(), w.table(), std::min(b, 12), 8));
  }
  if (all || suite == "cells") {
    append(check_cell_structure(workspace()));
    append(check_bijection(workspace()));
  }
  if (all || suite == "jring") {
    append(check_jring(workspace()));
    append(check_jf(workspace()));
  }
  if (all || suite == "dual") append(check_dual(group.datum(), lambdas));
  if (all || suite == "phi") {
    append(check_bernstein(workspace(), lambdas));
    out.push_back(run_check("phi.bound", [&](bool&) {
      int pb = kBoundCeiling;
      std::string note = " (ceiling; some products need more)";
      try {
        pb = phi_bound(type, lambdas, b, cache, jobs);
        note.clear();
      } catch (const BoundExceeded&) {
      }
      Workspace w1(type, pb, cache, jobs, std::min(pb, default_bound(type)));
      Workspace w2(type, pb + 2, cache, jobs, std::min(pb, default_bound(type)));
      append(check_phi(w1, w2, lambdas));
      append(check_phi_traces(w1, lambdas));
      return "phi computed at bound " + std::to_string(pb) + note;
    }));
  }
  return out;
}

} // namespace affcell

#include "affcell/report.hpp"

#include "affcell/bernstein.hpp"
#include "affcell/dual.hpp"
#include "affcell/errors.hpp"

#include <sstream>

namespace affcell {

namespace {

Json integer_json(const Integer& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

Json words(const KLTable& t, const std::vector<Index>& xs) {
  Json out = Json::array();
  for (Index x : xs) out.push_back(t.word(x));
  return out;
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::vector<std::string> word_list(const KLTable& t, const std::vector<Index>& xs) {
  std::vector<std::string> out;
  for (Index x : xs) out.push_back(t.word(x));
  return out;
}

Json header(TypeLabel type, int bound) {
  Json j;
  j["type"] = std::string(affine_name(type));
  j["bound"] = bound;
  j["convention_id"] = kConventionId;
  return j;
}

std::string text_header(TypeLabel type, int bound) {
  return std::string(affine_name(type)) + " bound " + std::to_string(bound) + "  [" + kConventionId + "]";
}

Json jelement_json(const KLTable& t, const JElement& e) {
  Json out = Json::array();
  std::map<std::string, const LaurentPoly*> sorted;
  for (const auto& [w, c] : e) sorted.emplace(t.word(w), &c);
  for (const auto& [w, c] : sorted) out.push_back({{"t_word", w}, {"coefficient", poly_json(*c)}});
  return out;
}

} // namespace

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "text") return OutputFormat::Text;
  throw Error("unknown output format '" + s + "' (expected json, csv or text)");
}

std::string render(const Report& r, OutputFormat format) {
  switch (format) {
  case OutputFormat::Json: return r.json.dump(2) + "\n";
  case OutputFormat::Csv: {
    std::string out;
    std::vector<std::string> h;
    for (const auto& f : r.csv_header) h.push_back(csv_field(f));
    out += join(h, ",") + "\n";
    for (const auto& row : r.csv_rows) {
      std::vector<std::string> cells;
      for (const auto& f : row) cells.push_back(csv_field(f));
      out += join(cells, ",") + "\n";
    }
    return out;
  }
  case OutputFormat::Text: return join(r.text, "\n") + "\n";
  }
  return {};
}

Json poly_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& t : p.terms()) out.push_back(Json::array({t.exponent, integer_json(t.coefficient)}));
  return out;
}

std::string poly_csv(const LaurentPoly& p) {
  std::vector<std::string> parts;
  for (const auto& t : p.terms()) parts.push_back(std::to_string(t.exponent) + ":" + t.coefficient.str());
  return join(parts, ";");
}

Report cells_report(const Workspace& ws) {
  const CellPartition& part = ws.partition();
  const KLTable& t = ws.table();
  const AsymptoticRing& ring = ws.ring();
  Report r;
  r.json = header(ws.type(), ws.bound());
  r.json["cells"] = Json::array();
  r.text.push_back(text_header(ws.type(), ws.bound()));
  r.csv_header = {"index", "a_value", "a_exact", "size_in_ball", "complete", "is_lowest", "duflo"};
  for (const auto& c : part.cells()) {
    const AValue& a = ring.a_value(c.index);
    const auto duflo = ring.duflo(c.index);
    Json j;
    j["index"] = c.index;
    j["a_value"] = a.value;
    j["a_exact"] = a.exact;
    j["size_in_ball"] = c.members.size();
    j["complete"] = c.complete;
    j["duflo"] = words(t, duflo);
    j["is_lowest"] = c.is_lowest;
    r.json["cells"].push_back(j);
    r.csv_rows.push_back({std::to_string(c.index), std::to_string(a.value), a.exact ? "true" : "false",
                          std::to_string(c.members.size()), c.complete ? "true" : "false",
                          c.is_lowest ? "true" : "false", join(word_list(t, duflo), " ")});
    std::ostringstream s;
    s << "cell " << c.index << ": a=" << a.value << (a.exact ? "" : " (lower bound)") << " size " << c.members.size()
      << (c.complete ? " complete" : " incomplete") << (c.is_lowest ? " lowest" : "") << " duflo {"
      << join(word_list(t, duflo), ", ") << "}";
    r.text.push_back(s.str());
  }
  Json order = Json::array();
  std::vector<std::string> pairs;
  for (const auto& [i, j] : part.order_pairs()) {
    order.push_back(Json::array({i, j}));
    pairs.push_back(std::to_string(i) + "<" + std::to_string(j));
  }
  r.json["order"] = order;
  r.text.push_back("order: " + join(pairs, " "));
  return r;
}

Report klpoly_report(const KLTable& t, Index x, Index w) {
  const LaurentPoly& p = t.p(x, w);
  Report r;
  r.json = header(t.group().label(), t.bound());
  r.json.erase("bound");
  r.json["x"] = t.word(x);
  r.json["w"] = t.word(w);
  r.json["p"] = poly_json(p);
  r.json["mu"] = integer_json(t.mu(x, w));
  r.csv_header = {"x", "w", "p", "mu"};
  r.csv_rows.push_back({t.word(x), t.word(w), poly_csv(p), t.mu(x, w).str()});
  r.text.push_back("p_{" + t.word(x) + "," + t.word(w) + "} = " + p.to_string() + "  mu = " + t.mu(x, w).str());
  r.text.push_back(std::string("convention: ") + kConventionId);
  return r;
}

Report jring_report(const Workspace& ws, int cell) {
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  const TwoSidedCell& c = ws.partition().cell(cell);
  Report r;
  r.json = header(ws.type(), ws.bound());
  r.json["cell"] = cell;
  r.json["a_value"] = ring.a_value(cell).value;
  r.json["a_exact"] = ring.a_value(cell).exact;
  r.json["product_bound"] = ring.a_bound();
  r.json["basis"] = words(t, c.members);
  r.text.push_back(text_header(ws.type(), ws.bound()));
  r.text.push_back("cell " + std::to_string(cell) + " a=" + std::to_string(ring.a_value(cell).value) + ", " +
                   std::to_string(c.members.size()) + " basis elements, products with l(x)+l(y) <= " +
                   std::to_string(ring.a_bound()));
  r.csv_header = {"x", "y", "z", "gamma"};
  Json prods = Json::array();
  for (Index x : c.members)
    for (Index y : c.members) {
      if (t.length(x) + t.length(y) > ring.a_bound()) continue;
      const JProduct p = ring.t_product(x, y);
      if (p.empty()) continue;
      std::vector<std::pair<std::string, Integer>> terms;
      for (const auto& [z, g] : p) terms.emplace_back(t.word(z), g);
      std::sort(terms.begin(), terms.end());
      Json res = Json::array();
      std::vector<std::string> txt;
      for (const auto& [z, g] : terms) {
        res.push_back({{"t_word", z}, {"gamma", integer_json(g)}});
        r.csv_rows.push_back({t.word(x), t.word(y), z, g.str()});
        txt.push_back((g == 1 ? std::string() : g.str() + "*") + "t_" + z);
      }
      prods.push_back({{"x", t.word(x)}, {"y", t.word(y)}, {"result", res}});
      r.text.push_back("t_" + t.word(x) + " t_" + t.word(y) + " = " + join(txt, " + "));
    }
  r.json["products"] = prods;
  return r;
}

Report duflo_report(const Workspace& ws) {
  const AsymptoticRing& ring = ws.ring();
  const KLTable& t = ws.table();
  Report r;
  r.json = header(ws.type(), ws.bound());
  r.json["cells"] = Json::array();
  r.text.push_back(text_header(ws.type(), ws.bound()));
  r.csv_header = {"cell", "a_value", "duflo", "jf_duflo", "jf_basis"};
  for (const auto& c : ws.partition().cells()) {
    const auto duflo = ring.duflo(c.index);
    Json j;
    j["index"] = c.index;
    j["a_value"] = ring.a_value(c.index).value;
    j["duflo"] = words(t, duflo);
    JfData jf = ring.jf(c.index);
    Json jfj;
    jfj["duflo"] = jf.duflo == kNone ? Json(nullptr) : Json(t.word(jf.duflo));
    Json basis = Json::array();
    std::vector<std::string> btxt;
    for (Index b : jf.basis) {
      Coweight label = jf_label(ws, jf, b);
      basis.push_back({{"word", t.word(b)}, {"label", label.to_vector()}});
      btxt.push_back(t.word(b) + "~" + label.to_string());
    }
    jfj["basis"] = basis;
    j["jf"] = jfj;
    r.json["cells"].push_back(j);
    const std::string df = jf.duflo == kNone ? "-" : t.word(jf.duflo);
    r.csv_rows.push_back({std::to_string(c.index), std::to_string(ring.a_value(c.index).value),
                          join(word_list(t, duflo), " "), df, join(btxt, " ")});
    r.text.push_back("cell " + std::to_string(c.index) + ": duflo {" + join(word_list(t, duflo), ", ") +
                     "}; J^f unit " + df + "; J^f basis " + (btxt.empty() ? "(none in ball)" : join(btxt, ", ")));
  }
  return r;
}

Report phi_report(const Workspace& ws, const PhiOutcome& phi) {
  const KLTable& t = ws.table();
  Report r;
  r.json["type"] = std::string(affine_name(ws.type()));
  r.json["cell"] = phi.cell;
  r.json["lambda"] = phi.lambda.to_vector();
  r.json["bound"] = phi.bound;
  r.json["convention_id"] = kConventionId;
  r.json["result"] = jelement_json(t, phi.result);
  r.json["checks"] = {{"central", phi.central}, {"stable", phi.stable}};
  r.csv_header = {"t_word", "coefficient"};
  r.text.push_back(text_header(ws.type(), phi.bound));
  r.text.push_back("phi_" + std::to_string(phi.cell) + "(B[V" + phi.lambda.to_string() + "]):");
  for (const auto& term : r.json["result"]) {
    const std::string w = term["t_word"];
    const LaurentPoly& c = phi.result.at(*t.find_word(w));
    r.csv_rows.push_back({w, poly_csv(c)});
    r.text.push_back("  (" + c.to_string() + ") t_" + w);
  }
  r.text.push_back(std::string("central: ") + (phi.central ? "yes" : "no") +
                   "  stable under bound+2: " + (phi.stable ? "yes" : "no"));
  return r;
}

Report bijection_report(const Workspace& ws) {
  const auto summaries = summarize_cells(ws.ring());
  const auto classes = unipotent_classes(ws.datum());
  const auto matching = match_cells_to_classes(summaries, classes);
  Report r;
  r.json = header(ws.type(), ws.bound());
  Json cells = Json::array();
  for (const auto& c : summaries)
    cells.push_back({{"index", c.index}, {"a_value", c.a_value}, {"a_exact", c.a_exact}, {"complete", c.complete}});
  r.json["cells"] = cells;
  Json cls = Json::array();
  for (const auto& c : classes)
    cls.push_back({{"label", c.label},
                   {"marks", c.dynkin_marks},
                   {"dim_orbit", c.dim_orbit},
                   {"springer_dim", c.springer_dim}});
  r.json["classes"] = cls;
  Json m = Json::array();
  r.text.push_back(text_header(ws.type(), ws.bound()));
  r.csv_header = {"cell", "a_value", "class", "springer_dim"};
  for (const auto& [cell, label] : matching) {
    m.push_back(Json::array({cell, label}));
    int sd = 0;
    for (const auto& c : classes)
      if (c.label == label) sd = c.springer_dim;
    r.csv_rows.push_back({std::to_string(cell), std::to_string(summaries[static_cast<std::size_t>(cell)].a_value),
                          label, std::to_string(sd)});
    r.text.push_back("cell " + std::to_string(cell) + " (a=" +
                     std::to_string(summaries[static_cast<std::size_t>(cell)].a_value) + ") <-> " + label +
                     " (dim B_u=" + std::to_string(sd) + ")");
  }
  r.json["matching"] = m;
  return r;
}

Report verify_report(const std::string& suite, TypeLabel type, int bound, const CheckList& checks) {
  Report r;
  r.json["suite"] = suite;
  r.json["type"] = std::string(affine_name(type));
  r.json["bound"] = bound;
  r.json["convention_id"] = kConventionId;
  r.json["passed"] = all_passed(checks);
  Json list = Json::array();
  r.csv_header = {"check", "passed", "detail"};
  r.text.push_back("verify " + suite + " " + text_header(type, bound));
  for (const auto& c : checks) {
    list.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r.csv_rows.push_back({c.name, c.passed ? "true" : "false", c.detail});
    r.text.push_back(std::string(c.passed ? "PASS " : "FAIL ") + c.name + ": " + c.detail);
  }
  r.json["checks"] = list;
  r.text.push_back(all_passed(checks) ? "all checks passed" : "some checks FAILED");
  return r;
}

Report cache_info_report(const KLCache& cache) {
  Report r;
  r.json["type"] = std::string(affine_name(cache.type()));
  r.json["path"] = cache.path() ? cache.path()->string() : std::string();
  r.json["header"] = cache_header_line(cache.type());
  r.json["convention_id"] = kConventionId;
  r.json["rows"] = cache.row_count();
  r.json["entries"] = cache.entry_count();
  r.json["products"] = cache.product_count();
  r.csv_header = {"path", "rows", "entries", "products"};
  r.csv_rows.push_back({r.json["path"], std::to_string(cache.row_count()), std::to_string(cache.entry_count()),
                        std::to_string(cache.product_count())});
  r.text.push_back("cache " + r.json["path"].get<std::string>());
  r.text.push_back("header: " + cache_header_line(cache.type()));
  r.text.push_back(std::to_string(cache.row_count()) + " KL rows, " + std::to_string(cache.entry_count()) +
                   " entries, " + std::to_string(cache.product_count()) + " products");
  return r;
}

} // namespace affcell

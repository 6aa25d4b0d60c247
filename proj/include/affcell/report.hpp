#pragma once

#include "affcell/verify.hpp"
#include "affcell/workspace.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace affcell {

using Json = nlohmann::ordered_json;

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_output_format(const std::string& s);

/// One report in all three renderings. `json` is the canonical form; the
/// CSV table and the text lines are flattenings of it.
struct Report {
  Json json;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
  std::vector<std::string> text;
};

std::string render(const Report& report, OutputFormat format);

/// [[exponent, coefficient], ...] in increasing exponent.
Json poly_json(const LaurentPoly& p);
/// "e:c;e:c" for CSV cells.
std::string poly_csv(const LaurentPoly& p);

Report cells_report(const Workspace& ws);
Report klpoly_report(const KLTable& table, Index x, Index w);
Report jring_report(const Workspace& ws, int cell);
Report duflo_report(const Workspace& ws);

struct PhiOutcome {
  int cell = 0;
  Coweight lambda;
  JElement result;
  bool central = false;
  bool stable = false;
  int bound = 0;
};
Report phi_report(const Workspace& ws, const PhiOutcome& phi);

Report bijection_report(const Workspace& ws);
Report verify_report(const std::string& suite, TypeLabel type, int bound, const CheckList& checks);
Report cache_info_report(const KLCache& cache);

} // namespace affcell

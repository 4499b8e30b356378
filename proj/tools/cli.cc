// Copyright 2026 The graphsens Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"
#include "graphsens/dot.h"
#include "graphsens/expr.h"
#include "graphsens/families.h"
#include "graphsens/graph6.h"
#include "graphsens/parallel.h"
#include "graphsens/sensitivity.h"
#include "graphsens/sweep.h"
#include "graphsens/verify.h"
#include "json.hpp"

namespace graphsens::cli {
namespace {

using nlohmann::json;

enum class Format { kText, kCsv, kJsonLines };

std::string CsvField(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json JsonValue(ExtNat v) {
  if (v.is_infinite()) return "inf";
  return v.value();
}

struct Computed {
  std::string label;
  int order = 0;
  int delta = 0;
  int alpha = 0;
  ExtNat sigma;
  std::vector<int> sigma_k;
};

Computed Compute(std::string label, const Graph& g, bool with_k) {
  Computed c;
  c.label = std::move(label);
  c.order = g.order();
  c.delta = MaxDegree(g);
  if (with_k) {
    const SensitivityProfile p = Profile(g);
    c.alpha = p.alpha;
    c.sigma = p.sigma;
    c.sigma_k = p.sigma_k;
  } else {
    c.alpha = IndependenceNumber(g);
    c.sigma = Sensitivity(g);
  }
  return c;
}

std::string JoinInts(const std::vector<int>& v, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

void PrintComputedHeader(std::ostream& out, Format format, bool with_k) {
  if (format == Format::kCsv) {
    out << "expression,order,delta,alpha,sigma" << (with_k ? ",sigma_k" : "")
        << "\n";
  }
}

void PrintComputed(std::ostream& out, Format format, const Computed& c,
                   bool with_k) {
  switch (format) {
    case Format::kText:
      out << "expression: " << c.label << "\n"
          << "order: " << c.order << "\n"
          << "delta: " << c.delta << "\n"
          << "alpha: " << c.alpha << "\n"
          << "sigma: " << c.sigma << "\n";
      if (with_k) out << "sigma_k: " << JoinInts(c.sigma_k, " ") << "\n";
      break;
    case Format::kCsv:
      out << CsvField(c.label) << "," << c.order << "," << c.delta << ","
          << c.alpha << "," << c.sigma;
      if (with_k) out << "," << JoinInts(c.sigma_k, ";");
      out << "\n";
      break;
    case Format::kJsonLines: {
      json j = {{"expression", c.label}, {"order", c.order},
                {"delta", c.delta},      {"alpha", c.alpha},
                {"sigma", JsonValue(c.sigma)}};
      if (with_k) j["sigma_k"] = c.sigma_k;
      out << j.dump() << "\n";
      break;
    }
  }
}

std::string ValueText(const Prediction& p) {
  if (!p.applicable) return "n/a";
  return (p.upper_bound ? "<=" : "") + ToString(*p.value);
}

void PrintReportText(std::ostream& out, const VerificationReport& r) {
  out << r.expression << ": order=" << r.order << " delta=" << r.max_degree
      << " alpha=" << r.alpha << " sigma=" << r.sigma << " ["
      << (r.agree ? "agree" : "DISAGREE") << "]\n";
  for (const Prediction& p : r.predictions) {
    std::string status = !p.applicable          ? "-"
                         : Agrees(p, r.sigma) ? "agree"
                                              : "DISAGREE";
    std::string line = "  " + p.predictor;
    line.resize(std::max<std::size_t>(line.size() + 1, 26), ' ');
    std::string value = ValueText(p);
    value.resize(std::max<std::size_t>(value.size() + 1, 7), ' ');
    status.resize(10, ' ');
    out << line << value << status
        << (p.applicable ? p.case_label : p.reason) << "\n";
  }
}

json ReportJson(const VerificationReport& r) {
  json preds = json::array();
  for (const Prediction& p : r.predictions) {
    json trace = json::array();
    for (const TraceTerm& t : p.trace) {
      trace.push_back({{"name", t.name}, {"j", t.j}, {"value", JsonValue(t.value)}});
    }
    json jp = {{"predictor", p.predictor},
               {"applicable", p.applicable},
               {"upper_bound", p.upper_bound},
               {"case", p.case_label},
               {"reason", p.reason},
               {"trace", trace}};
    jp["value"] = p.applicable ? JsonValue(*p.value) : json(nullptr);
    jp["agree"] = Agrees(p, r.sigma);
    preds.push_back(jp);
  }
  return {{"expression", r.expression}, {"order", r.order},
          {"delta", r.max_degree},      {"alpha", r.alpha},
          {"sigma", JsonValue(r.sigma)}, {"agree", r.agree},
          {"predictions", preds}};
}

struct SuiteLine {
  int line = 0;
  std::string text;
};

std::vector<SuiteLine> ReadSuite(std::istream& in) {
  std::vector<SuiteLine> lines;
  std::string raw;
  for (int n = 1; std::getline(in, raw); ++n) {
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const auto first = raw.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = raw.find_last_not_of(" \t\r");
    lines.push_back({n, raw.substr(first, last - first + 1)});
  }
  return lines;
}

std::optional<SweepRange> ParseRange(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) return std::nullopt;
  SweepRange r;
  r.var = text.substr(0, eq);
  std::string_view rest = std::string_view(text).substr(eq + 1);
  auto parse_int = [](std::string_view s, int& v) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    return ec == std::errc() && ptr == s.data() + s.size();
  };
  if (const auto dots = rest.find(".."); dots != std::string_view::npos) {
    if (!parse_int(rest.substr(0, dots), r.lo) ||
        !parse_int(rest.substr(dots + 2), r.hi)) {
      return std::nullopt;
    }
  } else {
    if (!parse_int(rest, r.lo)) return std::nullopt;
    r.hi = r.lo;
  }
  return r;
}

Format ToFormat(const std::string& s) {
  if (s == "csv") return Format::kCsv;
  if (s == "json-lines") return Format::kJsonLines;
  return Format::kText;
}

int Fail(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return kExitInputError;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact graph sensitivity workbench", "graphsens"};
  app.require_subcommand(1);

  int max_vertices = kDefaultMaxVertices;
  int oracle_limit = kDefaultOracleLimit;
  int threads = DefaultThreadCount();
  std::string format_name = "text";
  bool with_k = false;
  std::string expression;
  std::string suite;
  std::vector<std::string> ranges;
  std::string encode;

  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--max-vertices", max_vertices,
                    "Vertex budget for sigma computations")
        ->check(CLI::Range(1, kMaxEngineOrder));
  };

  CLI::App* compute = app.add_subcommand("compute", "sigma, alpha and Delta of one expression");
  compute->add_option("expression", expression, "Construction expression")->required();
  compute->add_flag("--sigma-k", with_k, "Also print sigma_k for every defined k");
  compute->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  add_budget(compute);

  CLI::App* verify = app.add_subcommand("verify", "Check predictors against the engine");
  verify->add_option("expression", expression, "Construction expression");
  verify->add_option("--suite", suite, "File with one expression per line");
  verify->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json-lines"}));
  verify->add_option("--oracle-limit", oracle_limit,
                     "Largest order checked by the brute-force oracle")
      ->check(CLI::Range(0, 63));
  verify->add_option("--threads", threads, "Worker count for suites")
      ->check(CLI::PositiveNumber);
  add_budget(verify);

  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a pattern over parameter ranges (CSV)");
  sweep->add_option("pattern", expression, "Expression with free variables")->required();
  sweep->add_option("--range", ranges, "var=lo..hi, once per free variable")->required();
  sweep->add_option("--threads", threads, "Worker count")->check(CLI::PositiveNumber);
  add_budget(sweep);

  CLI::App* dot = app.add_subcommand("export-dot", "Print the graph in DOT");
  dot->add_option("expression", expression, "Construction expression")->required();
  add_budget(dot);

  CLI::App* g6 = app.add_subcommand("graph6", "Decode graph6 lines from stdin and compute");
  g6->add_flag("--sigma-k", with_k, "Also print sigma_k for every defined k");
  g6->add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json-lines"}));
  g6->add_option("--encode", encode, "Print the graph6 line of an expression instead");
  add_budget(g6);

  CLI::App* families = app.add_subcommand("families", "List the registered families");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }
  const Format format = ToFormat(format_name);

  try {
    if (*compute) {
      const ExprPtr e = ParseExpr(expression);
      const Graph g = BuildExpr(*e, {}, max_vertices);
      PrintComputedHeader(out, format, with_k);
      PrintComputed(out, format, Compute(ToString(*e), g, with_k), with_k);
      return kExitOk;
    }

    if (*dot) {
      out << ToDot(BuildExpr(*ParseExpr(expression), {}, max_vertices));
      return kExitOk;
    }

    if (*families) {
      for (const FamilyInfo& f : FamilyRegistry()) {
        out << f.name << f.signature.ToString() << "  " << f.description
            << "\n";
      }
      return kExitOk;
    }

    if (*g6) {
      if (!encode.empty()) {
        out << WriteGraph6(BuildExpr(*ParseExpr(encode), {}, max_vertices))
            << "\n";
        return kExitOk;
      }
      PrintComputedHeader(out, format, with_k);
      std::string line;
      int status = kExitOk;
      for (int n = 1; std::getline(in, line); ++n) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
          const Graph g = ReadGraph6(line);
          if (g.order() > max_vertices) throw BudgetExceeded(g.order(), max_vertices);
          if (g.order() == 0) throw std::invalid_argument("graph has no vertices");
          PrintComputed(out, format, Compute(line, g, with_k), with_k);
        } catch (const std::exception& e) {
          err << "error: line " << n << ": " << e.what() << "\n";
          status = kExitInputError;
        }
      }
      return status;
    }

    if (*sweep) {
      const ExprPtr e = ParseExpr(expression);
      std::vector<SweepRange> parsed;
      for (const std::string& r : ranges) {
        auto range = ParseRange(r);
        if (!range) return Fail(err, "malformed range '" + r + "' (want var=lo..hi)");
        parsed.push_back(*range);
      }
      SweepOptions options;
      options.max_vertices = max_vertices;
      options.threads = threads;
      out << "params,order,delta,alpha,sigma,sigma_pred,agree,trend\n";
      for (const SweepRow& row : Sweep(*e, parsed, options)) {
        std::string params;
        for (const auto& [var, value] : row.params) {
          params += (params.empty() ? "" : ";") + var + "=" + std::to_string(value);
        }
        if (row.skipped) {
          out << params << ",,,,,,skipped,\n";
          continue;
        }
        out << params << "," << row.order << "," << row.delta << ","
            << row.alpha << "," << row.sigma << ","
            << (row.sigma_pred ? ToString(*row.sigma_pred) : "") << ","
            << (row.agree ? "yes" : "no") << "," << TrendName(*row.trend)
            << "\n";
      }
      return kExitOk;
    }

    // verify
    if (expression.empty() == suite.empty()) {
      return Fail(err, "verify takes either an expression or --suite FILE");
    }
    VerifyOptions options;
    options.max_vertices = max_vertices;
    options.oracle_limit = oracle_limit;

    std::vector<SuiteLine> lines;
    if (!suite.empty()) {
      std::ifstream file(suite);
      if (!file) return Fail(err, "cannot open suite file '" + suite + "'");
      lines = ReadSuite(file);
    } else {
      lines.push_back({0, expression});
    }

    struct Outcome {
      std::optional<VerificationReport> report;
      std::string error;
    };
    std::vector<Outcome> outcomes(lines.size());
    ParallelFor(lines.size(), threads, [&](std::size_t i) {
      try {
        outcomes[i].report = Verify(*ParseExpr(lines[i].text), {}, options);
      } catch (const std::exception& e) {
        outcomes[i].error = e.what();
      }
    });

    int disagreements = 0;
    int errors = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const Outcome& o = outcomes[i];
      if (!o.report) {
        ++errors;
        err << "error: ";
        if (lines[i].line > 0) err << suite << ":" << lines[i].line << ": ";
        err << lines[i].text << ": " << o.error << "\n";
        continue;
      }
      if (!o.report->agree) ++disagreements;
      if (format == Format::kJsonLines) {
        out << ReportJson(*o.report).dump() << "\n";
      } else {
        PrintReportText(out, *o.report);
      }
    }
    if (format == Format::kText && !suite.empty()) {
      out << lines.size() << " expressions, " << disagreements
          << " disagreements, " << errors << " errors\n";
    }
    if (disagreements > 0) return kExitDisagreement;
    return errors > 0 ? kExitInputError : kExitOk;
  } catch (const std::exception& e) {
    return Fail(err, e.what());
  }
}

}  // namespace graphsens::cli

/*
   Copyright 2026 The confpoly authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Command-line front end. Talks to the library exclusively through the
// C interface in confpoly.h; everything here is argument handling and
// output assembly.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "confpoly.h"

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct NRange {
  int lo = 0;
  int hi = 0;
};

// "--n 5" or "--n 2..8", inclusive on both ends.
bool parse_n_range(const std::string& text, NRange* out) {
  const auto dots = text.find("..");
  try {
    size_t used = 0;
    if (dots == std::string::npos) {
      out->lo = out->hi = std::stoi(text, &used);
      return used == text.size();
    }
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    out->lo = std::stoi(lo, &used);
    if (used != lo.size()) return false;
    out->hi = std::stoi(hi, &used);
    return used == hi.size();
  } catch (const std::exception&) {
    return false;
  }
}

struct StringDeleter {
  void operator()(char* s) const { confpoly_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct PolyDeleter {
  void operator()(confpoly_poly* p) const { confpoly_poly_free(p); }
};
using OwnedPoly = std::unique_ptr<confpoly_poly, PolyDeleter>;

struct CtxDeleter {
  void operator()(confpoly_ctx* c) const { confpoly_ctx_free(c); }
};
using OwnedCtx = std::unique_ptr<confpoly_ctx, CtxDeleter>;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int fail_status(confpoly_status status, const std::string& context) {
  std::cerr << "error: " << context << " (" << confpoly_status_name(status) << ")\n";
  return kExitUsage;
}

std::vector<std::string> poly_coeff_strings(const confpoly_poly* poly) {
  int degree = 0;
  confpoly_poly_degree(poly, &degree);
  std::vector<std::string> coeffs;
  for (int i = 0; i <= degree; ++i) {
    char* value = nullptr;
    confpoly_poly_coeff(poly, i, &value);
    coeffs.emplace_back(value);
    confpoly_string_free(value);
  }
  return coeffs;
}

// {"n":6,"space":"fn0","coeffs":["-4320","864",...]} with coefficients as
// decimal strings so consumers never overflow a machine integer.
std::string json_object_row(int n, const std::string& space_or_kind_key,
                            const std::string& space_or_kind,
                            const std::string& list_key,
                            const std::vector<std::string>& values) {
  std::string out = "{\"n\":" + std::to_string(n) + ",\"" + space_or_kind_key +
                    "\":\"" + space_or_kind + "\",\"" + list_key + "\":[";
  for (size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ",";
    out += "\"" + values[i] + "\"";
  }
  out += "]}";
  return out;
}

std::string csv_row(int n, int degree, const std::vector<std::string>& coeffs) {
  std::string out = std::to_string(n) + "," + std::to_string(degree);
  for (const auto& c : coeffs) out += "," + c;
  return out;
}

int emit_poly_row(const confpoly_poly* poly, int n, const std::string& space,
                  const std::string& format) {
  if (format == "plain" || format == "latex") {
    char* text = nullptr;
    const auto fmt = format == "plain" ? CONFPOLY_FORMAT_PLAIN : CONFPOLY_FORMAT_LATEX;
    // Table rows print the class variable as E regardless of space.
    const confpoly_status st = confpoly_poly_render_as(poly, fmt, 'E', &text);
    if (st != CONFPOLY_OK) return fail_status(st, "rendering row");
    std::cout << OwnedString(text).get() << "\n";
    return kExitOk;
  }
  const auto coeffs = poly_coeff_strings(poly);
  if (format == "json") {
    std::cout << json_object_row(n, "space", space, "coeffs", coeffs) << "\n";
  } else {
    int degree = 0;
    confpoly_poly_degree(poly, &degree);
    std::cout << csv_row(n, degree, coeffs) << "\n";
  }
  return kExitOk;
}

int cmd_table(confpoly_ctx* ctx, const std::string& space, const NRange& range,
              const std::string& format) {
  const auto space_code = space == "fn" ? CONFPOLY_SPACE_FN : CONFPOLY_SPACE_FN0;
  for (int n = range.lo; n <= range.hi; ++n) {
    confpoly_poly* poly = nullptr;
    const confpoly_status st = confpoly_class_poly(ctx, space_code, n, &poly);
    if (st != CONFPOLY_OK) {
      return fail_status(st, "computing table row n = " + std::to_string(n));
    }
    OwnedPoly owned(poly);
    if (int rc = emit_poly_row(poly, n, space, format); rc != kExitOk) return rc;
  }
  return kExitOk;
}

int cmd_stirling(confpoly_ctx* ctx, const std::string& kind, const NRange& range,
                 const std::string& format) {
  for (int n = range.lo; n <= range.hi; ++n) {
    std::vector<std::string> values;
    for (int k = 1; k <= n; ++k) {
      char* value = nullptr;
      const confpoly_status st = kind == "s"
                                     ? confpoly_stirling_first(ctx, n, k, &value)
                                     : confpoly_stirling_mod(ctx, n, k, &value);
      if (st != CONFPOLY_OK) {
        return fail_status(st, "computing triangle row n = " + std::to_string(n));
      }
      values.emplace_back(value);
      confpoly_string_free(value);
    }
    if (format == "json") {
      std::cout << json_object_row(n, "kind", kind, "values", values) << "\n";
    } else if (format == "csv") {
      std::string row = std::to_string(n);
      for (const auto& v : values) row += "," + v;
      std::cout << row << "\n";
    } else {
      // plain and latex coincide: triangle entries are scalars
      std::string row;
      for (size_t i = 0; i < values.size(); ++i) {
        if (i > 0) row += ", ";
        row += values[i];
      }
      std::cout << row << "\n";
    }
  }
  return kExitOk;
}

int cmd_poincare(confpoly_ctx* ctx, const std::string& space, int n,
                 const std::string& sx_text, const std::string& format) {
  OwnedPoly sx;
  if (!sx_text.empty()) {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(sx_text);
    } catch (const nlohmann::json::exception&) {
      return fail_usage("--sx is not valid JSON: " + sx_text);
    }
    if (!parsed.is_array()) return fail_usage("--sx must be a JSON array of integers");
    std::vector<std::string> decimals;
    for (const auto& entry : parsed) {
      if (entry.is_number_integer()) {
        decimals.push_back(std::to_string(entry.get<long long>()));
      } else if (entry.is_string()) {
        decimals.push_back(entry.get<std::string>());
      } else {
        return fail_usage("--sx entries must be integers or decimal strings");
      }
    }
    std::vector<const char*> raw;
    raw.reserve(decimals.size());
    for (const auto& d : decimals) raw.push_back(d.c_str());
    confpoly_poly* parsed_poly = nullptr;
    const confpoly_status st =
        confpoly_poly_from_coeffs(raw.data(), raw.size(), 'x', &parsed_poly);
    if (st != CONFPOLY_OK) return fail_status(st, "parsing --sx coefficients");
    sx.reset(parsed_poly);
  }

  const auto space_code = space == "fn" ? CONFPOLY_SPACE_FN : CONFPOLY_SPACE_FN0;
  confpoly_poly* result = nullptr;
  const confpoly_status st =
      confpoly_virtual_poincare(ctx, space_code, n, sx.get(), &result);
  if (st != CONFPOLY_OK) {
    return fail_status(st, "computing virtual Poincare polynomial for n = " +
                               std::to_string(n));
  }
  OwnedPoly owned(result);
  if (format == "plain" || format == "latex") {
    char* text = nullptr;
    const auto fmt = format == "plain" ? CONFPOLY_FORMAT_PLAIN : CONFPOLY_FORMAT_LATEX;
    const confpoly_status render_st = confpoly_poly_render(result, fmt, &text);
    if (render_st != CONFPOLY_OK) return fail_status(render_st, "rendering result");
    std::cout << OwnedString(text).get() << "\n";
    return kExitOk;
  }
  const auto coeffs = poly_coeff_strings(result);
  if (format == "json") {
    std::cout << json_object_row(n, "space", space, "coeffs", coeffs) << "\n";
  } else {
    int degree = 0;
    confpoly_poly_degree(result, &degree);
    std::cout << csv_row(n, degree, coeffs) << "\n";
  }
  return kExitOk;
}

int cmd_verify(confpoly_ctx* ctx) {
  confpoly_report* report = nullptr;
  const confpoly_status st = confpoly_verify_run(ctx, &report);
  if (st != CONFPOLY_OK) return fail_status(st, "running verification");
  int failed = 0;
  int skipped = 0;
  const size_t count = confpoly_report_size(report);
  for (size_t i = 0; i < count; ++i) {
    const int status = confpoly_report_status(report, i);
    const char* name = confpoly_report_name(report, i);
    const char* detail = confpoly_report_detail(report, i);
    const char* label = status == 0 ? "PASS" : status == 1 ? "FAIL" : "SKIP";
    if (status == 1) ++failed;
    if (status == 2) ++skipped;
    std::cout << label << " " << name;
    if (detail && detail[0] != '\0') std::cout << ": " << detail;
    std::cout << "\n";
  }
  std::cout << count << " checks: " << (count - failed - skipped) << " passed, "
            << failed << " failed, " << skipped << " skipped\n";
  confpoly_report_free(report);
  return failed == 0 ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classes and virtual Poincare polynomials of configuration spaces"};
  app.require_subcommand(1);

  std::string n_text;
  std::string space = "fn";
  std::string kind = "s";
  std::string format = "plain";
  std::string sx_text;
  int n_max = 0;  // 0 selects the library default
  long long oracle_budget = -1;

  auto add_common = [&](CLI::App* cmd, bool with_space) {
    cmd->add_option("--n", n_text, "configuration size, single (5) or range (2..8)")
        ->required();
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"plain", "latex", "json", "csv"}));
    cmd->add_option("--n-max", n_max, "largest supported n (default 64)");
    if (with_space) {
      cmd->add_option("--space", space, "configuration space")
          ->required()
          ->check(CLI::IsMember({"fn", "fn0"}));
    }
  };

  CLI::App* table = app.add_subcommand("table", "print class polynomial rows");
  add_common(table, true);

  CLI::App* stirling = app.add_subcommand("stirling", "print Stirling triangle rows");
  add_common(stirling, false);
  stirling->add_option("--kind", kind, "triangle: s or sm")
      ->required()
      ->check(CLI::IsMember({"s", "sm"}));

  CLI::App* poincare =
      app.add_subcommand("poincare", "print the virtual Poincare polynomial");
  add_common(poincare, true);
  poincare->add_option("--sx", sx_text,
                       "S(X) as a JSON coefficient array, lowest degree first "
                       "(default [1,2,1])");

  CLI::App* verify = app.add_subcommand("verify", "run the cross-validation suite");
  verify->add_option("--n-max", n_max, "largest n swept by the checks");
  verify->add_option("--oracle-budget", oracle_budget,
                     "tuple-visit budget for the counting oracles (0 skips them)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  NRange range;
  if (app.got_subcommand(verify)) {
    range = {1, 1};
  } else if (!parse_n_range(n_text, &range) || range.lo < 1 || range.lo > range.hi) {
    return fail_usage("--n must be a positive integer or inclusive range like 2..8, got '" +
                      n_text + "'");
  }

  confpoly_ctx* raw_ctx = nullptr;
  const confpoly_status ctx_st = confpoly_ctx_new(n_max, &raw_ctx);
  if (ctx_st != CONFPOLY_OK) return fail_status(ctx_st, "creating context");
  OwnedCtx ctx(raw_ctx);

  if (range.hi > confpoly_ctx_n_max(ctx.get())) {
    return fail_usage("--n " + n_text + " exceeds n-max " +
                      std::to_string(confpoly_ctx_n_max(ctx.get())) +
                      " (raise it with --n-max)");
  }
  if (oracle_budget >= 0) {
    const confpoly_status st = confpoly_ctx_set_oracle_budget(ctx.get(), oracle_budget);
    if (st != CONFPOLY_OK) return fail_status(st, "setting oracle budget");
  }

  if (app.got_subcommand(table)) return cmd_table(ctx.get(), space, range, format);
  if (app.got_subcommand(stirling)) return cmd_stirling(ctx.get(), kind, range, format);
  if (app.got_subcommand(poincare)) {
    if (range.lo != range.hi) return fail_usage("poincare takes a single --n");
    return cmd_poincare(ctx.get(), space, range.lo, sx_text, format);
  }
  return cmd_verify(ctx.get());
}

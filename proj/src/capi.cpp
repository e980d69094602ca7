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

#include "confpoly.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "errors.hpp"
#include "motive.hpp"
#include "oracles.hpp"
#include "poly.hpp"
#include "stirling.hpp"
#include "verify.hpp"

using confpoly::BigInt;
using confpoly::Poly;

struct confpoly_ctx {
  confpoly::StirlingTable table;
  long long oracle_budget = confpoly::kDefaultOracleBudget;

  explicit confpoly_ctx(int n_max) : table(n_max) {}
};

struct confpoly_poly {
  Poly value;
};

struct confpoly_report {
  std::vector<confpoly::CheckResult> checks;
};

namespace {

// Copies into a malloc'd buffer so the caller frees with confpoly_string_free.
char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
confpoly_status guarded(Fn&& fn) {
  try {
    fn();
    return CONFPOLY_OK;
  } catch (const confpoly::RangeError&) {
    return CONFPOLY_ERR_RANGE;
  } catch (const confpoly::BudgetError&) {
    return CONFPOLY_ERR_BUDGET;
  } catch (const confpoly::VarMismatchError&) {
    return CONFPOLY_ERR_VARIABLE;
  } catch (const confpoly::PreconditionError&) {
    return CONFPOLY_ERR_PRECONDITION;
  } catch (const std::bad_alloc&) {
    return CONFPOLY_ERR_NOMEM;
  } catch (...) {
    return CONFPOLY_ERR_INTERNAL;
  }
}

confpoly::PolyFormat to_format(confpoly_format format) {
  switch (format) {
    case CONFPOLY_FORMAT_PLAIN: return confpoly::PolyFormat::Plain;
    case CONFPOLY_FORMAT_LATEX: return confpoly::PolyFormat::Latex;
    case CONFPOLY_FORMAT_JSON: return confpoly::PolyFormat::Json;
  }
  throw confpoly::PreconditionError("unknown format code");
}

}  // namespace

extern "C" {

const char* confpoly_version(void) { return "0.1.0"; }

const char* confpoly_status_name(confpoly_status status) {
  switch (status) {
    case CONFPOLY_OK: return "ok";
    case CONFPOLY_ERR_ARGUMENT: return "argument";
    case CONFPOLY_ERR_RANGE: return "range";
    case CONFPOLY_ERR_BUDGET: return "budget";
    case CONFPOLY_ERR_PRECONDITION: return "precondition";
    case CONFPOLY_ERR_VARIABLE: return "variable";
    case CONFPOLY_ERR_NOMEM: return "nomem";
    case CONFPOLY_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

confpoly_status confpoly_ctx_new(int n_max, confpoly_ctx** out_ctx) {
  if (!out_ctx) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    *out_ctx = new confpoly_ctx(n_max <= 0 ? confpoly::kDefaultNMax : n_max);
  });
}

void confpoly_ctx_free(confpoly_ctx* ctx) { delete ctx; }

int confpoly_ctx_n_max(const confpoly_ctx* ctx) {
  return ctx ? ctx->table.n_max() : -1;
}

confpoly_status confpoly_ctx_set_oracle_budget(confpoly_ctx* ctx, long long tuple_visits) {
  if (!ctx) return CONFPOLY_ERR_ARGUMENT;
  if (tuple_visits < 0) return CONFPOLY_ERR_RANGE;
  ctx->oracle_budget = tuple_visits;
  return CONFPOLY_OK;
}

confpoly_status confpoly_class_poly(confpoly_ctx* ctx, confpoly_space space, int n,
                                    confpoly_poly** out_poly) {
  if (!ctx || !out_poly) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    const auto cls = confpoly::class_of(ctx->table,
                                        space == CONFPOLY_SPACE_FN
                                            ? confpoly::Space::FN
                                            : confpoly::Space::FN0,
                                        n);
    *out_poly = new confpoly_poly{cls.poly};
  });
}

confpoly_status confpoly_stirling_first(confpoly_ctx* ctx, int n, int k, char** out_value) {
  if (!ctx || !out_value) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    *out_value = dup_string(ctx->table.stirling_first(n, k).str());
  });
}

confpoly_status confpoly_stirling_mod(confpoly_ctx* ctx, int n, int k, char** out_value) {
  if (!ctx || !out_value) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    *out_value = dup_string(ctx->table.stirling_mod(n, k).str());
  });
}

confpoly_status confpoly_virtual_poincare(confpoly_ctx* ctx, confpoly_space space, int n,
                                          const confpoly_poly* sx, confpoly_poly** out_poly) {
  if (!ctx || !out_poly) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    const auto cls = confpoly::class_of(ctx->table,
                                        space == CONFPOLY_SPACE_FN
                                            ? confpoly::Space::FN
                                            : confpoly::Space::FN0,
                                        n);
    const Poly inner = sx ? sx->value : confpoly::poincare_elliptic_curve();
    *out_poly = new confpoly_poly{confpoly::virtual_poincare(cls, inner)};
  });
}

confpoly_status confpoly_poincare_elliptic(confpoly_poly** out_poly) {
  if (!out_poly) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    *out_poly = new confpoly_poly{confpoly::poincare_elliptic_curve()};
  });
}

confpoly_status confpoly_poly_from_coeffs(const char* const* decimal_coeffs, size_t count,
                                          char var, confpoly_poly** out_poly) {
  if (!out_poly || (count > 0 && !decimal_coeffs)) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    std::vector<BigInt> coeffs;
    coeffs.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (!decimal_coeffs[i]) throw confpoly::PreconditionError("null coefficient");
      coeffs.emplace_back(std::string(decimal_coeffs[i]));
    }
    *out_poly = new confpoly_poly{Poly(std::move(coeffs), confpoly::var_from_char(var))};
  });
}

confpoly_status confpoly_poly_degree(const confpoly_poly* poly, int* out_degree) {
  if (!poly || !out_degree) return CONFPOLY_ERR_ARGUMENT;
  *out_degree = poly->value.degree();
  return CONFPOLY_OK;
}

confpoly_status confpoly_poly_var(const confpoly_poly* poly, char* out_var) {
  if (!poly || !out_var) return CONFPOLY_ERR_ARGUMENT;
  *out_var = confpoly::var_name(poly->value.var());
  return CONFPOLY_OK;
}

confpoly_status confpoly_poly_coeff(const confpoly_poly* poly, int i, char** out_value) {
  if (!poly || !out_value) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] { *out_value = dup_string(poly->value.coeff(i).str()); });
}

confpoly_status confpoly_poly_render(const confpoly_poly* poly, confpoly_format format,
                                     char** out_text) {
  if (!poly || !out_text) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] { *out_text = dup_string(poly->value.render(to_format(format))); });
}

confpoly_status confpoly_poly_render_as(const confpoly_poly* poly, confpoly_format format,
                                        char display_var, char** out_text) {
  if (!poly || !out_text) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    const Poly shown = poly->value.with_var(confpoly::var_from_char(display_var));
    *out_text = dup_string(shown.render(to_format(format)));
  });
}

confpoly_status confpoly_poly_eval(const confpoly_poly* poly, const char* decimal_point,
                                   char** out_value) {
  if (!poly || !decimal_point || !out_value) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    BigInt t;
    try {
      t = BigInt(std::string(decimal_point));
    } catch (const std::exception&) {
      throw confpoly::PreconditionError("evaluation point is not a decimal integer");
    }
    *out_value = dup_string(poly->value.eval(t).str());
  });
}

void confpoly_poly_free(confpoly_poly* poly) { delete poly; }

confpoly_status confpoly_verify_run(confpoly_ctx* ctx, confpoly_report** out_report) {
  if (!ctx || !out_report) return CONFPOLY_ERR_ARGUMENT;
  return guarded([&] {
    confpoly::VerifyOptions opts;
    opts.n_max = ctx->table.n_max();
    opts.oracle_budget = ctx->oracle_budget;
    *out_report = new confpoly_report{confpoly::run_verification(opts)};
  });
}

size_t confpoly_report_size(const confpoly_report* report) {
  return report ? report->checks.size() : 0;
}

int confpoly_report_status(const confpoly_report* report, size_t index) {
  if (!report || index >= report->checks.size()) return -1;
  switch (report->checks[index].status) {
    case confpoly::CheckStatus::Pass: return 0;
    case confpoly::CheckStatus::Fail: return 1;
    case confpoly::CheckStatus::Skip: return 2;
  }
  return -1;
}

const char* confpoly_report_name(const confpoly_report* report, size_t index) {
  if (!report || index >= report->checks.size()) return nullptr;
  return report->checks[index].name.c_str();
}

const char* confpoly_report_detail(const confpoly_report* report, size_t index) {
  if (!report || index >= report->checks.size()) return nullptr;
  return report->checks[index].detail.c_str();
}

void confpoly_report_free(confpoly_report* report) { delete report; }

void confpoly_string_free(char* text) { std::free(text); }

}  // extern "C"

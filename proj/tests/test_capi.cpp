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

// Exercises the shared-library surface the way an external consumer would:
// through opaque handles and status codes only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "confpoly.h"

namespace {

std::string take(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  confpoly_string_free(text);
  return out;
}

struct Ctx {
  confpoly_ctx* ptr = nullptr;
  explicit Ctx(int n_max = 0) { REQUIRE(confpoly_ctx_new(n_max, &ptr) == CONFPOLY_OK); }
  ~Ctx() { confpoly_ctx_free(ptr); }
  Ctx(const Ctx&) = delete;
  Ctx& operator=(const Ctx&) = delete;
};

}  // namespace

TEST_CASE("context lifecycle and defaults") {
  Ctx ctx;
  CHECK(confpoly_ctx_n_max(ctx.ptr) == 64);
  Ctx small(8);
  CHECK(confpoly_ctx_n_max(small.ptr) == 8);
  CHECK(confpoly_ctx_n_max(nullptr) == -1);
  CHECK(confpoly_ctx_new(5, nullptr) == CONFPOLY_ERR_ARGUMENT);
  CHECK(std::string(confpoly_version()) == "0.1.0");
}

TEST_CASE("class polynomials through the C interface") {
  Ctx ctx(16);
  confpoly_poly* poly = nullptr;
  REQUIRE(confpoly_class_poly(ctx.ptr, CONFPOLY_SPACE_FN0, 4, &poly) == CONFPOLY_OK);

  char var = 0;
  CHECK(confpoly_poly_var(poly, &var) == CONFPOLY_OK);
  CHECK(var == 'E');

  int degree = -2;
  CHECK(confpoly_poly_degree(poly, &degree) == CONFPOLY_OK);
  CHECK(degree == 3);

  char* text = nullptr;
  REQUIRE(confpoly_poly_render(poly, CONFPOLY_FORMAT_PLAIN, &text) == CONFPOLY_OK);
  CHECK(take(text) == "E^3 - 6E^2 + 20E - 96");

  REQUIRE(confpoly_poly_render(poly, CONFPOLY_FORMAT_JSON, &text) == CONFPOLY_OK);
  CHECK(take(text) == "[-96, 20, -6, 1]");

  char* coeff = nullptr;
  REQUIRE(confpoly_poly_coeff(poly, 0, &coeff) == CONFPOLY_OK);
  CHECK(take(coeff) == "-96");
  REQUIRE(confpoly_poly_coeff(poly, 9, &coeff) == CONFPOLY_OK);
  CHECK(take(coeff) == "0");

  confpoly_poly_free(poly);
}

TEST_CASE("rendering with a display variable") {
  Ctx ctx(8);
  confpoly_poly* poly = nullptr;
  REQUIRE(confpoly_class_poly(ctx.ptr, CONFPOLY_SPACE_FN, 4, &poly) == CONFPOLY_OK);
  char* text = nullptr;
  REQUIRE(confpoly_poly_render(poly, CONFPOLY_FORMAT_PLAIN, &text) == CONFPOLY_OK);
  CHECK(take(text) == "X^4 - 6X^3 + 11X^2 - 6X");
  REQUIRE(confpoly_poly_render_as(poly, CONFPOLY_FORMAT_LATEX, 'E', &text) == CONFPOLY_OK);
  CHECK(take(text) == "$E^4 - 6E^3 + 11E^2 - 6E$");
  CHECK(confpoly_poly_render_as(poly, CONFPOLY_FORMAT_PLAIN, 'Q', &text) ==
        CONFPOLY_ERR_PRECONDITION);
  confpoly_poly_free(poly);
}

TEST_CASE("evaluation with decimal strings") {
  Ctx ctx(8);
  confpoly_poly* poly = nullptr;
  REQUIRE(confpoly_class_poly(ctx.ptr, CONFPOLY_SPACE_FN0, 3, &poly) == CONFPOLY_OK);
  char* value = nullptr;
  REQUIRE(confpoly_poly_eval(poly, "36", &value) == CONFPOLY_OK);
  CHECK(take(value) == "1206");
  // evaluation points beyond any machine word
  REQUIRE(confpoly_poly_eval(poly, "1000000000000000000000", &value) == CONFPOLY_OK);
  CHECK(take(value) == "999999999999999999997000000000000000000018");
  CHECK(confpoly_poly_eval(poly, "not-a-number", &value) == CONFPOLY_ERR_PRECONDITION);
  CHECK(confpoly_poly_eval(poly, nullptr, &value) == CONFPOLY_ERR_ARGUMENT);
  confpoly_poly_free(poly);
}

TEST_CASE("stirling entries as strings") {
  Ctx ctx(12);
  char* value = nullptr;
  REQUIRE(confpoly_stirling_first(ctx.ptr, 4, 2, &value) == CONFPOLY_OK);
  CHECK(take(value) == "11");
  REQUIRE(confpoly_stirling_mod(ctx.ptr, 4, 1, &value) == CONFPOLY_OK);
  CHECK(take(value) == "96");
  REQUIRE(confpoly_stirling_first(ctx.ptr, 4, 9, &value) == CONFPOLY_OK);
  CHECK(take(value) == "0");
  CHECK(confpoly_stirling_first(ctx.ptr, 13, 1, &value) == CONFPOLY_ERR_RANGE);
  CHECK(confpoly_stirling_first(nullptr, 4, 2, &value) == CONFPOLY_ERR_ARGUMENT);
}

TEST_CASE("virtual Poincare polynomial with the default and custom S(X)") {
  Ctx ctx(8);
  confpoly_poly* result = nullptr;
  REQUIRE(confpoly_virtual_poincare(ctx.ptr, CONFPOLY_SPACE_FN0, 2, nullptr, &result) ==
          CONFPOLY_OK);
  char* text = nullptr;
  REQUIRE(confpoly_poly_render(result, CONFPOLY_FORMAT_PLAIN, &text) == CONFPOLY_OK);
  CHECK(take(text) == "x^2 + 2x - 3");
  confpoly_poly_free(result);

  // S of the projective line, 1 + x^2
  const char* coeffs[] = {"1", "0", "1"};
  confpoly_poly* sx = nullptr;
  REQUIRE(confpoly_poly_from_coeffs(coeffs, 3, 'x', &sx) == CONFPOLY_OK);
  REQUIRE(confpoly_virtual_poincare(ctx.ptr, CONFPOLY_SPACE_FN, 3, sx, &result) ==
          CONFPOLY_OK);
  REQUIRE(confpoly_poly_render(result, CONFPOLY_FORMAT_PLAIN, &text) == CONFPOLY_OK);
  CHECK(take(text) == "x^6 - x^2");
  confpoly_poly_free(result);

  // S(X) tagged with a class variable is a variable mismatch
  confpoly_poly* wrong = nullptr;
  REQUIRE(confpoly_poly_from_coeffs(coeffs, 3, 'E', &wrong) == CONFPOLY_OK);
  CHECK(confpoly_virtual_poincare(ctx.ptr, CONFPOLY_SPACE_FN, 3, wrong, &result) ==
        CONFPOLY_ERR_VARIABLE);
  confpoly_poly_free(wrong);
  confpoly_poly_free(sx);
}

TEST_CASE("polynomial construction errors") {
  confpoly_poly* poly = nullptr;
  const char* bad[] = {"12x"};
  CHECK(confpoly_poly_from_coeffs(bad, 1, 'x', &poly) != CONFPOLY_OK);
  const char* coeffs[] = {"1"};
  CHECK(confpoly_poly_from_coeffs(coeffs, 1, 'Q', &poly) == CONFPOLY_ERR_PRECONDITION);
  CHECK(confpoly_poly_from_coeffs(nullptr, 2, 'x', &poly) == CONFPOLY_ERR_ARGUMENT);

  // empty coefficient list is the zero polynomial
  REQUIRE(confpoly_poly_from_coeffs(nullptr, 0, 'x', &poly) == CONFPOLY_OK);
  int degree = 0;
  CHECK(confpoly_poly_degree(poly, &degree) == CONFPOLY_OK);
  CHECK(degree == -1);
  char* text = nullptr;
  REQUIRE(confpoly_poly_render(poly, CONFPOLY_FORMAT_PLAIN, &text) == CONFPOLY_OK);
  CHECK(take(text) == "0");
  confpoly_poly_free(poly);
}

TEST_CASE("range errors surface as status codes") {
  Ctx ctx(8);
  confpoly_poly* poly = nullptr;
  CHECK(confpoly_class_poly(ctx.ptr, CONFPOLY_SPACE_FN, 9, &poly) == CONFPOLY_ERR_RANGE);
  CHECK(confpoly_class_poly(ctx.ptr, CONFPOLY_SPACE_FN, -1, &poly) == CONFPOLY_ERR_RANGE);
  CHECK(confpoly_class_poly(nullptr, CONFPOLY_SPACE_FN, 2, &poly) == CONFPOLY_ERR_ARGUMENT);
}

TEST_CASE("status names") {
  CHECK(std::string(confpoly_status_name(CONFPOLY_OK)) == "ok");
  CHECK(std::string(confpoly_status_name(CONFPOLY_ERR_RANGE)) == "range");
  CHECK(std::string(confpoly_status_name(CONFPOLY_ERR_BUDGET)) == "budget");
  CHECK(std::string(confpoly_status_name(CONFPOLY_ERR_VARIABLE)) == "variable");
}

TEST_CASE("verification through the C interface") {
  Ctx ctx(12);
  confpoly_report* report = nullptr;
  REQUIRE(confpoly_verify_run(ctx.ptr, &report) == CONFPOLY_OK);
  const size_t count = confpoly_report_size(report);
  CHECK(count == 11);
  for (size_t i = 0; i < count; ++i) {
    CHECK(confpoly_report_status(report, i) == 0);
    CHECK(confpoly_report_name(report, i) != nullptr);
  }
  CHECK(confpoly_report_status(report, count) == -1);
  CHECK(confpoly_report_name(report, count) == nullptr);
  confpoly_report_free(report);

  // zero budget: oracle checks report skipped (status 2), none fail
  REQUIRE(confpoly_ctx_set_oracle_budget(ctx.ptr, 0) == CONFPOLY_OK);
  REQUIRE(confpoly_verify_run(ctx.ptr, &report) == CONFPOLY_OK);
  int skipped = 0;
  for (size_t i = 0; i < confpoly_report_size(report); ++i) {
    const int status = confpoly_report_status(report, i);
    CHECK(status != 1);
    if (status == 2) ++skipped;
  }
  CHECK(skipped == 2);
  confpoly_report_free(report);

  CHECK(confpoly_ctx_set_oracle_budget(ctx.ptr, -1) == CONFPOLY_ERR_RANGE);
  CHECK(confpoly_verify_run(nullptr, &report) == CONFPOLY_ERR_ARGUMENT);
}

TEST_CASE("round trip: coefficient strings rebuild the same polynomial") {
  Ctx ctx(10);
  confpoly_poly* poly = nullptr;
  REQUIRE(confpoly_class_poly(ctx.ptr, CONFPOLY_SPACE_FN0, 6, &poly) == CONFPOLY_OK);
  int degree = 0;
  REQUIRE(confpoly_poly_degree(poly, &degree) == CONFPOLY_OK);

  std::vector<std::string> coeffs;
  for (int i = 0; i <= degree; ++i) {
    char* c = nullptr;
    REQUIRE(confpoly_poly_coeff(poly, i, &c) == CONFPOLY_OK);
    coeffs.push_back(take(c));
  }
  std::vector<const char*> raw;
  for (const auto& c : coeffs) raw.push_back(c.c_str());
  confpoly_poly* rebuilt = nullptr;
  REQUIRE(confpoly_poly_from_coeffs(raw.data(), raw.size(), 'E', &rebuilt) == CONFPOLY_OK);

  char* left = nullptr;
  char* right = nullptr;
  REQUIRE(confpoly_poly_render(poly, CONFPOLY_FORMAT_JSON, &left) == CONFPOLY_OK);
  REQUIRE(confpoly_poly_render(rebuilt, CONFPOLY_FORMAT_JSON, &right) == CONFPOLY_OK);
  CHECK(take(left) == take(right));
  confpoly_poly_free(poly);
  confpoly_poly_free(rebuilt);
}

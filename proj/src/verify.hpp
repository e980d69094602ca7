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

#ifndef CONFPOLY_VERIFY_HPP
#define CONFPOLY_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "oracles.hpp"

namespace confpoly {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;  // empty on pass; reason on fail/skip
};

struct VerifyOptions {
  // Caps every n-sweep; the individual checks additionally cap themselves
  // at the bound their enumeration strategy can afford.
  int n_max = 12;
  long long oracle_budget = kDefaultOracleBudget;
};

// Known-good rows of [F_n(E)] and [F_n^0(E)] for n = 2..8, coefficients
// lowest degree first. These published values are the external ground
// truth everything else is checked against.
const std::map<int, std::vector<BigInt>>& reference_table_fn();
const std::map<int, std::vector<BigInt>>& reference_table_fn0();

// Runs the full cross-validation suite: reference-table parity, dual-path
// Stirling equality, Mobius closed form vs defining recursion, generating
// identities, and the counting oracles. Checks whose enumeration exceeds
// the budget are reported Skip, not Fail.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

}  // namespace confpoly

#endif  // CONFPOLY_VERIFY_HPP

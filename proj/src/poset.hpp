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

#ifndef CONFPOLY_POSET_HPP
#define CONFPOLY_POSET_HPP

#include "bigint.hpp"
#include "partitions.hpp"

namespace confpoly {

// The defining recursion enumerates every refinement of sigma, so its
// cost is governed by Bell numbers of the block sizes.
inline constexpr int kMobiusRecursionLimit = 8;
inline constexpr int kKernelCountLimit = 8;

// Refinement order on Part(n): true iff every block of sigma is contained
// in some block of pi. Rejects partitions of different ground sets.
bool refines(const SetPartition& sigma, const SetPartition& pi);

// mu(0, sigma) on the partition lattice in closed form:
// (-1)^(n - l(sigma)) * prod_i (|sigma_i| - 1)!.
BigInt mobius_closed(const SetPartition& sigma);

// mu(0, sigma) computed from the defining relation
// sum_{pi <= sigma} mu(0, pi) = delta(0, sigma) by recursing over all
// refinements of sigma. Independent of the closed form; values are
// memoized by block-size shape, which is sound because relabeling
// {1..n} is a poset automorphism. Ground sets above the limit are
// rejected as a resource bound.
BigInt mobius_recursive(const SetPartition& sigma, int limit = kMobiusRecursionLimit);

// Number of functions {1..n} -> {1..x} whose kernel (the partition of the
// domain into equal-value classes) is exactly sigma, by enumerating all
// x^n functions.
BigInt count_functions_with_kernel(const SetPartition& sigma, int x,
                                   int limit = kKernelCountLimit);

}  // namespace confpoly

#endif  // CONFPOLY_POSET_HPP

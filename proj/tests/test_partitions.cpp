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

#include "partitions.hpp"

#include <map>
#include <numeric>
#include <vector>

#include "doctest.h"
#include "errors.hpp"

using confpoly::BigInt;
using confpoly::SetPartition;
using confpoly::Shape;

namespace {

// Independent counting oracles, kept free of the enumeration code they check.

// Number of integer partitions of n with parts <= max_part.
long long partition_count(int n, int max_part) {
  if (n == 0) return 1;
  if (n < 0 || max_part == 0) return 0;
  return partition_count(n - max_part, max_part) + partition_count(n, max_part - 1);
}

// Bell numbers by the Bell-triangle recurrence.
std::vector<BigInt> bell_numbers(int up_to) {
  std::vector<BigInt> bell{1};  // Bell(0)
  std::vector<BigInt> row{1};
  for (int n = 1; n <= up_to; ++n) {
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    row = std::move(next);
    bell.push_back(row.front());
  }
  return bell;
}

}  // namespace

TEST_CASE("shapes of 4 in reverse-lexicographic order") {
  const auto shapes = confpoly::all_shapes(4);
  const std::vector<std::vector<int>> expected = {
      {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
  REQUIRE(shapes.size() == expected.size());
  for (size_t i = 0; i < shapes.size(); ++i) {
    CHECK(shapes[i].parts() == expected[i]);
  }
}

TEST_CASE("shape stream edge cases") {
  const auto one = confpoly::all_shapes(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].parts() == std::vector<int>{1});

  const auto zero = confpoly::all_shapes(0);
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].length() == 0);
  CHECK(zero[0].n() == 0);
}

TEST_CASE("shape stream counts match the partition recurrence") {
  for (int n = 1; n <= 12; ++n) {
    CHECK(static_cast<long long>(confpoly::all_shapes(n).size()) ==
          partition_count(n, n));
  }
  CHECK(confpoly::all_shapes(8).size() == 22);
}

TEST_CASE("shape invariants") {
  for (int n = 1; n <= 9; ++n) {
    confpoly::for_each_shape(n, [&](const Shape& s) {
      CHECK(s.n() == n);
      CHECK(s.length() >= 1);
      for (size_t i = 0; i < s.parts().size(); ++i) {
        CHECK(s.parts()[i] >= 1);
        if (i > 0) CHECK(s.parts()[i] <= s.parts()[i - 1]);
      }
      CHECK(std::accumulate(s.parts().begin(), s.parts().end(), 0) == n);
    });
  }
}

TEST_CASE("shape multiplicity") {
  CHECK(Shape({2, 2}).multiplicity() == 3);
  CHECK(Shape({3, 1}).multiplicity() == 4);
  CHECK(Shape({2, 2, 1, 1}).multiplicity() == 45);
  CHECK(Shape({1, 1, 1}).multiplicity() == 1);
  CHECK(Shape({5}).multiplicity() == 1);
}

TEST_CASE("shape multiplicity agrees with a tally over Part(n)") {
  for (int n = 1; n <= 7; ++n) {
    std::map<std::vector<int>, BigInt> tally;
    confpoly::for_each_set_partition(n, [&](const SetPartition& p) {
      tally[p.shape().parts()] += 1;
    });
    confpoly::for_each_shape(n, [&](const Shape& s) {
      CHECK(tally[s.parts()] == s.multiplicity());
    });
  }
}

TEST_CASE("set partitions of 3 in lexicographic rgs order") {
  const auto parts = confpoly::all_set_partitions(3);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0].rgs() == std::vector<int>{0, 0, 0});
  CHECK(parts[1].rgs() == std::vector<int>{0, 0, 1});
  CHECK(parts[2].rgs() == std::vector<int>{0, 1, 0});
  CHECK(parts[3].rgs() == std::vector<int>{0, 1, 1});
  CHECK(parts[4].rgs() == std::vector<int>{0, 1, 2});
  CHECK(parts[1].to_string() == "{1 2|3}");
}

TEST_CASE("set partitions with a fixed block count") {
  const auto parts = confpoly::all_set_partitions(3, 2);
  REQUIRE(parts.size() == 3);
  CHECK(parts[0].to_string() == "{1 2|3}");
  CHECK(parts[1].to_string() == "{1 3|2}");
  CHECK(parts[2].to_string() == "{1|2 3}");
  for (const auto& p : parts) CHECK(p.block_count() == 2);
}

TEST_CASE("set partition stream counts are Bell numbers") {
  const auto bell = bell_numbers(9);
  for (int n = 1; n <= 9; ++n) {
    long long count = 0;
    confpoly::for_each_set_partition(n, [&](const SetPartition&) { ++count; });
    CHECK(BigInt(count) == bell[static_cast<size_t>(n)]);
  }
  long long count8 = 0;
  confpoly::for_each_set_partition(8, [&](const SetPartition&) { ++count8; });
  CHECK(count8 == 4140);
}

TEST_CASE("emitted rgs strings are valid and shapes are consistent") {
  for (int n = 1; n <= 7; ++n) {
    confpoly::for_each_set_partition(n, [&](const SetPartition& p) {
      const auto& rgs = p.rgs();
      REQUIRE(rgs[0] == 0);
      int max_seen = 0;
      for (size_t i = 1; i < rgs.size(); ++i) {
        CHECK(rgs[i] <= max_seen + 1);
        max_seen = std::max(max_seen, rgs[i]);
      }
      CHECK(max_seen + 1 == p.block_count());
      const Shape s = p.shape();
      CHECK(s.n() == n);
      CHECK(s.length() == p.block_count());
    });
  }
}

TEST_CASE("shape aggregation is lossless") {
  // Summing multiplicities over shapes with k parts reproduces the size
  // of the k-block set-partition stream.
  for (int n = 1; n <= 9; ++n) {
    for (int k = 1; k <= n; ++k) {
      BigInt by_shapes = 0;
      confpoly::for_each_shape(n, [&](const Shape& s) {
        if (s.length() == k) by_shapes += s.multiplicity();
      });
      long long by_stream = 0;
      confpoly::for_each_set_partition(n, [&](const SetPartition&) { ++by_stream; }, k);
      CHECK(by_shapes == by_stream);
    }
  }
}

TEST_CASE("shape gcd") {
  CHECK(Shape({2, 2}).gcd() == 2);
  CHECK(Shape({3, 1}).gcd() == 1);
  CHECK(Shape({6, 4, 2}).gcd() == 2);
  CHECK_THROWS_AS(Shape().gcd(), confpoly::PreconditionError);
}

TEST_CASE("any shape containing a part 1 has gcd 1") {
  for (int n = 1; n <= 9; ++n) {
    confpoly::for_each_shape(n, [&](const Shape& s) {
      if (s.parts().back() == 1) CHECK(s.gcd() == 1);
    });
  }
}

TEST_CASE("set partition enumeration enforces its resource bound") {
  CHECK_THROWS_WITH_AS(confpoly::for_each_set_partition(13, [](const SetPartition&) {}),
                       doctest::Contains("n <= 12"), confpoly::BudgetError);
  // the bound is configurable
  long long count = 0;
  confpoly::for_each_set_partition(3, [&](const SetPartition&) { ++count; },
                                   std::nullopt, 3);
  CHECK(count == 5);
  CHECK_THROWS_AS(confpoly::for_each_set_partition(
                      4, [](const SetPartition&) {}, std::nullopt, 3),
                  confpoly::BudgetError);
}

TEST_CASE("invalid construction is rejected") {
  CHECK_THROWS_AS(Shape({1, 2}), confpoly::PreconditionError);
  CHECK_THROWS_AS(Shape({0}), confpoly::PreconditionError);
  CHECK_THROWS_AS(SetPartition({0, 2}), confpoly::PreconditionError);
  CHECK_THROWS_AS(SetPartition({1}), confpoly::PreconditionError);
  CHECK_THROWS_AS(confpoly::all_set_partitions(3, 4), confpoly::RangeError);
  CHECK_THROWS_AS(confpoly::all_set_partitions(0), confpoly::RangeError);
}

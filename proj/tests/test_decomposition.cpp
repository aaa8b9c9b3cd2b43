#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gracekit/decomposition.hpp"
#include "gracekit/endofunction.hpp"
#include "gracekit/enumerate.hpp"
#include "gracekit/labeling.hpp"

using namespace gracekit;

namespace {

Endofunction ef(std::vector<int> v) { return Endofunction(std::move(v)); }

}  // namespace

TEST_CASE("triangle from the 2-vertex tree") {
  auto report = ringel_decompose(ef({0, 0}), identity(2));
  CHECK(report.is_partition);
  REQUIRE(report.shifts.size() == 3);
  std::set<std::pair<int, int>> all;
  for (const auto& shift : report.shifts) {
    REQUIRE(shift.size() == 1);
    all.insert(shift.begin(), shift.end());
  }
  CHECK(all == std::set<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}});
}

TEST_CASE("K_7 from the 4-path with the worked coset representative") {
  auto report = ringel_decompose(ef({0, 0, 1, 2}), ef({0, 3, 1, 2}));
  CHECK(report.is_partition);
  CHECK(report.shifts.size() == 7);
  size_t total = 0;
  for (const auto& shift : report.shifts) {
    CHECK(shift.size() == 3);
    total += shift.size();
  }
  CHECK(total == 21);
  CHECK(report.missing.empty());
  CHECK(report.duplicated.empty());
}

TEST_CASE("decompose validates input") {
  CHECK_THROWS_AS(ringel_decompose(ef({0, 0, 1, 2}), identity(4)), std::invalid_argument);
  CHECK_THROWS_AS(ringel_decompose(ef({1, 0}), identity(2)), std::invalid_argument);
}

TEST_CASE("rotational coherence") {
  auto report = ringel_decompose(ef({0, 0, 1, 2}), ef({0, 3, 1, 2}));
  const int m = 7;
  for (size_t i = 0; i + 1 < report.shifts.size(); ++i) {
    std::set<std::pair<int, int>> rotated;
    for (auto [u, v] : report.shifts[i]) rotated.insert(std::minmax((u + 1) % m, (v + 1) % m));
    std::set<std::pair<int, int>> next(report.shifts[i + 1].begin(), report.shifts[i + 1].end());
    CHECK(rotated == next);
  }
}

TEST_CASE("every graceful labeling of every small tree decomposes") {
  for (int n = 2; n <= 5; ++n) {
    RootedTreeStream trees(n);
    for (std::uint64_t k = 0; k < trees.size(); ++k) {
      Endofunction f = trees.at(k);
      for_each_graceful_labeling(f, [&](const Endofunction& sigma) {
        auto report = ringel_decompose(f, sigma);
        CHECK(report.is_partition);
        return true;
      });
    }
  }
  // single searched labeling per tree at n = 6
  RootedTreeStream trees(6);
  for (std::uint64_t k = 0; k < trees.size(); ++k) {
    Endofunction f = trees.at(k);
    auto sigma = find_graceful_labeling(f);
    REQUIRE(sigma.has_value());
    CHECK(ringel_decompose(f, *sigma).is_partition);
  }
}

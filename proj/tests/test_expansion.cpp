#include <vector>
#include <stdexcept>

#include "doctest.h"
#include "gracekit/core.hpp"
#include "gracekit/endofunction.hpp"
#include "gracekit/enumerate.hpp"
#include "gracekit/expansion.hpp"
#include "gracekit/labeling.hpp"

using namespace gracekit;

namespace {

Endofunction ef(std::vector<int> v) { return Endofunction(std::move(v)); }

long long bases_count_formula(int n) {
  long long lo = 1, hi = 1;
  for (int i = 2; i <= (n - 1) / 2; ++i) lo *= i;
  for (int i = 2; i <= n / 2; ++i) hi *= i;
  return lo * hi;
}

}  // namespace

TEST_CASE("is_permutation_basis") {
  CHECK(is_permutation_basis(identity(5)));
  CHECK_FALSE(is_permutation_basis(ef({0, 2, 1})));
  CHECK(is_permutation_basis(ef({0, 2, 1, 3})));
  CHECK_THROWS_AS(is_permutation_basis(ef({1, 0, 2})), std::invalid_argument);
  CHECK_THROWS_AS(is_permutation_basis(ef({0, 0, 1})), std::invalid_argument);
}

TEST_CASE("enumerate_bases counts") {
  CHECK(enumerate_bases(3) == std::vector<Endofunction>{identity(3)});
  CHECK(enumerate_bases(4).size() == 2);
  for (int n = 3; n <= 7; ++n) {
    auto bases = enumerate_bases(n);
    CHECK(static_cast<long long>(bases.size()) == bases_count_formula(n));
    for (const auto& gamma : bases) {
      CHECK(gamma(0) == 0);
      CHECK(is_permutation_basis(gamma));
    }
  }
  CHECK_THROWS_AS(enumerate_bases(2), std::domain_error);
}

TEST_CASE("worked 4-path example: both coset representatives") {
  Endofunction f = ef({0, 0, 1, 2});

  for (int t : {0, 1}) {
    ExpansionBasis basis = expansion_from_labeling(f, ef({0, 3, 1, 2}), t);
    CHECK(basis.gamma == ef({0, 2, 1, 3}));
    CHECK(basis.sign == std::vector<int>{0, 1, -1, -1});
    CHECK(is_permutation_basis(basis.gamma));
    CHECK(reconstruct(basis) == f);
  }

  for (int t : {0, 1}) {
    ExpansionBasis basis = expansion_from_labeling(f, ef({2, 1, 3, 0}), t);
    CHECK(basis.gamma == ef({3, 1, 0, 2}));
    CHECK(basis.sign == std::vector<int>{1, 1, 0, -1});
    CHECK(reconstruct(basis) == f);
  }

  CHECK_THROWS_AS(expansion_from_labeling(f, identity(4), 0), std::invalid_argument);
}

TEST_CASE("two-vertex star expansion") {
  ExpansionBasis basis = expansion_from_labeling(ef({0, 0}), identity(2), 0);
  CHECK(basis.gamma == ef({0, 1}));
  CHECK(basis.sign == std::vector<int>{0, -1});
  CHECK(reconstruct(basis) == ef({0, 0}));
}

TEST_CASE("reconstruct rejects malformed bases") {
  ExpansionBasis bad{ef({0, 2, 1, 3}), {0, 1, 1, 1}, identity(4), 0};
  CHECK_THROWS_AS(reconstruct(bad), std::invalid_argument);
}

TEST_CASE("round trip over all graceful labelings of small trees") {
  for (int n = 2; n <= 6; ++n) {
    RootedTreeStream trees(n);
    for (std::uint64_t k = 0; k < trees.size(); ++k) {
      Endofunction f = trees.at(k);
      for_each_graceful_labeling(f, [&](const Endofunction& sigma) {
        ExpansionBasis b0 = expansion_from_labeling(f, sigma, 0);
        ExpansionBasis b1 = expansion_from_labeling(f, sigma, 1);
        CHECK(b0.gamma == b1.gamma);  // complementary labeling symmetry
        CHECK(reconstruct(b0) == f);
        CHECK(reconstruct(b1) == f);
        return true;
      });
    }
  }
}

TEST_CASE("basis sharing bound") {
  auto r3 = bases_sharing_bound_check(3);
  REQUIRE(r3.counts.size() == 1);
  CHECK(r3.counts[0].second == 2);
  CHECK(r3.bound == 2);
  CHECK(r3.identity_attains_bound);

  auto r4 = bases_sharing_bound_check(4);
  CHECK(r4.bound == 4);
  for (const auto& [gamma, count] : r4.counts) CHECK(count == 2);

  for (int n = 3; n <= 7; ++n) {
    auto report = bases_sharing_bound_check(n);
    CHECK(report.bound_holds);
    CHECK(report.identity_attains_bound == (n % 2 == 1));
    // every counted function is indeed gracefully labeled
    for (const auto& [gamma, count] : report.counts) {
      long long graceful_found = 0;
      std::vector<int> sign(static_cast<size_t>(n), 0);
      auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
          std::vector<int> img(static_cast<size_t>(n));
          for (int j = 0; j < n; ++j) img[static_cast<size_t>(j)] = j + sign[static_cast<size_t>(j)] * gamma(j);
          if (label_profile(Endofunction(img)).graceful()) ++graceful_found;
          return;
        }
        if (gamma(i) == 0) {
          self(self, i + 1);
          return;
        }
        for (int s : {-1, 1}) {
          int v = i + s * gamma(i);
          if (v < 0 || v >= n) continue;
          sign[static_cast<size_t>(i)] = s;
          self(self, i + 1);
        }
        sign[static_cast<size_t>(i)] = 0;
      };
      rec(rec, 0);
      CHECK(graceful_found == count);
    }
  }
  CHECK_THROWS_AS(bases_sharing_bound_check(8), std::domain_error);
}

TEST_CASE("inverse iterate expansion") {
  // n=1: the only function is its own expansion fixed point
  ExpansionBasis unit = expansion_from_labeling(ef({0}), ef({0}), 0);
  ExpansionBasis unit_out = inverse_iterate_expansion(ef({0}), unit);
  CHECK(reconstruct(unit_out) == ef({0}));

  // gracefully labeled 4-permutation: a 3-cycle plus the loop at 2
  Endofunction f = ef({3, 0, 2, 1});
  REQUIRE(label_profile(f).graceful());
  ExpansionBasis basis = expansion_from_labeling(f, identity(4), 0);
  CHECK(order(f) == 3);
  ExpansionBasis derived = inverse_iterate_expansion(f, basis);
  CHECK(derived.gamma == ef({1, 2, 0, 3}));
  CHECK(derived.sign == std::vector<int>{1, 1, 0, -1});
  CHECK(reconstruct(derived) == iterate(f, 2));
  CHECK(reconstruct(derived) == inverse(f));

  CHECK_THROWS_AS(inverse_iterate_expansion(ef({0, 0, 1, 2}), basis), std::invalid_argument);

  // every gracefully labeled permutation round-trips through the derivation
  for (int n = 4; n <= 6; ++n) {
    PermutationStream perms(n);
    for (std::uint64_t k = 0; k < perms.size(); ++k) {
      Endofunction p = perms.at(k);
      if (!label_profile(p).graceful()) continue;
      ExpansionBasis b = expansion_from_labeling(p, identity(n), 0);
      ExpansionBasis out = inverse_iterate_expansion(p, b);
      CHECK(reconstruct(out) == iterate(p, order(p) - 1));
    }
  }
}

TEST_CASE("gracefully labeled permutation graphs come in fours") {
  for (int n = 2; n <= 5; ++n) {
    long long count = 0;
    PermutationStream perms(n);
    for (std::uint64_t k = 0; k < perms.size(); ++k)
      if (label_profile(perms.at(k)).graceful()) ++count;
    CHECK(count % 4 == 0);
    if (n == 4) CHECK(count == 4);
  }
}

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "doctest.h"
#include "gracekit/core.hpp"
#include "gracekit/endofunction.hpp"
#include "gracekit/enumerate.hpp"

using namespace gracekit;

namespace {

Endofunction ef(std::vector<int> v) { return Endofunction(std::move(v)); }

// test-side oracle: trace the cycle through `start` by pointer chasing
int cycle_length_through(const Endofunction& f, int start) {
  int v = start;
  for (int i = 0; i < f.size(); ++i) v = f(v);  // land inside the cycle
  int len = 1, w = f(v);
  while (w != v) {
    w = f(w);
    ++len;
  }
  return len;
}

long long order_oracle(const Endofunction& f) {
  long long result = 1;
  std::vector<char> on_cycle(static_cast<size_t>(f.size()), 0);
  for (int start = 0; start < f.size(); ++start) {
    int v = start;
    for (int i = 0; i < f.size(); ++i) v = f(v);
    if (on_cycle[static_cast<size_t>(v)]) continue;
    int len = cycle_length_through(f, v);
    int w = v;
    for (int i = 0; i < len; ++i) {
      on_cycle[static_cast<size_t>(w)] = 1;
      w = f(w);
    }
    result = std::lcm(result, static_cast<long long>(len));
  }
  return result;
}

std::vector<Endofunction> automorphisms_oracle(const Endofunction& f) {
  std::vector<Endofunction> out;
  PermutationStream perms(f.size());
  for (std::uint64_t k = 0; k < perms.size(); ++k) {
    Endofunction sigma = perms.at(k);
    if (conjugate(f, sigma) == f) out.push_back(sigma);
  }
  return out;
}

// test-side oracle: Def-3 filter over all n^n candidates, plus loop count
std::vector<Endofunction> swaps_oracle(const Endofunction& f) {
  auto symmetrized = [](const Endofunction& h) {
    std::set<std::pair<int, int>> e;
    for (int i = 0; i < h.size(); ++i)
      if (h(i) != i) e.insert(std::minmax(i, h(i)));
    return e;
  };
  auto fe = symmetrized(f);
  std::vector<Endofunction> out;
  EndofunctionStream all(f.size());
  for (std::uint64_t k = 0; k < all.size(); ++k) {
    Endofunction g = all.at(k);
    if (symmetrized(g) == fe && g.fixed_point_count() == f.fixed_point_count())
      out.push_back(g);
  }
  return out;
}

}  // namespace

TEST_CASE("endofunction basics and text format") {
  CHECK(parse_endofunction("0,0,1,2") == ef({0, 0, 1, 2}));
  CHECK(to_text(ef({0, 0, 1, 2})) == "0,0,1,2");
  CHECK_THROWS_AS(parse_endofunction("0,3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_endofunction("0,-1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_endofunction("0,x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_endofunction(""), std::invalid_argument);
  CHECK(identity(3) == ef({0, 1, 2}));
  CHECK(involution_phi(4) == ef({3, 2, 1, 0}));
  CHECK(compose(involution_phi(4), involution_phi(4)) == identity(4));
}

TEST_CASE("iterate") {
  CHECK(iterate(ef({0, 0, 1}), 2) == ef({0, 0, 0}));
  CHECK(iterate(ef({2, 0, 1}), 0) == identity(3));
  CHECK(iterate(ef({1, 2, 0}), 3) == identity(3));
  // additivity of exponents
  Endofunction f = ef({1, 2, 3, 4, 2});
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b)
      CHECK(iterate(f, a + b) == compose(iterate(f, a), iterate(f, b)));
}

TEST_CASE("is_functional_tree") {
  CHECK(is_functional_tree(ef({0, 0, 1, 2})));
  CHECK_FALSE(is_functional_tree(identity(3)));
  CHECK_FALSE(is_functional_tree(ef({1, 0})));
  CHECK(is_functional_tree(ef({0})));
}

TEST_CASE("order equals LCM of cycle lengths") {
  CHECK(order(constant(5, 0)) == 1);
  CHECK(order(ef({0, 2, 1})) == 2);
  CHECK(order(ef({1, 2, 0, 3})) == 3);
  EndofunctionStream all(4);
  for (std::uint64_t k = 0; k < all.size(); ++k) {
    Endofunction f = all.at(k);
    CHECK(order(f) == order_oracle(f));
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(ef({0, 0, 1}), ef({0, 2, 1})) == ef({0, 2, 0}));
  Endofunction f = ef({1, 2, 0, 3, 3});
  CHECK(conjugate(f, identity(5)) == f);
  Endofunction sigma = ef({2, 0, 4, 1, 3});
  CHECK(conjugate(conjugate(f, sigma), inverse(sigma)) == f);
  CHECK_THROWS_AS(conjugate(f, ef({0, 0, 1, 2, 3})), std::invalid_argument);
  // conjugation preserves the graph structure
  FunctionalGraph before(f);
  FunctionalGraph after(conjugate(f, sigma));
  CHECK(before.cycle_lengths == after.cycle_lengths);
  CHECK(before.component_count == after.component_count);
  auto sorted = [](std::vector<int> v) { std::sort(v.begin(), v.end()); return v; };
  CHECK(sorted(before.in_degrees) == sorted(after.in_degrees));
}

TEST_CASE("functional graph structure") {
  FunctionalGraph g(ef({1, 2, 0, 0, 3}));
  CHECK(g.cycle_lengths == std::vector<int>{3});
  CHECK(g.component_count == 1);
  CHECK(g.d_f == 4);
  CHECK(std::accumulate(g.in_degrees.begin(), g.in_degrees.end(), 0) == 5);

  FunctionalGraph two(ef({0, 0, 3, 2}));
  CHECK(two.component_count == 2);
  CHECK(two.cycle_lengths == std::vector<int>{1, 2});
  CHECK(two.component_of == std::vector<int>{0, 0, 1, 1});
}

TEST_CASE("automorphism_group examples") {
  auto star = automorphism_group(constant(4, 0));
  CHECK(star.size() == 6);
  for (const auto& sigma : star) CHECK(sigma(0) == 0);

  CHECK(automorphism_group(ef({0, 0, 1, 2})) == std::vector<Endofunction>{identity(4)});
  CHECK(automorphism_group(identity(3)).size() == 6);
}

TEST_CASE("automorphism_group matches brute-force filter") {
  for (int n = 1; n <= 5; ++n) {
    EndofunctionStream all(n);
    for (std::uint64_t k = 0; k < all.size(); ++k) {
      Endofunction f = all.at(k);
      auto got = automorphism_group(f);
      auto expected = automorphisms_oracle(f);
      REQUIRE(got == expected);
      CHECK(automorphism_count(f) == static_cast<long long>(expected.size()));
    }
  }
  // tree refinement agrees with brute force at larger sizes too
  for (int n = 6; n <= 8; ++n) {
    RootedTreeStream trees(n);
    for (std::uint64_t k = 0; k < trees.size(); k += 17) {
      Endofunction f = trees.at(k);
      CHECK(automorphism_group(f) == automorphisms_oracle(f));
    }
  }
}

TEST_CASE("automorphism group is a subgroup") {
  for (const auto& f : {ef({0, 0, 0, 1}), ef({1, 0, 3, 2}), constant(5, 2)}) {
    auto aut = automorphism_group(f);
    std::set<Endofunction> members(aut.begin(), aut.end());
    CHECK(members.count(identity(f.size())) == 1);
    for (const auto& a : aut) {
      CHECK(members.count(inverse(a)) == 1);
      for (const auto& b : aut) CHECK(members.count(compose(a, b)) == 1);
    }
  }
}

TEST_CASE("fixed_point_swaps") {
  auto rootings = fixed_point_swaps(ef({0, 0, 1}));
  CHECK(rootings == std::vector<Endofunction>{ef({0, 0, 1}), ef({1, 1, 1}), ef({1, 2, 2})});
  CHECK(fixed_point_swaps(constant(2, 0)) == std::vector<Endofunction>{ef({0, 0}), ef({1, 1})});
  CHECK(fixed_point_swaps(identity(2)) == std::vector<Endofunction>{identity(2)});
}

TEST_CASE("fixed_point_swaps matches Def-3 filter") {
  for (int n = 1; n <= 4; ++n) {
    EndofunctionStream all(n);
    for (std::uint64_t k = 0; k < all.size(); ++k) {
      Endofunction f = all.at(k);
      CHECK(fixed_point_swaps(f) == swaps_oracle(f));
    }
  }
}

TEST_CASE("a functional tree has one swap per rooting") {
  for (int n = 2; n <= 6; ++n) {
    RootedTreeStream trees(n);
    for (std::uint64_t k = 0; k < trees.size(); ++k) {
      Endofunction f = trees.at(k);
      auto swaps = fixed_point_swaps(f);
      CHECK(static_cast<int>(swaps.size()) == n);
      for (int v = 0; v < n; ++v)
        CHECK(std::find(swaps.begin(), swaps.end(), reroot_tree(f, v)) != swaps.end());
    }
  }
}

TEST_CASE("tree iterates collapse to a constant") {
  for (int n = 2; n <= 7; ++n) {
    long long power = 1;
    while (power < n - 1) power *= 2;
    RootedTreeStream trees(n);
    for (std::uint64_t k = 0; k < trees.size(); ++k)
      CHECK(iterate(trees.at(k), power).is_constant());
  }
}

TEST_CASE("tree invariants survive conjugation") {
  RootedTreeStream trees(5);
  PermutationStream perms(5);
  for (std::uint64_t k = 0; k < trees.size(); ++k) {
    Endofunction f = trees.at(k);
    for (std::uint64_t p = 0; p < perms.size(); p += 7) {
      Endofunction sigma = perms.at(p);
      CHECK(is_functional_tree(conjugate(f, sigma)) == is_functional_tree(f));
      CHECK(tree_canonical_form(conjugate(f, sigma)) == tree_canonical_form(f));
    }
  }
}

TEST_CASE("order of permutation powers") {
  PermutationStream perms(5);
  for (std::uint64_t k = 0; k < perms.size(); ++k) {
    Endofunction f = perms.at(k);
    CHECK(iterate(f, order(f)) == identity(5));
  }
}

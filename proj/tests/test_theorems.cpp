#include <set>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "gracekit/core.hpp"
#include "gracekit/endofunction.hpp"
#include "gracekit/enumerate.hpp"
#include "gracekit/labeling.hpp"
#include "gracekit/monoid.hpp"
#include "gracekit/theorems.hpp"

using namespace gracekit;

namespace {

Endofunction ef(std::vector<int> v) { return Endofunction(std::move(v)); }

Endofunction shift_down(int n) {
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) img[static_cast<size_t>(i)] = i - 1;
  return Endofunction(std::move(img));
}

}  // namespace

TEST_CASE("universe names") {
  CHECK(parse_universe("trees") == Universe::trees);
  CHECK(parse_universe("endofunctions") == Universe::endofunctions);
  CHECK(parse_universe("perms") == Universe::permutations);
  CHECK_THROWS_AS(parse_universe("widgets"), std::invalid_argument);
  CHECK(universe_name(Universe::trees) == "trees");
}

TEST_CASE("composition lemma sweeps clean") {
  auto trees = verify_composition_lemma(5, Universe::trees);
  CHECK(trees.passed());
  CHECK(trees.instances_checked == 24);

  auto endos = verify_composition_lemma(4, Universe::endofunctions);
  CHECK(endos.passed());
  CHECK(endos.instances_checked == 256);
  CHECK(endos.vacuous > 0);  // e.g. the identity fails the premise

  CHECK_THROWS_AS(verify_composition_lemma(7, Universe::endofunctions), std::domain_error);

  // sharding covers the same ground
  auto lo = verify_composition_lemma(4, Universe::endofunctions, Shard{0, 128});
  auto hi = verify_composition_lemma(4, Universe::endofunctions, Shard{128, 256});
  CHECK(lo.instances_checked + hi.instances_checked == endos.instances_checked);
  CHECK(lo.vacuous + hi.vacuous == endos.vacuous);
}

TEST_CASE("aut_strictness_fix") {
  Endofunction fixed = aut_strictness_fix(ef({0, 0, 1, 2}));
  CHECK(fixed == ef({1, 1, 1, 2}));  // re-rooted at distance 2 from leaf 3
  CHECK(automorphism_count(fixed) < automorphism_count(iterate(fixed, 2)));

  Endofunction star = aut_strictness_fix(constant(5, 0));
  CHECK(automorphism_count(star) < automorphism_count(iterate(star, 2)));
  CHECK(star(star.size() - 1) == 0);  // a leaf rooting keeps the old center internal
  CHECK(is_graceful(star) == is_graceful(constant(5, 0)));

  CHECK_THROWS_AS(aut_strictness_fix(ef({0, 0})), std::invalid_argument);

  for (int n = 3; n <= 7; ++n) {
    RootedTreeStream stream(n);
    for (std::uint64_t k = 0; k < stream.size(); ++k) {
      Endofunction f = stream.at(k);
      Endofunction g = aut_strictness_fix(f);
      CHECK(automorphism_count(g) < automorphism_count(iterate(g, 2)));
      CHECK(tree_canonical_form(reroot_tree(g, iterate(f, n - 1)(0))) !=
            Endofunction());  // g is a rooting of the same tree: sanity via reroot round trip
      CHECK(is_graceful(g));
    }
  }
}

TEST_CASE("main theorem sweeps") {
  auto endos = verify_main_theorem(4, Universe::endofunctions);
  CHECK(endos.passed());
  CHECK(endos.instances_checked == 256);

  auto perms = verify_main_theorem(5, Universe::permutations);
  CHECK(perms.passed());

  auto trees = verify_main_theorem(7, Universe::trees);
  CHECK(trees.passed());
  CHECK(trees.instances_checked == 720);

  CHECK_THROWS_AS(verify_main_theorem(10, Universe::trees), std::domain_error);
}

TEST_CASE("prop17_reduce on the 4-path") {
  Endofunction f = ef({0, 0, 1, 2});
  Prop17Step step = prop17_reduce(f);
  CHECK(step.strict_descent);
  CHECK(label_profile(step.constructed).graceful());
  CHECK(is_functional_tree(step.reduced));
  CHECK(step.reduced.size() == 4);

  // the composite is literally f_tilde with n-1 re-parented to 0, which is
  // what composing with the shift map and its canonical pseudoinverses gives
  Endofunction g = shift_down(4);
  for (const auto& h : canonical_pseudoinverse(g))
    CHECK(compose(compose(step.f_tilde, g), h) == step.composite);

  CHECK_THROWS_AS(prop17_reduce(constant(4, 0)), std::invalid_argument);
  CHECK_THROWS_AS(prop17_reduce(ef({0, 0, 1})), std::invalid_argument);
  CHECK_THROWS_AS(prop17_reduce(ef({1, 1, 2, 2})), std::invalid_argument);
}

// Image size can stall: removing a leaf only lowers the image size when the
// leaf's parent has undirected degree 2 (or the root is itself a leaf), and
// trees like [0,0,0,0,1,1] offer neither.  Descent is strict exactly when the
// structure allows it; chains still reach a constant within n-2 steps.
TEST_CASE("prop17 chains reach a constant, descending when structure permits") {
  auto descent_possible = [](const Endofunction& f) {
    const int n = f.size();
    std::vector<int> deg(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
      if (i != f(i)) {
        ++deg[static_cast<size_t>(i)];
        ++deg[static_cast<size_t>(f(i))];
      }
    if (deg[0] == 1) return true;  // root is an undirected leaf
    for (int v = 1; v < n; ++v)
      if (deg[static_cast<size_t>(v)] == 1 && deg[static_cast<size_t>(f(v))] == 2) return true;
    return false;
  };

  for (int n = 4; n <= 6; ++n) {
    RootedTreeStream stream(n);
    for (std::uint64_t k = 0; k < stream.size(); ++k) {
      Endofunction f = stream.at(k);
      if (f.is_constant()) continue;
      CHECK(prop17_reduce(f).strict_descent == descent_possible(f));
      Prop17Chain chain = prop17_chain(f, n);
      CHECK(chain.reached_constant);
      CHECK(chain.steps <= n - 2);
      if (n <= 5) CHECK(chain.strictly_descending);  // no stall shapes below n = 6
    }
  }
}

TEST_CASE("cycle corollaries at desk scale") {
  CHECK(graceful_permutation_count(4) == 4);
  CHECK(graceful_permutation_count(5) % 4 == 0);

  auto report = verify_cycle_corollaries(9, 1, 2, 5);
  CHECK(report.passed());
  CHECK(report.instances_checked == 3);  // the n=9 search plus the n=4,5 counts
}

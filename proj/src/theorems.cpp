#include "gracekit/theorems.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <stdexcept>

#include "gracekit/core.hpp"
#include "gracekit/labeling.hpp"
#include "gracekit/monoid.hpp"

namespace gracekit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<int> undirected_degrees(const Endofunction& f) {
  std::vector<int> deg(static_cast<size_t>(f.size()), 0);
  for (int i = 0; i < f.size(); ++i)
    if (i != f(i)) {
      ++deg[static_cast<size_t>(i)];
      ++deg[static_cast<size_t>(f(i))];
    }
  return deg;
}

int image_size(const Endofunction& f) {
  std::set<int> img(f.images().begin(), f.images().end());
  return static_cast<int>(img.size());
}

Shard full_or(std::optional<Shard> shard, std::uint64_t size) {
  if (!shard) return Shard{0, size};
  if (shard->hi > size) throw std::invalid_argument("shard exceeds stream size");
  return *shard;
}

}  // namespace

Universe parse_universe(const std::string& name) {
  if (name == "trees") return Universe::trees;
  if (name == "endofunctions" || name == "functions") return Universe::endofunctions;
  if (name == "permutations" || name == "perms") return Universe::permutations;
  throw std::invalid_argument("unknown universe: " + name);
}

std::string universe_name(Universe u) {
  switch (u) {
    case Universe::trees: return "trees";
    case Universe::endofunctions: return "endofunctions";
    case Universe::permutations: return "permutations";
  }
  return "?";
}

SweepReport verify_composition_lemma(int n, Universe universe, std::optional<Shard> shard) {
  if (universe == Universe::endofunctions && n > 6)
    throw std::domain_error("endofunction universe capped at n = 6");
  if (universe == Universe::trees && n > 8)
    throw std::domain_error("tree universe capped at n = 8");
  auto start = Clock::now();
  SweepReport report;
  report.n = n;
  report.universe = universe_name(universe);

  auto check = [&](const Endofunction& f) {
    ++report.instances_checked;
    Endofunction f2 = iterate(f, 2);
    if (automorphism_count(f) >= automorphism_count(f2)) {
      ++report.vacuous;
      return;
    }
    if (is_graceful(f2) && !is_graceful(f))
      report.violations.push_back({f, "composition-lemma", "f^(2) attains n but f does not"});
  };

  if (universe == Universe::trees) {
    RootedTreeStream stream(n);
    Shard s = full_or(shard, stream.size());
    for (std::uint64_t k = s.lo; k < s.hi; ++k) check(stream.at(k));
  } else if (universe == Universe::endofunctions) {
    EndofunctionStream stream(n);
    Shard s = full_or(shard, stream.size());
    for (std::uint64_t k = s.lo; k < s.hi; ++k) check(stream.at(k));
  } else {
    PermutationStream stream(n);
    Shard s = full_or(shard, stream.size());
    for (std::uint64_t k = s.lo; k < s.hi; ++k) check(stream.at(k));
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

Endofunction aut_strictness_fix(const Endofunction& f) {
  const int n = f.size();
  if (n <= 2) throw std::invalid_argument("no vertex lies at distance 2 from a leaf");
  if (!is_functional_tree(f)) throw std::invalid_argument("requires a functional tree");

  auto deg = undirected_degrees(f);
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    if (i != f(i)) {
      adj[static_cast<size_t>(i)].push_back(f(i));
      adj[static_cast<size_t>(f(i))].push_back(i);
    }
  // distance-2 neighborhoods of leaves
  std::set<int> candidates;
  for (int leaf = 0; leaf < n; ++leaf) {
    if (deg[static_cast<size_t>(leaf)] != 1) continue;
    for (int mid : adj[static_cast<size_t>(leaf)])
      for (int far : adj[static_cast<size_t>(mid)])
        if (far != leaf) candidates.insert(far);
  }
  for (int v : candidates) {
    Endofunction g = reroot_tree(f, v);
    if (automorphism_count(g) < automorphism_count(iterate(g, 2))) return g;
  }
  throw std::domain_error("no distance-2 rooting achieves strict automorphism growth");
}

SweepReport verify_main_theorem(int n, Universe universe, std::optional<Shard> shard) {
  if (universe == Universe::endofunctions && n > 6)
    throw std::domain_error("endofunction universe capped at n = 6");
  if (universe == Universe::trees && n > 9)
    throw std::domain_error("tree universe capped at n = 9");
  auto start = Clock::now();
  SweepReport report;
  report.n = n;
  report.universe = universe_name(universe);

  if (universe == Universe::trees) {
    // o_f = 1 and one component: the identity reduces to gracefulness
    RootedTreeStream stream(n);
    Shard s = full_or(shard, stream.size());
    for (std::uint64_t k = s.lo; k < s.hi; ++k) {
      Endofunction f = stream.at(k);
      ++report.instances_checked;
      if (!is_graceful(f))
        report.violations.push_back({f, "main-theorem", "tree admits no graceful labeling"});
    }
  } else {
    auto check = [&](const Endofunction& f) {
      ++report.instances_checked;
      Endofunction g = iterate(f, order(f));
      FunctionalGraph graph(g);
      int lhs = n + 1 - graph.component_count;
      int rhs = max_distinct_labels(g);
      if (lhs != rhs)
        report.violations.push_back(
            {f, "main-theorem",
             "n+1-components = " + std::to_string(lhs) + " but max labels = " + std::to_string(rhs)});
    };
    if (universe == Universe::endofunctions) {
      EndofunctionStream stream(n);
      Shard s = full_or(shard, stream.size());
      for (std::uint64_t k = s.lo; k < s.hi; ++k) check(stream.at(k));
    } else {
      PermutationStream stream(n);
      Shard s = full_or(shard, stream.size());
      for (std::uint64_t k = s.lo; k < s.hi; ++k) check(stream.at(k));
    }
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

Prop17Step prop17_reduce(const Endofunction& f) {
  const int n = f.size();
  if (n <= 3) throw std::invalid_argument("prop17_reduce requires n > 3");
  if (f.is_constant()) throw std::invalid_argument("prop17_reduce rejects constant functions");
  if (!is_functional_tree(f)) throw std::invalid_argument("requires a functional tree");
  for (int i = 0; i < n; ++i)
    if (f(i) > i) throw std::invalid_argument("requires a semigroup member (f(i) <= i)");

  auto deg = undirected_degrees(f);

  // Pick the dropped leaf: one whose removal lowers the internal-vertex count
  // when possible (parent of degree 2), otherwise the smallest leaf.
  int drop = -1;
  for (int v = 1; v < n; ++v) {
    if (deg[static_cast<size_t>(v)] != 1) continue;
    if (drop == -1) drop = v;
    if (deg[static_cast<size_t>(f(v))] == 2) {
      drop = v;
      break;
    }
  }

  // Relabel within the conjugacy class: BFS order from the root with `drop`
  // forced to position n-1.  Parent labels precede child labels, so the
  // result stays in the semigroup.
  std::vector<int> order_map(static_cast<size_t>(n), -1);
  std::vector<int> bfs{0};
  order_map[0] = 0;
  int next = 1;
  std::vector<std::vector<int>> children(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) children[static_cast<size_t>(f(i))].push_back(i);
  for (size_t qi = 0; qi < bfs.size(); ++qi)
    for (int c : children[static_cast<size_t>(bfs[qi])])
      if (c != drop) {
        order_map[static_cast<size_t>(c)] = next++;
        bfs.push_back(c);
      }
  order_map[static_cast<size_t>(drop)] = n - 1;
  Endofunction relabel{std::vector<int>(order_map)};
  Endofunction f_tilde = conjugate(f, relabel);

  // Literal composite with the shift map and either canonical pseudoinverse.
  std::vector<int> composite_img(f_tilde.images());
  composite_img[static_cast<size_t>(n - 1)] = 0;
  Endofunction composite{std::move(composite_img)};

  // Restriction to Z_{n-1}: drop vertex n-1 from domain and codomain.
  std::vector<int> restricted(f_tilde.images().begin(), f_tilde.images().end() - 1);
  Endofunction q{std::move(restricted)};

  auto sigma = find_graceful_labeling(q);
  if (!sigma) throw std::logic_error("restriction admits no graceful labeling");
  Endofunction h = conjugate(q, *sigma);

  // The label-(n-2) edge joins the vertices labeled 0 and n-2; re-root at the
  // one that is not a leaf, flipping by the complementary involution when the
  // root lands on n-2.
  auto hdeg = undirected_degrees(h);
  if (hdeg[0] < 2 && hdeg[static_cast<size_t>(n - 2)] < 2)
    throw std::logic_error("labels 0 and n-2 cannot both be leaves");
  int target = hdeg[0] >= 2 ? 0 : n - 2;
  Endofunction moved = reroot_tree(h, target);
  if (target != 0) moved = conjugate(moved, involution_phi(n - 1));

  std::vector<int> constructed_img(moved.images());
  constructed_img.push_back(0);
  Endofunction constructed{std::move(constructed_img)};

  Prop17Step step;
  step.f_tilde = f_tilde;
  step.composite = composite;
  step.constructed = constructed;
  step.reduced = tree_canonical_form(constructed);
  step.strict_descent = image_size(step.reduced) < image_size(f);
  return step;
}

Prop17Chain prop17_chain(const Endofunction& f, int max_steps) {
  Prop17Chain chain;
  Endofunction current = f;
  chain.image_sizes.push_back(image_size(current));
  chain.strictly_descending = true;
  while (chain.steps < max_steps && !current.is_constant()) {
    Prop17Step step = prop17_reduce(current);
    current = step.reduced;
    ++chain.steps;
    int size = image_size(current);
    if (size >= chain.image_sizes.back()) chain.strictly_descending = false;
    chain.image_sizes.push_back(size);
  }
  chain.reached_constant = current.is_constant();
  return chain;
}

long long graceful_permutation_count(int n) {
  long long count = 0;
  PermutationStream perms(n);
  for (std::uint64_t k = 0; k < perms.size(); ++k)
    if (label_profile(perms.at(k)).graceful()) ++count;
  return count;
}

SweepReport verify_cycle_corollaries(int n_search_max, int s_max, int t_max, int n_count_max) {
  auto start = Clock::now();
  SweepReport report;
  report.n = n_search_max;
  report.universe = "cycle-unions";

  for (int s = 1; s <= s_max; ++s)
    for (int t = 2; t <= t_max; ++t) {
      long long n = 1 + (1ll << (s + t));
      if (n > n_search_max) continue;
      std::vector<int> spec{1};
      for (int c = 0; c < (1 << s); ++c) spec.push_back(1 << t);
      Endofunction f = cycle_union(spec);
      ++report.instances_checked;
      if (!is_graceful(f))
        report.violations.push_back({f, "cycle-union-graceful",
                                     "C_1 + 2^" + std::to_string(s) + " copies of C_2^" + std::to_string(t)});
    }

  for (int n = 4; n <= n_count_max; ++n) {
    ++report.instances_checked;
    long long count = graceful_permutation_count(n);
    if (count % 4 != 0)
      report.violations.push_back({identity(n), "graceful-permutation-count",
                                   "count " + std::to_string(count) + " not divisible by 4"});
  }
  report.wall_seconds = seconds_since(start);
  return report;
}

}  // namespace gracekit

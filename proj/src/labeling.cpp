#include "gracekit/labeling.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gracekit {

namespace {

constexpr int kExhaustiveLimit = 8;

// Edge u -> f(u) is fully labeled once both endpoints have labels; with
// vertex-order assignment that happens at step max(u, f(u)).
std::vector<std::vector<int>> edges_completing_at(const Endofunction& f) {
  std::vector<std::vector<int>> at(static_cast<size_t>(f.size()));
  for (int u = 0; u < f.size(); ++u) at[static_cast<size_t>(std::max(u, f(u)))].push_back(u);
  return at;
}

// Complete lexicographic backtracking over vertex labelings.  visit returns
// false to stop the enumeration.
void search_labelings(const Endofunction& f,
                      const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = f.size();
  // label 0 appears once per fixed point, so gracefulness needs exactly one
  if (f.fixed_point_count() != 1) return;
  auto completes = edges_completing_at(f);
  std::vector<int> x(static_cast<size_t>(n), -1);
  std::uint32_t used_vertex = 0, used_edge = 0;
  bool stop = false;

  auto rec = [&](auto&& self, int v) -> void {
    if (stop) return;
    if (v == n) {
      if (!visit(x)) stop = true;
      return;
    }
    for (int label = 0; label < n; ++label) {
      if (used_vertex & (1u << label)) continue;
      x[static_cast<size_t>(v)] = label;
      used_vertex |= 1u << label;
      std::uint32_t added = 0;
      bool ok = true;
      for (int u : completes[static_cast<size_t>(v)]) {
        int e = std::abs(x[static_cast<size_t>(f(u))] - x[static_cast<size_t>(u)]);
        std::uint32_t bit = 1u << e;
        if ((used_edge | added) & bit) {
          ok = false;
          break;
        }
        added |= bit;
      }
      if (ok) {
        used_edge |= added;
        self(self, v + 1);
        used_edge &= ~added;
        if (stop) {
          used_vertex &= ~(1u << label);
          x[static_cast<size_t>(v)] = -1;
          return;
        }
      }
      used_vertex &= ~(1u << label);
    }
    x[static_cast<size_t>(v)] = -1;
  };
  rec(rec, 0);
}

struct PathCover {
  // vertex sequences of the disjoint paths left after deleting rho edges,
  // ordered by smallest contained vertex, each starting at its smaller end
  std::vector<std::vector<int>> paths;
};

PathCover path_cover(const Endofunction& f, const std::vector<int>& deleted_sources) {
  const int n = f.size();
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) {
    if (u == f(u)) continue;
    if (std::find(deleted_sources.begin(), deleted_sources.end(), u) != deleted_sources.end())
      continue;
    adj[static_cast<size_t>(u)].push_back(f(u));
    adj[static_cast<size_t>(f(u))].push_back(u);
  }
  PathCover cover;
  std::vector<char> visited(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    if (visited[static_cast<size_t>(v)]) continue;
    // find the component's smallest endpoint (degree <= 1)
    std::vector<int> comp{v};
    visited[static_cast<size_t>(v)] = 1;
    for (size_t qi = 0; qi < comp.size(); ++qi)
      for (int w : adj[static_cast<size_t>(comp[qi])])
        if (!visited[static_cast<size_t>(w)]) {
          visited[static_cast<size_t>(w)] = 1;
          comp.push_back(w);
        }
    int start = -1;
    for (int u : comp)
      if (adj[static_cast<size_t>(u)].size() <= 1 && (start == -1 || u < start)) start = u;
    std::vector<int> path{start};
    int prev = -1, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[static_cast<size_t>(cur)])
        if (w != prev) next = w;
      if (next == -1) break;
      path.push_back(next);
      prev = cur;
      cur = next;
    }
    cover.paths.push_back(std::move(path));
  }
  return cover;
}

// Remaining undirected non-loop edges must form simple disjoint paths:
// max degree 2 and no cycle (a doubled pair counts as a cycle).
bool kept_edges_are_paths(int n, const std::vector<std::pair<int, int>>& kept) {
  std::vector<int> degree(static_cast<size_t>(n), 0);
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[static_cast<size_t>(a)] != a) {
      parent[static_cast<size_t>(a)] = parent[static_cast<size_t>(parent[static_cast<size_t>(a)])];
      a = parent[static_cast<size_t>(a)];
    }
    return a;
  };
  for (auto [u, v] : kept) {
    if (++degree[static_cast<size_t>(u)] > 2 || ++degree[static_cast<size_t>(v)] > 2) return false;
    int a = find(u), b = find(v);
    if (a == b) return false;
    parent[static_cast<size_t>(a)] = b;
  }
  return true;
}

// Increasing-size subset search; returns the first (lexicographically
// earliest) deletion set of minimum size for which check passes.
template <typename Check>
std::vector<int> minimum_deletion(const std::vector<int>& items, const Check& check) {
  const int m = static_cast<int>(items.size());
  for (int k = 0; k <= m; ++k) {
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<int> chosen;
      chosen.reserve(static_cast<size_t>(k));
      for (int idx : pick) chosen.push_back(items[static_cast<size_t>(idx)]);
      if (check(chosen)) return chosen;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw std::logic_error("minimum_deletion: no subset works");
}

int distinct_labels_of(const Endofunction& f, const std::vector<int>& x) {
  std::uint32_t seen = 0;
  for (int v = 0; v < f.size(); ++v)
    seen |= 1u << std::abs(x[static_cast<size_t>(f(v))] - x[static_cast<size_t>(v)]);
  return std::popcount(seen);
}

int extreme_distinct(const Endofunction& f, bool want_max, bool allow_bnb) {
  const int n = f.size();
  if (n <= kExhaustiveLimit) {
    std::vector<int> x(static_cast<size_t>(n));
    std::iota(x.begin(), x.end(), 0);
    int best = want_max ? 0 : n + 1;
    do {
      int d = distinct_labels_of(f, x);
      best = want_max ? std::max(best, d) : std::min(best, d);
    } while (std::next_permutation(x.begin(), x.end()));
    return best;
  }
  if (!allow_bnb)
    throw std::domain_error("exact label extremes need n <= 8 (or branch and bound)");

  auto completes = edges_completing_at(f);
  Endofunction seed = want_max ? greedy_max_labeling(f) : greedy_min_labeling(f);
  int best = distinct_labels_of(f, seed.images());
  std::vector<int> x(static_cast<size_t>(n), -1);
  std::uint32_t used_vertex = 0;
  std::vector<std::uint32_t> edge_sets{0};
  int edges_done = 0;

  auto rec = [&](auto&& self, int v) -> void {
    int distinct = std::popcount(edge_sets.back());
    if (want_max) {
      if (distinct + (n - edges_done) <= best) return;
    } else {
      if (distinct >= best) return;
    }
    if (v == n) {
      best = want_max ? std::max(best, distinct) : std::min(best, distinct);
      return;
    }
    for (int label = 0; label < n; ++label) {
      if (used_vertex & (1u << label)) continue;
      x[static_cast<size_t>(v)] = label;
      used_vertex |= 1u << label;
      std::uint32_t labels = edge_sets.back();
      int count = static_cast<int>(completes[static_cast<size_t>(v)].size());
      for (int u : completes[static_cast<size_t>(v)])
        labels |= 1u << std::abs(x[static_cast<size_t>(f(u))] - x[static_cast<size_t>(u)]);
      edge_sets.push_back(labels);
      edges_done += count;
      self(self, v + 1);
      edges_done -= count;
      edge_sets.pop_back();
      used_vertex &= ~(1u << label);
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace

LabelProfile label_profile(const Endofunction& f) {
  LabelProfile profile;
  std::uint32_t seen = 0;
  for (int i = 0; i < f.size(); ++i) {
    int label = std::abs(f(i) - i);
    profile.labels.push_back(label);
    seen |= 1u << label;
  }
  profile.distinct_count = std::popcount(seen);
  return profile;
}

std::optional<Endofunction> find_graceful_labeling(const Endofunction& f) {
  std::optional<Endofunction> found;
  search_labelings(f, [&](const std::vector<int>& x) {
    found = Endofunction(x);
    return false;
  });
  return found;
}

bool is_graceful(const Endofunction& f) { return find_graceful_labeling(f).has_value(); }

void for_each_graceful_labeling(const Endofunction& f,
                                const std::function<bool(const Endofunction&)>& visit) {
  search_labelings(f, [&](const std::vector<int>& x) { return visit(Endofunction(x)); });
}

std::vector<Endofunction> grl(const Endofunction& f) {
  std::set<Endofunction> distinct;
  for_each_graceful_labeling(f, [&](const Endofunction& sigma) {
    distinct.insert(conjugate(f, sigma));
    return true;
  });
  return {distinct.begin(), distinct.end()};
}

PathDeletionStats path_deletion_stats(const Endofunction& f) {
  const int n = f.size();
  std::vector<int> non_loop, all_edges;
  int loops = 0;
  for (int u = 0; u < n; ++u) {
    all_edges.push_back(u);
    if (u == f(u))
      ++loops;
    else
      non_loop.push_back(u);
  }

  PathDeletionStats stats;
  stats.rho_deletion = minimum_deletion(non_loop, [&](const std::vector<int>& deleted) {
    std::vector<std::pair<int, int>> kept;
    for (int u : non_loop)
      if (std::find(deleted.begin(), deleted.end(), u) == deleted.end())
        kept.emplace_back(u, f(u));
    return kept_edges_are_paths(n, kept);
  });
  stats.rho = static_cast<int>(stats.rho_deletion.size());

  auto delta_deletion = minimum_deletion(all_edges, [&](const std::vector<int>& deleted) {
    std::vector<std::pair<int, int>> kept;
    for (int u : all_edges) {
      if (std::find(deleted.begin(), deleted.end(), u) != deleted.end()) continue;
      if (u == f(u)) return false;  // a surviving loop disqualifies the subgraph
      kept.emplace_back(u, f(u));
    }
    return kept_edges_are_paths(n, kept);
  });
  stats.delta = static_cast<int>(delta_deletion.size());
  return stats;
}

int min_distinct_labels(const Endofunction& f, bool allow_bnb) {
  return extreme_distinct(f, false, allow_bnb);
}

int max_distinct_labels(const Endofunction& f, bool allow_bnb) {
  return extreme_distinct(f, true, allow_bnb);
}

Endofunction greedy_min_labeling(const Endofunction& f) {
  auto stats = path_deletion_stats(f);
  auto cover = path_cover(f, stats.rho_deletion);
  std::vector<int> x(static_cast<size_t>(f.size()), -1);
  int next = 0;
  for (const auto& path : cover.paths)
    for (int v : path) x[static_cast<size_t>(v)] = next++;
  return Endofunction(std::move(x));
}

Endofunction greedy_max_labeling(const Endofunction& f) {
  auto stats = path_deletion_stats(f);
  auto cover = path_cover(f, stats.rho_deletion);
  std::vector<int> x(static_cast<size_t>(f.size()), -1);
  int lo = 0, hi = f.size() - 1;
  for (const auto& path : cover.paths) {
    bool take_hi = true;
    for (int v : path) {
      x[static_cast<size_t>(v)] = take_hi ? hi-- : lo++;
      take_hi = !take_hi;
    }
  }
  return Endofunction(std::move(x));
}

}  // namespace gracekit

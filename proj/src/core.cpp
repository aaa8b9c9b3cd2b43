#include "gracekit/core.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace gracekit {

namespace {

constexpr int kBruteForceLimit = 8;

std::vector<std::vector<int>> children_lists(const Endofunction& f, int root) {
  std::vector<std::vector<int>> ch(static_cast<size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i)
    if (i != root) ch[static_cast<size_t>(f(i))].push_back(i);
  return ch;
}

int tree_root(const Endofunction& f) {
  if (!is_functional_tree(f)) throw std::invalid_argument("not a functional tree");
  return iterate(f, f.size() - 1)(0);
}

// AHU codes: code(v) = "(" + concatenation of sorted child codes + ")".
// Comparable across trees, so they drive both grouping and canonical order.
std::vector<std::string> ahu_codes(const std::vector<std::vector<int>>& ch, int root) {
  std::vector<std::string> code(ch.size());
  auto rec = [&](auto&& self, int v) -> void {
    std::vector<std::string> kid_codes;
    for (int c : ch[static_cast<size_t>(v)]) {
      self(self, c);
      kid_codes.push_back(code[static_cast<size_t>(c)]);
    }
    std::sort(kid_codes.begin(), kid_codes.end());
    std::string s = "(";
    for (const auto& k : kid_codes) s += k;
    s += ")";
    code[static_cast<size_t>(v)] = std::move(s);
  };
  rec(rec, root);
  return code;
}

long long tree_automorphism_count(const std::vector<std::vector<int>>& ch,
                                  const std::vector<std::string>& code, int v) {
  long long total = 1;
  std::map<std::string, std::vector<int>> by_code;
  for (int c : ch[static_cast<size_t>(v)]) by_code[code[static_cast<size_t>(c)]].push_back(c);
  for (const auto& [_, group] : by_code) {
    for (size_t k = 2; k <= group.size(); ++k) total *= static_cast<long long>(k);
    for (int c : group) total *= tree_automorphism_count(ch, code, c);
  }
  return total;
}

// Enumerates isomorphisms subtree(a) -> subtree(b) (equal codes assumed) by
// extending each map in `partials` every possible way.
std::vector<std::vector<int>> extend_isomorphisms(const std::vector<std::vector<int>>& ch,
                                                  const std::vector<std::string>& code,
                                                  int a, int b,
                                                  std::vector<std::vector<int>> partials) {
  for (auto& m : partials) m[static_cast<size_t>(a)] = b;
  std::map<std::string, std::pair<std::vector<int>, std::vector<int>>> by_code;
  for (int c : ch[static_cast<size_t>(a)]) by_code[code[static_cast<size_t>(c)]].first.push_back(c);
  for (int c : ch[static_cast<size_t>(b)]) by_code[code[static_cast<size_t>(c)]].second.push_back(c);
  for (const auto& [_, group] : by_code) {
    const auto& [from, to] = group;
    std::vector<int> pick(from.size());
    std::iota(pick.begin(), pick.end(), 0);
    std::vector<std::vector<int>> merged;
    do {
      std::vector<std::vector<int>> branch = partials;
      for (size_t idx = 0; idx < from.size(); ++idx)
        branch = extend_isomorphisms(ch, code, from[idx], to[static_cast<size_t>(pick[idx])],
                                     std::move(branch));
      merged.insert(merged.end(), branch.begin(), branch.end());
    } while (std::next_permutation(pick.begin(), pick.end()));
    partials = std::move(merged);
  }
  return partials;
}

std::vector<Endofunction> tree_automorphisms(const Endofunction& f) {
  const int root = tree_root(f);
  auto ch = children_lists(f, root);
  auto code = ahu_codes(ch, root);
  std::vector<std::vector<int>> seed{std::vector<int>(static_cast<size_t>(f.size()), -1)};
  auto maps = extend_isomorphisms(ch, code, root, root, std::move(seed));
  std::vector<Endofunction> result;
  result.reserve(maps.size());
  for (auto& m : maps) result.emplace_back(std::move(m));
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Endofunction> brute_force_automorphisms(const Endofunction& f) {
  std::vector<int> perm(static_cast<size_t>(f.size()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Endofunction> result;
  do {
    bool ok = true;
    for (int i = 0; i < f.size() && ok; ++i)
      ok = perm[static_cast<size_t>(f(i))] == f(perm[static_cast<size_t>(i)]);
    if (ok) result.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

}  // namespace

std::vector<Endofunction> automorphism_group(const Endofunction& f) {
  if (is_functional_tree(f)) return tree_automorphisms(f);
  if (f.size() <= kBruteForceLimit) return brute_force_automorphisms(f);
  throw std::domain_error("automorphism_group: non-tree with n > 8 unsupported");
}

long long automorphism_count(const Endofunction& f) {
  if (is_functional_tree(f)) {
    const int root = tree_root(f);
    auto ch = children_lists(f, root);
    return tree_automorphism_count(ch, ahu_codes(ch, root), root);
  }
  if (f.size() <= kBruteForceLimit)
    return static_cast<long long>(brute_force_automorphisms(f).size());
  throw std::domain_error("automorphism_count: non-tree with n > 8 unsupported");
}

std::vector<Endofunction> fixed_point_swaps(const Endofunction& f) {
  const int n = f.size();
  std::set<std::pair<int, int>> edges;
  int loops = 0;
  for (int i = 0; i < n; ++i) {
    if (f(i) == i)
      ++loops;
    else
      edges.insert(std::minmax(i, f(i)));
  }
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::map<std::pair<int, int>, int> edge_id;
  for (const auto& e : edges) {
    edge_id[e] = static_cast<int>(edge_id.size());
    adj[static_cast<size_t>(e.first)].push_back(e.second);
    adj[static_cast<size_t>(e.second)].push_back(e.first);
  }

  std::vector<Endofunction> result;
  std::vector<int> g(static_cast<size_t>(n), -1);
  std::vector<int> covered(edges.size(), 0);
  int loops_used = 0;

  // Candidates ascending per vertex, so the output comes out sorted.
  auto rec = [&](auto&& self, int v) -> void {
    if (v == n) {
      if (loops_used == loops &&
          std::all_of(covered.begin(), covered.end(), [](int c) { return c > 0; }))
        result.emplace_back(g);
      return;
    }
    std::vector<int> cands = adj[static_cast<size_t>(v)];
    cands.push_back(v);
    std::sort(cands.begin(), cands.end());
    for (int w : cands) {
      g[static_cast<size_t>(v)] = w;
      if (w == v) {
        if (loops_used == loops) continue;
        ++loops_used;
        self(self, v + 1);
        --loops_used;
      } else {
        int id = edge_id[std::minmax(v, w)];
        ++covered[static_cast<size_t>(id)];
        self(self, v + 1);
        --covered[static_cast<size_t>(id)];
      }
    }
  };
  rec(rec, 0);
  return result;
}

Endofunction reroot_tree(const Endofunction& f, int new_root) {
  const int root = tree_root(f);
  if (new_root < 0 || new_root >= f.size()) throw std::invalid_argument("bad root");
  std::vector<std::vector<int>> adj(static_cast<size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) {
    if (i == root) continue;
    adj[static_cast<size_t>(i)].push_back(f(i));
    adj[static_cast<size_t>(f(i))].push_back(i);
  }
  std::vector<int> parent(static_cast<size_t>(f.size()), -1);
  parent[static_cast<size_t>(new_root)] = new_root;
  std::vector<int> queue{new_root};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (int w : adj[static_cast<size_t>(v)])
      if (parent[static_cast<size_t>(w)] == -1) {
        parent[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
  }
  return Endofunction(std::move(parent));
}

Endofunction tree_canonical_form(const Endofunction& f) {
  const int root = tree_root(f);
  auto ch = children_lists(f, root);
  auto code = ahu_codes(ch, root);

  // Labels handed out in DFS pre-order with children visited in code order;
  // conjugate trees share codes, hence share the output parent array.
  std::vector<int> parent(static_cast<size_t>(f.size()), 0);
  int next_label = 0;
  auto emit = [&](auto&& self, int v, int parent_label) -> void {
    int label = next_label++;
    parent[static_cast<size_t>(label)] = parent_label < 0 ? label : parent_label;
    std::vector<int> kids = ch[static_cast<size_t>(v)];
    std::sort(kids.begin(), kids.end(), [&](int a, int b) {
      return code[static_cast<size_t>(a)] < code[static_cast<size_t>(b)];
    });
    for (int k : kids) self(self, k, label);
  };
  emit(emit, root, -1);
  return Endofunction(std::move(parent));
}

}  // namespace gracekit

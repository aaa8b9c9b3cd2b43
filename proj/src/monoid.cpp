#include "gracekit/monoid.hpp"

#include <algorithm>
#include <stdexcept>

#include "gracekit/enumerate.hpp"

namespace gracekit {

std::vector<std::vector<int>> AdjacencyMatrix::dense() const {
  const int n = owner.size();
  std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(owner(i))] = 1;
  return m;
}

AdjacencyMatrix to_matrix(const Endofunction& f) { return AdjacencyMatrix{f}; }

bool antihom_check(const Endofunction& f, const Endofunction& g) {
  const int n = f.size();
  auto a_g = to_matrix(g).dense();
  auto a_f = to_matrix(f).dense();
  std::vector<std::vector<int>> product(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a_g[static_cast<size_t>(i)][static_cast<size_t>(k)] == 0) continue;
      for (int j = 0; j < n; ++j)
        product[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
            a_g[static_cast<size_t>(i)][static_cast<size_t>(k)] * a_f[static_cast<size_t>(k)][static_cast<size_t>(j)];
    }
  return product == to_matrix(compose(f, g)).dense();
}

int pseudoinverse_defect(const Endofunction& f, const Endofunction& g) {
  int defect = 0;
  for (int i = 0; i < f.size(); ++i)
    if (g(f(i)) != i) ++defect;
  return defect;
}

namespace {

constexpr int kExhaustiveLimit = 6;

// The composite g o f constrains g only on image(f): picking g(v) fixes the
// rows {i : f(i) = v} at once.  Off-image positions are free.
std::vector<Endofunction> solve_by_rows(const Endofunction& f, int k) {
  const int n = f.size();
  std::vector<std::vector<int>> preimage(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) preimage[static_cast<size_t>(f(i))].push_back(i);

  std::vector<Endofunction> out;
  std::vector<int> g(static_cast<size_t>(n), -1);
  auto rec = [&](auto&& self, int v, int budget) -> void {
    if (budget < 0) return;
    if (v == n) {
      out.emplace_back(g);
      return;
    }
    const auto& rows = preimage[static_cast<size_t>(v)];
    for (int value = 0; value < n; ++value) {
      int miss = static_cast<int>(rows.size());
      if (std::find(rows.begin(), rows.end(), value) != rows.end()) --miss;
      if (miss > budget) continue;
      g[static_cast<size_t>(v)] = value;
      self(self, v + 1, budget - miss);
    }
    g[static_cast<size_t>(v)] = -1;
  };
  rec(rec, 0, k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Endofunction> k_pseudoinverse(const Endofunction& f, int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  const int n = f.size();
  if (n <= kExhaustiveLimit) {
    std::vector<Endofunction> out;
    EndofunctionStream all(n);
    for (std::uint64_t idx = 0; idx < all.size(); ++idx) {
      Endofunction g = all.at(idx);
      if (pseudoinverse_defect(f, g) <= k) out.push_back(g);
    }
    return out;
  }
  if (n <= 9) return solve_by_rows(f, k);
  throw std::domain_error("k_pseudoinverse supports n <= 9");
}

std::vector<Endofunction> canonical_pseudoinverse(const Endofunction& f) {
  const int n = f.size();
  int d_f = 0;
  std::vector<char> hit(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) hit[static_cast<size_t>(f(i))] = 1;
  for (char h : hit) d_f += h;

  std::vector<Endofunction> out;
  PermutationStream perms(n);
  for (std::uint64_t k = 0; k < perms.size(); ++k) {
    Endofunction g = perms.at(k);
    if (pseudoinverse_defect(f, g) <= n - d_f) out.push_back(g);
  }
  return out;
}

bool pseudoinverse_monotonicity_check(const Endofunction& f, int a, int b) {
  if (a > b) throw std::invalid_argument("requires a <= b");
  auto small = k_pseudoinverse(f, a);
  auto large = k_pseudoinverse(f, b);
  return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

}  // namespace gracekit

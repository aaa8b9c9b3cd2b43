#include "gracekit/decomposition.hpp"

#include <map>
#include <stdexcept>

#include "gracekit/labeling.hpp"

namespace gracekit {

DecompositionReport ringel_decompose(const Endofunction& f, const Endofunction& sigma) {
  if (!is_functional_tree(f)) throw std::invalid_argument("ringel_decompose requires a tree");
  Endofunction h = conjugate(f, sigma);
  if (!label_profile(h).graceful())
    throw std::invalid_argument("sigma does not gracefully label f");

  const int n = f.size();
  const int m = 2 * n - 1;
  DecompositionReport report;
  report.n = n;

  std::vector<std::pair<int, int>> base;
  for (int v = 0; v < n; ++v)
    if (h(v) != v) base.emplace_back(v, h(v));

  std::map<std::pair<int, int>, int> seen;
  for (int i = 0; i < m; ++i) {
    std::vector<std::pair<int, int>> shift;
    for (auto [u, v] : base) {
      int a = (u + i) % m, b = (v + i) % m;
      std::pair<int, int> edge{std::min(a, b), std::max(a, b)};
      shift.push_back(edge);
      ++seen[edge];
    }
    report.shifts.push_back(std::move(shift));
  }

  report.is_partition = true;
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) {
      auto it = seen.find({u, v});
      int count = it == seen.end() ? 0 : it->second;
      if (count == 0) report.missing.emplace_back(u, v);
      if (count > 1) report.duplicated.emplace_back(u, v);
    }
  if (!report.missing.empty() || !report.duplicated.empty()) report.is_partition = false;
  return report;
}

}  // namespace gracekit

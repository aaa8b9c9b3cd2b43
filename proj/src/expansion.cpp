#include "gracekit/expansion.hpp"

#include <stdexcept>

#include "gracekit/enumerate.hpp"
#include "gracekit/labeling.hpp"

namespace gracekit {

namespace {

int phi_t(int n, int t, int v) { return t == 0 ? v : n - 1 - v; }

int sign_of(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

bool is_permutation_basis(const Endofunction& gamma) {
  if (!gamma.is_bijection()) throw std::invalid_argument("basis must be a bijection");
  if (gamma(0) != 0) throw std::invalid_argument("basis must fix 0");
  const int n = gamma.size();
  for (int i = 1; i < n; ++i)
    if (gamma(i) > i && gamma(i) > n - 1 - i) return false;
  return true;
}

std::vector<Endofunction> enumerate_bases(int n) {
  if (n <= 2) throw std::domain_error("basis enumeration requires n > 2");
  std::vector<Endofunction> out;
  PermutationStream perms(n);
  for (std::uint64_t k = 0; k < perms.size(); ++k) {
    Endofunction gamma = perms.at(k);
    if (gamma(0) == 0 && is_permutation_basis(gamma)) out.push_back(gamma);
  }
  return out;
}

ExpansionBasis expansion_from_labeling(const Endofunction& f, const Endofunction& sigma, int t) {
  if (t != 0 && t != 1) throw std::invalid_argument("t must be 0 or 1");
  Endofunction h = conjugate(f, sigma);
  if (!label_profile(h).graceful())
    throw std::invalid_argument("sigma does not gracefully label f");
  const int n = f.size();
  std::vector<int> gamma(static_cast<size_t>(n));
  std::vector<int> sign(static_cast<size_t>(n));
  const int flip = t == 0 ? 1 : -1;
  for (int j = 0; j < n; ++j) {
    int diff = phi_t(n, t, h(j)) - phi_t(n, t, j);
    gamma[static_cast<size_t>(j)] = std::abs(diff);
    sign[static_cast<size_t>(j)] = sign_of(flip * diff);
  }
  return ExpansionBasis{Endofunction(std::move(gamma)), std::move(sign), sigma, t};
}

Endofunction reconstruct(const ExpansionBasis& basis) {
  const int n = basis.gamma.size();
  if (basis.sigma.size() != n || static_cast<int>(basis.sign.size()) != n)
    throw std::invalid_argument("inconsistent basis sizes");
  if (!basis.sigma.is_bijection() || !basis.gamma.is_bijection())
    throw std::invalid_argument("basis components must be bijections");
  const int flip = basis.t == 0 ? 1 : -1;
  Endofunction sigma_inv = inverse(basis.sigma);
  std::vector<int> img(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int j = basis.sigma(i);
    int value = phi_t(n, basis.t, j) +
                flip * basis.sign[static_cast<size_t>(j)] * basis.gamma(j);
    if (value < 0 || value >= n)
      throw std::invalid_argument("expansion leaves Z_n: malformed basis");
    img[static_cast<size_t>(i)] = sigma_inv(phi_t(n, basis.t, value));
  }
  return Endofunction(std::move(img));
}

BasisSharingReport bases_sharing_bound_check(int n) {
  if (n > 7) throw std::domain_error("bases_sharing_bound_check requires n <= 7");
  BasisSharingReport report;
  report.n = n;
  report.bound = 1ll << ((n - 1) / 2 + (n - 1) % 2);  // 2^ceil((n-1)/2)
  for (const auto& gamma : enumerate_bases(n)) {
    // count sign rows keeping i + s(i)*gamma(i) inside Z_n; each valid row is
    // a distinct gracefully labeled function since gamma is a bijection
    long long count = 1;
    for (int i = 1; i < n; ++i) {
      if (gamma(i) == 0) continue;
      int options = 0;
      if (i + gamma(i) <= n - 1) ++options;
      if (i - gamma(i) >= 0) ++options;
      count *= options;
    }
    if (count > report.bound) report.bound_holds = false;
    if (gamma == identity(n) && count == report.bound) report.identity_attains_bound = true;
    report.counts.emplace_back(gamma, count);
  }
  return report;
}

ExpansionBasis inverse_iterate_expansion(const Endofunction& f, const ExpansionBasis& basis) {
  if (!f.is_bijection()) throw std::invalid_argument("requires f in S_n");
  if (basis.sigma != identity(f.size()))
    throw std::invalid_argument("derivation assumes sigma = id");
  if (reconstruct(basis) != f) throw std::invalid_argument("basis does not expand f");
  Endofunction g = iterate(f, order(f) - 1);
  const int n = f.size();
  std::vector<int> gamma(static_cast<size_t>(n));
  std::vector<int> sign(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    gamma[static_cast<size_t>(j)] = basis.gamma(g(j));
    sign[static_cast<size_t>(j)] = -basis.sign[static_cast<size_t>(g(j))];
  }
  ExpansionBasis out{Endofunction(std::move(gamma)), std::move(sign), identity(n), basis.t};
  if (reconstruct(out) != g) throw std::logic_error("derived expansion failed to reproduce iterate");
  return out;
}

}  // namespace gracekit

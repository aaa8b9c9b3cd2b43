#include "gracekit/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "gracekit/core.hpp"

namespace gracekit {

bool LinearForm::is_zero() const {
  if (constant != 0) return false;
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

Rational LinearForm::evaluate(const std::vector<Rational>& point) const {
  Rational acc = constant;
  for (size_t j = 0; j < coeffs.size(); ++j) acc += coeffs[j] * point[j];
  return acc;
}

Rational LinearForm::canonicalize() {
  for (auto& c : coeffs) {
    if (c == 0) continue;
    Rational lead = c;
    for (auto& d : coeffs) d /= lead;
    constant /= lead;
    return lead;
  }
  if (constant != 0) {
    Rational lead = constant;
    constant = 1;
    return lead;
  }
  return 1;  // zero form
}

LinearForm LinearForm::permuted(const Endofunction& sigma) const {
  LinearForm out;
  out.coeffs.assign(coeffs.size(), 0);
  for (size_t k = 0; k < coeffs.size(); ++k)
    out.coeffs[static_cast<size_t>(sigma(static_cast<int>(k)))] = coeffs[k];
  out.constant = constant;
  return out;
}

bool LinearForm::operator<(const LinearForm& other) const {
  if (coeffs != other.coeffs) return coeffs < other.coeffs;
  return constant < other.constant;
}

LinearForm variable_difference(int n, int j, int i) {
  LinearForm form;
  form.coeffs.assign(static_cast<size_t>(n), 0);
  form.coeffs[static_cast<size_t>(j)] += 1;
  form.coeffs[static_cast<size_t>(i)] -= 1;
  return form;
}

FactoredPolynomial::FactoredPolynomial(int n, Rational scalar)
    : n_(n), scalar_(std::move(scalar)) {}

int FactoredPolynomial::total_degree() const {
  int deg = 0;
  for (const auto& [form, exp] : factors_) deg += exp;
  return deg;
}

void FactoredPolynomial::multiply_form(LinearForm form, int exponent) {
  if (exponent <= 0) throw std::invalid_argument("exponent must be positive");
  if (form.is_zero()) {
    ++zero_factors_;
    return;
  }
  Rational lead = form.canonicalize();
  for (int e = 0; e < exponent; ++e) scalar_ *= lead;
  factors_[std::move(form)] += exponent;
}

Rational FactoredPolynomial::evaluate(const std::vector<Rational>& point) const {
  if (is_zero()) return 0;
  Rational acc = scalar_;
  for (const auto& [form, exp] : factors_) {
    Rational v = form.evaluate(point);
    if (v == 0) return 0;
    for (int e = 0; e < exp; ++e) acc *= v;
  }
  return acc;
}

FactoredPolynomial FactoredPolynomial::permuted(const Endofunction& sigma) const {
  FactoredPolynomial out(n_, scalar_);
  for (const auto& [form, exp] : factors_) out.multiply_form(form.permuted(sigma), exp);
  for (int z = 0; z < zero_factors_; ++z) out.multiply_form(LinearForm{std::vector<Rational>(static_cast<size_t>(n_), 0), 0});
  return out;
}

bool FactoredPolynomial::same_factors(const FactoredPolynomial& other) const {
  return zero_factors_ == other.zero_factors_ && factors_ == other.factors_;
}

FactoredPolynomial lcm_factored(const FactoredPolynomial& F, const FactoredPolynomial& G) {
  if (F.variables() != G.variables()) throw std::invalid_argument("variable count mismatch");
  FactoredPolynomial out(F.variables());
  if (F.is_zero() || G.is_zero()) {
    out.multiply_form(LinearForm{std::vector<Rational>(static_cast<size_t>(F.variables()), 0), 0});
    return out;
  }
  for (const auto& [form, exp] : F.factors()) {
    auto it = G.factors().find(form);
    out.multiply_form(form, std::max(exp, it == G.factors().end() ? 0 : it->second));
  }
  for (const auto& [form, exp] : G.factors())
    if (!F.factors().count(form)) out.multiply_form(form, exp);
  out.multiply_scalar(1 / out.scalar());  // LCM is defined up to scale; pin it at 1
  return out;
}

FactoredPolynomial vertex_vandermonde(int n) {
  FactoredPolynomial out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) out.multiply_form(variable_difference(n, j, i));
  return out;
}

namespace {

// x_{f(k)} - x_k
LinearForm edge_form(const Endofunction& f, int k) {
  LinearForm form;
  form.coeffs.assign(static_cast<size_t>(f.size()), 0);
  form.coeffs[static_cast<size_t>(f(k))] += 1;
  form.coeffs[static_cast<size_t>(k)] -= 1;
  return form;
}

LinearForm form_sum(const LinearForm& a, const LinearForm& b, int sign_b) {
  LinearForm out = a;
  for (size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] += sign_b * b.coeffs[k];
  out.constant += sign_b * b.constant;
  return out;
}

}  // namespace

FactoredPolynomial edge_vandermonde(const Endofunction& f, int min_index) {
  const int n = f.size();
  FactoredPolynomial out(n);
  for (int i = min_index; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      LinearForm ai = edge_form(f, i), aj = edge_form(f, j);
      out.multiply_form(form_sum(aj, ai, -1));
      out.multiply_form(form_sum(aj, ai, +1));
    }
  return out;
}

CertificateReport certify_graceful(const Endofunction& f) {
  const int n = f.size();
  CertificateReport report;

  // Symbolic screen: an identically-zero edge factor (two loops or a 2-cycle)
  // zeroes every LCM branch, so the certificate is already decided.
  if (f.fixed_point_count() >= 2) return report;
  for (int i = 0; i < n; ++i)
    if (f(f(i)) == i && f(i) != i) return report;

  // Permutation-point search: assign x_v in vertex order; whenever the edge
  // factor pair for two completed edges vanishes (equal |x_f(u)-x_u|), prune.
  std::vector<std::vector<int>> completes(static_cast<size_t>(n));
  for (int u = 0; u < n; ++u) completes[static_cast<size_t>(std::max(u, f(u)))].push_back(u);
  std::vector<int> x(static_cast<size_t>(n), -1);
  std::uint32_t used_value = 0, used_magnitude = 0;
  bool done = false;

  auto rec = [&](auto&& self, int v) -> void {
    if (done) return;
    ++report.points_examined;
    if (v == n) {
      report.graceful = true;
      report.witness = Endofunction(x);
      done = true;
      return;
    }
    for (int value = 0; value < n && !done; ++value) {
      if (used_value & (1u << value)) continue;
      x[static_cast<size_t>(v)] = value;
      used_value |= 1u << value;
      std::uint32_t added = 0;
      bool ok = true;
      for (int u : completes[static_cast<size_t>(v)]) {
        int magnitude = std::abs(x[static_cast<size_t>(f(u))] - x[static_cast<size_t>(u)]);
        std::uint32_t bit = 1u << magnitude;
        if ((used_magnitude | added) & bit) {
          ok = false;
          break;
        }
        added |= bit;
      }
      if (ok) {
        used_magnitude |= added;
        self(self, v + 1);
        used_magnitude &= ~added;
      }
      used_value &= ~(1u << value);
    }
  };
  rec(rec, 0);
  return report;
}

Rational certificate_witness_magnitude(int n) {
  Rational acc = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc *= Rational(j - i) * (j - i) * (j + i);
  return acc;
}

Rational certificate_product_value(const Endofunction& f, const std::vector<Rational>& point) {
  const int n = f.size();
  Rational acc = 1;
  for (int i = 0; i < n; ++i) {
    Rational ai = point[static_cast<size_t>(f(i))] - point[static_cast<size_t>(i)];
    for (int j = i + 1; j < n; ++j) {
      Rational aj = point[static_cast<size_t>(f(j))] - point[static_cast<size_t>(j)];
      acc *= (point[static_cast<size_t>(j)] - point[static_cast<size_t>(i)]) * (aj * aj - ai * ai);
    }
  }
  return acc;
}

bool det_v_check(const Endofunction& f, const std::vector<Rational>& point) {
  const int n = f.size();
  if (static_cast<int>(point.size()) != n) throw std::invalid_argument("point size mismatch");
  std::vector<Rational> asq(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) {
    Rational a = point[static_cast<size_t>(f(j))] - point[static_cast<size_t>(j)];
    asq[static_cast<size_t>(j)] = a * a;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (point[static_cast<size_t>(i)] * asq[static_cast<size_t>(j)] == 1)
        throw std::domain_error("singular denominator at requested point");

  // entries as the geometric sum 1 + r + ... + r^(n-1), r = x_i (x_f(j)-x_j)^2
  std::vector<std::vector<Rational>> m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational r = point[static_cast<size_t>(i)] * asq[static_cast<size_t>(j)];
      Rational sum = 0, power = 1;
      for (int k = 0; k < n; ++k) {
        sum += power;
        power *= r;
      }
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = sum;
    }

  // exact Gaussian elimination
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n && pivot < 0; ++row)
      if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0) pivot = row;
    if (pivot < 0) {
      det = 0;
      break;
    }
    if (pivot != col) {
      std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(col)]);
      det = -det;
    }
    det *= m[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int row = col + 1; row < n; ++row) {
      if (m[static_cast<size_t>(row)][static_cast<size_t>(col)] == 0) continue;
      Rational ratio = m[static_cast<size_t>(row)][static_cast<size_t>(col)] /
                       m[static_cast<size_t>(col)][static_cast<size_t>(col)];
      for (int k = col; k < n; ++k)
        m[static_cast<size_t>(row)][static_cast<size_t>(k)] -=
            ratio * m[static_cast<size_t>(col)][static_cast<size_t>(k)];
    }
  }

  return det == certificate_product_value(f, point);
}

FactoredPolynomial minimal_lcm(const Endofunction& f) {
  const int n = f.size();
  if (!is_functional_tree(f) || f(0) != 0)
    throw std::invalid_argument("minimal_lcm needs a functional tree rooted at 0");

  // undirected non-loop distances via BFS from every vertex
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  for (int i = 1; i < n; ++i) {
    adj[static_cast<size_t>(i)].push_back(f(i));
    adj[static_cast<size_t>(f(i))].push_back(i);
  }
  std::vector<std::vector<int>> dist(static_cast<size_t>(n),
                                     std::vector<int>(static_cast<size_t>(n), -1));
  for (int s = 0; s < n; ++s) {
    auto& d = dist[static_cast<size_t>(s)];
    d[static_cast<size_t>(s)] = 0;
    std::vector<int> queue{s};
    for (size_t qi = 0; qi < queue.size(); ++qi)
      for (int w : adj[static_cast<size_t>(queue[qi])])
        if (d[static_cast<size_t>(w)] == -1) {
          d[static_cast<size_t>(w)] = d[static_cast<size_t>(queue[qi])] + 1;
          queue.push_back(w);
        }
  }
  auto d = [&](int u, int v) { return dist[static_cast<size_t>(u)][static_cast<size_t>(v)]; };

  FactoredPolynomial out = vertex_vandermonde(n);

  // chain factors 2x_f(i) - x_i - x_f2(i) at distance 2
  for (int i = 0; i < n; ++i) {
    int f2 = f(f(i));
    if (d(i, f2) != 2) continue;
    LinearForm form;
    form.coeffs.assign(static_cast<size_t>(n), 0);
    form.coeffs[static_cast<size_t>(f(i))] += 2;
    form.coeffs[static_cast<size_t>(i)] -= 1;
    form.coeffs[static_cast<size_t>(f2)] -= 1;
    out.multiply_form(std::move(form));
  }

  // sibling factors 2x_f(j) - x_j - x_i (root pairs excluded, matching the
  // 0<i<j restriction of the edge product this must equal)
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (f(i) != f(j)) continue;
      LinearForm form;
      form.coeffs.assign(static_cast<size_t>(n), 0);
      form.coeffs[static_cast<size_t>(f(j))] += 2;
      form.coeffs[static_cast<size_t>(j)] -= 1;
      form.coeffs[static_cast<size_t>(i)] -= 1;
      out.multiply_form(std::move(form));
    }

  // split difference-of-squares along distance-3 chains
  for (int i = 0; i < n; ++i) {
    if (d(i, f(f(f(i)))) != 3) continue;
    LinearForm p = variable_difference(n, f(f(f(i))), f(f(i)));
    LinearForm q = edge_form(f, i);
    out.multiply_form(form_sum(p, q, -1));
    out.multiply_form(form_sum(p, q, +1));
  }

  // split difference-of-squares for remaining far pairs
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (d(i, j) < 3) continue;
      LinearForm ai = edge_form(f, i), aj = edge_form(f, j);
      out.multiply_form(form_sum(aj, ai, -1));
      out.multiply_form(form_sum(aj, ai, +1));
    }

  return out;
}

std::optional<std::vector<Endofunction>> polynomial_stabilizer(const Endofunction& f) {
  const int n = f.size();
  if (n > 7) throw std::domain_error("polynomial stabilizer requires n <= 7");

  FactoredPolynomial pf(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      LinearForm ai = edge_form(f, i), aj = edge_form(f, j);
      LinearForm diff = form_sum(aj, ai, -1), sum = form_sum(aj, ai, +1);
      if (diff.is_zero() || sum.is_zero()) return std::nullopt;
      pf.multiply_form(variable_difference(n, j, i));
      pf.multiply_form(std::move(diff));
      pf.multiply_form(std::move(sum));
    }

  std::vector<Endofunction> stabilizer;
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  do {
    Endofunction sigma{std::vector<int>(perm)};
    FactoredPolynomial moved = pf.permuted(sigma);
    if (moved.scalar() == pf.scalar() && moved.same_factors(pf)) stabilizer.push_back(sigma);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return stabilizer;
}

std::optional<bool> stabilizer_equal(const Endofunction& f) {
  auto stabilizer = polynomial_stabilizer(f);
  if (!stabilizer) return std::nullopt;
  return *stabilizer == automorphism_group(f);
}

}  // namespace gracekit

#ifndef GRACEKIT_ALGEBRA_HPP
#define GRACEKIT_ALGEBRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

using Rational = mpq_class;

// Rational linear form sum(coeffs[j] * x_j) + constant, kept in canonical
// scaling: the first nonzero coefficient (or the constant) is +1, with the
// scale factor surrendered to the owning polynomial.
struct LinearForm {
  std::vector<Rational> coeffs;
  Rational constant = 0;

  bool is_zero() const;
  Rational evaluate(const std::vector<Rational>& point) const;
  // Divides through by the leading coefficient; returns that coefficient.
  Rational canonicalize();
  LinearForm permuted(const Endofunction& sigma) const;  // x_k -> x_sigma(k)

  friend bool operator==(const LinearForm&, const LinearForm&) = default;
  bool operator<(const LinearForm& other) const;
};

LinearForm variable_difference(int n, int j, int i);  // x_j - x_i

// scalar * product of canonical linear forms with positive exponents.  A
// multiplied-in identically-zero form is flagged and makes the whole
// polynomial zero.  Proportional forms merge by adding exponents.
class FactoredPolynomial {
public:
  explicit FactoredPolynomial(int n, Rational scalar = 1);

  int variables() const { return n_; }
  const Rational& scalar() const { return scalar_; }
  const std::map<LinearForm, int>& factors() const { return factors_; }
  int zero_factor_count() const { return zero_factors_; }
  bool is_zero() const { return zero_factors_ > 0 || scalar_ == 0; }
  int total_degree() const;

  void multiply_form(LinearForm form, int exponent = 1);
  void multiply_scalar(const Rational& s) { scalar_ *= s; }
  Rational evaluate(const std::vector<Rational>& point) const;
  FactoredPolynomial permuted(const Endofunction& sigma) const;

  // Equality of factor multisets (scalars ignored; zero flags compared).
  bool same_factors(const FactoredPolynomial& other) const;
  friend bool operator==(const FactoredPolynomial&, const FactoredPolynomial&) = default;

private:
  int n_;
  Rational scalar_;
  std::map<LinearForm, int> factors_;
  int zero_factors_ = 0;
};

// LCM over a shared canonical factor list: max exponent per form, scalar 1.
// Zero inputs yield the zero polynomial.  Throws if the two polynomials store
// a shared form under different canonical scalings (internal bug guard).
FactoredPolynomial lcm_factored(const FactoredPolynomial& F, const FactoredPolynomial& G);

// prod_{i<j} (x_j - x_i)
FactoredPolynomial vertex_vandermonde(int n);
// prod over pairs of ((x_f(j)-x_j)^2 - (x_f(i)-x_i)^2), every difference of
// squares split into its two linear forms.  min_index = 1 drops pairs that
// touch vertex 0 (the root-restricted product of the minimal construction).
FactoredPolynomial edge_vandermonde(const Endofunction& f, int min_index = 0);

struct CertificateReport {
  bool graceful = false;
  std::optional<Endofunction> witness;  // lattice point, a permutation of Z_n
  std::uint64_t points_examined = 0;    // search nodes (partial assignments)
};

// Prop-11 certificate: the LCM construction is nonzero mod the falling
// factorials iff some lattice point keeps every factor nonzero.  Only
// injective points can survive the vertex Vandermonde, so the search walks
// permutation points, pruning as soon as an edge factor vanishes.
CertificateReport certify_graceful(const Endofunction& f);

// Value the full (unrestricted) product takes at any graceful witness:
// +- prod_{i<j} (j-i)^2 (j+i).
Rational certificate_witness_magnitude(int n);
// The full product prod_{i<j}(x_j-x_i)((x_f(j)-x_j)^2-(x_f(i)-x_i)^2) at a point.
Rational certificate_product_value(const Endofunction& f, const std::vector<Rational>& point);

// Exact check of the determinant identity: det of the matrix with entries
// (1-(x_i (x_f(j)-x_j)^2)^n) / (1-x_i (x_f(j)-x_j)^2) against the product.
// Throws on singular denominators.
bool det_v_check(const Endofunction& f, const std::vector<Rational>& point);

// The minimal-degree certificate for functional trees rooted at 0: vertex
// Vandermonde, distance-2 chain factors, sibling factors, and the split
// distance-3 / distance->=3 difference-of-squares blocks.
FactoredPolynomial minimal_lcm(const Endofunction& f);

// Stabilizer of P_f(x) = prod_{i != j}(x_j-x_i)((x_f(j)-x_j)^2-(x_f(i)-x_i)^2)
// under variable permutation; nullopt when P_f is identically zero (two fixed
// points or a 2-cycle make the question vacuous).  Because the edge
// differences enter squared, this is the automorphism group of the
// *undirected* multigraph under G_f, which can strictly contain Aut(G_f).
std::optional<std::vector<Endofunction>> polynomial_stabilizer(const Endofunction& f);

// Whether the stabilizer coincides with Aut(G_f); nullopt when degenerate.
std::optional<bool> stabilizer_equal(const Endofunction& f);

}  // namespace gracekit

#endif

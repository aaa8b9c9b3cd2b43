#ifndef GRACEKIT_EXPANSION_HPP
#define GRACEKIT_EXPANSION_HPP

#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

// Graceful expansion data: f factors through the involution phi = (n-1)-id as
//   f = sigma^(-1) phi^t (phi^t sigma + (-1)^t * sign(sigma(.)) * gamma(sigma(.)))
// with gamma a bijection (the basis), sign in {-1,0,+1}^n (0 exactly at the
// loop) and sigma a coset representative making the conjugate graceful.
struct ExpansionBasis {
  Endofunction gamma;
  std::vector<int> sign;  // per j in Z_n
  Endofunction sigma;
  int t = 0;
};

// Eq.-(3) range condition for bases fixing 0: gamma(i) <= i or
// gamma(i) <= (n-1)-i for every i != 0.  Throws unless gamma is a bijection
// with gamma(0) = 0.
bool is_permutation_basis(const Endofunction& gamma);

// All bijections fixing 0 that pass is_permutation_basis, lexicographic.
// Their number is floor((n-1)/2)! * ceil((n-1)/2)!.  Requires n > 2.
std::vector<Endofunction> enumerate_bases(int n);

// Recovers (gamma, sign) from a graceful relabeling sigma of f; throws when
// conjugate(f, sigma) is not gracefully labeled.
ExpansionBasis expansion_from_labeling(const Endofunction& f, const Endofunction& sigma, int t);

// Evaluates the expansion; the result is independent of t.  Throws when the
// affine combination leaves Z_n (malformed basis).
Endofunction reconstruct(const ExpansionBasis& basis);

// Per-basis count of distinct gracefully labeled f expandable over sign rows
// in the sigma = id setting of the basis-count theorem's proof.
struct BasisSharingReport {
  int n = 0;
  long long bound = 0;  // 2^ceil((n-1)/2)
  std::vector<std::pair<Endofunction, long long>> counts;  // per basis, gamma order
  bool bound_holds = true;
  bool identity_attains_bound = false;
};

BasisSharingReport bases_sharing_bound_check(int n);  // n <= 7

// From an expansion of a permutation f (sigma = id) derives the expansion of
// f^(order(f)-1) = f^(-1): gamma and sign rows compose with the iterate, the
// sign flipping as in the telescoping derivation.
ExpansionBasis inverse_iterate_expansion(const Endofunction& f, const ExpansionBasis& basis);

}  // namespace gracekit

#endif

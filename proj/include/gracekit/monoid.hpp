#ifndef GRACEKIT_MONOID_HPP
#define GRACEKIT_MONOID_HPP

#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

// Row-stochastic 0/1 matrix of G_f: row i has its single 1 at column f(i).
// Stored as the image array; dense() materializes it for checks.
struct AdjacencyMatrix {
  Endofunction owner;

  std::vector<std::vector<int>> dense() const;
};

AdjacencyMatrix to_matrix(const Endofunction& f);

// Verifies A_{G_{f o g}} = A_{G_g} * A_{G_f} with an actual integer matrix
// product on one side and composition on the other.
bool antihom_check(const Endofunction& f, const Endofunction& g);

// Number of rows where A_{G_{g o f}} deviates from the identity, i.e. the
// l0 distance divided by 2.
int pseudoinverse_defect(const Endofunction& f, const Endofunction& g);

// Def-8 k-pseudoinverse set {g : ||A_{G_{gf}} - A_{G_id}||_l0 <= 2k}.
// Exhaustive over n^n candidates for n <= 6, row-constraint solver for
// n <= 9; sorted output.
std::vector<Endofunction> k_pseudoinverse(const Endofunction& f, int k);

// Def-9 canonical pseudoinverse f^+ = f^(+_{n-d_f}) intersected with S_n.
std::vector<Endofunction> canonical_pseudoinverse(const Endofunction& f);

// f^(+_a) is contained in f^(+_b) whenever a <= b.
bool pseudoinverse_monotonicity_check(const Endofunction& f, int a, int b);

}  // namespace gracekit

#endif

#ifndef GRACEKIT_CORE_HPP
#define GRACEKIT_CORE_HPP

#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

// All bijections sigma with sigma f sigma^(-1) = f, in lexicographic image
// order.  Brute force over S_n for n <= 8; rooted-tree canonical-code
// refinement for functional trees at larger n (throws for large non-trees).
std::vector<Endofunction> automorphism_group(const Endofunction& f);

// |Aut(G_f)| without materializing the group.  Same dispatch as above except
// that for trees the count comes from the canonical-code multiplicity product.
long long automorphism_count(const Endofunction& f);

// All g whose symmetrized non-loop edge set equals f's (Def-3 fixed point
// swaps) and whose loop count matches f's.  Includes f itself.
std::vector<Endofunction> fixed_point_swaps(const Endofunction& f);

// Parent map of the same labeled undirected tree re-rooted at new_root.
// Requires is_functional_tree(f).
Endofunction reroot_tree(const Endofunction& f, int new_root);

// Canonical form of a functional tree: the lexicographically structured
// semigroup representative (parent[i] < i for i >= 1, root 0), identical for
// conjugate trees.  Also usable as an isomorphism key.
Endofunction tree_canonical_form(const Endofunction& f);

}  // namespace gracekit

#endif

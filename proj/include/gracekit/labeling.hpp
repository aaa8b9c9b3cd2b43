#ifndef GRACEKIT_LABELING_HPP
#define GRACEKIT_LABELING_HPP

#include <functional>
#include <optional>
#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

// Subtractive edge labels |f(i) - i| of f as labeled.
struct LabelProfile {
  std::vector<int> labels;  // labels[i] = |f(i) - i|
  int distinct_count = 0;

  bool graceful() const { return distinct_count == static_cast<int>(labels.size()); }
};

LabelProfile label_profile(const Endofunction& f);

// Backtracking search over vertex labelings x (x = sigma as an image array).
// Labels are assigned in vertex order with values tried in increasing order,
// so the first solution is the lexicographically least graceful sigma.
std::optional<Endofunction> find_graceful_labeling(const Endofunction& f);
bool is_graceful(const Endofunction& f);

// Invokes `visit` with every graceful sigma in lexicographic order until it
// returns false.  Complete enumeration, used by GrL and the oracles.
void for_each_graceful_labeling(const Endofunction& f,
                                const std::function<bool(const Endofunction&)>& visit);

// GrL(G_f): the distinct gracefully labeled conjugates of f, one per
// achieving coset of Aut(G_f), sorted by image sequence.
std::vector<Endofunction> grl(const Endofunction& f);

// rho: deletions of non-loop edges until the non-loop remainder is a disjoint
// union of simple paths (loops may stay).  delta: deletions of arbitrary
// edges until the whole remainder is a loop-free disjoint union of paths.
struct PathDeletionStats {
  int rho = 0;
  int delta = 0;
  std::vector<int> rho_deletion;  // vertex indices i of deleted edges (i, f(i))
};

PathDeletionStats path_deletion_stats(const Endofunction& f);

// Exact extremes of |{|sigma f sigma^(-1)(i) - i|}| over sigma in S_n.
// Exhaustive for n <= 8; branch and bound (seeded by the greedy labelings)
// when allow_branch_and_bound is set; throws otherwise.
int min_distinct_labels(const Endofunction& f, bool allow_branch_and_bound = false);
int max_distinct_labels(const Endofunction& f, bool allow_branch_and_bound = false);

// The two constructive labelings from the section-4 proofs: consecutive
// labels along each path (few distinct labels) and alternating
// largest/smallest unassigned labels (many distinct labels).
Endofunction greedy_min_labeling(const Endofunction& f);
Endofunction greedy_max_labeling(const Endofunction& f);

}  // namespace gracekit

#endif

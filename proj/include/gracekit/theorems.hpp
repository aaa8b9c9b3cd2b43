#ifndef GRACEKIT_THEOREMS_HPP
#define GRACEKIT_THEOREMS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gracekit/endofunction.hpp"
#include "gracekit/enumerate.hpp"

namespace gracekit {

enum class Universe { trees, endofunctions, permutations };

Universe parse_universe(const std::string& name);
std::string universe_name(Universe u);

struct Violation {
  Endofunction f;
  std::string predicate;
  std::string detail;
};

struct SweepReport {
  int n = 0;
  std::string universe;
  std::uint64_t instances_checked = 0;
  std::uint64_t vacuous = 0;  // premise failed, counted but not checked
  std::vector<Violation> violations;
  double wall_seconds = 0.0;

  bool passed() const { return violations.empty(); }
};

// Composition lemma sweep: whenever Aut(G_f) is strictly inside
// Aut(G_{f^(2)}) and f^(2) attains n distinct labels, f must too.
// shard indexes into the universe stream; nullopt sweeps everything.
SweepReport verify_composition_lemma(int n, Universe universe,
                                     std::optional<Shard> shard = std::nullopt);

// Re-roots a functional tree at a vertex at undirected distance exactly 2
// from a leaf so that Aut(G_g) is strictly inside Aut(G_{g^(2)}).  Throws if
// no qualifying vertex exists (degenerate sizes).
Endofunction aut_strictness_fix(const Endofunction& f);

// Main theorem sweep: n+1-components(G_{f^(o_f)}) equals the maximal distinct
// label count of f^(o_f).  For the tree universe this is precisely "every
// tree is graceful" and runs on the search instead of the exhaustive max.
SweepReport verify_main_theorem(int n, Universe universe,
                                std::optional<Shard> shard = std::nullopt);

// One application of the reduction pipeline behind the weak converse:
// relabel so a descent-maximizing leaf sits at n-1, restrict, gracefully
// relabel, re-root among labels {0, n-2}, conjugate by (n-2)-id when needed,
// attach leaf n-1 to vertex 0.
struct Prop17Step {
  Endofunction f_tilde;      // input relabeled with the dropped leaf at n-1
  Endofunction composite;    // f_tilde o g o h: exactly f_tilde with n-1 -> 0
  Endofunction constructed;  // the pipeline witness, gracefully labeled as-is
  Endofunction reduced;      // semigroup canonical form of `constructed`
  bool strict_descent = false;  // |reduced image| < |f image|
};

Prop17Step prop17_reduce(const Endofunction& f);

// Iterates prop17_reduce and reports whether image sizes strictly descend
// to a constant function within max_steps applications.
struct Prop17Chain {
  std::vector<int> image_sizes;  // starting with |f(Z_n)|, ending at 1 on success
  bool strictly_descending = false;
  bool reached_constant = false;
  int steps = 0;
};

Prop17Chain prop17_chain(const Endofunction& f, int max_steps);

// (a) C_1 together with 2^s copies of a 2^t-cycle is graceful (s>0, t>1,
// n = 1+2^(s+t) capped by n_search_max); (b) the count of gracefully labeled
// permutations is divisible by 4 for 4 <= n <= n_count_max.
SweepReport verify_cycle_corollaries(int n_search_max, int s_max, int t_max,
                                     int n_count_max = 6);

// Gracefully-labeled permutation count (spanning unions of directed cycles).
long long graceful_permutation_count(int n);

}  // namespace gracekit

#endif

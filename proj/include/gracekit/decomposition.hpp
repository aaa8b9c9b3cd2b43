#ifndef GRACEKIT_DECOMPOSITION_HPP
#define GRACEKIT_DECOMPOSITION_HPP

#include <utility>
#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

// The 2n-1 cyclic shifts of a gracefully labeled n-vertex tree and whether
// their undirected edges partition E(K_{2n-1}).  Edges are canonical
// (min,max) pairs over Z_{2n-1}; the root loop is dropped from every shift.
struct DecompositionReport {
  int n = 0;
  std::vector<std::vector<std::pair<int, int>>> shifts;
  bool is_partition = false;
  std::vector<std::pair<int, int>> missing;
  std::vector<std::pair<int, int>> duplicated;
};

// Requires f a functional tree and conjugate(f, sigma) gracefully labeled.
// A partition failure is reported, not thrown: it would falsify the
// construction and deserves inspection.
DecompositionReport ringel_decompose(const Endofunction& f, const Endofunction& sigma);

}  // namespace gracekit

#endif

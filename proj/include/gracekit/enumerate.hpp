#ifndef GRACEKIT_ENUMERATE_HPP
#define GRACEKIT_ENUMERATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "gracekit/endofunction.hpp"

namespace gracekit {

// Half-open index range "lo..hi" used for work sharding.
struct Shard {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  std::uint64_t size() const { return hi - lo; }
  static Shard parse(const std::string& text);  // "k..m"
};

// Restartable, index-addressable generators: at(k) costs O(n), so shards of a
// sweep can start anywhere without replaying the stream.
class RootedTreeStream {
public:
  explicit RootedTreeStream(int n);
  std::uint64_t size() const { return size_; }
  // k-th semigroup parent array in lexicographic (p(1),...,p(n-1)) order.
  Endofunction at(std::uint64_t k) const;

private:
  int n_;
  std::uint64_t size_;
};

class EndofunctionStream {
public:
  explicit EndofunctionStream(int n);
  std::uint64_t size() const { return size_; }
  Endofunction at(std::uint64_t k) const;  // base-n digits, lexicographic

private:
  int n_;
  std::uint64_t size_;
};

class PermutationStream {
public:
  explicit PermutationStream(int n);
  std::uint64_t size() const { return size_; }
  Endofunction at(std::uint64_t k) const;  // factoradic decode, lexicographic

private:
  int n_;
  std::uint64_t size_;
};

// Unique labeled tree with the given Pruefer sequence (length n-2, entries in
// Z_n), oriented toward `root` which carries the loop.
Endofunction prufer_decode(const std::vector<int>& seq, int root);

// Canonical function whose cycle multiset equals `lengths`, cycles laid out on
// consecutive vertex blocks in the given order.  If expected_n >= 0 the
// lengths must sum to it.
Endofunction cycle_union(const std::vector<int>& lengths, int expected_n = -1);

}  // namespace gracekit

#endif

#include "gracekit/enumerate.hpp"

#include <numeric>
#include <stdexcept>

namespace gracekit {

Shard Shard::parse(const std::string& text) {
  size_t dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("shard must look like k..m");
  Shard s;
  try {
    size_t used = 0;
    s.lo = std::stoull(text.substr(0, dots), &used);
    if (used != dots) throw std::invalid_argument("");
    std::string hi = text.substr(dots + 2);
    s.hi = std::stoull(hi, &used);
    if (used != hi.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("shard must look like k..m");
  }
  if (s.lo > s.hi) throw std::invalid_argument("shard lo exceeds hi");
  return s;
}

RootedTreeStream::RootedTreeStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  size_ = 1;
  for (int i = 1; i < n; ++i) size_ *= static_cast<std::uint64_t>(i);
}

Endofunction RootedTreeStream::at(std::uint64_t k) const {
  if (k >= size_) throw std::out_of_range("stream index");
  // mixed radix over (p(n-1),...,p(1)) with radix i at digit i
  std::vector<int> parent(static_cast<size_t>(n_), 0);
  for (int i = n_ - 1; i >= 1; --i) {
    parent[static_cast<size_t>(i)] = static_cast<int>(k % static_cast<std::uint64_t>(i));
    k /= static_cast<std::uint64_t>(i);
  }
  return Endofunction(std::move(parent));
}

EndofunctionStream::EndofunctionStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  size_ = 1;
  for (int i = 0; i < n; ++i) size_ *= static_cast<std::uint64_t>(n);
}

Endofunction EndofunctionStream::at(std::uint64_t k) const {
  if (k >= size_) throw std::out_of_range("stream index");
  std::vector<int> img(static_cast<size_t>(n_), 0);
  for (int i = n_ - 1; i >= 0; --i) {
    img[static_cast<size_t>(i)] = static_cast<int>(k % static_cast<std::uint64_t>(n_));
    k /= static_cast<std::uint64_t>(n_);
  }
  return Endofunction(std::move(img));
}

PermutationStream::PermutationStream(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  size_ = 1;
  for (int i = 2; i <= n; ++i) size_ *= static_cast<std::uint64_t>(i);
}

Endofunction PermutationStream::at(std::uint64_t k) const {
  if (k >= size_) throw std::out_of_range("stream index");
  std::vector<int> digits(static_cast<size_t>(n_), 0);
  for (int i = 1; i <= n_; ++i) {
    digits[static_cast<size_t>(n_ - i)] = static_cast<int>(k % static_cast<std::uint64_t>(i));
    k /= static_cast<std::uint64_t>(i);
  }
  std::vector<int> pool(static_cast<size_t>(n_));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> img;
  img.reserve(static_cast<size_t>(n_));
  for (int d : digits) {
    img.push_back(pool[static_cast<size_t>(d)]);
    pool.erase(pool.begin() + d);
  }
  return Endofunction(std::move(img));
}

Endofunction prufer_decode(const std::vector<int>& seq, int root) {
  const int n = static_cast<int>(seq.size()) + 2;
  if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
  for (int v : seq)
    if (v < 0 || v >= n) throw std::invalid_argument("Pruefer entry out of range");

  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int v : seq) ++degree[static_cast<size_t>(v)];
  std::vector<std::vector<int>> adj(static_cast<size_t>(n));
  std::vector<char> used(static_cast<size_t>(n), 0);
  for (int v : seq) {
    int u = 0;
    while (used[static_cast<size_t>(u)] || degree[static_cast<size_t>(u)] != 1) ++u;
    used[static_cast<size_t>(u)] = 1;
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
    --degree[static_cast<size_t>(v)];
  }
  int a = -1, b = -1;
  for (int i = 0; i < n; ++i)
    if (!used[static_cast<size_t>(i)] && degree[static_cast<size_t>(i)] == 1) (a == -1 ? a : b) = i;
  adj[static_cast<size_t>(a)].push_back(b);
  adj[static_cast<size_t>(b)].push_back(a);

  std::vector<int> parent(static_cast<size_t>(n), -1);
  parent[static_cast<size_t>(root)] = root;
  std::vector<int> queue{root};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (int w : adj[static_cast<size_t>(queue[qi])])
      if (parent[static_cast<size_t>(w)] == -1) {
        parent[static_cast<size_t>(w)] = queue[qi];
        queue.push_back(w);
      }
  return Endofunction(std::move(parent));
}

Endofunction cycle_union(const std::vector<int>& lengths, int expected_n) {
  int n = 0;
  for (int len : lengths) {
    if (len <= 0) throw std::invalid_argument("cycle lengths must be positive");
    n += len;
  }
  if (n == 0) throw std::invalid_argument("empty cycle spec");
  if (expected_n >= 0 && expected_n != n)
    throw std::invalid_argument("cycle lengths do not sum to n");
  std::vector<int> img(static_cast<size_t>(n));
  int base = 0;
  for (int len : lengths) {
    for (int i = 0; i < len; ++i)
      img[static_cast<size_t>(base + i)] = base + (i + 1) % len;
    base += len;
  }
  return Endofunction(std::move(img));
}

}  // namespace gracekit

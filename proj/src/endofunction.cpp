#include "gracekit/endofunction.hpp"

#include <numeric>
#include <stdexcept>

namespace gracekit {

Endofunction::Endofunction(std::vector<int> images) : img_(std::move(images)) {
  const int n = size();
  if (n == 0) throw std::invalid_argument("endofunction must have n >= 1");
  for (int v : img_)
    if (v < 0 || v >= n) throw std::invalid_argument("image value out of range");
}

bool Endofunction::is_bijection() const {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = 1;
  }
  return true;
}

bool Endofunction::is_constant() const {
  for (int v : img_)
    if (v != img_[0]) return false;
  return true;
}

int Endofunction::fixed_point_count() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (img_[static_cast<size_t>(i)] == i) ++c;
  return c;
}

Endofunction identity(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return Endofunction(std::move(v));
}

Endofunction involution_phi(int n) {
  std::vector<int> v(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = n - 1 - i;
  return Endofunction(std::move(v));
}

Endofunction constant(int n, int value) {
  return Endofunction(std::vector<int>(static_cast<size_t>(n), value));
}

Endofunction compose(const Endofunction& f, const Endofunction& g) {
  if (f.size() != g.size()) throw std::invalid_argument("size mismatch");
  std::vector<int> v(static_cast<size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) v[static_cast<size_t>(i)] = f(g(i));
  return Endofunction(std::move(v));
}

Endofunction inverse(const Endofunction& f) {
  if (!f.is_bijection()) throw std::invalid_argument("inverse of non-bijection");
  std::vector<int> v(static_cast<size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) v[static_cast<size_t>(f(i))] = i;
  return Endofunction(std::move(v));
}

Endofunction iterate(const Endofunction& f, long long k) {
  if (k < 0) throw std::invalid_argument("negative iterate");
  Endofunction result = identity(f.size());
  Endofunction power = f;
  while (k > 0) {
    if (k & 1) result = compose(result, power);
    power = compose(power, power);
    k >>= 1;
  }
  return result;
}

Endofunction conjugate(const Endofunction& f, const Endofunction& sigma) {
  if (sigma.size() != f.size() || !sigma.is_bijection())
    throw std::invalid_argument("conjugation requires a bijection");
  std::vector<int> v(static_cast<size_t>(f.size()));
  for (int i = 0; i < f.size(); ++i) v[static_cast<size_t>(sigma(i))] = sigma(f(i));
  return Endofunction(std::move(v));
}

Endofunction parse_endofunction(const std::string& text) {
  std::vector<int> v;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    size_t used = 0;
    int value;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad endofunction text: " + text);
    }
    if (used != tok.size()) throw std::invalid_argument("bad endofunction text: " + text);
    v.push_back(value);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Endofunction(std::move(v));  // range check happens in the constructor
}

std::string to_text(const Endofunction& f) {
  std::string s;
  for (int i = 0; i < f.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(f(i));
  }
  return s;
}

FunctionalGraph::FunctionalGraph(const Endofunction& f) : owner(f) {
  const int n = f.size();
  in_degrees.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) ++in_degrees[static_cast<size_t>(f(i))];
  for (int d : in_degrees)
    if (d >= 1) ++d_f;

  // Pointer-chasing with visitation marks: 0 unseen, 1 on current walk, 2 done.
  std::vector<int> state(static_cast<size_t>(n), 0);
  std::vector<int> walk_pos(static_cast<size_t>(n), -1);
  for (int start = 0; start < n; ++start) {
    if (state[static_cast<size_t>(start)] != 0) continue;
    std::vector<int> walk;
    int v = start;
    while (state[static_cast<size_t>(v)] == 0) {
      state[static_cast<size_t>(v)] = 1;
      walk_pos[static_cast<size_t>(v)] = static_cast<int>(walk.size());
      walk.push_back(v);
      v = f(v);
    }
    if (state[static_cast<size_t>(v)] == 1)  // found a new cycle on this walk
      cycle_lengths.push_back(static_cast<int>(walk.size()) - walk_pos[static_cast<size_t>(v)]);
    for (int u : walk) state[static_cast<size_t>(u)] = 2;
  }
  std::sort(cycle_lengths.begin(), cycle_lengths.end());

  // Components via union-find, then ids numbered by smallest contained vertex.
  std::vector<int> parent(static_cast<size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int i = 0; i < n; ++i) {
    int a = find(i), b = find(f(i));
    if (a != b) parent[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
  }
  component_of.assign(static_cast<size_t>(n), -1);
  for (int i = 0; i < n; ++i) {
    int root = find(i);
    if (component_of[static_cast<size_t>(root)] == -1)
      component_of[static_cast<size_t>(root)] = component_count++;
    component_of[static_cast<size_t>(i)] = component_of[static_cast<size_t>(root)];
  }
}

bool is_functional_tree(const Endofunction& f) {
  Endofunction g = iterate(f, f.size() - 1);
  for (int i = 0; i < g.size(); ++i)
    if (g(i) != g(0)) return false;
  return true;
}

long long order(const Endofunction& f) {
  FunctionalGraph graph(f);
  long long result = 1;
  for (int len : graph.cycle_lengths) result = std::lcm(result, static_cast<long long>(len));
  return result;
}

}  // namespace gracekit

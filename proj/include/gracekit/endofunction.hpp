#ifndef GRACEKIT_ENDOFUNCTION_HPP
#define GRACEKIT_ENDOFUNCTION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace gracekit {

// Total map Z_n -> Z_n, stored as a dense image array.  The universal carrier
// for functions, permutations and labelings throughout the toolkit.
class Endofunction {
public:
  Endofunction() = default;
  explicit Endofunction(std::vector<int> images);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<size_t>(i)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_bijection() const;
  bool is_constant() const;
  int fixed_point_count() const;

  friend bool operator==(const Endofunction&, const Endofunction&) = default;
  friend auto operator<=>(const Endofunction& a, const Endofunction& b) {
    return a.img_ <=> b.img_;
  }

private:
  std::vector<int> img_;
};

Endofunction identity(int n);
// The involution i -> (n-1)-i.
Endofunction involution_phi(int n);
Endofunction constant(int n, int value);

// compose(f,g)(i) = f(g(i))
Endofunction compose(const Endofunction& f, const Endofunction& g);
Endofunction inverse(const Endofunction& f);  // throws unless bijective
Endofunction iterate(const Endofunction& f, long long k);  // f^(k), k >= 0
// sigma f sigma^(-1); throws unless sigma is a bijection of matching size.
Endofunction conjugate(const Endofunction& f, const Endofunction& sigma);

// Text interchange format "a,b,c,..."; rejects out-of-range entries.
Endofunction parse_endofunction(const std::string& text);
std::string to_text(const Endofunction& f);

// Structure of the functional directed graph G_f: edge set {(i, f(i))}.
struct FunctionalGraph {
  Endofunction owner;
  std::vector<int> in_degrees;
  std::vector<int> cycle_lengths;   // sorted multiset, one entry per cycle
  std::vector<int> component_of;    // component ids numbered by smallest vertex
  int component_count = 0;
  int d_f = 0;                      // vertices with in-degree >= 1

  explicit FunctionalGraph(const Endofunction& f);
};

bool is_functional_tree(const Endofunction& f);
// LCM of the cycle lengths of G_f.
long long order(const Endofunction& f);

}  // namespace gracekit

#endif

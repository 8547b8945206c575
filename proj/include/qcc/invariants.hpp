// Cocycle invariants as multisets over the coefficient group.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcc/cocycles.hpp"
#include "qcc/colorings.hpp"
#include "qcc/diagrams.hpp"

namespace qcc {

// Printed as m1 u^g1 + ...; u^0 terms print bare.
class Multiset {
 public:
  explicit Multiset(CoeffGroup g);

  const CoeffGroup& group() const { return g_; }
  uint64_t count(int a) const { return m_[a]; }
  void add(int a, uint64_t k = 1) { m_[a] += k; }
  void merge(const Multiset& o);
  void scale(uint64_t k);
  uint64_t total() const;
  bool empty() const { return total() == 0; }
  const std::vector<uint64_t>& counts() const { return m_; }

  std::string format() const;
  static Multiset parse(const CoeffGroup& g, const std::string& text);

  bool operator==(const Multiset& o) const { return g_ == o.g_ && m_ == o.m_; }
  bool operator!=(const Multiset& o) const { return !(*this == o); }

 private:
  CoeffGroup g_;
  std::vector<uint64_t> m_;
};

Multiset multiset_product(const Multiset& a, const Multiset& b);
// every multiplicity of a is at most the one in b
bool multiset_included(const Multiset& a, const Multiset& b);
// exact division of every multiplicity; nullopt if some entry is not divisible
std::optional<Multiset> multiset_divide(const Multiset& a, uint64_t k);

// Per-crossing source colors, as used by the weights.
struct CrossingColors {
  int sign, x, y, z;  // x is the source region (3-cocycles only)
};
std::vector<CrossingColors> crossing_colors(const Analysis& a, const Coloring& arcs, const std::vector<int>* regions);

Multiset state_sum_2(const Diagram& d, const Cocycle& phi);
Multiset state_sum_3(const Diagram& d, const Cocycle& theta);
Multiset state_sum(const Diagram& d, const Cocycle& c);

// Boundary-monochromatic invariant of an oriented tangle.
struct TangleInvariant {
  int arity = 2;
  int n = 0;                   // |X|
  std::vector<Multiset> part;  // arity 2: index x; arity 3: index x*n+s
  Multiset total;
  const Multiset& at(int x) const { return part[x]; }
  const Multiset& at(int x, int s) const { return part[x * n + s]; }
};
TangleInvariant tangle_invariant(const Diagram& t, const Cocycle& c);

// Disjoint union of tangles inside one ball.
struct DisjointUnion {
  bool uniform = true;  // every per-boundary invariant is independent of (x[,s])
  std::string refusal;  // which tangle broke uniformity and where
  std::vector<int> witness;
  Multiset direct;                  // sum over boundary data of the product of the parts
  std::optional<Multiset> formula;  // scaled product of totals, when uniform
  bool agree = false;
  explicit DisjointUnion(const CoeffGroup& g) : direct(g) {}
};
DisjointUnion disjoint_union(const std::vector<TangleInvariant>& parts);
DisjointUnion disjoint_union(const std::vector<Diagram>& tangles, const Cocycle& c);

}  // namespace qcc

// Arc colorings of diagrams by finite quandles, and their region extensions.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "qcc/algebra.hpp"
#include "qcc/diagrams.hpp"

namespace qcc {

using Coloring = std::vector<int>;  // arc id -> element
using ColoringVisitor = std::function<void(const Coloring&)>;

// Every crossing relation holds (and all boundary arcs equal x when given).
bool satisfies(const Analysis& a, const Quandle& q, const Coloring& c, std::optional<int> boundary = {});

// Backtracking with forced-move propagation.
void for_each_coloring_backtrack(const Analysis& a, const Quandle& q, std::optional<int> boundary,
                                 const ColoringVisitor& visit);

// Quandles of the form a*b = t a + (1-t) b over a vector space Z_p^d:
// Alexander quandles and dihedral quandles of prime order.
bool has_linear_form(const Quandle& q);
// Nullspace enumeration. Throws if q has no linear form.
void for_each_coloring_linear(const Analysis& a, const Quandle& q, std::optional<int> boundary,
                              const ColoringVisitor& visit);

// Linear path when available, backtracking otherwise.
void for_each_coloring(const Analysis& a, const Quandle& q, std::optional<int> boundary, const ColoringVisitor& visit);

// Lists come back sorted lexicographically by arc id.
std::vector<Coloring> enumerate_colorings(const Analysis& a, const Quandle& q, std::optional<int> boundary = {});
std::vector<Coloring> solve_linear_colorings(const Analysis& a, const Quandle& q, std::optional<int> boundary = {});

// Colorings of the arcs only; free loops multiply this by |X| each.
uint64_t count_arc_colorings(const Analysis& a, const Quandle& q, std::optional<int> boundary = {});
// Full count including free loops; for tangles the sum over all boundary colors.
uint64_t count_colorings(const Analysis& a, const Quandle& q);
uint64_t loop_factor(const Analysis& a, const Quandle& q);

// Breadth-first region propagation plan rooted at a face.
class RegionExtender {
 public:
  RegionExtender(const Analysis& a, int base_face);
  explicit RegionExtender(const Analysis& a) : RegionExtender(a, a.base_face) {}

  // Fills regions (size num_faces). With check set, every edge is re-verified
  // and std::logic_error is thrown on an inconsistency.
  void extend(const Quandle& q, const Coloring& arcs, int s, std::vector<int>& regions, bool check = false) const;
  std::vector<int> extend(const Quandle& q, const Coloring& arcs, int s) const;

 private:
  struct Step {
    int face, from, arc;
    bool left;  // face lies left of the edge: face = from * arc
  };
  const Analysis* a_;
  int base_;
  std::vector<Step> steps_;
};

}  // namespace qcc

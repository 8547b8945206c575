// Oriented knot and 4-ended tangle diagrams as slot matchings.
//
// Crossing c owns slots 4c..4c+3, ports counterclockwise; ports 0 and 2
// carry the under strand, 1 and 3 the over strand. A tangle adds one more
// vertex (the boundary circle seen from outside) with slots 4n+b, where b
// follows the counterclockwise port order NE, SE, SW, NW.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace qcc {

enum Boundary : int { NE = 0, SE = 1, SW = 2, NW = 3 };
const char* boundary_name(int b);
int parse_boundary_name(const std::string& s);  // -1 if unknown

struct Diagram {
  std::string name;
  std::string variant;  // tangles: e.g. "NWin-SWout"
  int n = 0;
  bool tangle = false;
  std::vector<int> partner;
  // +1: the strand arrives at the slot's vertex, -1: it leaves, 0: not yet oriented
  std::vector<int8_t> flow;
  int loops = 0;  // components with no crossing and no boundary point

  int slots() const { return 4 * n + (tangle ? 4 : 0); }
  int bslot(int b) const { return 4 * n + b; }
  bool oriented() const;
  // needs orientation
  int incoming_under_port(int c) const;
  int sign(int c) const;
  int writhe() const;
};

// Orientation seeds for boundary points: +1 strand enters the tangle, -1 leaves.
using BoundarySeeds = std::array<int, 4>;
// "NWin-SWout", "NW In, SW Out", ...
BoundarySeeds parse_variant(const std::string& text);
std::string format_variant(const BoundarySeeds& s);
// Orientation of every boundary point of an oriented tangle.
BoundarySeeds boundary_orientation(const Diagram& t);

// Propagates existing flows plus seeds; throws on a mismatch. For tangles the
// variant seeds are applied and every boundary strand must end up oriented;
// closed components still unoriented are oriented from their lowest slot.
Diagram orient(Diagram d, const BoundarySeeds& seeds);
Diagram orient_variant(Diagram t, const std::string& variant);
Diagram orient_closed(Diagram d);
Diagram clear_orientation(Diagram d);
Diagram reverse(Diagram d);

Diagram from_braid(int strands, const std::vector<int>& word, const std::string& name = "");
// "braid 3 1 -2 1 -2"
Diagram parse_braid(const std::string& line, const std::string& name = "");

// Extended PD text; see README for the format.
Diagram parse_pd(const std::string& text);
std::string write_pd(const Diagram& d);

Diagram crossing_tangle(int h);  // h=+1 over strand along SW-NE, h=-1 along NW-SE
Diagram zero_tangle();           // arcs NW-NE and SW-SE
Diagram infinity_tangle();       // arcs NW-SW and NE-SE
// R(a1,...,ak): from the infinity tangle, even positions twist at the bottom,
// odd positions at the right, so R(a1,a2) = a2 + 1/a1.
Diagram rational_tangle(const std::vector<int>& a);

Diagram tangle_add(const Diagram& a, const Diagram& b);    // a left of b
Diagram tangle_stack(const Diagram& a, const Diagram& b);  // a above b
Diagram numerator(const Diagram& t);                       // joins NW-NE, SW-SE
Diagram denominator(const Diagram& t);                     // joins NW-SW, NE-SE
Diagram mirror(const Diagram& d);
Diagram rotate(const Diagram& t);  // quarter turn counterclockwise

// Tangle expression: add(a,b) stack(a,b) mirror(a) rot(a) N(a) D(a) R(i,...)
// zero inf, "a+b" for add, a trailing '*' for mirror, other words via lookup.
using TangleLookup = std::function<std::optional<Diagram>(const std::string&)>;
Diagram build_expression(const std::string& text, const TangleLookup& lookup = {});

struct CrossingRel {
  int src, over, dst;  // arc ids, src * over = dst
  int sign;
  int region_corner;  // corner index 4c+k of the source region
};

struct Analysis {
  int n = 0;
  bool tangle = false;
  int loops = 0;
  int num_edges = 0, num_arcs = 0, num_faces = 0;
  std::vector<int> edge_of_slot, tail_slot, head_slot;  // edges
  std::vector<int> arc_of_edge;
  std::vector<CrossingRel> rels;
  std::array<int, 4> boundary_arc{{-1, -1, -1, -1}};
  std::vector<int> face_of_corner;
  std::vector<int> edge_left, edge_right;
  int base_face = 0;
};

// Needs an oriented diagram; checks planarity by the Euler count.
Analysis analyze(const Diagram& d);

}  // namespace qcc

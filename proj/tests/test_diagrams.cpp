#include <stdexcept>

#include "doctest.h"
#include "qcc/diagrams.hpp"

using namespace qcc;

namespace {
bool same_code(const Diagram& a, const Diagram& b) {
  return a.n == b.n && a.tangle == b.tangle && a.partner == b.partner && a.flow == b.flow && a.loops == b.loops;
}
}  // namespace

TEST_CASE("braid closures: trefoil and figure-eight") {
  Diagram t = parse_braid("braid 2 1 1 1", "3_1");
  Analysis a = analyze(t);
  CHECK(t.n == 3);
  CHECK(a.num_arcs == 3);
  CHECK(a.num_faces == 5);
  CHECK(a.num_edges == 6);
  CHECK(t.writhe() == 3);
  Diagram f = parse_braid("braid 3 1 -2 1 -2");
  Analysis b = analyze(f);
  CHECK(b.num_faces == 6);
  CHECK(f.writhe() == 0);
  CHECK(b.n - b.num_edges + b.num_faces == 2);
}

TEST_CASE("each edge side lies on exactly one face") {
  for (const char* w : {"2 1 1 1", "3 1 -2 1 -2", "4 1 1 2 -1 -3 2 -3"}) {
    Analysis a = analyze(parse_braid(std::string("braid ") + w));
    std::vector<int> sides(a.num_faces, 0);
    for (int e = 0; e < a.num_edges; ++e) {
      REQUIRE(a.edge_left[e] >= 0);
      REQUIRE(a.edge_right[e] >= 0);
      ++sides[a.edge_left[e]];
      ++sides[a.edge_right[e]];
    }
    int total = 0;
    for (int s : sides) {
      CHECK(s > 0);
      total += s;
    }
    CHECK(total == 2 * a.num_edges);
  }
}

TEST_CASE("malformed braids are rejected") {
  CHECK_THROWS_AS(parse_braid("braid 2 1 2 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("braid 3 1 0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_braid("x 1"), std::invalid_argument);
}

TEST_CASE("mirror is an involution and negates the writhe") {
  Diagram t = parse_braid("braid 2 1 1 1");
  Diagram m = mirror(t);
  CHECK(m.writhe() == -3);
  // twice mirrored: same crossings, ports turned half way round
  Diagram mm = mirror(m);
  CHECK(mm.n == t.n);
  for (int c = 0; c < t.n; ++c) CHECK(mm.sign(c) == t.sign(c));
  for (int s = 0; s < t.slots(); ++s) {
    auto half = [](int x) { return 4 * (x / 4) + (x % 4 + 2) % 4; };
    CHECK(mm.partner[half(s)] == half(t.partner[s]));
  }
  Diagram inv = parse_braid("braid 2 -1 -1 -1");
  CHECK(analyze(m).num_arcs == analyze(inv).num_arcs);
  CHECK(analyze(m).num_faces == analyze(inv).num_faces);
}

TEST_CASE("PD text round-trips") {
  for (const char* w : {"2 1 1 1", "3 1 -2 1 -2", "4 1 1 -2 1 3 -2 -2 -2 3"}) {
    Diagram d = parse_braid(std::string("braid ") + w, "k");
    Diagram back = parse_pd(write_pd(d));
    CHECK(write_pd(back) == write_pd(d));
    CHECK(same_code(back, d));
  }
  Diagram t = orient_variant(build_expression("add(R(3),R(-3))"), "NWin-SWout");
  t.name = "t63";
  Diagram back = parse_pd(write_pd(t));
  CHECK(back.tangle);
  CHECK(write_pd(back) == write_pd(t));
  CHECK_THROWS_AS(parse_pd("knot k\nX 1 2 3\n"), std::invalid_argument);
}

TEST_CASE("orientation variants") {
  BoundarySeeds s = parse_variant("NWin-SWout");
  CHECK(s == parse_variant("NW In, SW Out"));
  CHECK(format_variant(s) == "NWin-SWout");
  CHECK_THROWS_AS(parse_variant("NWup"), std::invalid_argument);
  Diagram t = build_expression("add(R(-3),R(-3))");
  Diagram o = orient_variant(t, "NWin-SWout");
  CHECK(o.oriented());
  // the strands run NW-NE and SW-SE, so NW in forces NE out
  CHECK_THROWS_AS(orient_variant(t, "NWin-NEin"), std::invalid_argument);
  // closing T + R(1) needs the SW end pointing in
  CHECK_THROWS(numerator(tangle_add(orient_variant(t, "NWin-SWout"), rational_tangle({1}))));
  Diagram closed = numerator(tangle_add(orient_variant(t, "NWin-SWin"), rational_tangle({1})));
  CHECK_FALSE(closed.tangle);
  CHECK(closed.oriented());
}

TEST_CASE("tangle sums and closures") {
  Diagram a = rational_tangle({3}), b = rational_tangle({-3});
  Diagram s = tangle_add(a, b);
  CHECK(s.n == 6);
  CHECK(tangle_add(a, zero_tangle()).n == 3);
  CHECK(tangle_stack(a, b).n == 6);
  // associativity up to crossing count and analysis shape
  Diagram c = rational_tangle({2});
  Diagram l = tangle_add(tangle_add(a, b), c), r = tangle_add(a, tangle_add(b, c));
  CHECK(l.n == r.n);
  CHECK(analyze(orient_closed(numerator(l))).num_faces == analyze(orient_closed(numerator(r))).num_faces);
  Diagram n = orient_closed(numerator(zero_tangle()));
  CHECK(n.loops == 2);
  Diagram k = orient_closed(numerator(rational_tangle({3})));
  CHECK(analyze(k).num_arcs == 3);
}

TEST_CASE("quarter turns and expressions") {
  Diagram t = build_expression("add(R(3),R(-3))");
  Diagram r = rotate(rotate(rotate(rotate(t))));
  CHECK(r.n == t.n);
  CHECK(same_code(clear_orientation(r), clear_orientation(t)));
  Diagram e = build_expression("N(R(2,2))");
  CHECK_FALSE(e.tangle);
  CHECK(e.n == 4);
  CHECK_THROWS_AS(build_expression("add(R(3)"), std::invalid_argument);
  CHECK_THROWS_AS(build_expression("nosuch"), std::invalid_argument);
}

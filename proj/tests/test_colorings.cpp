#include <algorithm>

#include <stdexcept>

#include "doctest.h"
#include "qcc/catalog.hpp"
#include "qcc/colorings.hpp"

using namespace qcc;

namespace {

// every assignment of colors to arcs, checked against the relations
uint64_t brute_force_count(const Analysis& a, const Quandle& q, std::optional<int> boundary = {}) {
  int n = q.size(), arcs = a.num_arcs;
  std::vector<int> c(arcs, 0);
  uint64_t count = 0;
  while (true) {
    if (satisfies(a, q, c, boundary)) ++count;
    int i = 0;
    while (i < arcs && ++c[i] == n) c[i++] = 0;
    if (i == arcs) break;
  }
  return count;
}

std::vector<std::string> quandles() {
  return {"dihedral:3", "dihedral:5", "dihedral:7", "alexander:2:t^2+t+1", "alexander:3:t^2-t+1"};
}

}  // namespace

TEST_CASE("trefoil and figure-eight counts against brute force") {
  Analysis t = analyze(parse_braid("braid 2 1 1 1"));
  Analysis f = analyze(parse_braid("braid 3 1 -2 1 -2"));
  auto r3 = make_dihedral(3);
  CHECK(brute_force_count(t, *r3) == 9);
  CHECK(count_arc_colorings(t, *r3) == 9);
  CHECK(count_arc_colorings(f, *r3) == 3);
  CHECK(count_arc_colorings(f, *make_dihedral(5)) == 25);
  CHECK(count_arc_colorings(t, *parse_quandle_spec("alexander:2:t^2+t+1")) == 16);
  CHECK(count_arc_colorings(t, *parse_quandle_spec("alexander:3:t^2-t+1")) == 81);
  CHECK(count_arc_colorings(t, *make_dihedral(4)) == 4);
}

TEST_CASE("linear solver equals backtracking on every bundled knot") {
  KnotTable kt = load_knot_table();
  for (const auto& spec : quandles()) {
    auto q = parse_quandle_spec(spec);
    REQUIRE(has_linear_form(*q));
    for (const auto* e : kt.base()) {
      CAPTURE(spec);
      CAPTURE(e->name);
      Analysis a = analyze(e->diagram);
      auto lin = solve_linear_colorings(a, *q);
      auto bt = enumerate_colorings(a, *q);
      CHECK(lin == bt);
      for (const auto& c : lin) CHECK(satisfies(a, *q, c));
      CHECK(lin.size() >= static_cast<size_t>(q->size()));
    }
  }
}

TEST_CASE("backtracking equals brute force on small knots") {
  KnotTable kt = load_knot_table();
  auto r3 = make_dihedral(3);
  for (const char* name : {"3_1", "4_1", "5_1", "5_2", "6_1", "6_2", "6_3"}) {
    Analysis a = analyze(kt.find(name)->diagram);
    if (a.num_arcs > 10) continue;
    CHECK(brute_force_count(a, *r3) == enumerate_colorings(a, *r3).size());
  }
}

TEST_CASE("tangle boundary colorings") {
  TangleTable tt = load_tangle_table();
  Diagram t63 = tt.oriented("6_3:NWin-SWout");
  Analysis a = analyze(t63);
  auto r3 = make_dihedral(3);
  uint64_t first = count_arc_colorings(a, *r3, 0);
  for (int x = 0; x < 3; ++x) {
    CHECK(count_arc_colorings(a, *r3, x) == first);
    CHECK(brute_force_count(a, *r3, x) == first);
    CHECK(enumerate_colorings(a, *r3, x) == solve_linear_colorings(a, *r3, x));
  }
  Analysis z = analyze(orient_variant(zero_tangle(), "NWin-SWout"));
  for (const auto& spec : quandles()) {
    auto q = parse_quandle_spec(spec);
    for (int x = 0; x < q->size(); ++x) CHECK(count_arc_colorings(z, *q, x) == 1);
  }
  CHECK(count_colorings(analyze(tt.oriented("6_2:NWin-SWout")), *r3) == 9);
}

TEST_CASE("closures with free loops") {
  auto r3 = make_dihedral(3);
  Analysis two = analyze(orient_closed(numerator(zero_tangle())));
  CHECK(count_colorings(two, *r3) == 9);
  Analysis kink = analyze(orient_closed(numerator(rational_tangle({1}))));
  CHECK(count_colorings(kink, *make_dihedral(5)) == 5);
}

TEST_CASE("Reidemeister spot checks keep coloring counts") {
  Analysis a = analyze(parse_braid("braid 2 1 1 1"));
  Analysis b = analyze(parse_braid("braid 2 1 1 1 1 -1"));   // R2 pair
  Analysis c = analyze(parse_braid("braid 3 1 1 1 2"));      // R1 kink via a stabilization
  for (const auto& spec : quandles()) {
    auto q = parse_quandle_spec(spec);
    uint64_t n = count_colorings(a, *q);
    CHECK(count_colorings(b, *q) == n);
    CHECK(count_colorings(c, *q) == n);
  }
}

TEST_CASE("region extensions exist and are unique") {
  KnotTable kt = load_knot_table();
  for (const auto& spec : {"dihedral:3", "alexander:2:t^2+t+1"}) {
    auto q = parse_quandle_spec(spec);
    for (const char* name : {"3_1", "4_1", "7_4", "8_18", "9_40"}) {
      Analysis a = analyze(kt.find(name)->diagram);
      RegionExtender ext(a);
      uint64_t pairs = 0;
      for_each_coloring(a, *q, std::nullopt, [&](const Coloring& col) {
        for (int s = 0; s < q->size(); ++s) {
          std::vector<int> regions(a.num_faces, -1);
          ext.extend(*q, col, s, regions, true);
          CHECK(regions[a.base_face] == s);
          CHECK(std::count(regions.begin(), regions.end(), -1) == 0);
          ++pairs;
        }
      });
      CHECK(pairs == count_arc_colorings(a, *q) * q->size());
    }
  }
}

TEST_CASE("constant coloring steps by the direct rule") {
  Analysis a = analyze(parse_braid("braid 2 1 1 1"));
  auto q = make_dihedral(3);
  Coloring c(a.num_arcs, 1);
  auto regions = RegionExtender(a).extend(*q, c, 0);
  for (int e = 0; e < a.num_edges; ++e) CHECK(regions[a.edge_left[e]] == q->star(regions[a.edge_right[e]], 1));
}

#include <random>

#include <stdexcept>

#include "doctest.h"
#include "qcc/catalog.hpp"
#include "qcc/invariants.hpp"

using namespace qcc;

namespace {

CocyclePtr cocycle(const std::string& q, const std::string& c) { return parse_cocycle_spec(parse_quandle_spec(q), c); }

const char* A2 = "alexander:2:t^2+t+1";

Multiset random_multiset(std::mt19937& rng, const CoeffGroup& g, int max) {
  Multiset m(g);
  for (int a = 0; a < g.size(); ++a) m.add(a, rng() % (max + 1));
  return m;
}

}  // namespace

TEST_CASE("trefoil values") {
  Diagram t = parse_braid("braid 2 1 1 1");
  CHECK(state_sum(t, *cocycle(A2, "poly2:(x-y)^2*y")).format() == "4 + 12u^(t+1)");
  CHECK(state_sum(t, *cocycle(A2, "poly3:(x-y)*(y-z)^2")).format() == "16 + 48u^t");
  auto p3 = cocycle("alexander:3:t^2-t+1", "poly3:(x-y)*(y-z)^3");
  CHECK(state_sum(t, *p3).format() == "243 + 486u^(2t+2)");
  CHECK(state_sum(mirror(t), *p3).format() == "243 + 486u^(t+1)");
  auto p5 = cocycle("alexander:5:t^2-t+1", "poly3:(x-y)*(y-z)^5");
  Multiset want = Multiset::parse(p5->group(), "625 + 3750u^(t+3) + 3750u^(4t+2) + 3750u^(3t+4) + 3750u^(2t+1)");
  CHECK(state_sum(t, *p5) == want);
  CHECK(state_sum(t, *cocycle("alexander:7:t^2-t+1", "poly3:(x-y)*(y-z)^7")).format() == "117649");
}

TEST_CASE("unknot and zero cocycles") {
  Diagram u = orient_closed(numerator(rational_tangle({1})));
  auto f = cocycle(A2, "poly2:(x-y)^2*y");
  CHECK(state_sum(u, *f).format() == "4");
  auto q = make_dihedral(5);
  auto zero = make_table_cocycle(q, CoeffGroup::cyclic(5), 2, std::vector<int>(25, 0), "zero");
  Diagram fig8 = parse_braid("braid 3 1 -2 1 -2");
  CHECK(state_sum(fig8, *zero).format() == "25");
}

TEST_CASE("totals count colorings, and constants give at least |X| zeros") {
  KnotTable kt = load_knot_table();
  std::vector<CocyclePtr> cs = {cocycle(A2, "poly2:(x-y)^2*y"), cocycle(A2, "poly3:(x-y)*(y-z)^2"),
                                cocycle("dihedral:3", "mochizuki:3"), cocycle("dihedral:5", "mochizuki:5")};
  for (const char* name : {"3_1", "4_1", "5_1", "6_1", "7_4", "8_18", "9_40"}) {
    const Diagram& d = kt.find(name)->diagram;
    Analysis a = analyze(d);
    for (const auto& c : cs) {
      Multiset m = state_sum(d, *c);
      uint64_t col = count_colorings(a, c->quandle());
      uint64_t n = c->quandle().size();
      CHECK(m.total() == col * (c->arity() == 3 ? n : 1));
      CHECK(m.count(0) >= n);
    }
  }
}

TEST_CASE("Reidemeister spot checks keep invariants") {
  Diagram a = parse_braid("braid 2 1 1 1"), b = parse_braid("braid 2 1 -1 1 1 1"), c = parse_braid("braid 3 1 1 1 2");
  for (auto [q, cs] : {std::pair{A2, "poly2:(x-y)^2*y"}, std::pair{A2, "poly3:(x-y)*(y-z)^2"},
                       std::pair{"alexander:3:t^2-t+1", "poly3:(x-y)*(y-z)^3"}, std::pair{"dihedral:3", "mochizuki:3"},
                       std::pair{"dihedral:5", "mochizuki:5"}}) {
    auto co = cocycle(q, cs);
    Multiset m = state_sum(a, *co);
    CHECK(state_sum(b, *co) == m);
    CHECK(state_sum(c, *co) == m);
  }
}

TEST_CASE("state sums through the linear solver match backtracking") {
  // same invariant whether the colorings come from enumeration or the solver
  Diagram d = parse_braid("braid 3 1 1 1 -2 1 -2");
  auto c = cocycle("alexander:3:t^2-t+1", "poly3:(x-y)*(y-z)^3");
  Analysis a = analyze(d);
  Multiset slow(c->group());
  RegionExtender ext(a);
  for (const auto& col : enumerate_colorings(a, c->quandle())) {
    for (int s = 0; s < c->quandle().size(); ++s) {
      auto regions = ext.extend(c->quandle(), col, s);
      int w = 0;
      for (const auto& cc : crossing_colors(a, col, &regions))
        w = c->group().add(w, c->group().scale(cc.sign, (*c)(cc.x, cc.y, cc.z)));
      slow.add(w);
    }
  }
  CHECK(state_sum(d, *c) == slow);
}

TEST_CASE("tangle invariants") {
  TangleTable tt = load_tangle_table();
  CHECK(tangle_invariant(tt.oriented("6_2:NWin-SWout"), *cocycle(A2, "poly3:(x-y)*(y-z)^2")).total.format() == "64");
  CHECK(tangle_invariant(tt.oriented("6_2:NWin-SWout"), *cocycle("dihedral:3", "mochizuki:3")).total.format() ==
        "9 + 18u");
  CHECK(tangle_invariant(tt.oriented("6_3:NWin-SWout"), *cocycle("alexander:5:t^2-t+1", "poly3:(x-y)*(y-z)^5"))
            .total.format() == "15625");
  CHECK(tangle_invariant(tt.oriented("6_3:NWin-SWout"), *cocycle("dihedral:3", "mochizuki:3")).total.format() == "27");
  auto f = cocycle(A2, "poly2:(x-y)^2*y");
  CHECK(tangle_invariant(tt.oriented("6_2:NWin-SWout"), *f).total.format() == "16");
  TangleInvariant t75 = tangle_invariant(tt.oriented("7_5:NWin-NEin"), *f);
  CHECK(t75.total.format() == "4 + 12u^(t+1)");
  for (int x = 0; x < 4; ++x) CHECK(t75.at(x).format() == "1 + 3u^(t+1)");
  Diagram z = orient_variant(zero_tangle(), "NWin-SWout");
  CHECK(tangle_invariant(z, *f).total.format() == "4");
}

TEST_CASE("multiset arithmetic") {
  auto f = cocycle(A2, "poly2:(x-y)^2*y");
  const CoeffGroup& g = f->group();
  Multiset a = Multiset::parse(g, "4 + 12u^(t+1)");
  Multiset one = Multiset::parse(g, "1");
  CHECK(multiset_product(a, one) == a);
  CHECK(multiset_product(a, a).format() == "160 + 96u^(t+1)");
  auto z3 = CoeffGroup::cyclic(3);
  Multiset b = Multiset::parse(z3, "1 + 2u");
  CHECK(multiset_product(b, b).format() == "1 + 4u + 4u^2");
  CHECK(Multiset(g).format() == "0");
  CHECK(multiset_divide(Multiset::parse(g, "160 + 96u^(t+1)"), 4)->format() == "40 + 24u^(t+1)");
  CHECK_FALSE(multiset_divide(Multiset::parse(g, "3 + 4u"), 2));
  CHECK_THROWS_AS(Multiset::parse(g, "3 + 4u^(t+"), std::invalid_argument);

  std::mt19937 rng(3);
  auto z5 = CoeffGroup::cyclic(5);
  for (int i = 0; i < 100; ++i) {
    Multiset x = random_multiset(rng, z5, 6), y = random_multiset(rng, z5, 6), w = random_multiset(rng, z5, 6);
    CHECK(Multiset::parse(z5, x.format()) == x);
    CHECK(multiset_product(x, y).total() == x.total() * y.total());
    CHECK(multiset_product(x, y) == multiset_product(y, x));
    CHECK(multiset_product(multiset_product(x, y), w) == multiset_product(x, multiset_product(y, w)));
  }
}

TEST_CASE("disjoint unions") {
  TangleTable tt = load_tangle_table();
  auto f = cocycle(A2, "poly2:(x-y)^2*y");
  auto r3 = cocycle("dihedral:3", "mochizuki:3");
  auto t62 = tt.oriented("6_2:NWin-SWout"), t63 = tt.oriented("6_3:NWin-SWout"), t75 = tt.oriented("7_5:NWin-NEin");
  struct Case {
    std::vector<Diagram> ts;
    CocyclePtr c;
    std::string want;
  };
  for (const auto& cs : {Case{{t62, t62}, f, "64"}, Case{{t75, t75}, f, "40 + 24u^(t+1)"},
                         Case{{t62, t75}, f, "16 + 48u^(t+1)"}, Case{{t62, t62}, r3, "9 + 36u + 36u^2"},
                         Case{{t63, t63}, r3, "81"}, Case{{t62, t63, t75}, f, ""}}) {
    DisjointUnion du = disjoint_union(cs.ts, *cs.c);
    CHECK(du.uniform);
    CHECK(du.agree);
    REQUIRE(du.formula);
    CHECK(*du.formula == du.direct);
    if (!cs.want.empty()) CHECK(du.direct.format() == cs.want);
  }
}

TEST_CASE("a non-uniform part is refused with a witness") {
  auto z2 = CoeffGroup::cyclic(2);
  TangleInvariant a{2, 2, {}, Multiset(z2)}, b{2, 2, {}, Multiset(z2)};
  a.arity = b.arity = 2;
  a.n = b.n = 2;
  a.part = {Multiset::parse(z2, "1"), Multiset::parse(z2, "u")};
  a.total = Multiset::parse(z2, "1 + u");
  b.part = {Multiset::parse(z2, "1"), Multiset::parse(z2, "1")};
  b.total = Multiset::parse(z2, "2");
  DisjointUnion du = disjoint_union(std::vector<TangleInvariant>{a, b});
  CHECK_FALSE(du.uniform);
  CHECK_FALSE(du.refusal.empty());
  CHECK_FALSE(du.formula);
  CHECK(du.direct.format() == "1 + u");
}

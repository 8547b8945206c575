#include <algorithm>
#include <string>

#include <stdexcept>

#include "doctest.h"
#include "qcc/qcc.h"

namespace {

// takes ownership of a returned string
std::string take(char* s) {
  std::string out = s ? s : "";
  qcc_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("quandles and cocycles through the C interface") {
  qcc_quandle* q = nullptr;
  REQUIRE(qcc_quandle_parse("dihedral:5", &q) == QCC_OK);
  CHECK(qcc_quandle_size(q) == 5);
  char* s = nullptr;
  REQUIRE(qcc_quandle_spec(q, &s) == QCC_OK);
  CHECK(take(s) == "dihedral:5");
  REQUIRE(qcc_quandle_verify(q, &s) == QCC_OK);
  qcc_string_free(s);

  qcc_cocycle* c = nullptr;
  REQUIRE(qcc_cocycle_parse(q, "mochizuki:5", &c) == QCC_OK);
  CHECK(qcc_cocycle_arity(c) == 3);
  REQUIRE(qcc_cocycle_verify(c, &s) == QCC_OK);
  qcc_string_free(s);
  qcc_cocycle_free(c);

  CHECK(qcc_cocycle_parse(q, "poly3:x", &c) != QCC_OK);  // needs an Alexander quandle
  CHECK(std::string(qcc_last_error()).size() > 0);
  qcc_quandle_free(q);

  qcc_quandle* a3 = nullptr;
  REQUIRE(qcc_quandle_parse("alexander:3:t^2-t+1", &a3) == QCC_OK);
  c = nullptr;
  CHECK(qcc_cocycle_parse(a3, "poly3:(x-y)*(y-z)^2", &c) == QCC_ERR_VERIFY);
  CHECK(c == nullptr);
  qcc_quandle_free(a3);

  CHECK(qcc_quandle_parse("dihedral:zero", &q) == QCC_ERR_PARSE);
  CHECK(qcc_quandle_from_cayley("quandle broken 2\n1 0\n1 1\n", &q) == QCC_ERR_VERIFY);
  CHECK(qcc_quandle_parse(nullptr, &q) == QCC_ERR_ARGUMENT);
  CHECK(std::string(qcc_status_name(QCC_ERR_REFUSED)) == "refused");
}

TEST_CASE("diagrams, colorings and invariants") {
  qcc_diagram* k = nullptr;
  REQUIRE(qcc_diagram_from_braid(2, "1 1 1", &k) == QCC_OK);
  CHECK(qcc_diagram_crossings(k) == 3);
  CHECK(qcc_diagram_writhe(k) == 3);
  CHECK_FALSE(qcc_diagram_is_tangle(k));

  qcc_quandle* q = nullptr;
  REQUIRE(qcc_quandle_parse("alexander:2:t^2+t+1", &q) == QCC_OK);
  uint64_t n = 0;
  REQUIRE(qcc_count_colorings(k, q, &n) == QCC_OK);
  CHECK(n == 16);
  qcc_cocycle* f = nullptr;
  REQUIRE(qcc_cocycle_parse(q, "poly2:(x-y)^2*y", &f) == QCC_OK);
  char* s = nullptr;
  REQUIRE(qcc_invariant(k, f, &s) == QCC_OK);
  CHECK(take(s) == "4 + 12u^(t+1)");

  int inc = -1;
  REQUIRE(qcc_multiset_included("4", "4 + 12u^(t+1)", f, &inc) == QCC_OK);
  CHECK(inc == 1);
  REQUIRE(qcc_multiset_included("5", "4 + 12u^(t+1)", f, &inc) == QCC_OK);
  CHECK(inc == 0);
  CHECK(qcc_multiset_included("5 + ", "4", f, &inc) == QCC_ERR_PARSE);

  REQUIRE(qcc_diagram_write_pd(k, &s) == QCC_OK);
  std::string pd = take(s);
  qcc_diagram* back = nullptr;
  REQUIRE(qcc_diagram_parse_pd(pd.c_str(), &back) == QCC_OK);
  REQUIRE(qcc_invariant(back, f, &s) == QCC_OK);
  CHECK(take(s) == "4 + 12u^(t+1)");
  qcc_diagram_free(back);

  qcc_diagram* m = nullptr;
  REQUIRE(qcc_diagram_mirror(k, &m) == QCC_OK);
  CHECK(qcc_diagram_writhe(m) == -3);
  qcc_diagram_free(m);

  qcc_quandle* r3 = nullptr;
  REQUIRE(qcc_quandle_parse("dihedral:3", &r3) == QCC_OK);
  REQUIRE(qcc_list_colorings(k, r3, &s) == QCC_OK);
  std::string list = take(s);
  CHECK(std::count(list.begin(), list.end(), '\n') == 9);

  CHECK(qcc_diagram_from_braid(2, "1 2", &m) == QCC_ERR_PARSE);
  qcc_quandle_free(r3);
  qcc_cocycle_free(f);
  qcc_quandle_free(q);
  qcc_diagram_free(k);
}

TEST_CASE("tables, tangles and refusals") {
  qcc_knot_table* kt = nullptr;
  REQUIRE(qcc_knot_table_load(nullptr, &kt) == QCC_OK);
  CHECK(qcc_knot_table_size(kt) == 162);
  CHECK(std::string(qcc_knot_table_name(kt, 0)) == "3_1");
  CHECK(qcc_knot_table_name(kt, 100000) == nullptr);
  qcc_diagram* d = nullptr;
  CHECK(qcc_knot_table_get(kt, "12_1", &d) == QCC_ERR_NOT_FOUND);

  qcc_tangle_table* tt = nullptr;
  REQUIRE(qcc_tangle_table_load(nullptr, 1, &tt) == QCC_OK);
  qcc_diagram* t = nullptr;
  REQUIRE(qcc_tangle_table_get(tt, "6_3:NWin-SWout", &t) == QCC_OK);
  CHECK(qcc_diagram_is_tangle(t));
  char* s = nullptr;
  REQUIRE(qcc_diagram_variant(t, &s) == QCC_OK);
  CHECK(take(s) == "NWin-SWout");

  qcc_quandle* q = nullptr;
  qcc_cocycle* c = nullptr;
  REQUIRE(qcc_quandle_parse("dihedral:3", &q) == QCC_OK);
  REQUIRE(qcc_cocycle_parse(q, "mochizuki:3", &c) == QCC_OK);
  char* detail = nullptr;
  REQUIRE(qcc_tangle_invariant(t, c, &s, &detail) == QCC_OK);
  CHECK(take(s) == "27");
  CHECK(take(detail).size() > 0);

  const qcc_diagram* parts[] = {t, t};
  REQUIRE(qcc_disjoint_union(parts, 2, c, &s, nullptr) == QCC_OK);
  CHECK(take(s) == "81");

  qcc_scan_options opt{0, 2, 0, nullptr};
  qcc_scan_report* r = nullptr;
  REQUIRE(qcc_scan(t, kt, "prop3", &opt, &r) == QCC_OK);
  CHECK(qcc_scan_report_spec_count(r) == 2);
  REQUIRE(qcc_scan_report_open(r, -1, &s) == QCC_OK);
  CHECK(take(s) == "8_10, 8_20, 9_24");
  REQUIRE(qcc_scan_report_text(r, 0, &s) == QCC_OK);
  CHECK(take(s).find("May embed in: 8_10, 8_20, 9_24") != std::string::npos);
  CHECK(qcc_scan_report_text(r, 7, &s) == QCC_ERR_ARGUMENT);
  qcc_scan_report_free(r);

  qcc_diagram* k = nullptr;
  REQUIRE(qcc_knot_table_get(kt, "4_1", &k) == QCC_OK);
  int excluded = -1;
  REQUIRE(qcc_obstruct(t, k, "prop3", &opt, &excluded, &s) == QCC_OK);
  CHECK(excluded == 1);
  CHECK(take(s).find("excluded") != std::string::npos);
  CHECK(qcc_obstruct(t, k, "nonsense", &opt, &excluded, &s) == QCC_ERR_PARSE);

  qcc_cache* cache = nullptr;
  REQUIRE(qcc_cache_open(nullptr, &cache) == QCC_OK);
  opt.cache = cache;
  REQUIRE(qcc_obstruct(t, k, "prop3", &opt, &excluded, &s) == QCC_OK);
  qcc_string_free(s);
  CHECK(qcc_cache_size(cache) >= 1);
  qcc_cache_free(cache);

  qcc_diagram_free(k);
  qcc_cocycle_free(c);
  qcc_quandle_free(q);
  qcc_diagram_free(t);
  qcc_tangle_table_free(tt);
  qcc_knot_table_free(kt);
}

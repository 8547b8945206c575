// qcc: command-line front end over the C interface.
//
// Exit codes: 0 success, 1 usage or parse error, 2 the input is well formed
// but the answer is negative (refused union, failed verification, a
// reproduction line that does not match).
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcc/qcc.h"

namespace {

struct Exit {
  int code;
  std::string message;
};

int exit_code(qcc_status s) {
  switch (s) {
    case QCC_OK: return 0;
    case QCC_ERR_REFUSED:
    case QCC_ERR_VERIFY: return 2;
    default: return 1;
  }
}

void check(qcc_status s) {
  if (s != QCC_OK) throw Exit{exit_code(s), std::string(qcc_status_name(s)) + ": " + qcc_last_error()};
}

std::string take(char* s) {
  std::string out = s ? s : "";
  qcc_string_free(s);
  return out;
}

template <class T, void (*F)(T*)>
struct Free {
  void operator()(T* p) const { F(p); }
};
using Quandle = std::unique_ptr<qcc_quandle, Free<qcc_quandle, qcc_quandle_free>>;
using Cocycle = std::unique_ptr<qcc_cocycle, Free<qcc_cocycle, qcc_cocycle_free>>;
using Diagram = std::unique_ptr<qcc_diagram, Free<qcc_diagram, qcc_diagram_free>>;
using KnotTable = std::unique_ptr<qcc_knot_table, Free<qcc_knot_table, qcc_knot_table_free>>;
using TangleTable = std::unique_ptr<qcc_tangle_table, Free<qcc_tangle_table, qcc_tangle_table_free>>;
using Cache = std::unique_ptr<qcc_cache, Free<qcc_cache, qcc_cache_free>>;
using Report = std::unique_ptr<qcc_scan_report, Free<qcc_scan_report, qcc_scan_report_free>>;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{1, "cannot open " + path};
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct Globals {
  std::string knot_table, tangle_table, cache_path, format = "text";
  bool strict = false;
  unsigned threads = 0;

  KnotTable knots;
  TangleTable tangles;
  Cache cache;

  qcc_knot_table* knot_tab() {
    if (!knots) {
      qcc_knot_table* t = nullptr;
      check(qcc_knot_table_load(knot_table.empty() ? nullptr : knot_table.c_str(), &t));
      knots.reset(t);
    }
    return knots.get();
  }
  qcc_tangle_table* tangle_tab() {
    if (!tangles) {
      qcc_tangle_table* t = nullptr;
      check(qcc_tangle_table_load(tangle_table.empty() ? nullptr : tangle_table.c_str(), strict, &t));
      tangles.reset(t);
    }
    return tangles.get();
  }
  qcc_cache* cache_handle() {
    if (!cache) {
      std::string p = cache_path;
      if (p.empty())
        if (const char* e = std::getenv("QCC_CACHE")) p = e;
      qcc_cache* c = nullptr;
      check(qcc_cache_open(p.empty() ? nullptr : p.c_str(), &c));
      cache.reset(c);
    }
    return cache.get();
  }
  qcc_scan_options options(bool full, bool mirrors) {
    return qcc_scan_options{full ? 1 : 0, threads, mirrors ? 1 : 0, cache_handle()};
  }
};

// Where a diagram comes from; exactly one source may be set.
struct Source {
  std::string knot, braid, pd, expr, variant;
  std::vector<std::string> tangles;

  void add_knot_options(CLI::App* c) {
    c->add_option("--knot", knot, "knot from the table, e.g. 8_5 or 8_5*");
    c->add_option("--braid", braid, "'<strands> <word>', e.g. '2 1 1 1'");
    c->add_option("--pd", pd, "file with a PD block");
    c->add_option("--expr", expr, "tangle expression, e.g. 'N(6_2+R(1))'");
  }
  void add_tangle_options(CLI::App* c, bool many) {
    auto* o = c->add_option("--tangle", tangles, "tangle from the table, <name>[:<variant>]");
    if (!many) o->expected(1);
    c->add_option("--pd", pd, "file with a PD block");
    c->add_option("--expr", expr, "tangle expression, e.g. 'add(R(3),R(-3))'");
    c->add_option("--variant", variant, "boundary orientation for --pd/--expr, e.g. NWin-SWout");
  }
};

Diagram orient_if_asked(Diagram d, const std::string& variant) {
  if (!variant.empty()) check(qcc_diagram_orient(d.get(), variant.c_str()));
  return d;
}

Diagram from_expr(Globals& g, const std::string& expr) {
  qcc_diagram* d = nullptr;
  check(qcc_diagram_expression(expr.c_str(), g.tangle_tab(), &d));
  Diagram out(d);
  check(qcc_diagram_set_name(out.get(), expr.c_str()));
  return out;
}

Diagram from_pd(const std::string& path) {
  qcc_diagram* d = nullptr;
  check(qcc_diagram_parse_pd(slurp(path).c_str(), &d));
  return Diagram(d);
}

Diagram load_knot(Globals& g, const Source& s) {
  int given = !s.knot.empty() + !s.braid.empty() + !s.pd.empty() + !s.expr.empty();
  if (given != 1) throw Exit{1, "give exactly one of --knot, --braid, --pd, --expr"};
  Diagram d;
  if (!s.knot.empty()) {
    qcc_diagram* p = nullptr;
    check(qcc_knot_table_get(g.knot_tab(), s.knot.c_str(), &p));
    d.reset(p);
  } else if (!s.braid.empty()) {
    std::istringstream is(s.braid);
    int strands = 0;
    std::string word;
    if (!(is >> strands)) throw Exit{1, "--braid needs '<strands> <word>'"};
    std::getline(is, word);
    qcc_diagram* p = nullptr;
    check(qcc_diagram_from_braid(strands, word.c_str(), &p));
    d.reset(p);
    check(qcc_diagram_set_name(d.get(), ("braid " + s.braid).c_str()));
  } else if (!s.pd.empty()) {
    d = from_pd(s.pd);
  } else {
    d = from_expr(g, s.expr);
  }
  if (qcc_diagram_is_tangle(d.get())) throw Exit{1, "expected a closed diagram, got a tangle"};
  return d;
}

Diagram load_tangle_spec(Globals& g, const std::string& spec) {
  qcc_diagram* p = nullptr;
  check(qcc_tangle_table_get(g.tangle_tab(), spec.c_str(), &p));
  return Diagram(p);
}

std::vector<Diagram> load_tangles(Globals& g, const Source& s) {
  std::vector<Diagram> out;
  for (const auto& t : s.tangles) out.push_back(load_tangle_spec(g, t));
  if (!s.pd.empty()) out.push_back(orient_if_asked(from_pd(s.pd), s.variant));
  if (!s.expr.empty()) out.push_back(orient_if_asked(from_expr(g, s.expr), s.variant));
  if (out.empty()) throw Exit{1, "no tangle given (use --tangle, --pd or --expr)"};
  for (const auto& d : out)
    if (!qcc_diagram_is_tangle(d.get())) throw Exit{1, "expected a tangle, got a closed diagram"};
  return out;
}

Diagram load_one_tangle(Globals& g, const Source& s) {
  auto v = load_tangles(g, s);
  if (v.size() != 1) throw Exit{1, "expected exactly one tangle"};
  return std::move(v[0]);
}

Quandle load_quandle(const std::string& spec, const std::string& cayley_file) {
  qcc_quandle* q = nullptr;
  if (!cayley_file.empty())
    check(qcc_quandle_from_cayley(slurp(cayley_file).c_str(), &q));
  else if (!spec.empty())
    check(qcc_quandle_parse(spec.c_str(), &q));
  else
    throw Exit{1, "give --quandle or --cayley"};
  return Quandle(q);
}

Cocycle load_cocycle(const Quandle& q, const std::string& spec, const std::string& table_file) {
  qcc_cocycle* c = nullptr;
  if (!table_file.empty())
    check(qcc_cocycle_from_table(q.get(), slurp(table_file).c_str(), &c));
  else if (!spec.empty())
    check(qcc_cocycle_parse(q.get(), spec.c_str(), &c));
  else
    throw Exit{1, "give --cocycle or --cocycle-table"};
  return Cocycle(c);
}

std::vector<const qcc_diagram*> raw(const std::vector<Diagram>& v) {
  std::vector<const qcc_diagram*> out;
  for (const auto& d : v) out.push_back(d.get());
  return out;
}

int run(int argc, char** argv) {
  CLI::App app{"quandle cocycle invariants of knots and tangles, and tangle embedding obstructions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--table", g.knot_table, "knot table file (default: bundled knots9.txt)");
  app.add_option("--tangles", g.tangle_table, "tangle table file (default: bundled tangles.txt)");
  app.add_flag("--strict", g.strict, "reject a tangle table whose colors lines disagree with computed colorings");
  app.add_option("--cache", g.cache_path, "invariant cache file (default: $QCC_CACHE, else memory only)");
  app.add_option("--threads", g.threads, "scan workers (default: available parallelism)");
  app.add_option("--format", g.format, "scan output: text or lines")->check(CLI::IsMember({"text", "lines"}));

  std::string qspec, cayley, cspec, ctable, specs, suite, knot_expr;
  bool show = false, tables = false, list = false, detail = false, full = false, mirrors = false;
  Source src;

  auto add_cocycle_options = [&](CLI::App* sub) {
    auto* qo = sub->add_option("--quandle", qspec, "quandle spec");
    auto* co = sub->add_option("--cayley", cayley, "Cayley table file");
    qo->excludes(co);
    auto* cs = sub->add_option("--cocycle", cspec, "cocycle spec");
    auto* ct = sub->add_option("--cocycle-table", ctable, "cocycle table file");
    cs->excludes(ct);
  };

  auto* verify = app.add_subcommand("verify", "check quandle axioms, the cocycle condition, or the tangle table");
  verify->add_option("--quandle", qspec, "quandle spec");
  verify->add_option("--cayley", cayley, "Cayley table file");
  verify->add_option("--cocycle", cspec, "cocycle spec");
  verify->add_option("--cocycle-table", ctable, "cocycle table file");
  verify->add_flag("--show", show, "print the operation and cocycle tables");
  verify->add_flag("--tables", tables, "cross-check the tangle table's colors lines");

  auto* color = app.add_subcommand("color", "count (or list) quandle colorings");
  src.add_knot_options(color);
  color->add_option("--tangle", src.tangles, "tangle from the table");
  color->add_option("--variant", src.variant, "boundary orientation for a tangle --pd/--expr");
  color->add_option("--quandle", qspec, "quandle spec");
  color->add_option("--cayley", cayley, "Cayley table file");
  color->add_flag("--list", list, "print every coloring");

  auto* inv = app.add_subcommand("invariant", "cocycle invariant of a knot");
  src.add_knot_options(inv);
  add_cocycle_options(inv);

  auto* tinv = app.add_subcommand("tangle-invariant", "boundary-monochromatic invariant of an oriented tangle");
  src.add_tangle_options(tinv, false);
  add_cocycle_options(tinv);
  tinv->add_flag("--detail", detail, "print the value for each boundary color");

  auto* disj = app.add_subcommand("disjoint", "invariant of a disjoint union of tangles");
  src.add_tangle_options(disj, true);
  add_cocycle_options(disj);
  disj->add_flag("--detail", detail, "print the product formula next to the direct sum");

  auto* obs = app.add_subcommand("obstruct", "test one tangle against one knot");
  src.add_tangle_options(obs, false);
  obs->add_option("--knot", src.knot, "knot from the table");
  obs->add_option("--braid", src.braid, "'<strands> <word>'");
  obs->add_option("--knot-expr", knot_expr, "closure expression for the knot");
  obs->add_option("--specs", specs, "named set or comma list of quandle/cocycle")->required();
  obs->add_flag("--full", full, "evaluate every spec");

  auto* scan = app.add_subcommand("scan", "test a tangle (or a union of tangles) against the knot table");
  src.add_tangle_options(scan, true);
  scan->add_option("--specs", specs, "named set or comma list of quandle/cocycle")->required();
  scan->add_flag("--full", full, "evaluate every spec and print each spec's open list");
  scan->add_flag("--mirrors", mirrors, "include mirror images of chiral knots");

  auto* repro = app.add_subcommand("reproduce", "rerun a reproduction suite");
  repro->add_option("suite", suite, "prop2, prop3 or examples5")
      ->required()
      ->check(CLI::IsMember({"prop2", "prop3", "examples5"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (*verify) {
    int failures = 0;
    if (!qspec.empty() || !cayley.empty()) {
      Quandle q = load_quandle(qspec, cayley);
      char* r = nullptr;
      qcc_status s = qcc_quandle_verify(q.get(), &r);
      std::cout << take(r) << "\n";
      check(s);
      if (show) {
        check(qcc_quandle_cayley(q.get(), &r));
        std::cout << take(r);
      }
      if (!cspec.empty() || !ctable.empty()) {
        Cocycle c = load_cocycle(q, cspec, ctable);
        s = qcc_cocycle_verify(c.get(), &r);
        std::cout << take(r) << "\n";
        check(s);
        if (show) {
          check(qcc_cocycle_table(c.get(), &r));
          std::cout << take(r);
        }
      }
    } else if (!tables) {
      throw Exit{1, "verify needs --quandle/--cayley or --tables"};
    }
    if (tables) {
      char* r = nullptr;
      check(qcc_tangle_table_check(g.tangle_tab(), &r, &failures));
      std::cout << take(r) << (failures ? std::to_string(failures) + " mismatches\n" : "tangle table OK\n");
    }
    return failures ? 2 : 0;
  }

  if (*color) {
    Quandle q = load_quandle(qspec, cayley);
    bool tangle = !src.tangles.empty() || !src.variant.empty();
    Diagram d = tangle ? load_one_tangle(g, src) : load_knot(g, src);
    uint64_t n = 0;
    check(qcc_count_colorings(d.get(), q.get(), &n));
    std::cout << n << "\n";
    if (list) {
      char* r = nullptr;
      check(qcc_list_colorings(d.get(), q.get(), &r));
      std::cout << take(r);
    }
    return 0;
  }

  if (*inv) {
    Quandle q = load_quandle(qspec, cayley);
    Cocycle c = load_cocycle(q, cspec, ctable);
    Diagram d = load_knot(g, src);
    char* r = nullptr;
    check(qcc_invariant(d.get(), c.get(), &r));
    std::cout << take(r) << "\n";
    return 0;
  }

  if (*tinv) {
    Quandle q = load_quandle(qspec, cayley);
    Cocycle c = load_cocycle(q, cspec, ctable);
    Diagram d = load_one_tangle(g, src);
    char *r = nullptr, *det = nullptr;
    check(qcc_tangle_invariant(d.get(), c.get(), &r, detail ? &det : nullptr));
    std::cout << take(r) << "\n";
    if (detail) std::cout << take(det);
    return 0;
  }

  if (*disj) {
    Quandle q = load_quandle(qspec, cayley);
    Cocycle c = load_cocycle(q, cspec, ctable);
    auto ds = load_tangles(g, src);
    auto ptrs = raw(ds);
    char *r = nullptr, *det = nullptr;
    check(qcc_disjoint_union(ptrs.data(), ptrs.size(), c.get(), &r, &det));
    std::cout << take(r) << "\n";
    std::string d = take(det);
    if (detail) std::cout << d << "\n";
    return 0;
  }

  if (*obs) {
    Diagram t = load_one_tangle(g, Source{"", "", src.pd, src.expr, src.variant, src.tangles});
    Diagram k = load_knot(g, Source{src.knot, src.braid, "", knot_expr, "", {}});
    qcc_scan_options o = g.options(full, false);
    int excluded = 0;
    char* r = nullptr;
    check(qcc_obstruct(t.get(), k.get(), specs.c_str(), &o, &excluded, &r));
    std::cout << take(r);
    return 0;
  }

  if (*scan) {
    auto ds = load_tangles(g, src);
    qcc_scan_options o = g.options(full, mirrors);
    qcc_scan_report* rep = nullptr;
    if (ds.size() == 1) {
      check(qcc_scan(ds[0].get(), g.knot_tab(), specs.c_str(), &o, &rep));
    } else {
      auto ptrs = raw(ds);
      check(qcc_scan_disjoint(ptrs.data(), ptrs.size(), g.knot_tab(), specs.c_str(), &o, &rep));
    }
    Report report(rep);
    char* r = nullptr;
    check(qcc_scan_report_text(report.get(), g.format == "lines" ? 1 : 0, &r));
    std::cout << take(r);
    if (full && g.format == "text") {
      for (size_t i = 0; i < qcc_scan_report_spec_count(report.get()); ++i) {
        check(qcc_scan_report_open(report.get(), static_cast<int>(i), &r));
        std::cout << "open for spec " << i + 1 << ": " << take(r) << "\n";
      }
    }
    return 0;
  }

  if (*repro) {
    qcc_scan_options o = g.options(false, false);
    char* r = nullptr;
    int failures = 0;
    check(qcc_reproduce(suite.c_str(), nullptr, &o, &r, &failures));
    std::cout << take(r);
    std::cout << (failures ? std::to_string(failures) + " of the checks failed\n" : "all checks passed\n");
    return failures ? 2 : 0;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Exit& e) {
    std::cout.flush();
    std::cerr << "qcc: " << e.message << "\n";
    return e.code;
  }
}

#include "qcc/qcc.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>

#include "qcc/algebra.hpp"
#include "qcc/catalog.hpp"
#include "qcc/cocycles.hpp"
#include "qcc/colorings.hpp"
#include "qcc/diagrams.hpp"
#include "qcc/invariants.hpp"
#include "qcc/obstruction.hpp"
#include "qcc/reproduce.hpp"

struct qcc_quandle {
  qcc::QuandlePtr q;
};
struct qcc_cocycle {
  qcc::CocyclePtr c;
};
struct qcc_diagram {
  qcc::Diagram d;
};
struct qcc_knot_table {
  qcc::KnotTable t;
};
struct qcc_tangle_table {
  qcc::TangleTable t;
};
struct qcc_cache {
  std::unique_ptr<qcc::InvariantCache> c;
};
struct qcc_scan_report {
  qcc::ScanReport r;
};

namespace {

thread_local std::string g_error;

// raised inside the wrappers to pick a status other than the default mapping
struct StatusError : std::runtime_error {
  qcc_status status;
  StatusError(qcc_status s, const std::string& m) : std::runtime_error(m), status(s) {}
};

template <class F>
qcc_status guard(F&& f) {
  g_error.clear();
  try {
    f();
    return QCC_OK;
  } catch (const StatusError& e) {
    g_error = e.what();
    return e.status;
  } catch (const qcc::VerificationError& e) {
    g_error = e.what();
    return QCC_ERR_VERIFY;
  } catch (const std::invalid_argument& e) {
    g_error = e.what();
    return QCC_ERR_PARSE;
  } catch (const std::logic_error& e) {
    g_error = e.what();
    return QCC_ERR_INTERNAL;
  } catch (const std::runtime_error& e) {
    g_error = e.what();
    return QCC_ERR_IO;
  } catch (const std::exception& e) {
    g_error = e.what();
    return QCC_ERR_INTERNAL;
  } catch (...) {
    g_error = "unknown failure";
    return QCC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) throw StatusError(QCC_ERR_ARGUMENT, std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup(s);
}

qcc::ScanOptions scan_options(const qcc_scan_options* o) {
  qcc::ScanOptions s;
  if (o) {
    s.full = o->full != 0;
    s.threads = o->threads;
    s.cache = o->cache ? o->cache->c.get() : nullptr;
  }
  return s;
}

}  // namespace

extern "C" {

const char* qcc_version(void) { return "1.0.0"; }
const char* qcc_last_error(void) { return g_error.c_str(); }
void qcc_string_free(char* s) { std::free(s); }

const char* qcc_status_name(qcc_status s) {
  switch (s) {
    case QCC_OK: return "ok";
    case QCC_ERR_ARGUMENT: return "bad argument";
    case QCC_ERR_PARSE: return "parse error";
    case QCC_ERR_NOT_FOUND: return "not found";
    case QCC_ERR_REFUSED: return "refused";
    case QCC_ERR_VERIFY: return "verification failed";
    case QCC_ERR_IO: return "i/o error";
    case QCC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

qcc_status qcc_quandle_parse(const char* spec, qcc_quandle** out) {
  return guard([&] {
    need(spec, "spec");
    need(out, "out");
    *out = new qcc_quandle{qcc::parse_quandle_spec(spec)};
  });
}

qcc_status qcc_quandle_from_cayley(const char* text, qcc_quandle** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new qcc_quandle{qcc::read_cayley(text)};
  });
}

void qcc_quandle_free(qcc_quandle* q) { delete q; }
int qcc_quandle_size(const qcc_quandle* q) { return q ? q->q->size() : 0; }

qcc_status qcc_quandle_spec(const qcc_quandle* q, char** out) {
  return guard([&] {
    need(q, "quandle");
    put(out, qcc::canonical_quandle_spec(*q->q));
  });
}

qcc_status qcc_quandle_cayley(const qcc_quandle* q, char** out) {
  return guard([&] {
    need(q, "quandle");
    put(out, qcc::write_cayley(*q->q));
  });
}

qcc_status qcc_quandle_verify(const qcc_quandle* q, char** report) {
  return guard([&] {
    need(q, "quandle");
    qcc::AxiomReport r = qcc::verify_quandle_axioms(*q->q);
    std::string text = r.ok() ? "quandle OK: " + q->q->label() + " (" + std::to_string(q->q->size()) + " elements)"
                              : "not a quandle: " + r.witness;
    put(report, text);
    if (!r.ok()) throw StatusError(QCC_ERR_VERIFY, text);
  });
}

qcc_status qcc_cocycle_parse(const qcc_quandle* q, const char* spec, qcc_cocycle** out) {
  return guard([&] {
    need(q, "quandle");
    need(spec, "spec");
    need(out, "out");
    *out = new qcc_cocycle{qcc::parse_cocycle_spec(q->q, spec)};
  });
}

qcc_status qcc_cocycle_from_table(const qcc_quandle* q, const char* text, qcc_cocycle** out) {
  return guard([&] {
    need(q, "quandle");
    need(text, "text");
    need(out, "out");
    *out = new qcc_cocycle{qcc::read_cocycle_table(q->q, text)};
  });
}

void qcc_cocycle_free(qcc_cocycle* c) { delete c; }
int qcc_cocycle_arity(const qcc_cocycle* c) { return c ? c->c->arity() : 0; }

qcc_status qcc_cocycle_verify(const qcc_cocycle* c, char** report) {
  return guard([&] {
    need(c, "cocycle");
    qcc::CocycleReport r = qcc::verify_cocycle(*c->c);
    std::string text = r.ok ? "cocycle OK: " + c->c->label() : "not a cocycle: " + r.message;
    put(report, text);
    if (!r.ok) throw StatusError(QCC_ERR_VERIFY, text);
  });
}

qcc_status qcc_cocycle_table(const qcc_cocycle* c, char** out) {
  return guard([&] {
    need(c, "cocycle");
    put(out, qcc::write_cocycle_table(*c->c));
  });
}

qcc_status qcc_diagram_from_braid(int strands, const char* word, qcc_diagram** out) {
  return guard([&] {
    need(word, "word");
    need(out, "out");
    *out = new qcc_diagram{qcc::parse_braid("braid " + std::to_string(strands) + " " + word)};
  });
}

qcc_status qcc_diagram_parse_pd(const char* text, qcc_diagram** out) {
  return guard([&] {
    need(text, "text");
    need(out, "out");
    *out = new qcc_diagram{qcc::parse_pd(text)};
  });
}

qcc_status qcc_diagram_expression(const char* expr, const qcc_tangle_table* tangles, qcc_diagram** out) {
  return guard([&] {
    need(expr, "expr");
    need(out, "out");
    qcc::TangleLookup lookup;
    if (tangles)
      lookup = [tangles](const std::string& name) -> std::optional<qcc::Diagram> {
        if (const auto* e = tangles->t.find(name)) return e->diagram;
        return std::nullopt;
      };
    qcc::Diagram d = qcc::build_expression(expr, lookup);
    if (!d.tangle && !d.oriented()) d = qcc::orient_closed(d);
    *out = new qcc_diagram{std::move(d)};
  });
}

qcc_status qcc_diagram_clone(const qcc_diagram* d, qcc_diagram** out) {
  return guard([&] {
    need(d, "diagram");
    need(out, "out");
    *out = new qcc_diagram{d->d};
  });
}

void qcc_diagram_free(qcc_diagram* d) { delete d; }
int qcc_diagram_is_tangle(const qcc_diagram* d) { return d && d->d.tangle ? 1 : 0; }
int qcc_diagram_crossings(const qcc_diagram* d) { return d ? d->d.n : 0; }
int qcc_diagram_writhe(const qcc_diagram* d) { return d && d->d.oriented() ? d->d.writhe() : 0; }

qcc_status qcc_diagram_name(const qcc_diagram* d, char** out) {
  return guard([&] {
    need(d, "diagram");
    put(out, d->d.name);
  });
}

qcc_status qcc_diagram_set_name(qcc_diagram* d, const char* name) {
  return guard([&] {
    need(d, "diagram");
    need(name, "name");
    d->d.name = name;
  });
}

qcc_status qcc_diagram_orient(qcc_diagram* d, const char* variant) {
  return guard([&] {
    need(d, "diagram");
    need(variant, "variant");
    if (!d->d.tangle) throw StatusError(QCC_ERR_ARGUMENT, "only tangles take a boundary orientation");
    d->d = qcc::orient_variant(d->d, variant);
  });
}

qcc_status qcc_diagram_variant(const qcc_diagram* d, char** out) {
  return guard([&] {
    need(d, "diagram");
    put(out, d->d.variant);
  });
}

qcc_status qcc_diagram_mirror(const qcc_diagram* d, qcc_diagram** out) {
  return guard([&] {
    need(d, "diagram");
    need(out, "out");
    *out = new qcc_diagram{qcc::mirror(d->d)};
  });
}

qcc_status qcc_diagram_write_pd(const qcc_diagram* d, char** out) {
  return guard([&] {
    need(d, "diagram");
    put(out, qcc::write_pd(d->d));
  });
}

qcc_status qcc_count_colorings(const qcc_diagram* d, const qcc_quandle* q, uint64_t* out) {
  return guard([&] {
    need(d, "diagram");
    need(q, "quandle");
    need(out, "out");
    *out = qcc::count_colorings(qcc::analyze(d->d), *q->q);
  });
}

qcc_status qcc_list_colorings(const qcc_diagram* d, const qcc_quandle* q, char** out) {
  return guard([&] {
    need(d, "diagram");
    need(q, "quandle");
    qcc::Analysis a = qcc::analyze(d->d);
    std::ostringstream os;
    auto emit = [&](const qcc::Coloring& c) {
      for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << q->q->element_name(c[i]);
      os << "\n";
    };
    std::vector<qcc::Coloring> all;
    auto collect = [&](const qcc::Coloring& c) { all.push_back(c); };
    if (d->d.tangle) {
      for (int x = 0; x < q->q->size(); ++x) qcc::for_each_coloring(a, *q->q, x, collect);
    } else {
      qcc::for_each_coloring(a, *q->q, std::nullopt, collect);
    }
    std::sort(all.begin(), all.end());
    for (const auto& c : all) emit(c);
    put(out, os.str());
  });
}

qcc_status qcc_invariant(const qcc_diagram* knot, const qcc_cocycle* c, char** out) {
  return guard([&] {
    need(knot, "diagram");
    need(c, "cocycle");
    if (knot->d.tangle) throw StatusError(QCC_ERR_ARGUMENT, "diagram is a tangle; use the tangle invariant");
    put(out, qcc::state_sum(knot->d, *c->c).format());
  });
}

qcc_status qcc_tangle_invariant(const qcc_diagram* tangle, const qcc_cocycle* c, char** out, char** detail) {
  return guard([&] {
    need(tangle, "diagram");
    need(c, "cocycle");
    if (!tangle->d.tangle) throw StatusError(QCC_ERR_ARGUMENT, "diagram is not a tangle");
    qcc::TangleInvariant ti = qcc::tangle_invariant(tangle->d, *c->c);
    put(out, ti.total.format());
    if (detail) {
      const qcc::Quandle& q = c->c->quandle();
      std::ostringstream os;
      for (int x = 0; x < ti.n; ++x) {
        if (ti.arity == 2) {
          os << "x=" << q.element_name(x) << "\t" << ti.at(x).format() << "\n";
        } else {
          for (int s = 0; s < ti.n; ++s)
            os << "x=" << q.element_name(x) << " s=" << q.element_name(s) << "\t" << ti.at(x, s).format() << "\n";
        }
      }
      *detail = dup(os.str());
    }
  });
}

qcc_status qcc_disjoint_union(const qcc_diagram* const* tangles, size_t count, const qcc_cocycle* c, char** out,
                              char** detail) {
  return guard([&] {
    need(tangles, "tangles");
    need(c, "cocycle");
    std::vector<qcc::Diagram> ds;
    for (size_t i = 0; i < count; ++i) {
      need(tangles[i], "tangle");
      if (!tangles[i]->d.tangle) throw StatusError(QCC_ERR_ARGUMENT, "'" + tangles[i]->d.name + "' is not a tangle");
      ds.push_back(tangles[i]->d);
    }
    if (ds.empty()) throw StatusError(QCC_ERR_ARGUMENT, "no tangles");
    qcc::DisjointUnion du = qcc::disjoint_union(ds, *c->c);
    if (!du.uniform) {
      put(detail, du.refusal);
      throw StatusError(QCC_ERR_REFUSED, "the product formula does not apply: " + du.refusal);
    }
    put(out, du.direct.format());
    put(detail, "direct " + du.direct.format() + "; formula " + du.formula->format() +
                    (du.agree ? "; agree" : "; DISAGREE"));
  });
}

qcc_status qcc_multiset_included(const char* a, const char* b, const qcc_cocycle* c, int* out) {
  return guard([&] {
    need(a, "a");
    need(b, "b");
    need(c, "cocycle");
    need(out, "out");
    *out = qcc::multiset_included(qcc::Multiset::parse(c->c->group(), a), qcc::Multiset::parse(c->c->group(), b));
  });
}

qcc_status qcc_knot_table_load(const char* path, qcc_knot_table** out) {
  return guard([&] {
    need(out, "out");
    *out = new qcc_knot_table{qcc::load_knot_table(path ? path : "")};
  });
}

void qcc_knot_table_free(qcc_knot_table* t) { delete t; }
size_t qcc_knot_table_size(const qcc_knot_table* t) { return t ? t->t.entries.size() : 0; }
const char* qcc_knot_table_name(const qcc_knot_table* t, size_t i) {
  return t && i < t->t.entries.size() ? t->t.entries[i].name.c_str() : nullptr;
}

qcc_status qcc_knot_table_get(const qcc_knot_table* t, const char* name, qcc_diagram** out) {
  return guard([&] {
    need(t, "table");
    need(name, "name");
    need(out, "out");
    const qcc::KnotEntry* e = t->t.find(name);
    if (!e) throw StatusError(QCC_ERR_NOT_FOUND, std::string("no knot named ") + name);
    qcc::Diagram d = e->diagram;
    d.name = e->name;
    *out = new qcc_diagram{std::move(d)};
  });
}

qcc_status qcc_tangle_table_load(const char* path, int strict, qcc_tangle_table** out) {
  return guard([&] {
    need(out, "out");
    *out = new qcc_tangle_table{qcc::load_tangle_table(path ? path : "", strict != 0)};
  });
}

void qcc_tangle_table_free(qcc_tangle_table* t) { delete t; }

qcc_status qcc_tangle_table_get(const qcc_tangle_table* t, const char* spec, qcc_diagram** out) {
  return guard([&] {
    need(t, "table");
    need(spec, "spec");
    need(out, "out");
    std::string s = spec;
    std::string name = s.substr(0, s.find(':'));
    if (!t->t.find(name)) throw StatusError(QCC_ERR_NOT_FOUND, "no tangle named " + name);
    *out = new qcc_diagram{t->t.oriented(s)};
  });
}

qcc_status qcc_tangle_table_check(const qcc_tangle_table* t, char** report, int* mismatches) {
  return guard([&] {
    need(t, "table");
    std::ostringstream os;
    int bad = 0;
    for (const auto& c : t->t.check_colors()) {
      bool ok = c.expected == c.actual;
      bad += !ok;
      os << (ok ? "ok   " : "BAD  ") << c.tangle << " " << c.variant << " " << c.quandle << " colorings=" << c.count
         << (c.expected ? " (listed)" : "") << "\n";
    }
    put(report, os.str());
    if (mismatches) *mismatches = bad;
  });
}

qcc_status qcc_cache_open(const char* path, qcc_cache** out) {
  return guard([&] {
    need(out, "out");
    auto c = path && *path ? std::make_unique<qcc::InvariantCache>(path) : std::make_unique<qcc::InvariantCache>();
    *out = new qcc_cache{std::move(c)};
  });
}

void qcc_cache_free(qcc_cache* c) { delete c; }
size_t qcc_cache_size(const qcc_cache* c) { return c ? c->c->size() : 0; }

qcc_status qcc_obstruct(const qcc_diagram* tangle, const qcc_diagram* knot, const char* specs,
                        const qcc_scan_options* opt, int* excluded, char** report) {
  return guard([&] {
    need(tangle, "tangle");
    need(knot, "knot");
    need(specs, "specs");
    if (!tangle->d.tangle || knot->d.tangle) throw StatusError(QCC_ERR_ARGUMENT, "expected a tangle and a knot");
    auto list = qcc::parse_spec_list(specs);
    qcc::ScanOptions o = scan_options(opt);
    qcc::Verdict v = qcc::check_embedding_obstruction(tangle->d, knot->d, list, o);
    if (excluded) *excluded = v.excluded;
    if (report) {
      std::string s = v.line(list) + "\n";
      if (v.excluded)
        s += "  tangle " + v.tangle_ms->format() + "\n  knot   " + v.knot_ms->format() + "\n";
      *report = dup(s);
    }
  });
}

qcc_status qcc_scan(const qcc_diagram* tangle, const qcc_knot_table* knots, const char* specs,
                    const qcc_scan_options* opt, qcc_scan_report** out) {
  return guard([&] {
    need(tangle, "tangle");
    need(knots, "table");
    need(specs, "specs");
    need(out, "out");
    if (!tangle->d.tangle) throw StatusError(QCC_ERR_ARGUMENT, "diagram is not a tangle");
    auto list = qcc::parse_spec_list(specs);
    *out = new qcc_scan_report{
        qcc::scan_table(tangle->d, qcc::knot_list(knots->t, opt && opt->with_mirrors), list, scan_options(opt))};
  });
}

qcc_status qcc_scan_disjoint(const qcc_diagram* const* tangles, size_t count, const qcc_knot_table* knots,
                             const char* specs, const qcc_scan_options* opt, qcc_scan_report** out) {
  return guard([&] {
    need(tangles, "tangles");
    need(knots, "table");
    need(specs, "specs");
    need(out, "out");
    std::vector<qcc::Diagram> ds;
    for (size_t i = 0; i < count; ++i) {
      need(tangles[i], "tangle");
      ds.push_back(tangles[i]->d);
    }
    auto list = qcc::parse_spec_list(specs);
    qcc::ScanReport r =
        qcc::scan_disjoint(ds, qcc::knot_list(knots->t, opt && opt->with_mirrors), list, scan_options(opt));
    bool any = false;
    for (const auto& v : r.verdicts)
      for (const auto& s : v.per_spec) any |= s.evaluated;
    if (!any && !r.verdicts.empty())
      throw StatusError(QCC_ERR_REFUSED, "no spec applies to this union: " + qcc::join_names(r.notices));
    *out = new qcc_scan_report{std::move(r)};
  });
}

void qcc_scan_report_free(qcc_scan_report* r) { delete r; }
size_t qcc_scan_report_spec_count(const qcc_scan_report* r) { return r ? r->r.specs.size() : 0; }

qcc_status qcc_scan_report_text(const qcc_scan_report* r, int format, char** out) {
  return guard([&] {
    need(r, "report");
    if (format != 0 && format != 1) throw StatusError(QCC_ERR_ARGUMENT, "format must be 0 (table) or 1 (lines)");
    put(out, format == 0 ? r->r.table() : r->r.lines());
  });
}

qcc_status qcc_scan_report_open(const qcc_scan_report* r, int spec, char** out) {
  return guard([&] {
    need(r, "report");
    if (spec >= static_cast<int>(r->r.specs.size())) throw StatusError(QCC_ERR_ARGUMENT, "spec index out of range");
    put(out, qcc::join_names(spec < 0 ? r->r.open() : r->r.open_for(static_cast<size_t>(spec))));
  });
}

qcc_status qcc_reproduce(const char* suite, const char* data_dir, const qcc_scan_options* opt, char** out,
                         int* failures) {
  return guard([&] {
    need(suite, "suite");
    qcc::ReproduceContext ctx = qcc::ReproduceContext::load(data_dir ? data_dir : "");
    ctx.options = scan_options(opt);
    std::string s;
    int bad = 0;
    for (const auto& l : qcc::reproduce(suite, ctx)) {
      s += l.format() + "\n";
      bad += !l.pass;
    }
    put(out, s);
    if (failures) *failures = bad;
  });
}

}  // extern "C"

#include "qcc/obstruction.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcc/colorings.hpp"

namespace qcc {

InvariantSpec parse_invariant_spec(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw std::invalid_argument("invariant spec '" + text + "' must look like <quandle>/<cocycle>");
  return {text.substr(0, slash), text.substr(slash + 1)};
}

namespace {

const std::map<std::string, std::vector<std::string>>& spec_sets() {
  static const std::map<std::string, std::vector<std::string>> sets = {
      {"prop2",
       {"alexander:2:t^2+t+1/poly3:(x-y)*(y-z)^2", "alexander:3:t^2-t+1/poly3:(x-y)*(y-z)^3",
        "alexander:5:t^2-t+1/poly3:(x-y)*(y-z)^5", "alexander:7:t^2-t+1/poly3:(x-y)*(y-z)^7"}},
      {"prop3", {"alexander:5:t^2-t+1/poly3:(x-y)*(y-z)^5", "dihedral:3/mochizuki:3"}},
      {"example-f", {"alexander:2:t^2+t+1/poly2:(x-y)^2*y"}},
      {"mochizuki", {"dihedral:3/mochizuki:3", "dihedral:5/mochizuki:5", "dihedral:7/mochizuki:7"}},
  };
  return sets;
}

}  // namespace

std::vector<std::string> spec_set_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : spec_sets()) out.push_back(k);
  return out;
}

std::vector<InvariantSpec> parse_spec_list(const std::string& text) {
  std::vector<InvariantSpec> out;
  if (auto it = spec_sets().find(text); it != spec_sets().end()) {
    for (const auto& s : it->second) out.push_back(parse_invariant_spec(s));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (auto it = spec_sets().find(item); it != spec_sets().end())
      for (const auto& s : it->second) out.push_back(parse_invariant_spec(s));
    else
      out.push_back(parse_invariant_spec(item));
  }
  if (out.empty()) throw std::invalid_argument("empty spec list");
  return out;
}

CocyclePtr resolve_spec(const InvariantSpec& s) {
  static std::mutex mu;
  static std::map<std::string, CocyclePtr> resolved;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = resolved.find(s.key()); it != resolved.end()) return it->second;
  }
  CocyclePtr c = parse_cocycle_spec(parse_quandle_spec(s.quandle), s.cocycle);
  std::lock_guard<std::mutex> lock(mu);
  return resolved.emplace(s.key(), c).first->second;
}

int spec_quandle_size(const InvariantSpec& s) { return resolve_spec(s)->quandle().size(); }

Multiset knot_invariant(const Diagram& k, const InvariantSpec& s, InvariantCache* cache) {
  CocyclePtr c = resolve_spec(s);
  if (cache && !k.name.empty())
    if (auto hit = cache->get(k.name, s.quandle, s.cocycle)) return Multiset::parse(c->group(), *hit);
  Analysis a = analyze(k);
  const Quandle& q = c->quandle();
  uint64_t n = static_cast<uint64_t>(q.size());
  uint64_t arcs = count_arc_colorings(a, q);
  Multiset m(c->group());
  if (arcs == n) {
    // constant colorings only; every weight is zero
    m.add(0, arcs * loop_factor(a, q) * (c->arity() == 3 ? n : 1));
  } else {
    m = state_sum(k, *c);
  }
  if (cache && !k.name.empty()) cache->put(k.name, s.quandle, s.cocycle, m.format());
  return m;
}

std::string Verdict::line(const std::vector<InvariantSpec>& specs) const {
  std::string s = "verdict " + tangle + " " + variant + " " + knot + " " + (excluded ? "excluded" : "open");
  if (excluded) s += " " + specs[witness].key();
  return s;
}

static std::vector<size_t> evaluation_order(const std::vector<InvariantSpec>& specs) {
  std::vector<size_t> order(specs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t a, size_t b) { return spec_quandle_size(specs[a]) < spec_quandle_size(specs[b]); });
  return order;
}

Verdict check_embedding_obstruction(const TangleSide& side, const std::string& tangle, const std::string& variant,
                                    const Diagram& knot, const std::vector<InvariantSpec>& specs,
                                    const ScanOptions& opt) {
  Verdict v;
  v.tangle = tangle;
  v.variant = variant;
  v.knot = knot.name;
  v.per_spec.resize(specs.size());
  for (size_t i : evaluation_order(specs)) {
    if (!side[i]) continue;
    Multiset km = knot_invariant(knot, specs[i], opt.cache);
    bool inc = multiset_included(*side[i], km);
    v.per_spec[i] = {true, inc};
    if (!inc && !v.excluded) {
      v.excluded = true;
      v.witness = static_cast<int>(i);
      v.tangle_ms = *side[i];
      v.knot_ms = km;
      // independent recheck of the witness
      bool violated = false;
      for (int a = 0; a < km.group().size(); ++a) violated |= side[i]->count(a) > km.count(a);
      if (!violated) throw std::logic_error("exclusion witness does not violate inclusion");
      if (!opt.full) break;
    }
  }
  return v;
}

TangleSide tangle_side(const Diagram& tangle, const std::vector<InvariantSpec>& specs) {
  TangleSide side;
  for (const auto& s : specs) side.push_back(tangle_invariant(tangle, *resolve_spec(s)).total);
  return side;
}

Verdict check_embedding_obstruction(const Diagram& tangle, const Diagram& knot, const std::vector<InvariantSpec>& specs,
                                    const ScanOptions& opt) {
  return check_embedding_obstruction(tangle_side(tangle, specs), tangle.name, tangle.variant, knot, specs, opt);
}

TangleSide disjoint_side(const std::vector<Diagram>& tangles, const std::vector<InvariantSpec>& specs,
                         std::vector<std::string>* notices) {
  TangleSide side;
  for (const auto& s : specs) {
    DisjointUnion du = disjoint_union(tangles, *resolve_spec(s));
    if (du.uniform) {
      side.push_back(du.direct);
    } else {
      side.push_back(std::nullopt);
      if (notices) notices->push_back("skipping " + s.key() + ": " + du.refusal);
    }
  }
  return side;
}

std::vector<std::string> ScanReport::open() const {
  std::vector<std::string> out;
  for (const auto& v : verdicts)
    if (!v.excluded) out.push_back(v.knot);
  return out;
}

std::vector<std::string> ScanReport::open_for(size_t i) const {
  std::vector<std::string> out;
  for (const auto& v : verdicts) {
    if (!v.per_spec[i].evaluated) {
      if (v.excluded) continue;  // stopped before reaching spec i
      throw std::logic_error("spec " + specs[i].key() + " was not evaluated for " + v.knot);
    }
    if (v.per_spec[i].included) out.push_back(v.knot);
  }
  return out;
}

std::string ScanReport::lines() const {
  std::string s;
  for (const auto& v : verdicts) s += v.line(specs) + "\n";
  return s;
}

std::string join_names(const std::vector<std::string>& names) {
  std::string s;
  for (size_t i = 0; i < names.size(); ++i) s += (i ? ", " : "") + names[i];
  return s;
}

std::string ScanReport::table() const {
  std::ostringstream os;
  os << "tangle " << tangle << " (" << variant << ")\n";
  for (size_t i = 0; i < specs.size(); ++i) os << "  spec " << i + 1 << ": " << specs[i].key() << "\n";
  for (const auto& n : notices) os << "  note: " << n << "\n";
  size_t w = 4;
  for (const auto& v : verdicts) w = std::max(w, v.knot.size());
  for (const auto& v : verdicts) {
    os << "  " << v.knot << std::string(w - v.knot.size() + 2, ' ');
    if (v.excluded)
      os << "excluded by spec " << v.witness + 1;
    else
      os << "open";
    os << "\n";
  }
  auto o = open();
  os << "May embed in: " << (o.empty() ? "none" : join_names(o)) << "\n";
  return os.str();
}

KnotList knot_list(const KnotTable& t, bool with_mirrors) {
  KnotList out;
  for (const auto& e : t.entries)
    if (with_mirrors || !e.is_mirror) out.push_back({e.name, e.diagram});
  return out;
}

ScanReport scan_multisets(const TangleSide& side, const std::string& tangle, const std::string& variant,
                          const KnotList& knots, const std::vector<InvariantSpec>& specs, const ScanOptions& opt) {
  ScanReport r;
  r.tangle = tangle;
  r.variant = variant;
  r.specs = specs;
  for (const auto& s : specs) resolve_spec(s);  // resolve up front, off the workers
  r.verdicts.resize(knots.size());
  unsigned threads = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, std::max<size_t>(1, knots.size()));
  std::atomic<size_t> next{0};
  std::mutex err_mu;
  std::string error;
  auto work = [&] {
    for (size_t i; (i = next++) < knots.size();) {
      try {
        Diagram k = knots[i].second;
        k.name = knots[i].first;
        r.verdicts[i] = check_embedding_obstruction(side, tangle, variant, k, specs, opt);
      } catch (const std::exception& ex) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (error.empty()) error = knots[i].first + ": " + ex.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (!error.empty()) throw std::runtime_error("scan failed at " + error);
  return r;
}

ScanReport scan_table(const Diagram& tangle, const KnotList& knots, const std::vector<InvariantSpec>& specs,
                      const ScanOptions& opt) {
  return scan_multisets(tangle_side(tangle, specs), tangle.name, tangle.variant, knots, specs, opt);
}

ScanReport scan_disjoint(const std::vector<Diagram>& tangles, const KnotList& knots,
                         const std::vector<InvariantSpec>& specs, const ScanOptions& opt) {
  std::vector<std::string> notices;
  TangleSide side = disjoint_side(tangles, specs, &notices);
  std::string name, variant;
  for (size_t i = 0; i < tangles.size(); ++i) {
    name += (i ? "|" : "") + tangles[i].name;
    variant += (i ? "|" : "") + tangles[i].variant;
  }
  ScanReport r = scan_multisets(side, name, variant, knots, specs, opt);
  r.notices = notices;
  return r;
}

}  // namespace qcc

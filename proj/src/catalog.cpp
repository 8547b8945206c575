#include "qcc/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "qcc/algebra.hpp"
#include "qcc/colorings.hpp"

#ifndef QCC_DEFAULT_DATA_DIR
#define QCC_DEFAULT_DATA_DIR "data"
#endif

namespace qcc {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r"), b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::string strip_comment(std::string line) {
  auto h = line.find('#');
  if (h != std::string::npos) line.resize(h);
  return trim(line);
}

}  // namespace

std::string default_data_dir() {
  if (const char* e = std::getenv("QCC_DATA_DIR"); e && *e) return e;
  return QCC_DEFAULT_DATA_DIR;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

const KnotEntry* KnotTable::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<const KnotEntry*> KnotTable::base() const {
  std::vector<const KnotEntry*> out;
  for (const auto& e : entries)
    if (!e.is_mirror) out.push_back(&e);
  return out;
}

KnotTable parse_knot_table(const std::string& text, bool with_mirrors) {
  KnotTable t;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    if (line.empty()) continue;
    auto where = " (knot table line " + std::to_string(lineno) + ")";
    std::string symmetry;
    if (auto bar = line.find('|'); bar != std::string::npos) {
      symmetry = trim(line.substr(bar + 1));
      line = trim(line.substr(0, bar));
    }
    auto tok = split_ws(line);
    if (tok.size() < 4 || tok[0] != "knot" || tok[2] != "braid")
      throw std::invalid_argument("expected 'knot <name> braid <strands> <word>'" + where);
    if (t.find(tok[1])) throw std::invalid_argument("duplicate knot " + tok[1] + where);
    KnotEntry e;
    e.name = tok[1];
    e.symmetry = symmetry;
    e.source = line.substr(line.find("braid"));
    try {
      e.diagram = parse_braid(e.source, e.name);
      Analysis a = analyze(e.diagram);
      if (a.loops != 0 || e.diagram.n == 0) throw std::invalid_argument("closure has a free component");
      int comps = 0;
      {
        // a knot has one component: walk the strand from slot 0
        std::vector<char> seen(e.diagram.slots(), 0);
        for (int s = 0; s < e.diagram.slots(); ++s) {
          if (seen[s]) continue;
          ++comps;
          int x = s;
          while (!seen[x]) {
            seen[x] = 1;
            int y = e.diagram.partner[x];
            seen[y] = 1;
            x = 4 * (y / 4) + (y % 4 + 2) % 4;
          }
        }
      }
      if (comps != 1) throw std::invalid_argument("braid closes to a " + std::to_string(comps) + "-component link");
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument(std::string(ex.what()) + where);
    }
    t.entries.push_back(e);
  }
  if (with_mirrors) {
    std::vector<KnotEntry> mirrors;
    for (const auto& e : t.entries) {
      if (e.symmetry == "fully-amphicheiral") continue;
      KnotEntry m = e;
      m.name = e.name + "*";
      m.is_mirror = true;
      m.diagram = mirror(e.diagram);
      m.diagram.name = m.name;
      mirrors.push_back(std::move(m));
    }
    for (auto& m : mirrors) t.entries.push_back(std::move(m));
  }
  return t;
}

KnotTable load_knot_table(const std::string& path) {
  return parse_knot_table(read_file(path.empty() ? default_data_dir() + "/knots9.txt" : path));
}

const TangleEntry* TangleTable::find(const std::string& name) const {
  for (const auto& e : tangles)
    if (e.name == name) return &e;
  return nullptr;
}

const TangleVariant* TangleTable::find_variant(const std::string& name, const std::string& variant) const {
  auto want = parse_variant(variant);
  for (const auto& v : variants)
    if (v.name == name && parse_variant(v.variant) == want) return &v;
  return nullptr;
}

Diagram TangleTable::oriented(const std::string& name, const std::string& variant) const {
  const TangleEntry* e = find(name);
  if (!e) throw std::invalid_argument("unknown tangle " + name);
  Diagram d = orient_variant(e->diagram, variant);
  d.name = name;
  return d;
}

Diagram TangleTable::oriented(const std::string& spec) const {
  auto colon = spec.find(':');
  if (colon != std::string::npos) return oriented(spec.substr(0, colon), spec.substr(colon + 1));
  for (const auto& v : variants)
    if (v.name == spec) return oriented(v.name, v.variant);
  throw std::invalid_argument("tangle " + spec + " has no listed orientation; use <name>:<variant>");
}

Diagram TangleTable::witness_diagram(const TangleVariant& v, const TangleWitness& w, std::string* induced) const {
  auto listed = parse_variant(v.variant);
  std::vector<BoundarySeeds> tries{listed};
  int nw = listed[NW] != 0 ? listed[NW] : 1;
  for (int mask = 0; mask < 8; ++mask) {
    BoundarySeeds s{mask & 1 ? 1 : -1, mask & 2 ? 1 : -1, mask & 4 ? 1 : -1, nw};
    if (s != listed) tries.push_back(s);
  }
  std::string last_error;
  for (const auto& seeds : tries) {
    Diagram t;
    try {
      t = oriented(v.name, format_variant(seeds));
    } catch (const std::invalid_argument& ex) {
      continue;  // not compatible with the strands of T
    }
    try {
      Diagram k = build_expression(w.closure, [&](const std::string& id) -> std::optional<Diagram> {
        if (id == "T") return t;
        return std::nullopt;
      });
      if (k.tangle) throw std::invalid_argument("witness " + w.closure + " is not closed");
      k = orient_closed(std::move(k));
      k.name = w.closure;
      if (induced) *induced = seeds == listed ? v.variant : format_variant(seeds);
      return k;
    } catch (const std::invalid_argument& ex) {
      last_error = ex.what();
    }
  }
  throw std::invalid_argument("witness " + w.closure + " for " + v.key() + " has no consistent orientation: " + last_error);
}

std::vector<ColorCheck> TangleTable::check_colors() const {
  std::vector<ColorCheck> out;
  for (const auto& v : variants) {
    if (!v.colors) continue;
    Analysis a = analyze(oriented(v.name, v.variant));
    for (const auto& qs : checkset) {
      auto q = parse_quandle_spec(qs);
      ColorCheck c;
      c.tangle = v.name;
      c.variant = v.variant;
      c.quandle = qs;
      c.expected = std::find(v.colors->begin(), v.colors->end(), qs) != v.colors->end();
      c.count = count_colorings(a, *q);
      c.actual = c.count > static_cast<unsigned long long>(q->size());
      out.push_back(c);
    }
  }
  return out;
}

TangleTable parse_tangle_file(const std::string& text, bool strict) {
  TangleTable t;
  std::istringstream is(text);
  std::string raw;
  int lineno = 0;
  std::string pd_block;
  int pd_start = 0;
  auto flush_pd = [&] {
    if (pd_block.empty()) return;
    TangleEntry e;
    try {
      e.diagram = parse_pd(pd_block);
    } catch (const std::invalid_argument& ex) {
      throw std::invalid_argument(std::string(ex.what()) + " (tangle block at line " + std::to_string(pd_start) + ")");
    }
    if (!e.diagram.tangle) throw std::invalid_argument("knot block in tangle file at line " + std::to_string(pd_start));
    e.name = e.diagram.name;
    e.source = "transcribed";
    if (t.find(e.name)) throw std::invalid_argument("duplicate tangle " + e.name);
    t.tangles.push_back(std::move(e));
    pd_block.clear();
  };
  while (std::getline(is, raw)) {
    ++lineno;
    std::string line = strip_comment(raw);
    auto where = " (tangle file line " + std::to_string(lineno) + ")";
    auto tok = split_ws(line);
    if (!pd_block.empty() && (tok.empty() || tok[0] == "X" || tok[0] == "B" || tok[0] == "loops")) {
      if (tok.empty())
        flush_pd();
      else
        pd_block += line + "\n";
      continue;
    }
    flush_pd();
    if (tok.empty()) continue;
    const std::string& kw = tok[0];
    if (kw == "checkset") {
      for (size_t i = 1; i < tok.size(); ++i) {
        parse_quandle_spec(tok[i]);
        t.checkset.push_back(tok[i]);
      }
    } else if (kw == "tangle") {
      if (tok.size() < 3) throw std::invalid_argument("tangle line needs a name and a variant or '='" + where);
      if (tok[2] == "=") {
        TangleEntry e;
        e.name = tok[1];
        e.source = trim(line.substr(line.find('=') + 1));
        try {
          e.diagram = build_expression(e.source, [&](const std::string& id) -> std::optional<Diagram> {
            if (auto* o = t.find(id)) return o->diagram;
            return std::nullopt;
          });
        } catch (const std::invalid_argument& ex) {
          throw std::invalid_argument(std::string(ex.what()) + where);
        }
        if (!e.diagram.tangle) throw std::invalid_argument("expression for " + e.name + " is not a tangle" + where);
        e.diagram.name = e.name;
        if (t.find(e.name)) throw std::invalid_argument("duplicate tangle " + e.name + where);
        t.tangles.push_back(std::move(e));
      } else {
        pd_block = line + "\n";
        pd_start = lineno;
      }
    } else if (kw == "variant") {
      if (tok.size() != 3) throw std::invalid_argument("variant line needs a name and a variant" + where);
      if (!t.find(tok[1])) throw std::invalid_argument("variant for unknown tangle " + tok[1] + where);
      parse_variant(tok[2]);
      if (t.find_variant(tok[1], tok[2])) throw std::invalid_argument("duplicate variant" + where);
      t.variants.push_back({tok[1], tok[2], std::nullopt, {}});
    } else if (kw == "colors" || kw == "witness") {
      if (tok.size() < 3) throw std::invalid_argument(kw + " line is too short" + where);
      TangleVariant* found = nullptr;
      auto want = parse_variant(tok[2]);
      for (auto& x : t.variants)
        if (x.name == tok[1] && parse_variant(x.variant) == want) found = &x;
      if (!found) throw std::invalid_argument(kw + " line for an undeclared variant" + where);
      TangleVariant& v = *found;
      if (kw == "colors") {
        v.colors = std::vector<std::string>(tok.begin() + 3, tok.end());
        for (const auto& q : *v.colors)
          if (std::find(t.checkset.begin(), t.checkset.end(), q) == t.checkset.end())
            throw std::invalid_argument("quandle " + q + " is not in the check set" + where);
      } else {
        auto eq = line.find('=');
        if (tok.size() < 6 || eq == std::string::npos) throw std::invalid_argument("witness line needs '<knot> = <closure>'" + where);
        v.witnesses.push_back({tok[3], trim(line.substr(eq + 1))});
      }
    } else {
      throw std::invalid_argument("unknown keyword '" + kw + "'" + where);
    }
  }
  flush_pd();

  if (strict) {
    std::string bad;
    for (const auto& c : t.check_colors())
      if (c.expected != c.actual)
        bad += "\n  " + c.tangle + " " + c.variant + " by " + c.quandle + ": expected " +
               (c.expected ? "non-trivial" : "trivial") + ", found " + std::to_string(c.count) + " colorings";
    if (!bad.empty()) throw std::runtime_error("tangle table fails the coloring cross-check:" + bad);
  }
  return t;
}

TangleTable load_tangle_table(const std::string& path, bool strict) {
  return parse_tangle_file(read_file(path.empty() ? default_data_dir() + "/tangles.txt" : path), strict);
}

static std::string cache_key(const std::string& d, const std::string& q, const std::string& c) {
  return d + '\t' + q + '\t' + c;
}

InvariantCache::InvariantCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  if (!in) return;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> f;
    size_t st = 0;
    for (;;) {
      auto tab = line.find('\t', st);
      f.push_back(line.substr(st, tab == std::string::npos ? std::string::npos : tab - st));
      if (tab == std::string::npos) break;
      st = tab + 1;
    }
    if (f.size() != 4 || f[0].empty() || f[1].empty() || f[2].empty() || f[3].empty()) {
      warnings_.push_back(path_ + ":" + std::to_string(lineno) + ": skipping corrupt cache line");
      continue;
    }
    map_[cache_key(f[0], f[1], f[2])] = f[3];
  }
  for (const auto& w : warnings_) std::cerr << "warning: " << w << "\n";
}

InvariantCache InvariantCache::from_environment() {
  if (const char* e = std::getenv("QCC_CACHE"); e && *e) return InvariantCache(e);
  return InvariantCache();
}

std::optional<std::string> InvariantCache::get(const std::string& d, const std::string& q, const std::string& c) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = map_.find(cache_key(d, q, c));
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void InvariantCache::put(const std::string& d, const std::string& q, const std::string& c, const std::string& value) {
  for (const auto* f : {&d, &q, &c, &value})
    if (f->find_first_of("\t\n") != std::string::npos) throw std::invalid_argument("cache fields must not contain tabs or newlines");
  std::lock_guard<std::mutex> lock(mu_);
  auto key = cache_key(d, q, c);
  auto it = map_.find(key);
  if (it != map_.end() && it->second == value) return;
  map_[key] = value;
  if (path_.empty()) return;
  std::ofstream out(path_, std::ios::app);
  std::string line = key + '\t' + value + '\n';
  out.write(line.data(), static_cast<std::streamsize>(line.size()));
  out.flush();
}

size_t InvariantCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return map_.size();
}

std::vector<std::array<std::string, 4>> InvariantCache::entries() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::vector<std::array<std::string, 4>> out;
  for (const auto& [k, v] : map_) {
    auto a = k.find('\t'), b = k.find('\t', a + 1);
    out.push_back({k.substr(0, a), k.substr(a + 1, b - a - 1), k.substr(b + 1), v});
  }
  return out;
}

}  // namespace qcc

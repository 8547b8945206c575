#include "qcc/diagrams.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcc {

namespace {

const char* kBoundaryNames[4] = {"NE", "SE", "SW", "NW"};

[[noreturn]] void fail(const std::string& why) { throw std::invalid_argument(why); }

int other_under_or_over(int s) { return 4 * (s / 4) + (s % 4 + 2) % 4; }

void set_flow(Diagram& d, std::vector<int>& work, int s, int v) {
  if (d.flow[s] == 0) {
    d.flow[s] = static_cast<int8_t>(v);
    work.push_back(s);
  } else if (d.flow[s] != v) {
    fail("orientation mismatch" + (d.name.empty() ? std::string() : " in " + d.name));
  }
}

void propagate(Diagram& d, std::vector<int> work) {
  while (!work.empty()) {
    int s = work.back();
    work.pop_back();
    int f = d.flow[s];
    set_flow(d, work, d.partner[s], -f);
    if (s < 4 * d.n) set_flow(d, work, other_under_or_over(s), -f);
  }
}

void propagate_all(Diagram& d) {
  std::vector<int> work;
  for (int s = 0; s < d.slots(); ++s)
    if (d.flow[s] != 0) work.push_back(s);
  propagate(d, std::move(work));
}

// Rebuilds a diagram after boundary points were glued together in pairs.
// part/flow live on a combined slot space; final_id maps kept slots to the
// new numbering and is -1 for glued ones; glued[x] is x's glue partner.
Diagram rewire(int n, bool tangle, const std::vector<int>& part, const std::vector<int8_t>& flow,
               const std::vector<int>& glued, const std::vector<int>& final_id, int loops) {
  Diagram d;
  d.n = n;
  d.tangle = tangle;
  d.partner.assign(d.slots(), -1);
  d.flow.assign(d.slots(), 0);
  d.loops = loops;
  std::vector<char> seen(part.size(), 0);
  for (size_t x = 0; x < part.size(); ++x) {
    if (final_id[x] < 0) continue;
    int t = part[x];
    while (final_id[t] < 0) {
      seen[t] = seen[glued[t]] = 1;
      t = part[glued[t]];
    }
    d.partner[final_id[x]] = final_id[t];
    d.flow[final_id[x]] = flow[x];
  }
  for (size_t x = 0; x < part.size(); ++x) {
    if (final_id[x] >= 0 || seen[x]) continue;
    ++d.loops;
    int t = static_cast<int>(x);
    while (!seen[t]) {
      seen[t] = seen[glued[t]] = 1;
      t = part[glued[t]];
    }
  }
  for (int s = 0; s < d.slots(); ++s)
    if (d.partner[s] < 0) fail("internal: unmatched slot after gluing");
  return d;
}

void check_glue_flows(int8_t a, int8_t b) {
  if (a != 0 && b != 0 && a != -b) fail("orientation mismatch at glued boundary points");
}

Diagram glue(const Diagram& A, const Diagram& B, const std::vector<std::pair<int, int>>& pairs,
             const std::vector<std::pair<int, int>>& keepA, const std::vector<std::pair<int, int>>& keepB) {
  if (!A.tangle || !B.tangle) fail("tangle operation needs tangles");
  int SA = A.slots(), SB = B.slots();
  int n = A.n + B.n;
  std::vector<int> part(SA + SB);
  std::vector<int8_t> flow(SA + SB);
  std::vector<int> glued(SA + SB, -1), final_id(SA + SB, -1);
  for (int s = 0; s < SA; ++s) {
    part[s] = A.partner[s];
    flow[s] = A.flow[s];
    if (s < 4 * A.n) final_id[s] = s;
  }
  for (int s = 0; s < SB; ++s) {
    part[SA + s] = SA + B.partner[s];
    flow[SA + s] = B.flow[s];
    if (s < 4 * B.n) final_id[SA + s] = 4 * A.n + s;
  }
  for (auto [a, b] : pairs) {
    int x = A.bslot(a), y = SA + B.bslot(b);
    check_glue_flows(flow[x], flow[y]);
    glued[x] = y;
    glued[y] = x;
  }
  for (auto [a, nb] : keepA) final_id[A.bslot(a)] = 4 * n + nb;
  for (auto [b, nb] : keepB) final_id[SA + B.bslot(b)] = 4 * n + nb;
  Diagram d = rewire(n, true, part, flow, glued, final_id, A.loops + B.loops);
  propagate_all(d);
  return d;
}

Diagram close(const Diagram& t, int a1, int b1, int a2, int b2, const char* what) {
  if (!t.tangle) fail(std::string(what) + " closure needs a tangle");
  int S = t.slots();
  std::vector<int> part(t.partner.begin(), t.partner.end());
  std::vector<int8_t> flow(t.flow.begin(), t.flow.end());
  std::vector<int> glued(S, -1), final_id(S, -1);
  for (int s = 0; s < 4 * t.n; ++s) final_id[s] = s;
  for (auto [a, b] : {std::pair{a1, b1}, std::pair{a2, b2}}) {
    int x = t.bslot(a), y = t.bslot(b);
    check_glue_flows(flow[x], flow[y]);
    glued[x] = y;
    glued[y] = x;
  }
  Diagram d = rewire(t.n, false, part, flow, glued, final_id, t.loops);
  d.name = std::string(what) + "(" + t.name + ")";
  propagate_all(d);
  return d;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

int to_int(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    fail("bad " + what + " '" + s + "'");
  }
}

}  // namespace

const char* boundary_name(int b) { return kBoundaryNames[b]; }

int parse_boundary_name(const std::string& s) {
  for (int b = 0; b < 4; ++b)
    if (s == kBoundaryNames[b]) return b;
  return -1;
}

bool Diagram::oriented() const {
  return std::all_of(flow.begin(), flow.end(), [](int8_t f) { return f != 0; });
}

int Diagram::incoming_under_port(int c) const {
  if (flow[4 * c] == 0) throw std::logic_error("diagram is not oriented");
  return flow[4 * c] == 1 ? 0 : 2;
}

int Diagram::sign(int c) const {
  int i0 = incoming_under_port(c);
  int o = flow[4 * c + 1] == 1 ? 1 : 3;
  return o == (i0 + 3) % 4 ? 1 : -1;
}

int Diagram::writhe() const {
  int w = 0;
  for (int c = 0; c < n; ++c) w += sign(c);
  return w;
}

BoundarySeeds parse_variant(const std::string& text) {
  BoundarySeeds seeds{0, 0, 0, 0};
  std::string s;
  for (char ch : text)
    if (std::isalpha(static_cast<unsigned char>(ch))) s += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  size_t i = 0;
  int count = 0;
  while (i < s.size()) {
    if (i + 2 > s.size()) fail("bad orientation variant '" + text + "'");
    int b = parse_boundary_name(s.substr(i, 2));
    if (b < 0) fail("bad orientation variant '" + text + "'");
    i += 2;
    int f = 0;
    if (s.compare(i, 2, "IN") == 0) {
      f = 1;
      i += 2;
    } else if (s.compare(i, 3, "OUT") == 0) {
      f = -1;
      i += 3;
    } else {
      fail("bad orientation variant '" + text + "'");
    }
    if (seeds[b] != 0) fail("boundary point repeated in variant '" + text + "'");
    seeds[b] = f;
    ++count;
  }
  if (count == 0) fail("empty orientation variant");
  return seeds;
}

std::string format_variant(const BoundarySeeds& s) {
  std::string out;
  for (int b : {NW, NE, SW, SE}) {
    if (s[b] == 0) continue;
    if (!out.empty()) out += "-";
    out += std::string(kBoundaryNames[b]) + (s[b] > 0 ? "in" : "out");
  }
  return out;
}

BoundarySeeds boundary_orientation(const Diagram& t) {
  BoundarySeeds s{0, 0, 0, 0};
  if (!t.tangle) return s;
  for (int b = 0; b < 4; ++b) s[b] = -t.flow[t.bslot(b)];
  return s;
}

Diagram orient(Diagram d, const BoundarySeeds& seeds) {
  std::vector<int> work;
  for (int s = 0; s < d.slots(); ++s)
    if (d.flow[s] != 0) work.push_back(s);
  if (d.tangle)
    for (int b = 0; b < 4; ++b)
      if (seeds[b] != 0) set_flow(d, work, d.bslot(b), seeds[b] > 0 ? -1 : 1);
  propagate(d, std::move(work));
  if (d.tangle)
    for (int b = 0; b < 4; ++b)
      if (d.flow[d.bslot(b)] == 0)
        fail("orientation variant leaves the strand at " + std::string(kBoundaryNames[b]) + " unoriented");
  for (int s = 0; s < 4 * d.n; ++s) {
    if (d.flow[s] != 0) continue;
    std::vector<int> w;
    set_flow(d, w, s, 1);
    propagate(d, std::move(w));
  }
  return d;
}

Diagram orient_variant(Diagram t, const std::string& variant) {
  if (!t.tangle) fail("orientation variants apply to tangles only");
  t = clear_orientation(std::move(t));
  t = orient(std::move(t), parse_variant(variant));
  t.variant = variant;
  return t;
}

Diagram orient_closed(Diagram d) { return orient(std::move(d), BoundarySeeds{0, 0, 0, 0}); }

Diagram clear_orientation(Diagram d) {
  std::fill(d.flow.begin(), d.flow.end(), 0);
  d.variant.clear();
  return d;
}

Diagram reverse(Diagram d) {
  for (auto& f : d.flow) f = static_cast<int8_t>(-f);
  if (d.tangle && d.oriented()) d.variant = format_variant(boundary_orientation(d));
  return d;
}

Diagram from_braid(int strands, const std::vector<int>& word, const std::string& name) {
  if (strands < 1) fail("braid needs at least one strand");
  Diagram d;
  d.name = name;
  d.n = static_cast<int>(word.size());
  d.partner.assign(4 * d.n, -1);
  d.flow.assign(4 * d.n, 0);
  std::vector<int> top(strands, -1), cur(strands, -1);
  auto enter = [&](int pos, int slot) {
    if (cur[pos] < 0)
      top[pos] = slot;
    else {
      d.partner[cur[pos]] = slot;
      d.partner[slot] = cur[pos];
    }
    d.flow[slot] = 1;
  };
  for (int c = 0; c < d.n; ++c) {
    int g = word[c];
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands) fail("braid generator " + std::to_string(g) + " out of range for " + std::to_string(strands) + " strands");
    int b = 4 * c;
    if (g > 0) {
      // ports NW, SW, SE, NE; under NW->SE, over NE->SW
      enter(i, b + 0);
      enter(i + 1, b + 3);
      cur[i] = b + 1;
      cur[i + 1] = b + 2;
    } else {
      // ports NE, NW, SW, SE; under NE->SW, over NW->SE
      enter(i + 1, b + 0);
      enter(i, b + 1);
      cur[i] = b + 2;
      cur[i + 1] = b + 3;
    }
    d.flow[cur[i]] = -1;
    d.flow[cur[i + 1]] = -1;
  }
  for (int pos = 0; pos < strands; ++pos) {
    if (cur[pos] < 0) {
      ++d.loops;
      continue;
    }
    d.partner[cur[pos]] = top[pos];
    d.partner[top[pos]] = cur[pos];
  }
  return d;
}

Diagram parse_braid(const std::string& line, const std::string& name) {
  auto tok = tokens(line);
  if (tok.size() < 2 || tok[0] != "braid") fail("expected 'braid <strands> <word>'");
  int strands = to_int(tok[1], "strand count");
  std::vector<int> w;
  for (size_t i = 2; i < tok.size(); ++i) w.push_back(to_int(tok[i], "braid generator"));
  return from_braid(strands, w, name);
}

Diagram parse_pd(const std::string& text) {
  Diagram d;
  std::istringstream is(text);
  std::string line;
  std::vector<std::array<std::string, 4>> xs;
  std::vector<int> signs;
  std::vector<std::string> bline;
  bool header = false;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    auto tok = tokens(line);
    if (tok.empty()) continue;
    auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
    if (tok[0] == "knot" || tok[0] == "tangle") {
      if (header) fail("second header in one diagram" + where());
      header = true;
      d.tangle = tok[0] == "tangle";
      if (tok.size() < 2) fail("header needs a name" + where());
      d.name = tok[1];
      if (d.tangle && tok.size() > 2) d.variant = tok[2];
    } else if (tok[0] == "X") {
      if (tok.size() != 6) fail("crossing line needs 4 labels and a sign" + where());
      xs.push_back({tok[1], tok[2], tok[3], tok[4]});
      int s = to_int(tok[5], "sign");
      if (s != 1 && s != -1) fail("crossing sign must be +1 or -1" + where());
      signs.push_back(s);
    } else if (tok[0] == "B") {
      if (tok.size() != 5) fail("boundary line needs four entries" + where());
      bline.assign(tok.begin() + 1, tok.end());
    } else if (tok[0] == "loops") {
      if (tok.size() != 2) fail("loops line needs a count" + where());
      d.loops = to_int(tok[1], "loop count");
    } else {
      fail("unknown line '" + tok[0] + "'" + where());
    }
  }
  if (!header) fail("missing 'knot' or 'tangle' header");
  if (d.tangle != !bline.empty()) fail(d.tangle ? "tangle needs a B line" : "knot must not have a B line");
  d.n = static_cast<int>(xs.size());
  d.partner.assign(d.slots(), -1);
  d.flow.assign(d.slots(), 0);
  std::map<std::string, std::vector<int>> ends;
  for (int c = 0; c < d.n; ++c) {
    for (int k = 0; k < 4; ++k) ends[xs[c][k]].push_back(4 * c + k);
    d.flow[4 * c] = 1;
    d.flow[4 * c + 2] = -1;
    d.flow[4 * c + 3] = signs[c] > 0 ? 1 : -1;
    d.flow[4 * c + 1] = signs[c] > 0 ? -1 : 1;
  }
  std::array<bool, 4> got{};
  for (const auto& e : bline) {
    auto c1 = e.find(':'), c2 = e.rfind(':');
    if (c1 == std::string::npos || c1 == c2) fail("boundary entry '" + e + "' must look like NW:<label>:<in|out>");
    int b = parse_boundary_name(e.substr(0, c1));
    if (b < 0 || got[b]) fail("bad or repeated boundary point in '" + e + "'");
    got[b] = true;
    std::string dir = e.substr(c2 + 1);
    if (dir != "in" && dir != "out") fail("boundary direction must be in or out: '" + e + "'");
    ends[e.substr(c1 + 1, c2 - c1 - 1)].push_back(d.bslot(b));
    d.flow[d.bslot(b)] = dir == "in" ? -1 : 1;
  }
  for (const auto& [label, v] : ends) {
    if (v.size() != 2) fail("label " + label + " appears " + std::to_string(v.size()) + " times, expected 2");
    d.partner[v[0]] = v[1];
    d.partner[v[1]] = v[0];
    if (d.flow[v[0]] != -d.flow[v[1]]) fail("label " + label + " has inconsistent orientation");
  }
  if (d.tangle) {
    auto seeds = boundary_orientation(d);
    if (d.variant.empty()) d.variant = format_variant(seeds);
    auto want = parse_variant(d.variant);
    for (int b = 0; b < 4; ++b)
      if (want[b] != 0 && want[b] != seeds[b]) fail("header variant disagrees with the B line in " + d.name);
  }
  return d;
}

std::string write_pd(const Diagram& d) {
  if (!d.oriented()) fail("write_pd needs an oriented diagram");
  std::vector<int> label(d.slots(), 0);
  int next = 0;
  for (int s = 0; s < d.slots(); ++s)
    if (!label[s]) label[s] = label[d.partner[s]] = ++next;
  std::ostringstream os;
  if (d.tangle)
    os << "tangle " << (d.name.empty() ? "T" : d.name) << " " << format_variant(boundary_orientation(d)) << "\n";
  else
    os << "knot " << (d.name.empty() ? "K" : d.name) << "\n";
  for (int c = 0; c < d.n; ++c) {
    int i0 = d.incoming_under_port(c);
    os << "X";
    for (int k = 0; k < 4; ++k) os << " " << label[4 * c + (i0 + k) % 4];
    os << " " << (d.sign(c) > 0 ? "+1" : "-1") << "\n";
  }
  if (d.tangle) {
    os << "B";
    for (int b : {NW, NE, SW, SE})
      os << " " << kBoundaryNames[b] << ":" << label[d.bslot(b)] << ":" << (d.flow[d.bslot(b)] < 0 ? "in" : "out");
    os << "\n";
  }
  if (d.loops) os << "loops " << d.loops << "\n";
  return os.str();
}

Diagram crossing_tangle(int h) {
  if (h != 1 && h != -1) fail("crossing tangle needs h = +1 or -1");
  Diagram d;
  d.n = 1;
  d.tangle = true;
  d.partner.assign(8, -1);
  d.flow.assign(8, 0);
  const int pos[4] = {NW, SW, SE, NE};
  const int neg[4] = {SW, SE, NE, NW};
  for (int p = 0; p < 4; ++p) {
    int b = d.bslot(h > 0 ? pos[p] : neg[p]);
    d.partner[p] = b;
    d.partner[b] = p;
  }
  d.name = h > 0 ? "[1]" : "[-1]";
  return d;
}

static Diagram two_arcs(int a1, int b1, int a2, int b2, const char* name) {
  Diagram d;
  d.tangle = true;
  d.partner.assign(4, -1);
  d.flow.assign(4, 0);
  d.partner[a1] = b1;
  d.partner[b1] = a1;
  d.partner[a2] = b2;
  d.partner[b2] = a2;
  d.name = name;
  return d;
}

Diagram zero_tangle() { return two_arcs(NW, NE, SW, SE, "0"); }
Diagram infinity_tangle() { return two_arcs(NW, SW, NE, SE, "inf"); }

Diagram rational_tangle(const std::vector<int>& a) {
  Diagram t = infinity_tangle();
  for (size_t i = 0; i < a.size(); ++i) {
    Diagram x = crossing_tangle(a[i] > 0 ? 1 : -1);
    for (int k = 0; k < std::abs(a[i]); ++k) t = i % 2 == 0 ? tangle_stack(t, x) : tangle_add(t, x);
  }
  std::string nm = "R(";
  for (size_t i = 0; i < a.size(); ++i) nm += (i ? "," : "") + std::to_string(a[i]);
  t.name = nm + ")";
  return t;
}

Diagram tangle_add(const Diagram& a, const Diagram& b) {
  Diagram d = glue(a, b, {{NE, NW}, {SE, SW}}, {{NW, NW}, {SW, SW}}, {{NE, NE}, {SE, SE}});
  d.name = a.name + "+" + b.name;
  return d;
}

Diagram tangle_stack(const Diagram& a, const Diagram& b) {
  Diagram d = glue(a, b, {{SW, NW}, {SE, NE}}, {{NW, NW}, {NE, NE}}, {{SW, SW}, {SE, SE}});
  d.name = "stack(" + a.name + "," + b.name + ")";
  return d;
}

Diagram numerator(const Diagram& t) { return close(t, NW, NE, SW, SE, "N"); }
Diagram denominator(const Diagram& t) { return close(t, NW, SW, NE, SE, "D"); }

Diagram mirror(const Diagram& d) {
  Diagram m = d;
  auto mp = [&](int s) { return s < 4 * d.n ? 4 * (s / 4) + (s % 4 + 3) % 4 : s; };
  for (int s = 0; s < d.slots(); ++s) {
    m.partner[mp(s)] = mp(d.partner[s]);
    m.flow[mp(s)] = d.flow[s];
  }
  if (!d.name.empty()) m.name = d.name.back() == '*' ? d.name.substr(0, d.name.size() - 1) : d.name + "*";
  return m;
}

Diagram rotate(const Diagram& t) {
  if (!t.tangle) fail("rotation needs a tangle");
  Diagram r = t;
  auto mp = [&](int s) { return s < 4 * t.n ? s : t.bslot((s - 4 * t.n + 3) % 4); };
  for (int s = 0; s < t.slots(); ++s) {
    r.partner[mp(s)] = mp(t.partner[s]);
    r.flow[mp(s)] = t.flow[s];
  }
  r.name = "rot(" + t.name + ")";
  if (r.oriented()) r.variant = format_variant(boundary_orientation(r));
  return r;
}

namespace {

class ExprParser {
 public:
  ExprParser(const std::string& s, const TangleLookup& lookup) : s_(s), lookup_(lookup) {}

  Diagram parse() {
    Diagram d = sum();
    skip();
    if (i_ != s_.size()) err("unexpected '" + std::string(1, s_[i_]) + "'");
    return d;
  }

 private:
  const std::string& s_;
  const TangleLookup& lookup_;
  size_t i_ = 0;

  [[noreturn]] void err(const std::string& why) { fail("tangle expression '" + s_ + "': " + why); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) err(std::string("expected '") + c + "'");
  }
  std::string ident() {
    skip();
    size_t st = i_;
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (st == i_) err("expected a name");
    return s_.substr(st, i_ - st);
  }
  Diagram sum() {
    Diagram d = postfix();
    while (eat('+')) d = tangle_add(d, postfix());
    return d;
  }
  Diagram postfix() {
    Diagram d = primary();
    while (eat('*')) d = mirror(d);
    return d;
  }
  Diagram primary() {
    if (eat('(')) {
      Diagram d = sum();
      expect(')');
      return d;
    }
    std::string name = ident();
    skip();
    bool call = i_ < s_.size() && s_[i_] == '(';
    if (name == "R" && call) {
      ++i_;
      std::vector<int> a;
      skip();
      if (!eat(')')) {
        do {
          skip();
          size_t st = i_;
          if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
          while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
          a.push_back(to_int(s_.substr(st, i_ - st), "rational tangle entry"));
        } while (eat(','));
        expect(')');
      }
      return rational_tangle(a);
    }
    if (call && (name == "add" || name == "stack")) {
      ++i_;
      Diagram a = sum();
      expect(',');
      Diagram b = sum();
      expect(')');
      return name == "add" ? tangle_add(a, b) : tangle_stack(a, b);
    }
    if (call && (name == "mirror" || name == "rot" || name == "N" || name == "D")) {
      ++i_;
      Diagram a = sum();
      expect(')');
      if (name == "mirror") return mirror(a);
      if (name == "rot") return rotate(a);
      return name == "N" ? numerator(a) : denominator(a);
    }
    if (call) err("unknown function '" + name + "'");
    if (name == "zero") return zero_tangle();
    if (name == "inf") return infinity_tangle();
    if (lookup_) {
      if (auto d = lookup_(name)) return *d;
    }
    err("unknown tangle '" + name + "'");
  }
};

}  // namespace

Diagram build_expression(const std::string& text, const TangleLookup& lookup) {
  return ExprParser(text, lookup).parse();
}

Analysis analyze(const Diagram& d) {
  if (!d.oriented()) fail("diagram " + d.name + " is not oriented");
  Analysis a;
  a.n = d.n;
  a.tangle = d.tangle;
  a.loops = d.loops;
  const int S = d.slots();
  const int V = d.n + (d.tangle ? 1 : 0);

  a.edge_of_slot.assign(S, -1);
  for (int s = 0; s < S; ++s) {
    if (a.edge_of_slot[s] >= 0) continue;
    int p = d.partner[s];
    if (d.flow[s] == d.flow[p]) fail("internal: edge with two heads in " + d.name);
    int e = a.num_edges++;
    a.edge_of_slot[s] = a.edge_of_slot[p] = e;
    a.tail_slot.push_back(d.flow[s] < 0 ? s : p);
    a.head_slot.push_back(d.flow[s] < 0 ? p : s);
  }

  // arcs: edges joined where the over strand passes a crossing
  std::vector<int> uf(a.num_edges);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (int c = 0; c < d.n; ++c) {
    int x = find(a.edge_of_slot[4 * c + 1]), y = find(a.edge_of_slot[4 * c + 3]);
    if (x != y) uf[std::max(x, y)] = std::min(x, y);
  }
  std::vector<int> arc_id(a.num_edges, -1);
  a.arc_of_edge.resize(a.num_edges);
  for (int e = 0; e < a.num_edges; ++e) {
    int r = find(e);
    if (arc_id[r] < 0) arc_id[r] = a.num_arcs++;
    a.arc_of_edge[e] = arc_id[r];
  }
  auto arc_at = [&](int slot) { return a.arc_of_edge[a.edge_of_slot[slot]]; };

  for (int c = 0; c < d.n; ++c) {
    int i0 = d.incoming_under_port(c);
    int sg = d.sign(c);
    int in = arc_at(4 * c + i0), out = arc_at(4 * c + (i0 + 2) % 4), over = arc_at(4 * c + 1);
    CrossingRel r;
    r.sign = sg;
    r.over = over;
    r.src = sg > 0 ? in : out;
    r.dst = sg > 0 ? out : in;
    r.region_corner = 4 * c + (sg > 0 ? i0 : (i0 + 1) % 4);
    a.rels.push_back(r);
  }
  if (d.tangle)
    for (int b = 0; b < 4; ++b) a.boundary_arc[b] = arc_at(d.bslot(b));

  if (V == 0) {
    a.num_faces = 1;
    return a;
  }

  // faces by corner tracing; corner (v,k) lies between ports k and k+1
  a.face_of_corner.assign(4 * V, -1);
  for (int start = 0; start < 4 * V; ++start) {
    if (a.face_of_corner[start] >= 0) continue;
    int f = a.num_faces++;
    int cur = start;
    while (a.face_of_corner[cur] < 0) {
      a.face_of_corner[cur] = f;
      int v = cur / 4, k = cur % 4;
      cur = d.partner[4 * v + (k + 1) % 4];
    }
    if (cur != start) fail("face tracing failed in " + d.name + ": slot matching is not a valid rotation system");
  }

  // connectivity and Euler count
  std::vector<int> vu(V);
  std::iota(vu.begin(), vu.end(), 0);
  auto vfind = [&](int x) {
    while (vu[x] != x) x = vu[x] = vu[vu[x]];
    return x;
  };
  for (int s = 0; s < S; ++s) vu[vfind(s / 4)] = vfind(d.partner[s] / 4);
  int comps = 0;
  for (int v = 0; v < V; ++v) comps += vfind(v) == v;
  if (comps != 1) fail("diagram " + d.name + " is not connected (" + std::to_string(comps) + " pieces)");
  int E = S / 2;
  if (V - E + a.num_faces != 2)
    fail("diagram " + d.name + " fails the Euler check: V=" + std::to_string(V) + " E=" + std::to_string(E) +
         " F=" + std::to_string(a.num_faces));

  a.edge_left.resize(a.num_edges);
  a.edge_right.resize(a.num_edges);
  for (int e = 0; e < a.num_edges; ++e) {
    int t = a.tail_slot[e], v = t / 4, p = t % 4;
    a.edge_left[e] = a.face_of_corner[4 * v + p];
    a.edge_right[e] = a.face_of_corner[4 * v + (p + 3) % 4];
  }
  a.base_face = d.tangle ? a.face_of_corner[4 * d.n + SW] : 0;
  return a;
}

}  // namespace qcc

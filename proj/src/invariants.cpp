#include "qcc/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace qcc {

Multiset::Multiset(CoeffGroup g) : g_(std::move(g)), m_(g_.size(), 0) {}

void Multiset::merge(const Multiset& o) {
  if (!(g_ == o.g_)) throw std::invalid_argument("multisets over different groups");
  for (size_t i = 0; i < m_.size(); ++i) m_[i] += o.m_[i];
}

void Multiset::scale(uint64_t k) {
  for (auto& v : m_) v *= k;
}

uint64_t Multiset::total() const {
  uint64_t t = 0;
  for (auto v : m_) t += v;
  return t;
}

static std::string exponent(const std::string& e) {
  if (e == "1") return "";
  bool plain = e == "t" || std::all_of(e.begin(), e.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  return plain ? "^" + e : "^(" + e + ")";
}

std::string Multiset::format() const {
  std::string out;
  for (size_t a = 0; a < m_.size(); ++a) {
    if (!m_[a]) continue;
    if (!out.empty()) out += " + ";
    if (a == 0) {
      out += std::to_string(m_[a]);
      continue;
    }
    if (m_[a] != 1) out += std::to_string(m_[a]);
    out += "u" + exponent(g_.format(static_cast<int>(a)));
  }
  return out.empty() ? "0" : out;
}

Multiset Multiset::parse(const CoeffGroup& g, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  Multiset m(g);
  auto bad = [&](const std::string& why) { throw std::invalid_argument("bad multiset '" + text + "': " + why); };
  if (s.empty()) bad("empty");
  std::vector<std::string> terms;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      terms.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  terms.push_back(cur);
  for (const auto& t : terms) {
    if (t.empty()) bad("empty term");
    size_t i = 0;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    uint64_t k = 1;
    if (i > 0) k = std::stoull(t.substr(0, i));
    if (i == t.size()) {
      if (i == 0) bad("empty term");
      m.add(0, k);
      continue;
    }
    if (t[i] != 'u') bad("term '" + t + "'");
    ++i;
    std::string e = "1";
    if (i < t.size()) {
      if (t[i] != '^') bad("term '" + t + "'");
      e = t.substr(i + 1);
      if (e.size() >= 2 && e.front() == '(' && e.back() == ')') e = e.substr(1, e.size() - 2);
    }
    auto a = g.parse(e);
    if (!a) bad("exponent '" + e + "' not in " + g.label());
    m.add(*a, k);
  }
  return m;
}

Multiset multiset_product(const Multiset& a, const Multiset& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("multisets over different groups");
  const CoeffGroup& g = a.group();
  Multiset r(g);
  for (int i = 0; i < g.size(); ++i) {
    if (!a.count(i)) continue;
    for (int j = 0; j < g.size(); ++j)
      if (b.count(j)) r.add(g.add(i, j), a.count(i) * b.count(j));
  }
  return r;
}

bool multiset_included(const Multiset& a, const Multiset& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("multisets over different groups");
  for (int i = 0; i < a.group().size(); ++i)
    if (a.count(i) > b.count(i)) return false;
  return true;
}

std::optional<Multiset> multiset_divide(const Multiset& a, uint64_t k) {
  Multiset r(a.group());
  for (int i = 0; i < a.group().size(); ++i) {
    if (a.count(i) % k) return std::nullopt;
    r.add(i, a.count(i) / k);
  }
  return r;
}

std::vector<CrossingColors> crossing_colors(const Analysis& a, const Coloring& arcs, const std::vector<int>* regions) {
  std::vector<CrossingColors> out;
  for (const auto& r : a.rels)
    out.push_back({r.sign, regions ? (*regions)[a.face_of_corner[r.region_corner]] : -1, arcs[r.src], arcs[r.over]});
  return out;
}

namespace {

int weight2(const Analysis& a, const Cocycle& phi, const Coloring& col) {
  const CoeffGroup& g = phi.group();
  int w = 0;
  for (const auto& r : a.rels) {
    int v = phi(col[r.src], col[r.over]);
    w = r.sign > 0 ? g.add(w, v) : g.sub(w, v);
  }
  return w;
}

int weight3(const Analysis& a, const Cocycle& theta, const Coloring& col, const std::vector<int>& reg) {
  const CoeffGroup& g = theta.group();
  int w = 0;
  for (const auto& r : a.rels) {
    int v = theta(reg[a.face_of_corner[r.region_corner]], col[r.src], col[r.over]);
    w = r.sign > 0 ? g.add(w, v) : g.sub(w, v);
  }
  return w;
}

}  // namespace

Multiset state_sum_2(const Diagram& d, const Cocycle& phi) {
  if (phi.arity() != 2) throw std::invalid_argument("state_sum_2 needs a 2-cocycle");
  Analysis a = analyze(d);
  const Quandle& q = phi.quandle();
  Multiset m(phi.group());
  uint64_t lf = loop_factor(a, q);
  for_each_coloring(a, q, std::nullopt, [&](const Coloring& c) { m.add(weight2(a, phi, c), lf); });
  return m;
}

Multiset state_sum_3(const Diagram& d, const Cocycle& theta) {
  if (theta.arity() != 3) throw std::invalid_argument("state_sum_3 needs a 3-cocycle");
  Analysis a = analyze(d);
  const Quandle& q = theta.quandle();
  Multiset m(theta.group());
  uint64_t lf = loop_factor(a, q);
  RegionExtender ext(a);
  std::vector<int> reg;
  for_each_coloring(a, q, std::nullopt, [&](const Coloring& c) {
    for (int s = 0; s < q.size(); ++s) {
      ext.extend(q, c, s, reg);
      m.add(weight3(a, theta, c, reg), lf);
    }
  });
  return m;
}

Multiset state_sum(const Diagram& d, const Cocycle& c) {
  return c.arity() == 2 ? state_sum_2(d, c) : state_sum_3(d, c);
}

TangleInvariant tangle_invariant(const Diagram& t, const Cocycle& c) {
  if (!t.tangle) throw std::invalid_argument("tangle_invariant needs a tangle");
  Analysis a = analyze(t);
  const Quandle& q = c.quandle();
  int n = q.size();
  TangleInvariant ti{c.arity(), n, {}, Multiset(c.group())};
  ti.part.assign(c.arity() == 2 ? n : n * n, Multiset(c.group()));
  uint64_t lf = loop_factor(a, q);
  RegionExtender ext(a);
  std::vector<int> reg;
  for (int x = 0; x < n; ++x) {
    for_each_coloring(a, q, x, [&](const Coloring& col) {
      if (c.arity() == 2) {
        ti.part[x].add(weight2(a, c, col), lf);
        return;
      }
      for (int s = 0; s < n; ++s) {
        ext.extend(q, col, s, reg);
        ti.part[x * n + s].add(weight3(a, c, col, reg), lf);
      }
    });
  }
  for (const auto& p : ti.part) ti.total.merge(p);
  return ti;
}

DisjointUnion disjoint_union(const std::vector<TangleInvariant>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint union of no tangles");
  const CoeffGroup& g = parts[0].total.group();
  DisjointUnion du(g);
  const size_t width = parts[0].part.size();
  for (const auto& p : parts)
    if (p.part.size() != width || !(p.total.group() == g) || p.arity != parts[0].arity)
      throw std::invalid_argument("disjoint union parts use different cocycles");
  const int n = parts[0].n, arity = parts[0].arity;

  for (size_t i = 0; i < width; ++i) {
    Multiset prod = parts[0].part[i];
    for (size_t j = 1; j < parts.size(); ++j) prod = multiset_product(prod, parts[j].part[i]);
    du.direct.merge(prod);
  }

  for (size_t j = 0; j < parts.size() && du.uniform; ++j)
    for (size_t i = 1; i < width; ++i)
      if (parts[j].part[i] != parts[j].part[0]) {
        du.uniform = false;
        if (arity == 2) {
          du.witness = {0, static_cast<int>(i)};
          du.refusal = "tangle " + std::to_string(j + 1) + ": boundary colors 0 and " + std::to_string(i) + " give different invariants";
        } else {
          du.witness = {0, 0, static_cast<int>(i) / n, static_cast<int>(i) % n};
          du.refusal = "tangle " + std::to_string(j + 1) + ": (x,s)=(0,0) and (" + std::to_string(i / n) + "," +
                       std::to_string(i % n) + ") give different invariants";
        }
        break;
      }
  if (!du.uniform) return du;

  Multiset prod = parts[0].total;
  uint64_t denom = 1;
  for (size_t j = 1; j < parts.size(); ++j) {
    prod = multiset_product(prod, parts[j].total);
    denom *= static_cast<uint64_t>(n) * (arity == 3 ? n : 1);
  }
  du.formula = multiset_divide(prod, denom);
  if (!du.formula) throw std::logic_error("product formula is not divisible by |X|^(k-1)");
  du.agree = *du.formula == du.direct;
  if (!du.agree) throw std::logic_error("product formula disagrees with the direct sum");
  return du;
}

DisjointUnion disjoint_union(const std::vector<Diagram>& tangles, const Cocycle& c) {
  std::vector<TangleInvariant> parts;
  for (const auto& t : tangles) parts.push_back(tangle_invariant(t, c));
  return disjoint_union(parts);
}

}  // namespace qcc

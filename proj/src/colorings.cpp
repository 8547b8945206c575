#include "qcc/colorings.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace qcc {

bool satisfies(const Analysis& a, const Quandle& q, const Coloring& c, std::optional<int> boundary) {
  if (static_cast<int>(c.size()) != a.num_arcs) return false;
  for (int v : c)
    if (v < 0 || v >= q.size()) return false;
  for (const auto& r : a.rels)
    if (q.star(c[r.src], c[r.over]) != c[r.dst]) return false;
  if (boundary && a.tangle)
    for (int b = 0; b < 4; ++b)
      if (c[a.boundary_arc[b]] != *boundary) return false;
  return true;
}

namespace {

class Backtracker {
 public:
  Backtracker(const Analysis& a, const Quandle& q, const ColoringVisitor& visit) : a_(a), q_(q), visit_(visit) {}

  void run(Coloring col) { search(std::move(col)); }

 private:
  const Analysis& a_;
  const Quandle& q_;
  const ColoringVisitor& visit_;

  bool propagate(Coloring& c) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& r : a_.rels) {
        int o = c[r.over];
        if (o < 0) continue;
        if (c[r.src] >= 0) {
          int v = q_.star(c[r.src], o);
          if (c[r.dst] < 0) {
            c[r.dst] = v;
            changed = true;
          } else if (c[r.dst] != v) {
            return false;
          }
        } else if (c[r.dst] >= 0) {
          c[r.src] = q_.unstar(c[r.dst], o);
          changed = true;
        }
      }
    }
    return true;
  }

  // prefer an arc whose value would immediately force another
  int pick(const Coloring& c) const {
    for (const auto& r : a_.rels)
      if (c[r.over] < 0 && (c[r.src] >= 0 || c[r.dst] >= 0)) return r.over;
    for (int i = 0; i < a_.num_arcs; ++i)
      if (c[i] < 0) return i;
    return -1;
  }

  void search(Coloring c) {
    if (!propagate(c)) return;
    int i = pick(c);
    if (i < 0) {
      visit_(c);
      return;
    }
    for (int v = 0; v < q_.size(); ++v) {
      Coloring next = c;
      next[i] = v;
      search(std::move(next));
    }
  }
};

// Z_p^d model of a linear quandle: a*b = M a + (I - M) b.
struct LinearModel {
  int p = 0, d = 0;
  std::vector<int> m;  // d x d, row-major
  std::function<std::vector<int>(int)> decode;
  std::function<int(const std::vector<int>&)> encode;
};

std::optional<LinearModel> linear_model(const Quandle& q) {
  LinearModel lm;
  if (auto r = q.ring()) {
    lm.p = r->p();
    lm.d = r->degree();
    lm.m.assign(lm.d * lm.d, 0);
    for (int j = 0; j < lm.d; ++j) {
      std::vector<int> e(lm.d, 0);
      e[j] = 1;
      auto col = r->decode(r->mul(r->t(), r->encode(e)));
      for (int i = 0; i < lm.d; ++i) lm.m[i * lm.d + j] = col[i];
    }
    lm.decode = [r](int x) { return r->decode(x); };
    lm.encode = [r](const std::vector<int>& v) { return r->encode(v); };
    return lm;
  }
  int n = q.dihedral_order();
  if (n > 0 && is_prime(n)) {
    lm.p = n;
    lm.d = 1;
    lm.m = {n - 1};
    lm.decode = [](int x) { return std::vector<int>{x}; };
    lm.encode = [](const std::vector<int>& v) { return v[0]; };
    return lm;
  }
  return std::nullopt;
}

int modp(long long v, int p) {
  v %= p;
  return static_cast<int>(v < 0 ? v + p : v);
}

int inverse_mod(int a, int p) {
  int r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = static_cast<int>(1LL * r * b % p);
    b = static_cast<int>(1LL * b * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

void for_each_coloring_backtrack(const Analysis& a, const Quandle& q, std::optional<int> boundary,
                                 const ColoringVisitor& visit) {
  Coloring c(a.num_arcs, -1);
  if (boundary && a.tangle)
    for (int b = 0; b < 4; ++b) c[a.boundary_arc[b]] = *boundary;
  Backtracker(a, q, visit).run(std::move(c));
}

bool has_linear_form(const Quandle& q) { return linear_model(q).has_value(); }

void for_each_coloring_linear(const Analysis& a, const Quandle& q, std::optional<int> boundary,
                              const ColoringVisitor& visit) {
  auto lmo = linear_model(q);
  if (!lmo) throw std::invalid_argument("quandle " + q.label() + " has no linear form");
  const LinearModel& L = *lmo;
  const int p = L.p, d = L.d, nv = a.num_arcs * d;

  // dst - M src - (I - M) over = 0, one block of d rows per crossing
  std::vector<std::vector<int>> rows;
  for (const auto& r : a.rels) {
    for (int i = 0; i < d; ++i) {
      std::vector<int> row(nv, 0);
      auto acc = [&](int arc, int j, long long v) { row[arc * d + j] = modp(row[arc * d + j] + v, p); };
      acc(r.dst, i, 1);
      for (int j = 0; j < d; ++j) {
        int mij = L.m[i * d + j];
        acc(r.src, j, -mij);
        acc(r.over, j, -((i == j ? 1 : 0) - mij));
      }
      rows.push_back(std::move(row));
    }
  }
  // boundary arcs pinned to 0; the shift by x comes afterwards
  if (boundary && a.tangle)
    for (int b = 0; b < 4; ++b)
      for (int i = 0; i < d; ++i) {
        std::vector<int> row(nv, 0);
        row[a.boundary_arc[b] * d + i] = 1;
        rows.push_back(std::move(row));
      }

  // reduced row echelon form
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < nv && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col]) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = inverse_mod(rows[rank][col], p);
    for (auto& v : rows[rank]) v = static_cast<int>(1LL * v * inv % p);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int f = rows[r][col];
      for (int k = 0; k < nv; ++k)
        if (rows[rank][k]) rows[r][k] = modp(rows[r][k] - 1LL * f * rows[rank][k], p);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<char> is_pivot(nv, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < nv; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  std::vector<int> shift(d, 0);
  if (boundary && a.tangle) shift = L.decode(*boundary);

  std::vector<int> x(nv, 0), digits(free_cols.size(), 0);
  Coloring col(a.num_arcs);
  std::vector<int> vec(d);
  for (;;) {
    for (size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = digits[k];
    for (int r = 0; r < rank; ++r) {
      long long s = 0;
      for (int c : free_cols)
        if (rows[r][c]) s += 1LL * rows[r][c] * x[c];
      x[pivot_col[r]] = modp(-s, p);
    }
    for (int arc = 0; arc < a.num_arcs; ++arc) {
      for (int i = 0; i < d; ++i) vec[i] = (x[arc * d + i] + shift[i]) % p;
      col[arc] = L.encode(vec);
    }
    visit(col);
    size_t k = 0;
    while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
    if (k == digits.size()) break;
  }
}

void for_each_coloring(const Analysis& a, const Quandle& q, std::optional<int> boundary, const ColoringVisitor& visit) {
  if (has_linear_form(q))
    for_each_coloring_linear(a, q, boundary, visit);
  else
    for_each_coloring_backtrack(a, q, boundary, visit);
}

static std::vector<Coloring> collect(void (*f)(const Analysis&, const Quandle&, std::optional<int>, const ColoringVisitor&),
                                     const Analysis& a, const Quandle& q, std::optional<int> boundary) {
  std::vector<Coloring> out;
  f(a, q, boundary, [&](const Coloring& c) { out.push_back(c); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Coloring> enumerate_colorings(const Analysis& a, const Quandle& q, std::optional<int> boundary) {
  return collect(for_each_coloring_backtrack, a, q, boundary);
}

std::vector<Coloring> solve_linear_colorings(const Analysis& a, const Quandle& q, std::optional<int> boundary) {
  return collect(for_each_coloring_linear, a, q, boundary);
}

uint64_t count_arc_colorings(const Analysis& a, const Quandle& q, std::optional<int> boundary) {
  uint64_t n = 0;
  for_each_coloring(a, q, boundary, [&](const Coloring&) { ++n; });
  return n;
}

uint64_t loop_factor(const Analysis& a, const Quandle& q) {
  uint64_t f = 1;
  for (int i = 0; i < a.loops; ++i) f *= static_cast<uint64_t>(q.size());
  return f;
}

uint64_t count_colorings(const Analysis& a, const Quandle& q) {
  uint64_t total = 0;
  if (a.tangle)
    for (int x = 0; x < q.size(); ++x) total += count_arc_colorings(a, q, x);
  else
    total = count_arc_colorings(a, q);
  return total * loop_factor(a, q);
}

RegionExtender::RegionExtender(const Analysis& a, int base_face) : a_(&a), base_(base_face) {
  if (a.num_faces == 0) return;
  std::vector<std::vector<std::pair<int, int>>> adj(a.num_faces);  // face -> (edge, other face)
  for (int e = 0; e < a.num_edges && !a.edge_left.empty(); ++e) {
    adj[a.edge_left[e]].push_back({e, a.edge_right[e]});
    adj[a.edge_right[e]].push_back({e, a.edge_left[e]});
  }
  std::vector<char> seen(a.num_faces, 0);
  std::deque<int> queue{base_face};
  seen[base_face] = 1;
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (auto [e, g] : adj[f]) {
      if (seen[g]) continue;
      seen[g] = 1;
      steps_.push_back({g, f, a.arc_of_edge[e], a.edge_left[e] == g});
      queue.push_back(g);
    }
  }
  if (static_cast<int>(steps_.size()) + 1 != a.num_faces) throw std::logic_error("region graph is not connected");
}

void RegionExtender::extend(const Quandle& q, const Coloring& arcs, int s, std::vector<int>& regions, bool check) const {
  regions.assign(a_->num_faces, -1);
  regions[base_] = s;
  for (const auto& st : steps_) {
    int from = regions[st.from], y = arcs[st.arc];
    regions[st.face] = st.left ? q.star(from, y) : q.unstar(from, y);
  }
  if (!check) return;
  for (int e = 0; e < a_->num_edges && !a_->edge_left.empty(); ++e)
    if (regions[a_->edge_left[e]] != q.star(regions[a_->edge_right[e]], arcs[a_->arc_of_edge[e]]))
      throw std::logic_error("region coloring is inconsistent across edge " + std::to_string(e));
}

std::vector<int> RegionExtender::extend(const Quandle& q, const Coloring& arcs, int s) const {
  std::vector<int> r;
  extend(q, arcs, s, r, true);
  return r;
}

}  // namespace qcc

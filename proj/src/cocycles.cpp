#include "qcc/cocycles.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcc {

struct PolyExpr::Node {
  enum Kind { Num, Var, Add, Sub, Mul, Pow, Neg } kind;
  long long value = 0;  // Num literal, Var index, Pow exponent
  std::shared_ptr<const Node> a, b;
};

namespace {

using NodeP = std::shared_ptr<const PolyExpr::Node>;
using N = PolyExpr::Node;

NodeP mk(N::Kind k, NodeP a = nullptr, NodeP b = nullptr, long long v = 0) {
  auto n = std::make_shared<N>();
  n->kind = k;
  n->a = std::move(a);
  n->b = std::move(b);
  n->value = v;
  return n;
}

// expr := term (('+'|'-') term)* ; term := unary ('*'? unary)* ; unary := '-' unary | power
// power := atom ('^' int)? ; atom := int | x | y | z | t | '(' expr ')'
class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodeP parse() {
    NodeP e = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return e;
  }

 private:
  const std::string& s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("cocycle expression '" + s_ + "': " + why + " at offset " + std::to_string(i_));
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  NodeP expr() {
    NodeP l = term();
    for (;;) {
      if (peek('+')) {
        ++i_;
        l = mk(N::Add, l, term());
      } else if (peek('-')) {
        ++i_;
        l = mk(N::Sub, l, term());
      } else {
        return l;
      }
    }
  }
  bool starts_atom() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || c == 'x' || c == 'y' || c == 'z' || c == 't' || std::isdigit(static_cast<unsigned char>(c));
  }
  NodeP term() {
    NodeP l = unary();
    for (;;) {
      if (peek('*')) {
        ++i_;
        l = mk(N::Mul, l, unary());
      } else if (starts_atom()) {
        l = mk(N::Mul, l, unary());
      } else {
        return l;
      }
    }
  }
  NodeP unary() {
    if (peek('-')) {
      ++i_;
      return mk(N::Neg, unary());
    }
    return power();
  }
  NodeP power() {
    NodeP a = atom();
    if (peek('^')) {
      ++i_;
      skip();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("exponent must be a number");
      long long e = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        e = e * 10 + (s_[i_++] - '0');
        if (e > 64) fail("exponent too large");
      }
      return mk(N::Pow, a, nullptr, e);
    }
    return a;
  }
  NodeP atom() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      NodeP e = expr();
      if (!peek(')')) fail("missing ')'");
      ++i_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        v = v * 10 + (s_[i_++] - '0');
        if (v > 1000000) fail("constant too large");
      }
      return mk(N::Num, nullptr, nullptr, v);
    }
    const std::string vars = "xyzt";
    auto pos = vars.find(c);
    if (pos == std::string::npos) fail("unknown symbol '" + std::string(1, c) + "'");
    ++i_;
    return mk(N::Var, nullptr, nullptr, static_cast<long long>(pos));
  }
};

using Poly = std::map<PolyExpr::Monomial, long long>;

void normalize(Poly& p, int m) {
  for (auto it = p.begin(); it != p.end();) {
    it->second %= m;
    if (it->second < 0) it->second += m;
    if (it->second == 0)
      it = p.erase(it);
    else
      ++it;
  }
}

Poly pmul(const Poly& a, const Poly& b, int m) {
  Poly r;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      PolyExpr::Monomial k;
      for (int i = 0; i < 4; ++i) k[i] = ma[i] + mb[i];
      r[k] = (r[k] + ca * cb) % m;
    }
  normalize(r, m);
  return r;
}

Poly expand_node(const N& n, int m) {
  Poly r;
  switch (n.kind) {
    case N::Num:
      r[{0, 0, 0, 0}] = n.value;
      break;
    case N::Var: {
      PolyExpr::Monomial k{0, 0, 0, 0};
      k[n.value] = 1;
      r[k] = 1;
      break;
    }
    case N::Neg:
      r = expand_node(*n.a, m);
      for (auto& kv : r) kv.second = -kv.second;
      break;
    case N::Add:
    case N::Sub: {
      r = expand_node(*n.a, m);
      Poly b = expand_node(*n.b, m);
      for (auto& [k, c] : b) r[k] += n.kind == N::Add ? c : -c;
      break;
    }
    case N::Mul:
      r = pmul(expand_node(*n.a, m), expand_node(*n.b, m), m);
      break;
    case N::Pow: {
      Poly base = expand_node(*n.a, m);
      r[{0, 0, 0, 0}] = 1;
      for (long long i = 0; i < n.value; ++i) r = pmul(r, base, m);
      break;
    }
  }
  normalize(r, m);
  return r;
}

int eval_node(const N& n, const AlexanderRing& R, const std::vector<int>& v) {
  switch (n.kind) {
    case N::Num:
      return R.from_int(n.value);
    case N::Var:
      if (n.value == 3) return R.t();
      if (n.value >= static_cast<long long>(v.size())) throw std::invalid_argument("cocycle expression uses too many variables");
      return v[n.value];
    case N::Neg:
      return R.neg(eval_node(*n.a, R, v));
    case N::Add:
      return R.add(eval_node(*n.a, R, v), eval_node(*n.b, R, v));
    case N::Sub:
      return R.sub(eval_node(*n.a, R, v), eval_node(*n.b, R, v));
    case N::Mul:
      return R.mul(eval_node(*n.a, R, v), eval_node(*n.b, R, v));
    case N::Pow:
      return R.pow(eval_node(*n.a, R, v), static_cast<int>(n.value));
  }
  return 0;
}

int max_var(const N& n) {
  int r = n.kind == N::Var && n.value < 3 ? static_cast<int>(n.value) + 1 : 0;
  if (n.a) r = std::max(r, max_var(*n.a));
  if (n.b) r = std::max(r, max_var(*n.b));
  return r;
}

}  // namespace

PolyExpr PolyExpr::parse(const std::string& text) {
  PolyExpr e;
  e.text_ = text;
  e.root_ = Parser(text).parse();
  return e;
}

int PolyExpr::arity() const { return max_var(*root_); }

std::map<PolyExpr::Monomial, long long> PolyExpr::expand(int p) const { return expand_node(*root_, p); }

int PolyExpr::evaluate(const AlexanderRing& r, const std::vector<int>& vars) const {
  int acc = r.from_int(0);
  for (auto& [mono, c] : expand(r.p())) {
    int term = r.from_int(c);
    for (int i = 0; i < 3; ++i) {
      if (mono[i] == 0) continue;
      if (i >= static_cast<int>(vars.size())) throw std::invalid_argument("cocycle expression uses too many variables");
      term = r.mul(term, r.pow(vars[i], mono[i]));
    }
    term = r.mul(term, r.pow(r.t(), mono[3]));
    acc = r.add(acc, term);
  }
  return acc;
}

int PolyExpr::evaluate_direct(const AlexanderRing& r, const std::vector<int>& vars) const {
  return eval_node(*root_, r, vars);
}

Cocycle::Cocycle(QuandlePtr q, CoeffGroup group, int arity, std::vector<int> table, std::string label)
    : q_(std::move(q)), group_(std::move(group)), arity_(arity), n_(q_->size()), table_(std::move(table)),
      label_(std::move(label)) {
  if (arity_ != 2 && arity_ != 3) throw std::invalid_argument("cocycle arity must be 2 or 3");
  size_t want = static_cast<size_t>(n_) * n_ * (arity_ == 3 ? n_ : 1);
  if (table_.size() != want) throw std::invalid_argument("cocycle table has wrong size");
  for (int v : table_)
    if (v < 0 || v >= group_.size()) throw std::invalid_argument("cocycle value outside coefficient group");
}

static std::string tuple_str(const std::vector<int>& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

CocycleReport verify_2cocycle(const Cocycle& c) {
  CocycleReport rep;
  const Quandle& q = c.quandle();
  const CoeffGroup& A = c.group();
  int n = q.size();
  for (int x = 0; x < n; ++x)
    if (c(x, x) != 0) {
      rep.ok = false;
      rep.witness = {x, x};
      rep.residual = c(x, x);
      rep.message = "phi(x,x) != 0 at " + tuple_str(rep.witness);
      return rep;
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        int r = A.sub(c(x, y), c(x, z));
        r = A.add(r, c(q.star(x, y), z));
        r = A.sub(r, c(q.star(x, z), q.star(y, z)));
        if (r != 0) {
          rep.ok = false;
          rep.witness = {x, y, z};
          rep.residual = r;
          rep.message = "2-cocycle condition fails at " + tuple_str(rep.witness) + ", residual " + A.format(r);
          return rep;
        }
      }
  return rep;
}

CocycleReport verify_3cocycle(const Cocycle& c) {
  CocycleReport rep;
  const Quandle& q = c.quandle();
  const CoeffGroup& A = c.group();
  int n = q.size();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (c(x, x, y) != 0 || c(x, y, y) != 0) {
        rep.ok = false;
        rep.witness = {x, y};
        rep.residual = c(x, x, y) != 0 ? c(x, x, y) : c(x, y, y);
        rep.message = "degenerate value nonzero at " + tuple_str(rep.witness);
        return rep;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int xy = q.star(x, y);
      for (int z = 0; z < n; ++z) {
        int xz = q.star(x, z), yz = q.star(y, z);
        for (int w = 0; w < n; ++w) {
          int r = A.sub(c(x, z, w), c(x, y, w));
          r = A.add(r, c(x, y, z));
          r = A.sub(r, c(xy, z, w));
          r = A.add(r, c(xz, yz, w));
          r = A.sub(r, c(q.star(x, w), q.star(y, w), q.star(z, w)));
          if (r != 0) {
            rep.ok = false;
            rep.witness = {x, y, z, w};
            rep.residual = r;
            rep.message = "3-cocycle condition fails at " + tuple_str(rep.witness) + ", residual " + A.format(r);
            return rep;
          }
        }
      }
    }
  return rep;
}

CocycleReport verify_cocycle(const Cocycle& c) { return c.arity() == 2 ? verify_2cocycle(c) : verify_3cocycle(c); }

CocyclePtr make_table_cocycle(QuandlePtr q, CoeffGroup g, int arity, std::vector<int> table, std::string label) {
  return std::make_shared<Cocycle>(std::move(q), std::move(g), arity, std::move(table), std::move(label));
}

CocyclePtr make_poly_cocycle(QuandlePtr alexander, int arity, const std::string& expr) {
  auto ring = alexander->ring();
  if (!ring) throw std::invalid_argument("polynomial cocycles need an Alexander quandle");
  PolyExpr e = PolyExpr::parse(expr);
  if (e.arity() > arity)
    throw std::invalid_argument("expression '" + expr + "' uses more than " + std::to_string(arity) + " variables");
  int n = alexander->size();
  std::vector<int> table;
  table.reserve(static_cast<size_t>(n) * n * (arity == 3 ? n : 1));
  std::vector<int> v(arity);
  if (arity == 2) {
    for (v[0] = 0; v[0] < n; ++v[0])
      for (v[1] = 0; v[1] < n; ++v[1]) table.push_back(e.evaluate_direct(*ring, v));
  } else {
    for (v[0] = 0; v[0] < n; ++v[0])
      for (v[1] = 0; v[1] < n; ++v[1])
        for (v[2] = 0; v[2] < n; ++v[2]) table.push_back(e.evaluate_direct(*ring, v));
  }
  auto c = make_table_cocycle(alexander, CoeffGroup::additive(ring), arity, std::move(table),
                              "poly" + std::to_string(arity) + ":" + expr);
  CocycleReport r = verify_cocycle(*c);
  if (!r.ok) throw VerificationError("not a cocycle: " + expr + " over " + alexander->label() + ": " + r.message);
  return c;
}

int mochizuki_value(int p, int x, int y, int z) {
  auto ipow = [](long long b, int e) {
    long long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
  };
  long long bracket = (2 * ipow(z, p) - ipow(y, p)) - ipow(2LL * z - y, p);
  if (bracket % p != 0) throw std::logic_error("mochizuki: bracket not divisible by p");
  long long v = (static_cast<long long>(x) - y) * (bracket / p) % p;
  return static_cast<int>(v < 0 ? v + p : v);
}

CocyclePtr make_mochizuki_cocycle(int p) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("mochizuki: p must be an odd prime");
  if (p > 13) throw std::invalid_argument("mochizuki: p too large for exact integer evaluation");
  auto q = make_dihedral(p);
  std::vector<int> table;
  table.reserve(p * p * p);
  for (int x = 0; x < p; ++x)
    for (int y = 0; y < p; ++y)
      for (int z = 0; z < p; ++z) table.push_back(mochizuki_value(p, x, y, z));
  auto c = make_table_cocycle(q, CoeffGroup::cyclic(p), 3, std::move(table), "mochizuki:" + std::to_string(p));
  CocycleReport r = verify_3cocycle(*c);
  if (!r.ok) throw std::logic_error("mochizuki cocycle failed verification: " + r.message);
  return c;
}

CocyclePtr parse_cocycle_spec(QuandlePtr q, const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("bad cocycle spec '" + spec + "'");
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "poly2" || kind == "poly3") return make_poly_cocycle(q, kind == "poly2" ? 2 : 3, rest);
  if (kind == "mochizuki") {
    int p = 0;
    try {
      size_t used = 0;
      p = std::stoi(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("bad mochizuki prime '" + rest + "'");
    }
    if (q->dihedral_order() != p)
      throw std::invalid_argument("mochizuki:" + rest + " needs quandle dihedral:" + rest);
    return make_mochizuki_cocycle(p);
  }
  throw std::invalid_argument("unknown cocycle kind '" + kind + "' (use poly2, poly3 or mochizuki)");
}

std::string write_cocycle_table(const Cocycle& c) {
  std::ostringstream os;
  int n = c.quandle().size();
  std::string label = c.label();
  for (auto& ch : label)
    if (std::isspace(static_cast<unsigned char>(ch))) ch = '_';
  os << "cocycle " << label << " " << c.arity() << " " << n << " " << c.group().label() << "\n";
  int per_line = n;
  const auto& t = c.table();
  for (size_t i = 0; i < t.size(); ++i) os << c.group().format(t[i]) << ((i + 1) % per_line ? " " : "\n");
  return os.str();
}

CocyclePtr read_cocycle_table(QuandlePtr q, const std::string& text) {
  std::istringstream is(text);
  std::string kw, name, glabel;
  int arity = 0, n = 0;
  if (!(is >> kw >> name >> arity >> n >> glabel) || kw != "cocycle")
    throw std::invalid_argument("cocycle table: expected header 'cocycle <name> <arity> <n> <group>'");
  if (arity != 2 && arity != 3) throw std::invalid_argument("cocycle table: arity must be 2 or 3");
  if (n != q->size())
    throw std::invalid_argument("cocycle table: size " + std::to_string(n) + " does not match the quandle's " +
                                std::to_string(q->size()));
  CoeffGroup g = CoeffGroup::cyclic(1);
  if (q->ring() && glabel == CoeffGroup::additive(q->ring()).label()) {
    g = CoeffGroup::additive(q->ring());
  } else {
    int m = 0;
    try {
      size_t used = 0;
      if (glabel.size() < 2 || glabel[0] != 'Z') throw std::invalid_argument("");
      m = std::stoi(glabel.substr(1), &used);
      if (used + 1 != glabel.size() || m < 1) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("cocycle table: unknown group '" + glabel + "' (use Z<m> or the quandle's ring)");
    }
    g = CoeffGroup::cyclic(m);
  }
  size_t count = arity == 2 ? static_cast<size_t>(n) * n : static_cast<size_t>(n) * n * n;
  std::vector<int> table(count);
  std::string tok;
  for (size_t i = 0; i < count; ++i) {
    if (!(is >> tok)) throw std::invalid_argument("cocycle table: expected " + std::to_string(count) + " values");
    auto v = g.parse(tok);
    if (!v) throw std::invalid_argument("cocycle table: '" + tok + "' is not an element of " + g.label());
    table[i] = *v;
  }
  if (is >> tok) throw std::invalid_argument("cocycle table: trailing data '" + tok + "'");
  auto c = make_table_cocycle(std::move(q), g, arity, std::move(table), name);
  CocycleReport r = verify_cocycle(*c);
  if (!r.ok) throw VerificationError("cocycle table " + name + " is not a cocycle: " + r.message);
  return c;
}

}  // namespace qcc

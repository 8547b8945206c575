#include "qcc/algebra.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qcc {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

static int mod(long long a, int m) {
  long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

AlexanderRing::AlexanderRing(int p, std::vector<int> h) : p_(p), h_(std::move(h)) {
  if (!is_prime(p_)) throw std::invalid_argument("alexander: modulus " + std::to_string(p_) + " is not prime");
  for (auto& c : h_) c = mod(c, p_);
  while (!h_.empty() && h_.back() == 0) h_.pop_back();
  if (h_.size() < 2) throw std::invalid_argument("alexander: polynomial must have degree >= 1");
  if (h_.back() != 1) throw std::invalid_argument("alexander: polynomial must be monic");
  if (h_[0] == 0) throw std::invalid_argument("alexander: t is not invertible (h(0) = 0)");
  d_ = static_cast<int>(h_.size()) - 1;
  size_ = 1;
  for (int i = 0; i < d_; ++i) {
    size_ *= p_;
    if (size_ > 4096) throw std::invalid_argument("alexander: ring too large");
  }
  add_.resize(size_ * size_);
  mul_.resize(size_ * size_);
  neg_.resize(size_);
  std::vector<std::vector<int>> dec(size_);
  for (int a = 0; a < size_; ++a) dec[a] = decode(a);
  for (int a = 0; a < size_; ++a) {
    std::vector<int> n(d_);
    for (int i = 0; i < d_; ++i) n[i] = mod(-dec[a][i], p_);
    neg_[a] = encode(n);
    for (int b = 0; b < size_; ++b) {
      std::vector<int> s(d_);
      for (int i = 0; i < d_; ++i) s[i] = (dec[a][i] + dec[b][i]) % p_;
      add_[a * size_ + b] = encode(s);
      // schoolbook product, then reduce by the monic modulus
      std::vector<long long> prod(2 * d_, 0);
      for (int i = 0; i < d_; ++i)
        for (int j = 0; j < d_; ++j) prod[i + j] += static_cast<long long>(dec[a][i]) * dec[b][j];
      for (int k = 2 * d_ - 1; k >= d_; --k) {
        long long c = prod[k] % p_;
        if (c == 0) continue;
        for (int i = 0; i <= d_; ++i) prod[k - d_ + i] -= c * h_[i];
      }
      std::vector<int> r(d_);
      for (int i = 0; i < d_; ++i) r[i] = mod(prod[i], p_);
      mul_[a * size_ + b] = encode(r);
    }
  }
  std::vector<int> v(d_, 0);
  v[0] = 1;
  one_ = encode(v);
  if (d_ >= 2) {
    v[0] = 0;
    v[1] = 1;
    t_ = encode(v);
  } else {
    v[0] = mod(-h_[0], p_);
    t_ = encode(v);
  }
}

std::vector<int> AlexanderRing::decode(int a) const {
  std::vector<int> v(d_);
  for (int i = 0; i < d_; ++i) {
    v[i] = a % p_;
    a /= p_;
  }
  return v;
}

int AlexanderRing::encode(const std::vector<int>& v) const {
  int a = 0;
  for (int i = d_ - 1; i >= 0; --i) a = a * p_ + mod(v[i], p_);
  return a;
}

int AlexanderRing::pow(int a, int e) const {
  int r = one_;
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

int AlexanderRing::from_int(long long v) const {
  std::vector<int> c(d_, 0);
  c[0] = mod(v, p_);
  return encode(c);
}

static std::string format_coeffs(const std::vector<int>& v) {
  std::string out;
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    int c = v[i];
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c);
    out += "t";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

std::string AlexanderRing::format(int a) const { return format_coeffs(decode(a)); }

std::string AlexanderRing::modulus_string() const { return format_coeffs(h_); }

// Accepts sums of terms like 3, t, 2t, t^2, 4*t^3 with + and -.
std::vector<int> parse_t_polynomial(const std::string& text, int p) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial");
  std::vector<long long> coeff;
  size_t i = 0;
  auto bad = [&]() { return std::invalid_argument("bad polynomial in t: '" + text + "'"); };
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      throw bad();
    }
    long long c = 1;
    bool have_num = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      c = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) c = c * 10 + (s[i++] - '0');
      have_num = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    int e = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
        e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) e = e * 10 + (s[i++] - '0');
      }
    } else if (!have_num) {
      throw bad();
    }
    if (static_cast<int>(coeff.size()) <= e) coeff.resize(e + 1, 0);
    coeff[e] += sign * c;
  }
  std::vector<int> out(coeff.size());
  for (size_t k = 0; k < coeff.size(); ++k) out[k] = mod(coeff[k], p);
  return out;
}

Quandle::Quandle(std::string label, int n, std::vector<int> op) : label_(std::move(label)), n_(n), op_(std::move(op)) {
  if (n_ < 1 || static_cast<int>(op_.size()) != n_ * n_) throw std::invalid_argument("quandle: table has wrong shape");
  AxiomReport r = verify_quandle_axioms(n_, op_);
  if (!r.ok()) throw VerificationError("quandle " + label_ + ": " + r.witness);
  inv_.assign(n_ * n_, -1);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) inv_[op_[a * n_ + b] * n_ + b] = a;
}

std::string Quandle::element_name(int a) const {
  if (ring_) return ring_->format(a);
  return std::to_string(a);
}

AxiomReport verify_quandle_axioms(int n, const std::vector<int>& op) {
  AxiomReport r;
  for (int v : op)
    if (v < 0 || v >= n) {
      r.idempotent = r.right_invertible = r.self_distributive = false;
      r.witness = "table entry out of range";
      return r;
    }
  auto at = [&](int a, int b) { return op[a * n + b]; };
  for (int a = 0; a < n && r.idempotent; ++a)
    if (at(a, a) != a) {
      r.idempotent = false;
      r.witness = "axiom I fails at a=" + std::to_string(a);
    }
  for (int b = 0; b < n && r.right_invertible; ++b) {
    std::vector<char> hit(n, 0);
    for (int a = 0; a < n; ++a) {
      if (hit[at(a, b)]) {
        r.right_invertible = false;
        if (r.witness.empty()) r.witness = "axiom II fails at b=" + std::to_string(b);
        break;
      }
      hit[at(a, b)] = 1;
    }
  }
  for (int a = 0; a < n && r.self_distributive; ++a)
    for (int b = 0; b < n && r.self_distributive; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(at(a, c), at(b, c))) {
          r.self_distributive = false;
          if (r.witness.empty())
            r.witness = "axiom III fails at (a,b,c)=(" + std::to_string(a) + "," + std::to_string(b) + "," +
                        std::to_string(c) + ")";
          break;
        }
  return r;
}

AxiomReport verify_quandle_axioms(const Quandle& q) { return verify_quandle_axioms(q.size(), q.table()); }

QuandlePtr make_dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral: order must be positive");
  std::vector<int> op(n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) op[i * n + j] = mod(2LL * j - i, n);
  auto q = std::make_shared<Quandle>("R" + std::to_string(n), n, std::move(op));
  q->set_dihedral(n);
  return q;
}

QuandlePtr make_alexander(int p, const std::vector<int>& h) {
  auto ring = std::make_shared<const AlexanderRing>(p, h);
  int n = ring->size();
  int t = ring->t();
  int omt = ring->sub(ring->one(), t);
  std::vector<int> op(n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) op[a * n + b] = ring->add(ring->mul(t, a), ring->mul(omt, b));
  auto q = std::make_shared<Quandle>("Z" + std::to_string(p) + "[t]/(" + ring->modulus_string() + ")", n,
                                     std::move(op));
  q->set_ring(ring);
  return q;
}

static std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

static int parse_int(const std::string& s, const std::string& what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("bad " + what + ": '" + s + "'");
  return v;
}

QuandlePtr parse_quandle_spec(const std::string& spec) {
  auto parts = split(spec, ':');
  if (parts.size() == 2 && parts[0] == "dihedral") return make_dihedral(parse_int(parts[1], "dihedral order"));
  if (parts.size() == 3 && parts[0] == "alexander") {
    int p = parse_int(parts[1], "alexander modulus");
    if (!is_prime(p)) throw std::invalid_argument("alexander modulus must be prime: " + parts[1]);
    return make_alexander(p, parse_t_polynomial(parts[2], p));
  }
  throw std::invalid_argument("unknown quandle spec '" + spec + "' (use dihedral:<n> or alexander:<p>:<h(t)>)");
}

std::string canonical_quandle_spec(const Quandle& q) {
  if (q.dihedral_order()) return "dihedral:" + std::to_string(q.dihedral_order());
  if (q.ring()) return "alexander:" + std::to_string(q.ring()->p()) + ":" + q.ring()->modulus_string();
  return "table:" + q.label();
}

std::string write_cayley(const Quandle& q) {
  std::ostringstream os;
  os << "quandle " << q.label() << " " << q.size() << "\n";
  for (int a = 0; a < q.size(); ++a) {
    for (int b = 0; b < q.size(); ++b) os << (b ? " " : "") << q.star(a, b);
    os << "\n";
  }
  return os.str();
}

QuandlePtr read_cayley(const std::string& text) {
  std::istringstream is(text);
  std::string kw, name;
  int n = 0;
  if (!(is >> kw >> name >> n) || kw != "quandle" || n < 1)
    throw std::invalid_argument("cayley: expected header 'quandle <name> <n>'");
  std::vector<int> op(n * n);
  for (int i = 0; i < n * n; ++i)
    if (!(is >> op[i])) throw std::invalid_argument("cayley: expected " + std::to_string(n * n) + " entries");
  std::string extra;
  if (is >> extra) throw std::invalid_argument("cayley: trailing data '" + extra + "'");
  return std::make_shared<Quandle>(name, n, std::move(op));
}

CoeffGroup CoeffGroup::cyclic(int m) {
  if (m < 1) throw std::invalid_argument("Z_m needs m >= 1");
  CoeffGroup g;
  g.m_ = g.size_ = m;
  return g;
}

CoeffGroup CoeffGroup::additive(std::shared_ptr<const AlexanderRing> r) {
  CoeffGroup g;
  g.size_ = r->size();
  g.m_ = 0;
  g.ring_ = std::move(r);
  return g;
}

int CoeffGroup::add(int a, int b) const { return ring_ ? ring_->add(a, b) : (a + b) % m_; }
int CoeffGroup::neg(int a) const { return ring_ ? ring_->neg(a) : (m_ - a) % m_; }

int CoeffGroup::scale(long long k, int a) const {
  if (!ring_) return mod(k % m_ * a, m_);
  return ring_->mul(ring_->from_int(k), a);
}

std::string CoeffGroup::format(int a) const { return ring_ ? ring_->format(a) : std::to_string(a); }

std::string CoeffGroup::label() const {
  if (ring_) return "Z" + std::to_string(ring_->p()) + "[t]/(" + ring_->modulus_string() + ")";
  return "Z" + std::to_string(m_);
}

bool CoeffGroup::operator==(const CoeffGroup& o) const {
  if (static_cast<bool>(ring_) != static_cast<bool>(o.ring_)) return false;
  if (!ring_) return m_ == o.m_;
  return ring_->p() == o.ring_->p() && ring_->modulus() == o.ring_->modulus();
}

std::optional<int> CoeffGroup::parse(const std::string& s) const {
  try {
    if (!ring_) {
      int v = parse_int(s, "group element");
      if (v < 0 || v >= m_) return std::nullopt;
      return v;
    }
    auto c = parse_t_polynomial(s, ring_->p());
    if (static_cast<int>(c.size()) > ring_->degree()) return std::nullopt;
    c.resize(ring_->degree(), 0);
    return ring_->encode(c);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace qcc

// Finite quandles and the coefficient groups their cocycles take values in.
#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcc {

// A well-formed table that fails the quandle axioms or the cocycle condition.
struct VerificationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Z_p[t]/(h), elements stored as base-p integers (c0 least significant).
class AlexanderRing {
 public:
  AlexanderRing(int p, std::vector<int> h);  // h: c0..cd, monic

  int p() const { return p_; }
  int degree() const { return d_; }
  int size() const { return size_; }
  const std::vector<int>& modulus() const { return h_; }

  std::vector<int> decode(int a) const;
  int encode(const std::vector<int>& v) const;

  int add(int a, int b) const { return add_[a * size_ + b]; }
  int sub(int a, int b) const { return add_[a * size_ + neg_[b]]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int pow(int a, int e) const;
  int from_int(long long v) const;
  int t() const { return t_; }
  int one() const { return one_; }

  // "2t+2", "t", "0"; highest degree first
  std::string format(int a) const;
  std::string modulus_string() const;

 private:
  int p_, d_, size_;
  std::vector<int> h_;
  std::vector<int> add_, mul_, neg_;
  int t_ = 0, one_ = 0;
};

// Coefficients of a polynomial in t over Z_p, lowest degree first.
std::vector<int> parse_t_polynomial(const std::string& text, int p);

class Quandle {
 public:
  Quandle(std::string label, int n, std::vector<int> op);

  int size() const { return n_; }
  const std::string& label() const { return label_; }
  int star(int a, int b) const { return op_[a * n_ + b]; }
  // the unique c with c*b = a
  int unstar(int a, int b) const { return inv_[a * n_ + b]; }
  const std::vector<int>& table() const { return op_; }

  std::shared_ptr<const AlexanderRing> ring() const { return ring_; }
  int dihedral_order() const { return dihedral_; }
  std::string element_name(int a) const;

  // set by the builders below
  void set_ring(std::shared_ptr<const AlexanderRing> r) { ring_ = std::move(r); }
  void set_dihedral(int n) { dihedral_ = n; }

 private:
  std::string label_;
  int n_;
  std::vector<int> op_, inv_;
  std::shared_ptr<const AlexanderRing> ring_;
  int dihedral_ = 0;
};

using QuandlePtr = std::shared_ptr<const Quandle>;

struct AxiomReport {
  bool idempotent = true;
  bool right_invertible = true;
  bool self_distributive = true;
  std::string witness;  // first failure, empty when everything holds
  bool ok() const { return idempotent && right_invertible && self_distributive; }
};

AxiomReport verify_quandle_axioms(int n, const std::vector<int>& op);
AxiomReport verify_quandle_axioms(const Quandle& q);

QuandlePtr make_dihedral(int n);
QuandlePtr make_alexander(int p, const std::vector<int>& h);
// "dihedral:5", "alexander:2:t^2+t+1"
QuandlePtr parse_quandle_spec(const std::string& spec);
std::string canonical_quandle_spec(const Quandle& q);

// "quandle <name> <n>" then n rows
std::string write_cayley(const Quandle& q);
QuandlePtr read_cayley(const std::string& text);

// Z_m or the additive group of an Alexander ring.
class CoeffGroup {
 public:
  static CoeffGroup cyclic(int m);
  static CoeffGroup additive(std::shared_ptr<const AlexanderRing> r);

  int size() const { return size_; }
  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int scale(long long k, int a) const;
  std::string format(int a) const;
  std::string label() const;
  bool operator==(const CoeffGroup& o) const;
  // inverse of format
  std::optional<int> parse(const std::string& s) const;

 private:
  int m_ = 1, size_ = 1;
  std::shared_ptr<const AlexanderRing> ring_;
};

bool is_prime(int n);

}  // namespace qcc

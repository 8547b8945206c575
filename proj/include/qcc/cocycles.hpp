// Quandle 2- and 3-cocycles as dense value tables.
#pragma once

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qcc/algebra.hpp"

namespace qcc {

// Polynomial in x, y, z (and the ring constant t) with integer coefficients.
class PolyExpr {
 public:
  using Monomial = std::array<int, 4>;  // exponents of x, y, z, t

  static PolyExpr parse(const std::string& text);

  const std::string& text() const { return text_; }
  // highest variable used: 0 none, 1 x, 2 y, 3 z
  int arity() const;
  // expanded form, coefficients reduced mod p
  std::map<Monomial, long long> expand(int p) const;
  // term-by-term evaluation of the expanded form
  int evaluate(const AlexanderRing& r, const std::vector<int>& vars) const;
  // walks the syntax tree directly, no expansion
  int evaluate_direct(const AlexanderRing& r, const std::vector<int>& vars) const;

  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> root_;
};

class Cocycle {
 public:
  Cocycle(QuandlePtr q, CoeffGroup group, int arity, std::vector<int> table, std::string label);

  int arity() const { return arity_; }
  const Quandle& quandle() const { return *q_; }
  QuandlePtr quandle_ptr() const { return q_; }
  const CoeffGroup& group() const { return group_; }
  const std::string& label() const { return label_; }
  const std::vector<int>& table() const { return table_; }

  int operator()(int x, int y) const { return table_[x * n_ + y]; }
  int operator()(int x, int y, int z) const { return table_[(x * n_ + y) * n_ + z]; }

 private:
  QuandlePtr q_;
  CoeffGroup group_;
  int arity_, n_;
  std::vector<int> table_;
  std::string label_;
};

using CocyclePtr = std::shared_ptr<const Cocycle>;

struct CocycleReport {
  bool ok = true;
  std::vector<int> witness;  // tuple where the condition fails
  int residual = 0;          // nonzero group element at the witness
  std::string message;
};

CocycleReport verify_2cocycle(const Cocycle& c);
CocycleReport verify_3cocycle(const Cocycle& c);
CocycleReport verify_cocycle(const Cocycle& c);

// Unchecked table (used by tests that need a non-cocycle).
CocyclePtr make_table_cocycle(QuandlePtr q, CoeffGroup g, int arity, std::vector<int> table, std::string label);

CocyclePtr make_poly_cocycle(QuandlePtr alexander, int arity, const std::string& expr);
CocyclePtr make_mochizuki_cocycle(int p);
// Raw Mochizuki value with representatives 0..p-1; throws if p does not divide the bracket.
int mochizuki_value(int p, int x, int y, int z);

// "poly2:<expr>", "poly3:<expr>", "mochizuki:<p>" over the given quandle
CocyclePtr parse_cocycle_spec(QuandlePtr q, const std::string& spec);

// header "cocycle <name> <arity> <n> <group>" then one value per tuple in
// lexicographic order; group is Z<m> or the Alexander ring label of q
std::string write_cocycle_table(const Cocycle& c);
// Inverse of write_cocycle_table over q. Throws VerificationError when the
// table is well formed but fails the cocycle condition.
CocyclePtr read_cocycle_table(QuandlePtr q, const std::string& text);

}  // namespace qcc

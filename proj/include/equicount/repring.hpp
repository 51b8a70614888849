#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "equicount/burnside.hpp"
#include "equicount/cyclotomic.hpp"
#include "equicount/groups.hpp"

namespace equicount {

// Virtual character: one exact cyclotomic value per element conjugacy class,
// in the class ordering of the group (class 0 = identity class). This is the
// whole representation-ring interface; representations themselves are never
// materialized beyond character extraction.
struct ClassFn {
  GroupPtr group;
  std::vector<Cyclo> values;

  friend ClassFn operator+(const ClassFn& a, const ClassFn& b);
  friend ClassFn operator-(const ClassFn& a, const ClassFn& b);
  ClassFn operator-() const;
  friend ClassFn operator*(const Rational& c, const ClassFn& a);
  friend ClassFn operator*(long long c, const ClassFn& a) { return Rational(c) * a; }
  friend bool operator==(const ClassFn& a, const ClassFn& b);
  friend bool operator!=(const ClassFn& a, const ClassFn& b) { return !(a == b); }
};

// Ways to hand a representation to character():
//   permutation : a finite G-set; the character counts fixed points.
//   linear      : one exponent per recorded cyclic factor of an abelian G;
//                  the character sends a factor generator^a to zeta^(k a).
//   matrices    : exact matrices over Q(zeta) on a generating set; extended
//                  multiplicatively and cross-checked (NotAHomomorphism).
//   values      : explicit value per element class, taken verbatim.
struct RepSpec {
  enum class Kind { Permutation, Linear, Matrices, Values };
  Kind kind = Kind::Values;

  std::optional<GroupAction> action;                                   // Permutation
  std::vector<long> exponents;                                         // Linear
  std::vector<std::pair<int, std::vector<std::vector<Cyclo>>>> matrices;  // Matrices
  std::vector<Cyclo> values;                                           // Values
};

RepSpec rep_permutation(GroupAction action);
RepSpec rep_linear(std::vector<long> exponents);
RepSpec rep_matrices(std::vector<std::pair<int, std::vector<std::vector<Cyclo>>>> gens);
RepSpec rep_values(std::vector<Cyclo> values);

ClassFn character(const GroupPtr& G, const RepSpec& spec);

ClassFn classfn_zero(const GroupPtr& G);
ClassFn trivial_character(const GroupPtr& G);

// Pointwise product (tensor product of representations).
ClassFn tensor(const ClassFn& a, const ClassFn& b);
// dual(a)(g) = a(g^-1).
ClassFn dual(const ClassFn& a);
// Value at the identity. Rational for anything assembled from characters;
// throws NonIntegralRank if the identity value is not rational.
Rational rank(const ClassFn& a);
// Adams operation: psi^k(a)(g) = a(g^k).
ClassFn adams(const ClassFn& a, long k);

// Symmetric and exterior powers via the Newton recursions
//   k e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} psi^i,
//   k h_k = sum_{i=1..k} h_{k-i} psi^i,
// applied formally over the rationals (exact on genuine characters).
ClassFn sym_power(const ClassFn& a, int k);
ClassFn ext_power(const ClassFn& a, int k);
// Top exterior power at the integer rank; NonIntegralRank unless rank is a
// positive integer.
ClassFn det_char(const ClassFn& a);

// Frobenius induction along H <= G:
//   (ind a)(g) = (1/|H|) sum_{x in G, x^-1 g x in H} a(x^-1 g x).
ClassFn induce_char(const Subgroup& H, const ClassFn& a);
ClassFn restrict_char(const Subgroup& H, const ClassFn& a);

// (1/|G|) sum_g a(g) b(g^-1).
Cyclo inner_product(const ClassFn& a, const ClassFn& b);

Cyclo value_at(const ClassFn& a, int element);

// Ring homomorphism A(G) -> R(G): [G/H] becomes the permutation character
// g -> |(G/H)^<g>|.
ClassFn linearize(const BurnsideElt& x);

}  // namespace equicount

#pragma once

#include <string>
#include <vector>

#include "equicount/groups.hpp"

namespace equicount {

// Element of the Burnside ring A(G): an integer combination of the basis
// classes [G/H_i] over the subgroup conjugacy classes of G. coeffs[i] is the
// coefficient of [G/H_i] in the class ordering of the group.
struct BurnsideElt {
  GroupPtr group;
  std::vector<long long> coeffs;

  bool is_zero() const;

  BurnsideElt operator-() const;
  friend BurnsideElt operator+(const BurnsideElt& a, const BurnsideElt& b);
  friend BurnsideElt operator-(const BurnsideElt& a, const BurnsideElt& b);
  // Product of G-sets, computed through the mark homomorphism.
  friend BurnsideElt operator*(const BurnsideElt& a, const BurnsideElt& b);
  friend BurnsideElt operator*(long long c, const BurnsideElt& a);
  friend bool operator==(const BurnsideElt& a, const BurnsideElt& b);
  friend bool operator!=(const BurnsideElt& a, const BurnsideElt& b) { return !(a == b); }

  // e.g. "-8[G/G] + 10[G]": terms from largest subgroup class down,
  // [G] denotes the free orbit [G/e].
  std::string str() const;
};

BurnsideElt burnside_zero(const GroupPtr& G);
// [G/H_i]
BurnsideElt burnside_basis(const GroupPtr& G, int subgroup_class);
// The multiplicative identity [G/G].
BurnsideElt burnside_one(const GroupPtr& G);

// Mark homomorphism: component j is the fixed-point count |X^{H_j}| of the
// virtual G-set. Injective; componentwise multiplicative.
std::vector<long long> marks(const BurnsideElt& x);

// Inverse of the mark homomorphism where defined. Solves the triangular
// system against the table of marks; throws NotInImage when the ghost vector
// has no integral preimage (reports the first offending class).
BurnsideElt from_marks(const GroupPtr& G, const std::vector<long long>& ghost);

// |X| = mark at the trivial subgroup.
long long cardinality(const BurnsideElt& x);
// |X^{H_j}|.
long long fixed_count(const BurnsideElt& x, int subgroup_class);

// Transfer (induction) along H <= G: [H/K] -> [G/K]. Additive, not
// multiplicative.
BurnsideElt induce(const Subgroup& H, const BurnsideElt& x);
// Restriction along H <= G by the double coset formula:
// [G/K]|_H = sum over HgK of [H / (H cap gKg^-1)]. Ring homomorphism.
BurnsideElt restrict_to(const Subgroup& H, const BurnsideElt& x);

// Orbit decomposition of an explicit finite G-set into basis classes.
BurnsideElt gset_decompose(const GroupAction& action);

}  // namespace equicount

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "equicount/burnside.hpp"
#include "equicount/groups.hpp"
#include "equicount/repring.hpp"

namespace equicount {

// Finite G-CW complex, recorded as the G-set of cells per dimension.
// Dimensions strictly increasing, cell multiplicities non-negative.
struct GCW {
  GroupPtr group;
  std::vector<std::pair<int, BurnsideElt>> cells;
};

GCW make_gcw(GroupPtr group, std::vector<std::pair<int, BurnsideElt>> cells);
GCW disjoint_union(const GCW& a, const GCW& b);

// Equivariant Euler characteristic in the Burnside ring: the alternating sum
// of cell classes. Cellular by definition; agrees with the fixed-point Euler
// characteristic on every subgroup through the mark homomorphism.
BurnsideElt euler_A(const GCW& x);
// Its image in the representation ring.
ClassFn euler_K(const GCW& x);
// Euler characteristic of the H-fixed subcomplex.
long long fixed_euler(const GCW& x, int subgroup_class);
// Alias for the Burnside-ring product (Euler characteristic of a product).
inline BurnsideElt euler_product(const BurnsideElt& a, const BurnsideElt& b) {
  return a * b;
}

// Bundled models over the order-2 group (Point over any group):
//   Point        : one fixed 0-cell.
//   Cp1Conj      : the conjugation sphere: fixed circle, free 2-cell pair.
//   Cp2Conj      : the conjugation action with fixed real locus in dims 0-2.
//   NodalSplit   : nodal curve, real node with two real branches
//                   (fixed wedge of two circles).
//   NodalNonSplit: nodal curve, real node with conjugate branches
//                   (fixed locus a single point).
// Each model's (total, fixed) Euler-characteristic pair is asserted at
// construction. Throws UnknownModel / WrongGroup.
GCW model(const std::string& name, const GroupPtr& G);

enum class NodeKind { RealSplit, RealNonSplit, ComplexPair };

// Node of a curve together with its stabilizer inside the order-2 group:
// real nodes are fixed (stabilizer the whole group), complex-conjugate node
// pairs are swapped (trivial stabilizer).
struct NodeType {
  NodeKind kind = NodeKind::RealSplit;
  Subgroup stabilizer;
};

NodeType make_node_type(NodeKind kind, const GroupPtr& order2_group);

// Local mass of a curve: its equivariant Euler characteristic over the
// stabilizer. For node types this is the bundled nodal model's class:
//   RealSplit     -> [G] - [G/G]   (over the order-2 stabilizer)
//   RealNonSplit  -> [G/G]
//   ComplexPair   -> [e/e]         (over the trivial stabilizer)
BurnsideElt mass(const GCW& curve);
BurnsideElt mass(const NodeType& node);

}  // namespace equicount

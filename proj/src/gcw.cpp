#include "equicount/gcw.hpp"

#include "equicount/error.hpp"

namespace equicount {

namespace {

void check_order_two(const GroupPtr& G) {
  if (G->order != 2)
    fail(ErrorCode::WrongGroup, "model needs the order-2 group, got order " +
                                    std::to_string(G->order));
}

// Nodal cubic over the trivial group: one 0-cell (the node), one 1-cell, one
// 2-cell; Euler characteristic 1.
GCW nodal_model_trivial(const GroupPtr& T) {
  internal_check(T->order == 1, "trivial-group model over non-trivial group");
  auto c = burnside_basis(T, 0);
  return make_gcw(T, {{0, c}, {1, c}, {2, c}});
}

void assert_ghosts(const GCW& x, long long total, long long fixed) {
  const auto e = euler_A(x);
  internal_check(cardinality(e) == total && fixed_euler(x, x.group->full_class()) == fixed,
                 "model Euler characteristics drifted from their locked pair");
}

}  // namespace

GCW make_gcw(GroupPtr group, std::vector<std::pair<int, BurnsideElt>> cells) {
  int last_dim = -1;
  for (const auto& [dim, gset] : cells) {
    if (dim < 0 || dim <= last_dim)
      fail(ErrorCode::InvalidCellStructure,
           "cell dimensions must be non-negative and strictly increasing");
    last_dim = dim;
    if (gset.group != group)
      fail(ErrorCode::GroupMismatch, "cell G-set over a different group");
    for (long long c : gset.coeffs)
      if (c < 0)
        fail(ErrorCode::InvalidCellStructure,
             "cell multiplicities must be non-negative");
  }
  GCW x;
  x.group = std::move(group);
  x.cells = std::move(cells);
  return x;
}

GCW disjoint_union(const GCW& a, const GCW& b) {
  if (a.group != b.group)
    fail(ErrorCode::GroupMismatch, "complexes over different groups");
  std::vector<std::pair<int, BurnsideElt>> cells;
  std::size_t i = 0, j = 0;
  while (i < a.cells.size() || j < b.cells.size()) {
    if (j >= b.cells.size() ||
        (i < a.cells.size() && a.cells[i].first < b.cells[j].first)) {
      cells.push_back(a.cells[i++]);
    } else if (i >= a.cells.size() || b.cells[j].first < a.cells[i].first) {
      cells.push_back(b.cells[j++]);
    } else {
      cells.push_back({a.cells[i].first, a.cells[i].second + b.cells[j].second});
      ++i;
      ++j;
    }
  }
  return make_gcw(a.group, std::move(cells));
}

BurnsideElt euler_A(const GCW& x) {
  auto e = burnside_zero(x.group);
  for (const auto& [dim, gset] : x.cells)
    e = (dim % 2 == 0) ? e + gset : e - gset;
  return e;
}

ClassFn euler_K(const GCW& x) { return linearize(euler_A(x)); }

long long fixed_euler(const GCW& x, int subgroup_class) {
  long long e = 0;
  for (const auto& [dim, gset] : x.cells) {
    const long long f = fixed_count(gset, subgroup_class);
    e += (dim % 2 == 0) ? f : -f;
  }
  return e;
}

GCW model(const std::string& name, const GroupPtr& G) {
  if (name == "Point") {
    auto x = make_gcw(G, {{0, burnside_one(G)}});
    assert_ghosts(x, 1, 1);
    return x;
  }
  check_order_two(G);
  const auto fixed = burnside_one(G);             // [G/G]
  const auto free_pair = burnside_basis(G, 0);    // [G]
  GCW x;
  if (name == "Cp1Conj") {
    x = make_gcw(G, {{0, fixed}, {1, fixed}, {2, free_pair}});
    assert_ghosts(x, 2, 0);
  } else if (name == "Cp2Conj") {
    x = make_gcw(G, {{0, fixed},
                     {1, fixed},
                     {2, fixed + free_pair},
                     {3, free_pair},
                     {4, free_pair}});
    assert_ghosts(x, 3, 1);
  } else if (name == "NodalSplit") {
    x = make_gcw(G, {{0, fixed}, {1, 2 * fixed}, {2, free_pair}});
    assert_ghosts(x, 1, -1);
  } else if (name == "NodalNonSplit") {
    x = make_gcw(G, {{0, fixed}, {1, free_pair}, {2, free_pair}});
    assert_ghosts(x, 1, 1);
  } else {
    fail(ErrorCode::UnknownModel, "unknown model '" + name + "'");
  }
  return x;
}

NodeType make_node_type(NodeKind kind, const GroupPtr& order2_group) {
  check_order_two(order2_group);
  NodeType n;
  n.kind = kind;
  n.stabilizer = subgroup(order2_group,
                          kind == NodeKind::ComplexPair
                              ? order2_group->trivial_class()
                              : order2_group->full_class());
  return n;
}

BurnsideElt mass(const GCW& curve) { return euler_A(curve); }

BurnsideElt mass(const NodeType& node) {
  switch (node.kind) {
    case NodeKind::RealSplit:
      return euler_A(model("NodalSplit", node.stabilizer.group));
    case NodeKind::RealNonSplit:
      return euler_A(model("NodalNonSplit", node.stabilizer.group));
    case NodeKind::ComplexPair:
      return euler_A(nodal_model_trivial(node.stabilizer.group));
  }
  fail(ErrorCode::InternalError, "unreachable node kind");
}

}  // namespace equicount

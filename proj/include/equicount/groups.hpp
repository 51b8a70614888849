#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace equicount {

struct FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Finite group with a faithful permutation model. Elements are indices
// 0..order-1, index 0 the identity, in BFS-over-generator-words order with
// lexicographic tie-break on permutation images. Immutable once built; all
// derived tables (classes, subgroups, marks, cosets) are computed at
// construction, so reads are thread-safe.
struct FiniteGroup {
  int order = 0;
  int exponent = 1;
  std::string name;

  std::vector<std::vector<int>> mult;  // mult[g][h] = g*h
  std::vector<int> inv;

  // Defining permutation model: perms[g] maps points 0..degree-1.
  int degree = 0;
  std::vector<std::vector<int>> perms;

  // Conjugacy classes of elements, each sorted, ordered by least member;
  // class 0 is {identity}.
  std::vector<std::vector<int>> element_classes;
  std::vector<int> element_class_of;

  // Conjugacy classes of subgroups: representative element sets (sorted,
  // lex-least in their class), ordered by (order, lex). Class 0 is trivial,
  // the last class is the whole group. subgroup_class_of indexes every
  // subgroup of G, not only the representatives.
  std::vector<std::vector<int>> subgroup_classes;
  std::map<std::vector<int>, int> subgroup_class_of;

  // Table of marks: marks[i][j] = |(G/H_i)^{H_j}|. Lower triangular under
  // the class ordering, with marks[i][i] = |N_G(H_i)| / |H_i| > 0.
  std::vector<std::vector<long long>> marks;

  // Left cosets of each subgroup class representative: coset_of[i][g] is the
  // coset index of g*H_i; coset_reps[i] lists the least element per coset.
  std::vector<std::vector<int>> coset_of;
  std::vector<std::vector<int>> coset_reps;

  // Cyclic direct-factor decomposition (order, generator) when the group was
  // built as cyclic or a product of cyclics; empty otherwise. Enables linear
  // character specs.
  std::vector<std::pair<int, int>> cyclic_factors;

  int num_subgroup_classes() const { return static_cast<int>(subgroup_classes.size()); }
  int trivial_class() const { return 0; }
  int full_class() const { return num_subgroup_classes() - 1; }

  bool is_abelian() const;
  int element_order(int g) const;
  int power(int g, long k) const;  // g^k, any sign
  int conjugate(int g, int x) const { return mult[mult[x][g]][inv[x]]; }  // x g x^-1

  // Class index of an arbitrary subgroup given as a sorted element set.
  // Throws NotASubgroup if the set is not a recorded subgroup.
  int class_of_subgroup_set(const std::vector<int>& sorted_elems) const;
  // Class index of the cyclic subgroup <g>.
  int class_of_cyclic(int g) const;
};

// Closes the generators (permutations of 0..degree-1) under composition.
// BFS level by level, new elements of a level sorted lexicographically by
// image vector. Throws NotAPermutation / OrderCapExceeded.
GroupPtr group_from_generators(int degree,
                               const std::vector<std::vector<int>>& generators,
                               int order_cap = 200,
                               const std::string& name = "");

// Canonical models: "trivial", "cyclic" n, "dihedral" n (n = group order,
// even), "symmetric" n, "klein4". Throws UnknownName.
GroupPtr named_group(const std::string& name, int n = 0);

// Direct product with the factors acting on disjoint point blocks.
// Concatenates cyclic-factor metadata when both factors carry it.
GroupPtr product_group(const GroupPtr& a, const GroupPtr& b);

// Handle to a conjugacy-class representative subgroup H <= G, materialized
// as its own FiniteGroup. embed maps H-element indices to G-element indices.
// For the whole-group class the handle aliases the parent (embed identity),
// so transfer/restriction at H = G are literal identities.
struct Subgroup {
  GroupPtr parent;
  int class_index = 0;
  GroupPtr group;
  std::vector<int> embed;

  bool is_whole_group() const { return group == parent; }
};

Subgroup subgroup(const GroupPtr& G, int class_index);

// A finite G-set: act[g][p] is the image of point p under g. Validated as a
// left action: act[0] = id, act[mult[g][h]] = act[g] o act[h].
struct GroupAction {
  GroupPtr group;
  int degree = 0;
  std::vector<std::vector<int>> act;
};

GroupAction make_action(GroupPtr group, int degree,
                        std::vector<std::vector<int>> act);
// The left-translation action on G/H_i (cosets of the class representative).
GroupAction coset_action(const GroupPtr& G, int subgroup_class);
// The defining permutation model as an action.
GroupAction natural_action(const GroupPtr& G);

struct DoubleCoset {
  int representative = 0;        // least element index in the coset
  std::vector<int> elements;     // sorted
};

// Partition of G into H g K double cosets, H and K subgroup classes of G.
// Ordered by representative.
std::vector<DoubleCoset> double_cosets(const GroupPtr& G, int h_class,
                                       int k_class);

// Display name for a subgroup class: "e", "G", "C<n>" for cyclic, "V4",
// otherwise "H<index>(<order>)".
std::string subgroup_name(const FiniteGroup& G, int subgroup_class);

}  // namespace equicount

#include <doctest.h>

#include <algorithm>
#include <set>

#include "equicount/error.hpp"
#include "equicount/groups.hpp"
#include "oracles.hpp"

using namespace equicount;

namespace {

std::vector<GroupPtr> test_groups() {
  return {
      named_group("cyclic", 2),    named_group("cyclic", 3),
      named_group("cyclic", 6),    named_group("klein4"),
      named_group("symmetric", 3), named_group("dihedral", 8),
  };
}

GroupPtr alternating4() {
  // Even permutations of 4 points: double transposition and 3-cycle.
  return group_from_generators(4, {{1, 0, 3, 2}, {0, 2, 3, 1}}, 200, "A4");
}

}  // namespace

TEST_CASE("canonical S3 model") {
  auto G = named_group("symmetric", 3);
  CHECK(G->order == 6);
  CHECK(G->exponent == 6);
  CHECK_FALSE(G->is_abelian());
  // Element 0 is the identity; BFS ordering is deterministic.
  CHECK(G->perms[0] == std::vector<int>{0, 1, 2});
  // Conjugacy classes: identity, transpositions, 3-cycles.
  REQUIRE(G->element_classes.size() == 3);
  CHECK(G->element_classes[0].size() == 1);
  std::multiset<std::size_t> sizes{G->element_classes[1].size(),
                                   G->element_classes[2].size()};
  CHECK(sizes == std::multiset<std::size_t>{2, 3});
  // Subgroup classes: e, C2, C3, G in (order, lex) order.
  REQUIRE(G->num_subgroup_classes() == 4);
  CHECK(G->subgroup_classes[0].size() == 1);
  CHECK(G->subgroup_classes[1].size() == 2);
  CHECK(G->subgroup_classes[2].size() == 3);
  CHECK(G->subgroup_classes[3].size() == 6);
  CHECK(subgroup_name(*G, 0) == "e");
  CHECK(subgroup_name(*G, 1) == "C2");
  CHECK(subgroup_name(*G, 2) == "C3");
  CHECK(subgroup_name(*G, 3) == "G");
  // Frozen table of marks.
  const std::vector<std::vector<long long>> want = {
      {6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}};
  CHECK(G->marks == want);
}

TEST_CASE("subgroup class counts across the test set") {
  CHECK(named_group("cyclic", 2)->num_subgroup_classes() == 2);
  CHECK(named_group("cyclic", 3)->num_subgroup_classes() == 2);
  CHECK(named_group("cyclic", 6)->num_subgroup_classes() == 4);
  CHECK(named_group("klein4")->num_subgroup_classes() == 5);
  CHECK(named_group("symmetric", 3)->num_subgroup_classes() == 4);
  CHECK(named_group("dihedral", 8)->num_subgroup_classes() == 8);
  CHECK(alternating4()->num_subgroup_classes() == 5);
  CHECK(named_group("symmetric", 4)->num_subgroup_classes() == 11);
}

TEST_CASE("subgroup lattice matches exhaustive subset enumeration") {
  for (const auto& G : test_groups()) {
    const auto want = oracle::subgroups_by_subsets(*G);
    // Every enumerated subgroup is classified, and the recorded subgroups
    // are exactly the oracle's.
    std::set<std::vector<int>> recorded;
    for (const auto& [set, cls] : G->subgroup_class_of) {
      recorded.insert(set);
      CHECK(cls >= 0);
      CHECK(cls < G->num_subgroup_classes());
    }
    CHECK(recorded == want);
    // Class representatives are members of their own class and lex-least.
    for (int i = 0; i < G->num_subgroup_classes(); ++i) {
      const auto& rep = G->subgroup_classes[i];
      CHECK(G->subgroup_class_of.at(rep) == i);
      for (const auto& [set, cls] : G->subgroup_class_of)
        if (cls == i) {
          CHECK(set.size() == rep.size());
          CHECK(rep <= set);
        }
    }
  }
}

TEST_CASE("marks agree with direct fixed-coset counting") {
  auto groups = test_groups();
  groups.push_back(alternating4());
  groups.push_back(named_group("symmetric", 4));
  for (const auto& G : groups) {
    const int n = G->num_subgroup_classes();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(G->marks[i][j] == oracle::fixed_cosets(*G, i, j));
    // Triangularity and positive diagonal.
    for (int i = 0; i < n; ++i) {
      CHECK(G->marks[i][i] > 0);
      for (int j = i + 1; j < n; ++j) CHECK(G->marks[i][j] == 0);
      CHECK(G->marks[i][0] * static_cast<long long>(
                                 G->subgroup_classes[i].size()) == G->order);
    }
  }
}

TEST_CASE("element classes partition the group") {
  auto groups = test_groups();
  groups.push_back(named_group("symmetric", 4));
  for (const auto& G : groups) {
    std::set<int> seen;
    std::size_t total = 0;
    for (std::size_t c = 0; c < G->element_classes.size(); ++c) {
      for (int g : G->element_classes[c]) {
        CHECK(seen.insert(g).second);
        CHECK(G->element_class_of[g] == static_cast<int>(c));
      }
      total += G->element_classes[c].size();
      CHECK(G->order % G->element_classes[c].size() == 0);
      // Closed under conjugation.
      for (int g : G->element_classes[c])
        for (int x = 0; x < G->order; ++x)
          CHECK(G->element_class_of[G->conjugate(g, x)] == static_cast<int>(c));
    }
    CHECK(total == static_cast<std::size_t>(G->order));
  }
}

TEST_CASE("double cosets partition the group") {
  auto groups = test_groups();
  groups.push_back(named_group("symmetric", 4));
  for (const auto& G : groups) {
    const int n = G->num_subgroup_classes();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const auto dcs = double_cosets(G, i, j);
        std::size_t total = 0;
        std::set<int> seen;
        for (const auto& dc : dcs) {
          CHECK(dc.representative == dc.elements.front());
          total += dc.elements.size();
          for (int g : dc.elements) CHECK(seen.insert(g).second);
        }
        CHECK(total == static_cast<std::size_t>(G->order));
      }
  }
}

TEST_CASE("construction is deterministic") {
  auto a = named_group("dihedral", 8);
  auto b = named_group("dihedral", 8);
  CHECK(a->perms == b->perms);
  CHECK(a->mult == b->mult);
  CHECK(a->subgroup_classes == b->subgroup_classes);
  CHECK(a->marks == b->marks);
  CHECK(a->element_classes == b->element_classes);
}

TEST_CASE("named groups") {
  CHECK(named_group("trivial")->order == 1);
  CHECK(named_group("cyclic", 1)->order == 1);
  CHECK(named_group("cyclic", 5)->order == 5);
  CHECK(named_group("cyclic", 5)->is_abelian());
  CHECK(named_group("klein4")->order == 4);
  CHECK(named_group("klein4")->exponent == 2);
  CHECK(named_group("dihedral", 2)->order == 2);
  CHECK(named_group("dihedral", 4)->order == 4);
  CHECK(named_group("dihedral", 4)->exponent == 2);  // the Klein four-group
  CHECK(named_group("dihedral", 6)->order == 6);
  CHECK_FALSE(named_group("dihedral", 6)->is_abelian());
  CHECK(named_group("symmetric", 4)->order == 24);
  CHECK_THROWS_AS(named_group("frobnicate"), Error);
  CHECK_THROWS_AS(named_group("dihedral", 7), Error);  // odd order
  // Cyclic factor metadata drives linear characters.
  CHECK(named_group("cyclic", 6)->cyclic_factors.size() == 1);
  CHECK(named_group("klein4")->cyclic_factors.size() == 2);
}

TEST_CASE("products") {
  auto G = product_group(named_group("cyclic", 2), named_group("cyclic", 3));
  CHECK(G->order == 6);
  CHECK(G->is_abelian());
  CHECK(G->exponent == 6);
  CHECK(G->cyclic_factors.size() == 2);
  CHECK(G->num_subgroup_classes() == 4);  // isomorphic to cyclic 6

  auto H = product_group(named_group("cyclic", 2), named_group("cyclic", 2));
  CHECK(H->num_subgroup_classes() == 5);  // the Klein four-group
}

TEST_CASE("generator closure errors") {
  CHECK_THROWS_AS(group_from_generators(3, {{0, 1}}, 200), Error);  // length
  CHECK_THROWS_AS(group_from_generators(3, {{0, 0, 1}}, 200), Error);
  CHECK_THROWS_AS(group_from_generators(3, {{0, 1, 3}}, 200), Error);
  try {
    group_from_generators(5, {{1, 2, 3, 4, 0}}, 4);
    FAIL("cap not enforced");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderCapExceeded);
  }
}

TEST_CASE("element orders and powers") {
  auto G = named_group("cyclic", 6);
  // Generator is element 1 (the 6-cycle).
  CHECK(G->element_order(1) == 6);
  CHECK(G->power(1, 6) == 0);
  CHECK(G->power(1, -1) == G->inv[1]);
  CHECK(G->power(1, 7) == 1);
  int ord2 = 0;
  for (int g = 0; g < 6; ++g)
    if (G->element_order(g) == 2) ++ord2;
  CHECK(ord2 == 1);
}

TEST_CASE("subgroup handles") {
  auto G = named_group("symmetric", 3);
  SUBCASE("whole group aliases the parent") {
    Subgroup whole = subgroup(G, G->full_class());
    CHECK(whole.is_whole_group());
    CHECK(whole.group == G);
    for (int g = 0; g < G->order; ++g) CHECK(whole.embed[g] == g);
  }
  SUBCASE("proper subgroup is its own group") {
    Subgroup h = subgroup(G, 2);  // C3
    CHECK(h.group->order == 3);
    CHECK(h.group->is_abelian());
    // embed is a homomorphism onto the recorded element set.
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        CHECK(h.embed[h.group->mult[a][b]] ==
              G->mult[h.embed[a]][h.embed[b]]);
    std::vector<int> image(h.embed);
    std::sort(image.begin(), image.end());
    CHECK(image == G->subgroup_classes[2]);
    // Cyclic subgroups carry factor metadata.
    CHECK(h.group->cyclic_factors.size() == 1);
  }
}

TEST_CASE("class lookup helpers") {
  auto G = named_group("symmetric", 3);
  CHECK(G->class_of_subgroup_set({0}) == 0);
  CHECK(G->class_of_subgroup_set({0, 1, 2, 3, 4, 5}) == 3);
  CHECK_THROWS_AS(G->class_of_subgroup_set({0, 1, 2}), Error);
  for (int g = 0; g < G->order; ++g) {
    const int cls = G->class_of_cyclic(g);
    CHECK(static_cast<int>(G->subgroup_classes[cls].size()) ==
          G->element_order(g));
  }
}

TEST_CASE("actions validate the left-action law") {
  auto G = named_group("cyclic", 2);
  CHECK_THROWS_AS(make_action(G, 2, {{0, 1}}), Error);  // one row missing
  CHECK_THROWS_AS(make_action(G, 2, {{1, 0}, {0, 1}}), Error);  // id not id
  CHECK_THROWS_AS(make_action(G, 2, {{0, 1}, {0, 0}}), Error);  // not a perm
  auto ok = make_action(G, 2, {{0, 1}, {1, 0}});
  CHECK(ok.degree == 2);
  auto nat = natural_action(G);
  CHECK(nat.act == ok.act);
  // Coset action of the trivial subgroup is the regular action.
  auto reg = coset_action(G, 0);
  CHECK(reg.degree == G->order);
}

#include "equicount/groups.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "equicount/error.hpp"

namespace equicount {

namespace {

std::vector<int> identity_perm(int degree) {
  std::vector<int> id(degree);
  std::iota(id.begin(), id.end(), 0);
  return id;
}

// (a o b)(x) = a[b[x]]
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[b[x]];
  return r;
}

void check_permutation(const std::vector<int>& p, int degree) {
  if (static_cast<int>(p.size()) != degree)
    fail(ErrorCode::NotAPermutation, "permutation has wrong degree");
  std::vector<char> seen(degree, 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[v])
      fail(ErrorCode::NotAPermutation, "image vector is not a permutation");
    seen[v] = 1;
  }
}

// Closure of a sorted element set under the group product.
std::vector<int> generated_subgroup(const FiniteGroup& G, std::vector<int> v) {
  std::set<int> in(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (int p : {G.mult[v[i]][v[j]], G.mult[v[j]][v[i]]}) {
        if (in.insert(p).second) v.push_back(p);
      }
    }
  }
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<int> conjugate_set(const FiniteGroup& G, const std::vector<int>& s,
                               int x) {
  std::vector<int> r;
  r.reserve(s.size());
  for (int h : s) r.push_back(G.conjugate(h, x));
  std::sort(r.begin(), r.end());
  return r;
}

void compute_element_classes(FiniteGroup& G) {
  G.element_class_of.assign(G.order, -1);
  for (int g = 0; g < G.order; ++g) {
    if (G.element_class_of[g] != -1) continue;
    std::set<int> orbit;
    for (int x = 0; x < G.order; ++x) orbit.insert(G.conjugate(g, x));
    const int id = static_cast<int>(G.element_classes.size());
    G.element_classes.emplace_back(orbit.begin(), orbit.end());
    for (int e : G.element_classes.back()) G.element_class_of[e] = id;
  }
}

void compute_subgroups(FiniteGroup& G) {
  // All cyclic subgroups, then close under pairwise join.
  std::set<std::vector<int>> found;
  for (int g = 0; g < G.order; ++g) {
    std::vector<int> c{0};
    int p = g;
    while (p != 0) {
      c.push_back(p);
      p = G.mult[p][g];
    }
    std::sort(c.begin(), c.end());
    found.insert(std::move(c));
  }
  std::vector<std::vector<int>> list(found.begin(), found.end());
  std::queue<std::pair<std::size_t, std::size_t>> work;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) work.push({i, j});
  while (!work.empty()) {
    auto [i, j] = work.front();
    work.pop();
    std::vector<int> u;
    std::set_union(list[i].begin(), list[i].end(), list[j].begin(),
                   list[j].end(), std::back_inserter(u));
    auto joined = generated_subgroup(G, std::move(u));
    if (found.insert(joined).second) {
      list.push_back(joined);
      const std::size_t k = list.size() - 1;
      for (std::size_t t = 0; t < k; ++t) work.push({t, k});
    }
  }

  // Conjugacy classes of subgroups; exhaustive conjugation doubles as a
  // closure check on the enumeration.
  std::map<std::vector<int>, int> raw_class;
  std::vector<std::vector<int>> reps;
  for (const auto& s : list) {
    if (raw_class.count(s)) continue;
    std::set<std::vector<int>> orbit;
    for (int x = 0; x < G.order; ++x) {
      auto c = conjugate_set(G, s, x);
      internal_check(found.count(c) > 0,
                     "subgroup enumeration not closed under conjugation");
      orbit.insert(std::move(c));
    }
    const int id = static_cast<int>(reps.size());
    reps.push_back(*orbit.begin());  // lex-least member
    for (const auto& c : orbit) raw_class.emplace(c, id);
  }

  // Order classes by (order, lex representative).
  std::vector<int> by_rank(reps.size());
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(), [&](int a, int b) {
    if (reps[a].size() != reps[b].size()) return reps[a].size() < reps[b].size();
    return reps[a] < reps[b];
  });
  std::vector<int> new_index(reps.size());
  for (std::size_t pos = 0; pos < by_rank.size(); ++pos) {
    new_index[by_rank[pos]] = static_cast<int>(pos);
    G.subgroup_classes.push_back(reps[by_rank[pos]]);
  }
  for (auto& [s, id] : raw_class) G.subgroup_class_of.emplace(s, new_index[id]);

  internal_check(G.subgroup_classes.front().size() == 1, "class 0 not trivial");
  internal_check(static_cast<int>(G.subgroup_classes.back().size()) == G.order,
                 "last class not the whole group");
}

void compute_cosets_and_marks(FiniteGroup& G) {
  const int nc = G.num_subgroup_classes();
  G.coset_of.assign(nc, {});
  G.coset_reps.assign(nc, {});
  for (int i = 0; i < nc; ++i) {
    const auto& H = G.subgroup_classes[i];
    auto& cos = G.coset_of[i];
    cos.assign(G.order, -1);
    for (int g = 0; g < G.order; ++g) {
      if (cos[g] != -1) continue;
      const int id = static_cast<int>(G.coset_reps[i].size());
      G.coset_reps[i].push_back(g);
      for (int h : H) cos[G.mult[g][h]] = id;
    }
  }
  G.marks.assign(nc, std::vector<long long>(nc, 0));
  for (int i = 0; i < nc; ++i) {
    for (int j = 0; j < nc; ++j) {
      long long fixed = 0;
      for (int rep : G.coset_reps[i]) {
        bool fix = true;
        for (int h : G.subgroup_classes[j]) {
          if (G.coset_of[i][G.mult[h][rep]] != G.coset_of[i][rep]) {
            fix = false;
            break;
          }
        }
        if (fix) ++fixed;
      }
      G.marks[i][j] = fixed;
    }
  }
  for (int i = 0; i < nc; ++i) {
    internal_check(G.marks[i][i] > 0, "marks diagonal must be positive");
    for (int j = i + 1; j < nc; ++j)
      internal_check(G.marks[i][j] == 0, "marks table not lower triangular");
  }
}

// Full construction from a closed, deduplicated permutation list whose first
// entry is the identity. The element order of the group is the list order.
GroupPtr build_from_perms(int degree, std::vector<std::vector<int>> perms,
                          const std::string& name) {
  auto G = std::make_shared<FiniteGroup>();
  G->degree = degree;
  G->order = static_cast<int>(perms.size());
  G->name = name;
  G->perms = std::move(perms);

  std::map<std::vector<int>, int> index;
  for (int g = 0; g < G->order; ++g) index.emplace(G->perms[g], g);
  internal_check(static_cast<int>(index.size()) == G->order,
                 "duplicate permutations in group model");

  G->mult.assign(G->order, std::vector<int>(G->order));
  G->inv.assign(G->order, -1);
  for (int g = 0; g < G->order; ++g) {
    for (int h = 0; h < G->order; ++h) {
      auto it = index.find(compose(G->perms[g], G->perms[h]));
      internal_check(it != index.end(), "permutation set not closed");
      G->mult[g][h] = it->second;
      if (it->second == 0) G->inv[g] = h;
    }
    internal_check(G->inv[g] >= 0, "missing inverse");
  }

  compute_element_classes(*G);
  G->exponent = 1;
  for (int g = 0; g < G->order; ++g)
    G->exponent = std::lcm(G->exponent, G->element_order(g));
  compute_subgroups(*G);
  compute_cosets_and_marks(*G);
  return G;
}

}  // namespace

bool FiniteGroup::is_abelian() const {
  for (int g = 0; g < order; ++g)
    for (int h = g + 1; h < order; ++h)
      if (mult[g][h] != mult[h][g]) return false;
  return true;
}

int FiniteGroup::element_order(int g) const {
  int n = 1, p = g;
  while (p != 0) {
    p = mult[p][g];
    ++n;
  }
  return g == 0 ? 1 : n;
}

int FiniteGroup::power(int g, long k) const {
  const int ord = element_order(g);
  long r = k % ord;
  if (r < 0) r += ord;
  int acc = 0;
  for (long t = 0; t < r; ++t) acc = mult[acc][g];
  return acc;
}

int FiniteGroup::class_of_subgroup_set(const std::vector<int>& sorted_elems) const {
  auto it = subgroup_class_of.find(sorted_elems);
  if (it == subgroup_class_of.end())
    fail(ErrorCode::NotASubgroup, "element set is not a subgroup of this group");
  return it->second;
}

int FiniteGroup::class_of_cyclic(int g) const {
  std::vector<int> c{0};
  int p = g;
  while (p != 0) {
    c.push_back(p);
    p = mult[p][g];
  }
  std::sort(c.begin(), c.end());
  return class_of_subgroup_set(c);
}

GroupPtr group_from_generators(int degree,
                               const std::vector<std::vector<int>>& generators,
                               int order_cap, const std::string& name) {
  if (degree < 1) fail(ErrorCode::BadInput, "degree must be >= 1");
  for (const auto& g : generators) check_permutation(g, degree);

  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> perms{identity_perm(degree)};
  index.emplace(perms[0], 0);
  std::vector<std::vector<int>> level = perms;
  while (!level.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& p : level)
      for (const auto& g : generators) {
        auto q = compose(p, g);
        if (!index.count(q)) next.insert(std::move(q));
      }
    level.clear();
    for (const auto& q : next) {  // set iteration = lexicographic order
      index.emplace(q, static_cast<int>(perms.size()));
      perms.push_back(q);
      level.push_back(q);
      if (static_cast<int>(perms.size()) > order_cap)
        fail(ErrorCode::OrderCapExceeded,
             "group order exceeds cap of " + std::to_string(order_cap));
    }
  }
  return build_from_perms(degree, std::move(perms), name);
}

GroupPtr named_group(const std::string& name, int n) {
  if (name == "trivial" || (name == "cyclic" && n == 1) ||
      (name == "symmetric" && n == 1)) {
    auto G = group_from_generators(1, {}, 200, "C1");
    auto M = std::const_pointer_cast<FiniteGroup>(G);
    M->cyclic_factors = {{1, 0}};
    return G;
  }
  if (name == "cyclic") {
    if (n < 1) fail(ErrorCode::UnknownName, "cyclic group needs n >= 1");
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
    auto G = group_from_generators(n, {rot}, std::max(200, n), "C" + std::to_string(n));
    auto M = std::const_pointer_cast<FiniteGroup>(G);
    M->cyclic_factors = {{n, 1}};
    return G;
  }
  if (name == "klein4")
    return product_group(named_group("cyclic", 2), named_group("cyclic", 2));
  if (name == "dihedral") {
    if (n < 2 || n % 2 != 0)
      fail(ErrorCode::UnknownName, "dihedral group order must be even and >= 2");
    if (n == 2) return named_group("cyclic", 2);
    if (n == 4) return named_group("klein4", 0);
    const int m = n / 2;
    std::vector<int> rot(m), refl(m);
    for (int i = 0; i < m; ++i) {
      rot[i] = (i + 1) % m;
      refl[i] = (m - i) % m;
    }
    return group_from_generators(m, {rot, refl}, std::max(200, n),
                                 "D" + std::to_string(n));
  }
  if (name == "symmetric") {
    if (n < 1) fail(ErrorCode::UnknownName, "symmetric group needs n >= 1");
    std::vector<int> swap01 = identity_perm(n), cyc(n);
    std::swap(swap01[0], swap01[1]);
    for (int i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
    return group_from_generators(n, {swap01, cyc}, 200, "S" + std::to_string(n));
  }
  fail(ErrorCode::UnknownName, "unknown group name '" + name + "'");
}

GroupPtr product_group(const GroupPtr& a, const GroupPtr& b) {
  const int degree = a->degree + b->degree;
  auto lift_a = [&](int g) {
    std::vector<int> p = identity_perm(degree);
    for (int x = 0; x < a->degree; ++x) p[x] = a->perms[g][x];
    return p;
  };
  auto lift_b = [&](int g) {
    std::vector<int> p = identity_perm(degree);
    for (int x = 0; x < b->degree; ++x) p[a->degree + x] = a->degree + b->perms[g][x];
    return p;
  };
  std::vector<std::vector<int>> gens;
  for (int g = 1; g < a->order; ++g) gens.push_back(lift_a(g));
  for (int g = 1; g < b->order; ++g) gens.push_back(lift_b(g));
  auto G = group_from_generators(degree, gens, 200, a->name + "x" + b->name);

  if (!a->cyclic_factors.empty() && !b->cyclic_factors.empty()) {
    std::map<std::vector<int>, int> index;
    for (int g = 0; g < G->order; ++g) index.emplace(G->perms[g], g);
    std::vector<std::pair<int, int>> factors;
    for (auto [ord, gen] : a->cyclic_factors) factors.push_back({ord, index.at(lift_a(gen))});
    for (auto [ord, gen] : b->cyclic_factors) factors.push_back({ord, index.at(lift_b(gen))});
    std::const_pointer_cast<FiniteGroup>(G)->cyclic_factors = std::move(factors);
  }
  return G;
}

Subgroup subgroup(const GroupPtr& G, int class_index) {
  if (class_index < 0 || class_index >= G->num_subgroup_classes())
    fail(ErrorCode::BadInput, "subgroup class index out of range");
  Subgroup s;
  s.parent = G;
  s.class_index = class_index;
  if (class_index == G->full_class()) {
    s.group = G;
    s.embed.resize(G->order);
    std::iota(s.embed.begin(), s.embed.end(), 0);
    return s;
  }
  const auto& set = G->subgroup_classes[class_index];
  std::vector<std::vector<int>> perms;
  perms.reserve(set.size());
  for (int g : set) perms.push_back(G->perms[g]);
  auto H = build_from_perms(G->degree, std::move(perms),
                            subgroup_name(*G, class_index) + "<=" + G->name);
  auto M = std::const_pointer_cast<FiniteGroup>(H);
  // Flag cyclic subgroups so linear character specs work on them.
  for (int h = 0; h < H->order; ++h) {
    if (H->element_order(h) == H->order) {
      M->cyclic_factors = {{H->order, h}};
      break;
    }
  }
  s.group = H;
  s.embed.assign(set.begin(), set.end());
  return s;
}

GroupAction make_action(GroupPtr group, int degree,
                        std::vector<std::vector<int>> act) {
  if (static_cast<int>(act.size()) != group->order)
    fail(ErrorCode::InvalidAction, "action table must cover every element");
  for (const auto& p : act) {
    if (static_cast<int>(p.size()) != degree)
      fail(ErrorCode::InvalidAction, "action row has wrong degree");
    std::vector<char> seen(degree, 0);
    for (int v : p) {
      if (v < 0 || v >= degree || seen[v])
        fail(ErrorCode::InvalidAction, "action row is not a permutation");
      seen[v] = 1;
    }
  }
  for (int x = 0; x < degree; ++x)
    if (act[0][x] != x)
      fail(ErrorCode::InvalidAction, "identity must act trivially");
  for (int g = 0; g < group->order; ++g)
    for (int h = 0; h < group->order; ++h) {
      const int gh = group->mult[g][h];
      for (int x = 0; x < degree; ++x)
        if (act[gh][x] != act[g][act[h][x]])
          fail(ErrorCode::InvalidAction, "table is not a left action");
    }
  GroupAction a;
  a.group = std::move(group);
  a.degree = degree;
  a.act = std::move(act);
  return a;
}

GroupAction coset_action(const GroupPtr& G, int subgroup_class) {
  if (subgroup_class < 0 || subgroup_class >= G->num_subgroup_classes())
    fail(ErrorCode::BadInput, "subgroup class index out of range");
  const auto& cos = G->coset_of[subgroup_class];
  const auto& reps = G->coset_reps[subgroup_class];
  GroupAction a;
  a.group = G;
  a.degree = static_cast<int>(reps.size());
  a.act.assign(G->order, std::vector<int>(a.degree));
  for (int g = 0; g < G->order; ++g)
    for (int c = 0; c < a.degree; ++c) a.act[g][c] = cos[G->mult[g][reps[c]]];
  return a;
}

GroupAction natural_action(const GroupPtr& G) {
  GroupAction a;
  a.group = G;
  a.degree = G->degree;
  a.act = G->perms;
  return a;
}

std::vector<DoubleCoset> double_cosets(const GroupPtr& G, int h_class,
                                       int k_class) {
  if (h_class < 0 || h_class >= G->num_subgroup_classes() || k_class < 0 ||
      k_class >= G->num_subgroup_classes())
    fail(ErrorCode::BadInput, "subgroup class index out of range");
  const auto& H = G->subgroup_classes[h_class];
  const auto& K = G->subgroup_classes[k_class];
  std::vector<char> assigned(G->order, 0);
  std::vector<DoubleCoset> out;
  for (int g = 0; g < G->order; ++g) {
    if (assigned[g]) continue;
    DoubleCoset dc;
    dc.representative = g;
    std::set<int> elems;
    for (int h : H)
      for (int k : K) elems.insert(G->mult[G->mult[h][g]][k]);
    for (int e : elems) assigned[e] = 1;
    dc.elements.assign(elems.begin(), elems.end());
    out.push_back(std::move(dc));
  }
  return out;
}

std::string subgroup_name(const FiniteGroup& G, int subgroup_class) {
  const auto& s = G.subgroup_classes[subgroup_class];
  const int n = static_cast<int>(s.size());
  if (n == 1) return "e";
  if (subgroup_class == G.full_class()) return "G";
  for (int g : s) {
    // cyclic iff some element has full order
    std::vector<int> c{0};
    int p = g, ord = 1;
    while (p != 0) {
      p = G.mult[p][g];
      ++ord;
    }
    if (g != 0 && ord == n) return "C" + std::to_string(n);
  }
  if (n == 4) return "V4";
  return "H" + std::to_string(subgroup_class) + "(" + std::to_string(n) + ")";
}

}  // namespace equicount

// Brute-force reference implementations the unit tests compare the library
// against. Everything here is deliberately naive: explicit orbit chasing,
// exhaustive subset enumeration, direct symmetric-polynomial expansion.
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "equicount/burnside.hpp"
#include "equicount/cyclotomic.hpp"
#include "equicount/groups.hpp"

namespace equicount::oracle {

// Every subgroup of G as a sorted element set, by scanning all subsets that
// contain the identity. Only feasible for |G| <= 16 or so.
inline std::set<std::vector<int>> subgroups_by_subsets(const FiniteGroup& G) {
  std::set<std::vector<int>> out;
  const int n = G.order;
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    if (!(mask & 1ul)) continue;  // must contain the identity (index 0)
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) elems.push_back(i);
    bool closed = true;
    for (int a : elems) {
      if (std::find(elems.begin(), elems.end(), G.inv[a]) == elems.end()) {
        closed = false;
        break;
      }
      for (int b : elems)
        if (std::find(elems.begin(), elems.end(), G.mult[a][b]) ==
            elems.end()) {
          closed = false;
          break;
        }
      if (!closed) break;
    }
    if (closed) out.insert(elems);
  }
  return out;
}

// Orbit partition of an explicit action, each orbit sorted, ordered by
// least point.
inline std::vector<std::vector<int>> orbits(const GroupAction& a) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(a.degree, false);
  for (int p = 0; p < a.degree; ++p) {
    if (seen[p]) continue;
    std::set<int> orbit;
    std::vector<int> queue = {p};
    seen[p] = true;
    orbit.insert(p);
    while (!queue.empty()) {
      int q = queue.back();
      queue.pop_back();
      for (int g = 0; g < a.group->order; ++g) {
        int r = a.act[g][q];
        if (orbit.insert(r).second) {
          seen[r] = true;
          queue.push_back(r);
        }
      }
    }
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

// Decomposition of an explicit action into transitive classes, as the
// coefficient vector over subgroup classes: each orbit contributes the class
// of the stabilizer of its least point. Uses only the group's subgroup-class
// table (validated independently), never the marks machinery.
inline std::vector<long long> decompose(const GroupAction& a) {
  const auto& G = *a.group;
  std::vector<long long> coeffs(G.num_subgroup_classes(), 0);
  for (const auto& orbit : orbits(a)) {
    const int p = orbit.front();
    std::vector<int> stab;
    for (int g = 0; g < G.order; ++g)
      if (a.act[g][p] == p) stab.push_back(g);
    coeffs[static_cast<std::size_t>(G.subgroup_class_of.at(stab))] += 1;
  }
  return coeffs;
}

// Explicit product action on pairs, point (i, j) encoded as i*b.degree + j.
inline GroupAction product_action(const GroupAction& a, const GroupAction& b) {
  GroupAction out;
  out.group = a.group;
  out.degree = a.degree * b.degree;
  out.act.assign(a.group->order, std::vector<int>(out.degree));
  for (int g = 0; g < a.group->order; ++g)
    for (int i = 0; i < a.degree; ++i)
      for (int j = 0; j < b.degree; ++j)
        out.act[g][i * b.degree + j] = a.act[g][i] * b.degree + b.act[g][j];
  return out;
}

// Explicit induced G-set G x_H X from an H-set X: points (coset cH, x),
// g.(cH, x) = (c'H, h.x) where g c = c' h. Encoded as c*deg + x.
inline GroupAction induced_action(const Subgroup& H,
                                  const GroupAction& h_action) {
  const auto& G = *H.parent;
  const auto& cosets = G.coset_of[H.class_index];
  const auto& reps = G.coset_reps[H.class_index];
  std::vector<int> h_index(G.order, -1);
  for (std::size_t i = 0; i < H.embed.size(); ++i)
    h_index[H.embed[i]] = static_cast<int>(i);

  GroupAction out;
  out.group = H.parent;
  out.degree = static_cast<int>(reps.size()) * h_action.degree;
  out.act.assign(G.order, std::vector<int>(out.degree));
  for (int g = 0; g < G.order; ++g)
    for (std::size_t c = 0; c < reps.size(); ++c) {
      const int t = G.mult[g][reps[c]];
      const int c2 = cosets[t];
      const int h_in_g = G.mult[G.inv[reps[c2]]][t];
      const int h = h_index[h_in_g];
      for (int x = 0; x < h_action.degree; ++x)
        out.act[g][static_cast<int>(c) * h_action.degree + x] =
            c2 * h_action.degree + h_action.act[h][x];
    }
  return out;
}

// The same point set acted on by H only.
inline GroupAction restricted_action(const Subgroup& H,
                                     const GroupAction& g_action) {
  GroupAction out;
  out.group = H.group;
  out.degree = g_action.degree;
  for (int h = 0; h < H.group->order; ++h)
    out.act.push_back(g_action.act[H.embed[h]]);
  return out;
}

// Fixed points of the coset space G/H_i under H_j, counted directly.
inline long long fixed_cosets(const FiniteGroup& G, int i, int j) {
  const auto& cosets = G.coset_of[i];
  const auto& reps = G.coset_reps[i];
  long long count = 0;
  for (std::size_t c = 0; c < reps.size(); ++c) {
    bool fixed = true;
    for (int h : G.subgroup_classes[j])
      if (cosets[G.mult[h][reps[c]]] != static_cast<int>(c)) {
        fixed = false;
        break;
      }
    if (fixed) ++count;
  }
  return count;
}

// ---- monomial matrices with root-of-unity entries ----
// Column-scaled permutation matrix: M e_j = scale[j] * e_{perm[j]}, with
// scale[j] the rotation num/den of a full turn (zeta_den^num).

struct Rotation {
  long num = 0;
  long den = 1;

  static Rotation make(long num, long den) {
    num %= den;
    if (num < 0) num += den;
    const long g = std::gcd(num == 0 ? den : num, den);
    return {num / g, den / g};
  }
  Rotation operator+(const Rotation& o) const {
    const long d = std::lcm(den, o.den);
    return make(num * (d / den) + o.num * (d / o.den), d);
  }
  Cyclo value() const { return root_of_unity(static_cast<int>(den), num); }
};

struct Monomial {
  std::vector<int> perm;
  std::vector<Rotation> scale;

  static Monomial identity(int n) {
    Monomial m;
    m.perm.resize(n);
    std::iota(m.perm.begin(), m.perm.end(), 0);
    m.scale.assign(n, Rotation::make(0, 1));
    return m;
  }
};

// Matrix product a*b: (a*b) e_j = b.scale[j] * a.scale[b.perm[j]] *
// e_{a.perm[b.perm[j]]}.
inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  const int n = static_cast<int>(a.perm.size());
  Monomial out = Monomial::identity(n);
  for (int j = 0; j < n; ++j) {
    out.perm[j] = a.perm[b.perm[j]];
    out.scale[j] = b.scale[j] + a.scale[b.perm[j]];
  }
  return out;
}

// Exact spectrum: each cycle of length k whose scales multiply to the
// rotation r contributes the k-th roots of r, i.e. rotations (r + j)/k.
inline std::vector<Cyclo> mono_eigenvalues(const Monomial& m) {
  const int n = static_cast<int>(m.perm.size());
  std::vector<Cyclo> eig;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    Rotation total = Rotation::make(0, 1);
    long k = 0;
    int p = start;
    do {
      seen[p] = true;
      total = total + m.scale[p];
      p = m.perm[p];
      ++k;
    } while (p != start);
    for (long j = 0; j < k; ++j)
      eig.push_back(Rotation::make(total.num + total.den * j, total.den * k)
                        .value());
  }
  return eig;
}

inline std::vector<std::vector<Cyclo>> mono_matrix(const Monomial& m) {
  const int n = static_cast<int>(m.perm.size());
  std::vector<std::vector<Cyclo>> out(n, std::vector<Cyclo>(n, Cyclo(0)));
  for (int j = 0; j < n; ++j) out[m.perm[j]][j] = m.scale[j].value();
  return out;
}

// The monomial matrix of every group element, grown from generator matrices
// by following the multiplication table.
inline std::vector<Monomial> mono_walk(
    const FiniteGroup& G,
    const std::vector<std::pair<int, Monomial>>& generators) {
  const int n = static_cast<int>(generators.front().second.perm.size());
  std::vector<Monomial> mat(G.order, Monomial::identity(n));
  std::vector<bool> known(G.order, false);
  known[0] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int g = 0; g < G.order; ++g) {
      if (!known[g]) continue;
      for (const auto& [s, ms] : generators) {
        const int t = G.mult[s][g];
        if (!known[t]) {
          mat[t] = mono_mul(ms, mat[g]);
          known[t] = true;
          grew = true;
        }
      }
    }
  }
  for (bool k : known)
    if (!k) throw std::runtime_error("generators do not span the group");
  return mat;
}

// Elementary symmetric polynomial e_k: sum over k-subsets.
inline Cyclo elementary_symmetric(const std::vector<Cyclo>& vals, int k) {
  const int n = static_cast<int>(vals.size());
  if (k < 0 || k > n) return Cyclo(0);
  Cyclo sum(0);
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    Cyclo prod(1);
    for (int i : idx) prod *= vals[i];
    sum += prod;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return k == 0 ? Cyclo(1) : sum;
}

// Complete homogeneous symmetric polynomial h_k: sum over k-multisets
// (non-decreasing index tuples).
inline Cyclo complete_symmetric(const std::vector<Cyclo>& vals, int k) {
  const int n = static_cast<int>(vals.size());
  if (k == 0) return Cyclo(1);
  if (n == 0) return Cyclo(0);
  Cyclo sum(0);
  std::vector<int> idx(k, 0);  // non-decreasing tuples in 0..n-1
  while (true) {
    Cyclo prod(1);
    for (int i : idx) prod *= vals[i];
    sum += prod;
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == n - 1) --pos;
    if (pos < 0) break;
    const int v = idx[pos] + 1;
    for (int i = pos; i < k; ++i) idx[i] = v;
  }
  return sum;
}

}  // namespace equicount::oracle

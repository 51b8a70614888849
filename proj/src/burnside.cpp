#include "equicount/burnside.hpp"

#include <algorithm>

#include "equicount/error.hpp"
#include "equicount/rational.hpp"

namespace equicount {

namespace {

void check_same_group(const BurnsideElt& a, const BurnsideElt& b) {
  if (a.group != b.group)
    fail(ErrorCode::GroupMismatch,
         "operands live over different groups (" + a.group->name + " vs " +
             b.group->name + ")");
}

long long checked_ll(const Int& v, const char* what) {
  internal_check(v.fits_slong_p(), std::string(what) + " overflows");
  return v.get_si();
}

}  // namespace

bool BurnsideElt::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](long long c) { return c == 0; });
}

BurnsideElt BurnsideElt::operator-() const {
  BurnsideElt r = *this;
  for (auto& c : r.coeffs) c = -c;
  return r;
}

BurnsideElt operator+(const BurnsideElt& a, const BurnsideElt& b) {
  check_same_group(a, b);
  BurnsideElt r = a;
  for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

BurnsideElt operator-(const BurnsideElt& a, const BurnsideElt& b) {
  return a + (-b);
}

BurnsideElt operator*(long long c, const BurnsideElt& a) {
  BurnsideElt r = a;
  for (auto& x : r.coeffs) x *= c;
  return r;
}

BurnsideElt operator*(const BurnsideElt& a, const BurnsideElt& b) {
  check_same_group(a, b);
  auto ga = marks(a), gb = marks(b);
  std::vector<long long> prod(ga.size());
  for (std::size_t i = 0; i < ga.size(); ++i) prod[i] = ga[i] * gb[i];
  try {
    return from_marks(a.group, prod);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotInImage)
      internal_check(false, "product ghost vector left the mark image");
    throw;
  }
}

bool operator==(const BurnsideElt& a, const BurnsideElt& b) {
  return a.group == b.group && a.coeffs == b.coeffs;
}

BurnsideElt burnside_zero(const GroupPtr& G) {
  return BurnsideElt{G, std::vector<long long>(G->num_subgroup_classes(), 0)};
}

BurnsideElt burnside_basis(const GroupPtr& G, int subgroup_class) {
  if (subgroup_class < 0 || subgroup_class >= G->num_subgroup_classes())
    fail(ErrorCode::BadInput, "subgroup class index out of range");
  auto r = burnside_zero(G);
  r.coeffs[subgroup_class] = 1;
  return r;
}

BurnsideElt burnside_one(const GroupPtr& G) {
  return burnside_basis(G, G->full_class());
}

std::vector<long long> marks(const BurnsideElt& x) {
  const auto& M = x.group->marks;
  const std::size_t n = M.size();
  std::vector<long long> ghost(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) ghost[j] += x.coeffs[i] * M[i][j];
  return ghost;
}

BurnsideElt from_marks(const GroupPtr& G, const std::vector<long long>& ghost) {
  const auto& M = G->marks;
  const int n = G->num_subgroup_classes();
  if (static_cast<int>(ghost.size()) != n)
    fail(ErrorCode::BadInput, "ghost vector has wrong length");
  // Back-substitution from the whole-group class down; the table is lower
  // triangular with positive diagonal.
  std::vector<Int> c(n, 0);
  auto r = burnside_zero(G);
  for (int j = n - 1; j >= 0; --j) {
    Int rem = int_from_ll(ghost[j]);
    for (int i = j + 1; i < n; ++i) rem -= c[i] * int_from_ll(M[i][j]);
    const Int diag = int_from_ll(M[j][j]);
    if (rem % diag != 0)
      fail(ErrorCode::NotInImage,
           "ghost vector is not an integral combination at class " +
               std::to_string(j) + " (" + subgroup_name(*G, j) + ")");
    c[j] = rem / diag;
    r.coeffs[j] = checked_ll(c[j], "burnside coefficient");
  }
  return r;
}

long long cardinality(const BurnsideElt& x) {
  return fixed_count(x, x.group->trivial_class());
}

long long fixed_count(const BurnsideElt& x, int subgroup_class) {
  if (subgroup_class < 0 || subgroup_class >= x.group->num_subgroup_classes())
    fail(ErrorCode::BadInput, "subgroup class index out of range");
  const auto& M = x.group->marks;
  long long v = 0;
  for (std::size_t i = 0; i < M.size(); ++i)
    v += x.coeffs[i] * M[i][subgroup_class];
  return v;
}

BurnsideElt induce(const Subgroup& H, const BurnsideElt& x) {
  if (x.group != H.group)
    fail(ErrorCode::GroupMismatch, "element is not over the given subgroup");
  const GroupPtr& G = H.parent;
  if (H.is_whole_group()) return x;
  auto r = burnside_zero(G);
  for (int k = 0; k < H.group->num_subgroup_classes(); ++k) {
    if (x.coeffs[k] == 0) continue;
    std::vector<int> in_g;
    in_g.reserve(H.group->subgroup_classes[k].size());
    for (int h : H.group->subgroup_classes[k]) in_g.push_back(H.embed[h]);
    std::sort(in_g.begin(), in_g.end());
    r.coeffs[G->class_of_subgroup_set(in_g)] += x.coeffs[k];
  }
  return r;
}

BurnsideElt restrict_to(const Subgroup& H, const BurnsideElt& x) {
  if (x.group != H.parent)
    fail(ErrorCode::GroupMismatch, "element is not over the parent group");
  if (H.is_whole_group()) return x;
  const GroupPtr& G = H.parent;
  const auto& h_set = G->subgroup_classes[H.class_index];
  auto h_index = [&](int g_elem) {
    auto it = std::lower_bound(H.embed.begin(), H.embed.end(), g_elem);
    internal_check(it != H.embed.end() && *it == g_elem, "element not in subgroup");
    return static_cast<int>(it - H.embed.begin());
  };
  auto r = burnside_zero(H.group);
  for (int k = 0; k < G->num_subgroup_classes(); ++k) {
    if (x.coeffs[k] == 0) continue;
    const auto& k_set = G->subgroup_classes[k];
    std::vector<char> in_k(G->order, 0);
    for (int e : k_set) in_k[e] = 1;
    for (const auto& dc : double_cosets(G, H.class_index, k)) {
      const int g = dc.representative;
      // H cap g K g^-1, written in subgroup-local element indices.
      std::vector<int> cap;
      for (int h : h_set)
        if (in_k[G->mult[G->mult[G->inv[g]][h]][g]]) cap.push_back(h_index(h));
      std::sort(cap.begin(), cap.end());
      r.coeffs[H.group->class_of_subgroup_set(cap)] += x.coeffs[k];
    }
  }
  return r;
}

BurnsideElt gset_decompose(const GroupAction& action) {
  const GroupPtr& G = action.group;
  auto r = burnside_zero(G);
  std::vector<char> seen(action.degree, 0);
  for (int p = 0; p < action.degree; ++p) {
    if (seen[p]) continue;
    std::vector<int> stab;
    for (int g = 0; g < G->order; ++g) {
      if (action.act[g][p] == p) stab.push_back(g);
      seen[action.act[g][p]] = 1;
    }
    r.coeffs[G->class_of_subgroup_set(stab)] += 1;
  }
  return r;
}

std::string BurnsideElt::str() const {
  std::string out;
  bool first = true;
  for (int i = group->num_subgroup_classes() - 1; i >= 0; --i) {
    const long long c = coeffs[i];
    if (c == 0) continue;
    const long long mag = c < 0 ? -c : c;
    std::string bracket;
    if (i == group->trivial_class() && group->order > 1)
      bracket = "[G]";
    else if (i == group->full_class())
      bracket = "[G/G]";
    else
      bracket = "[G/" + subgroup_name(*group, i) + "]";
    std::string term = (mag == 1 ? "" : std::to_string(mag)) + bracket;
    if (first) {
      out = (c < 0 ? "-" : "") + term;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + term;
    }
  }
  return first ? "0" : out;
}

}  // namespace equicount

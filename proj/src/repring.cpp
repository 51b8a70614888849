#include "equicount/repring.hpp"

#include <algorithm>
#include <map>

#include "equicount/error.hpp"

namespace equicount {

namespace {

void check_same_group(const ClassFn& a, const ClassFn& b) {
  if (a.group != b.group)
    fail(ErrorCode::GroupMismatch,
         "class functions live over different groups (" + a.group->name +
             " vs " + b.group->name + ")");
}

using Matrix = std::vector<std::vector<Cyclo>>;

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix r(n, std::vector<Cyclo>(n, Cyclo(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

Cyclo mat_trace(const Matrix& m) {
  Cyclo t(0);
  for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
  return t;
}

ClassFn character_from_matrices(
    const GroupPtr& G,
    const std::vector<std::pair<int, Matrix>>& gens) {
  if (gens.empty())
    fail(ErrorCode::BadInput, "matrix spec needs at least one generator");
  const std::size_t dim = gens.front().second.size();
  for (const auto& [e, m] : gens) {
    if (e < 0 || e >= G->order)
      fail(ErrorCode::BadInput, "matrix spec element index out of range");
    if (m.size() != dim)
      fail(ErrorCode::BadInput, "matrix spec dimensions disagree");
    for (const auto& row : m)
      if (row.size() != dim)
        fail(ErrorCode::BadInput, "matrix spec rows must be square");
  }

  Matrix id(dim, std::vector<Cyclo>(dim, Cyclo(0)));
  for (std::size_t i = 0; i < dim; ++i) id[i][i] = Cyclo(1);

  std::map<int, Matrix> table;
  table.emplace(0, id);
  for (const auto& [e, m] : gens) {
    auto [it, fresh] = table.emplace(e, m);
    if (!fresh && !(it->second == m))
      fail(ErrorCode::NotAHomomorphism,
           "conflicting matrices for element " + std::to_string(e));
  }
  // Multiplicative completion; every derived product is cross-checked, which
  // pins the homomorphism property on the generated subgroup.
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = table.begin(); it != table.end(); ++it) {
      for (const auto& [s, ms] : gens) {
        const int prod = G->mult[it->first][s];
        Matrix mp = mat_mul(it->second, ms);
        auto found = table.find(prod);
        if (found == table.end()) {
          table.emplace(prod, std::move(mp));
          progress = true;
        } else if (!(found->second == mp)) {
          fail(ErrorCode::NotAHomomorphism,
               "matrices are inconsistent at element " + std::to_string(prod));
        }
      }
    }
  }
  if (static_cast<int>(table.size()) != G->order)
    fail(ErrorCode::BadInput, "matrix spec elements do not generate the group");

  ClassFn f;
  f.group = G;
  for (const auto& cls : G->element_classes)
    f.values.push_back(mat_trace(table.at(cls.front())));
  return f;
}

ClassFn character_from_linear(const GroupPtr& G,
                              const std::vector<long>& exponents) {
  if (G->cyclic_factors.empty())
    fail(ErrorCode::AbelianOnly,
         "linear characters need a group with recorded cyclic factors");
  if (!G->is_abelian())
    fail(ErrorCode::AbelianOnly, "linear characters need an abelian group");
  const auto& factors = G->cyclic_factors;
  if (exponents.size() != factors.size())
    fail(ErrorCode::BadInput,
         "expected one exponent per cyclic factor (" +
             std::to_string(factors.size()) + ")");
  long long product = 1;
  for (auto [n, gen] : factors) {
    (void)gen;
    product *= n;
  }
  internal_check(product == G->order, "cyclic factors do not span the group");

  // Discrete log over the factor basis: enumerate all exponent tuples.
  std::vector<std::vector<long>> dlog(G->order);
  std::vector<long> tuple(factors.size(), 0);
  for (long long t = 0; t < product; ++t) {
    int elem = 0;
    long long rest = t;
    for (std::size_t j = 0; j < factors.size(); ++j) {
      tuple[j] = rest % factors[j].first;
      rest /= factors[j].first;
      elem = G->mult[elem][G->power(factors[j].second, tuple[j])];
    }
    internal_check(dlog[elem].empty() || G->order == 1,
                   "cyclic factors are not independent");
    dlog[elem] = tuple;
  }

  ClassFn f;
  f.group = G;
  for (const auto& cls : G->element_classes) {
    const auto& a = dlog[cls.front()];
    Cyclo v(1);
    for (std::size_t j = 0; j < factors.size(); ++j)
      v *= root_of_unity(factors[j].first, exponents[j] * a[j]);
    f.values.push_back(v);
  }
  return f;
}

}  // namespace

RepSpec rep_permutation(GroupAction action) {
  RepSpec s;
  s.kind = RepSpec::Kind::Permutation;
  s.action = std::move(action);
  return s;
}

RepSpec rep_linear(std::vector<long> exponents) {
  RepSpec s;
  s.kind = RepSpec::Kind::Linear;
  s.exponents = std::move(exponents);
  return s;
}

RepSpec rep_matrices(
    std::vector<std::pair<int, std::vector<std::vector<Cyclo>>>> gens) {
  RepSpec s;
  s.kind = RepSpec::Kind::Matrices;
  s.matrices = std::move(gens);
  return s;
}

RepSpec rep_values(std::vector<Cyclo> values) {
  RepSpec s;
  s.kind = RepSpec::Kind::Values;
  s.values = std::move(values);
  return s;
}

ClassFn character(const GroupPtr& G, const RepSpec& spec) {
  switch (spec.kind) {
    case RepSpec::Kind::Permutation: {
      const auto& a = *spec.action;
      if (a.group != G)
        fail(ErrorCode::GroupMismatch, "action is over a different group");
      ClassFn f;
      f.group = G;
      for (const auto& cls : G->element_classes) {
        long long fixed = 0;
        for (int p = 0; p < a.degree; ++p)
          if (a.act[cls.front()][p] == p) ++fixed;
        f.values.push_back(Cyclo(Rational(fixed)));
      }
      return f;
    }
    case RepSpec::Kind::Linear:
      return character_from_linear(G, spec.exponents);
    case RepSpec::Kind::Matrices:
      return character_from_matrices(G, spec.matrices);
    case RepSpec::Kind::Values: {
      if (spec.values.size() != G->element_classes.size())
        fail(ErrorCode::BadInput, "expected one value per element class");
      ClassFn f;
      f.group = G;
      f.values = spec.values;
      return f;
    }
  }
  fail(ErrorCode::InternalError, "unreachable rep spec kind");
}

ClassFn classfn_zero(const GroupPtr& G) {
  ClassFn f;
  f.group = G;
  f.values.assign(G->element_classes.size(), Cyclo(0));
  return f;
}

ClassFn trivial_character(const GroupPtr& G) {
  ClassFn f;
  f.group = G;
  f.values.assign(G->element_classes.size(), Cyclo(1));
  return f;
}

ClassFn operator+(const ClassFn& a, const ClassFn& b) {
  check_same_group(a, b);
  ClassFn r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] += b.values[i];
  return r;
}

ClassFn operator-(const ClassFn& a, const ClassFn& b) { return a + (-b); }

ClassFn ClassFn::operator-() const {
  ClassFn r = *this;
  for (auto& v : r.values) v = -v;
  return r;
}

ClassFn operator*(const Rational& c, const ClassFn& a) {
  ClassFn r = a;
  for (auto& v : r.values) v = c * v;
  return r;
}

bool operator==(const ClassFn& a, const ClassFn& b) {
  if (a.group != b.group) return false;
  for (std::size_t i = 0; i < a.values.size(); ++i)
    if (a.values[i] != b.values[i]) return false;
  return true;
}

ClassFn tensor(const ClassFn& a, const ClassFn& b) {
  check_same_group(a, b);
  ClassFn r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i) r.values[i] *= b.values[i];
  return r;
}

ClassFn dual(const ClassFn& a) {
  const auto& G = *a.group;
  ClassFn r;
  r.group = a.group;
  for (const auto& cls : G.element_classes)
    r.values.push_back(a.values[G.element_class_of[G.inv[cls.front()]]]);
  return r;
}

Rational rank(const ClassFn& a) {
  Rational r;
  if (!a.values[0].is_rational(&r))
    fail(ErrorCode::NonIntegralRank, "identity value is not rational");
  return r;
}

ClassFn adams(const ClassFn& a, long k) {
  const auto& G = *a.group;
  ClassFn r;
  r.group = a.group;
  for (const auto& cls : G.element_classes)
    r.values.push_back(a.values[G.element_class_of[G.power(cls.front(), k)]]);
  return r;
}

ClassFn sym_power(const ClassFn& a, int k) {
  if (k < 0) fail(ErrorCode::BadInput, "symmetric power needs k >= 0");
  std::vector<ClassFn> h{trivial_character(a.group)};
  std::vector<ClassFn> psi{trivial_character(a.group)};
  for (int i = 1; i <= k; ++i) psi.push_back(adams(a, i));
  for (int m = 1; m <= k; ++m) {
    ClassFn acc = classfn_zero(a.group);
    for (int i = 1; i <= m; ++i) acc = acc + tensor(h[m - i], psi[i]);
    h.push_back(Rational(Int(1), Int(m)) * acc);
  }
  return h[k];
}

ClassFn ext_power(const ClassFn& a, int k) {
  if (k < 0) fail(ErrorCode::BadInput, "exterior power needs k >= 0");
  std::vector<ClassFn> e{trivial_character(a.group)};
  std::vector<ClassFn> psi{trivial_character(a.group)};
  for (int i = 1; i <= k; ++i) psi.push_back(adams(a, i));
  for (int m = 1; m <= k; ++m) {
    ClassFn acc = classfn_zero(a.group);
    Rational sign(1);
    for (int i = 1; i <= m; ++i) {
      acc = acc + sign * tensor(e[m - i], psi[i]);
      sign = -sign;
    }
    e.push_back(Rational(Int(1), Int(m)) * acc);
  }
  return e[k];
}

ClassFn det_char(const ClassFn& a) {
  const Rational r = rank(a);
  if (!r.is_integer() || r.sign() <= 0)
    fail(ErrorCode::NonIntegralRank,
         "determinant needs a positive integer rank, got " + r.str());
  return ext_power(a, static_cast<int>(r.numerator().get_si()));
}

ClassFn induce_char(const Subgroup& H, const ClassFn& a) {
  if (a.group != H.group)
    fail(ErrorCode::GroupMismatch, "class function is not over the subgroup");
  if (H.is_whole_group()) return a;
  const GroupPtr& G = H.parent;
  const auto& HG = *H.group;
  std::vector<int> h_index(G->order, -1);
  for (std::size_t i = 0; i < H.embed.size(); ++i) h_index[H.embed[i]] = static_cast<int>(i);

  ClassFn r;
  r.group = G;
  const Rational scale(Int(1), Int(HG.order));
  for (const auto& cls : G->element_classes) {
    const int g = cls.front();
    Cyclo sum(0);
    for (int x = 0; x < G->order; ++x) {
      const int c = G->mult[G->mult[G->inv[x]][g]][x];  // x^-1 g x
      if (h_index[c] >= 0)
        sum += a.values[HG.element_class_of[h_index[c]]];
    }
    r.values.push_back(scale * sum);
  }
  return r;
}

ClassFn restrict_char(const Subgroup& H, const ClassFn& a) {
  if (a.group != H.parent)
    fail(ErrorCode::GroupMismatch, "class function is not over the parent group");
  if (H.is_whole_group()) return a;
  const auto& HG = *H.group;
  ClassFn r;
  r.group = H.group;
  for (const auto& cls : HG.element_classes)
    r.values.push_back(
        a.values[H.parent->element_class_of[H.embed[cls.front()]]]);
  return r;
}

Cyclo inner_product(const ClassFn& a, const ClassFn& b) {
  check_same_group(a, b);
  const auto& G = *a.group;
  Cyclo sum(0);
  for (std::size_t c = 0; c < G.element_classes.size(); ++c) {
    const int inv_class = G.element_class_of[G.inv[G.element_classes[c].front()]];
    sum += Rational(static_cast<long>(G.element_classes[c].size())) *
           (a.values[c] * b.values[inv_class]);
  }
  return Rational(Int(1), Int(G.order)) * sum;
}

Cyclo value_at(const ClassFn& a, int element) {
  if (element < 0 || element >= a.group->order)
    fail(ErrorCode::BadInput, "element index out of range");
  return a.values[a.group->element_class_of[element]];
}

ClassFn linearize(const BurnsideElt& x) {
  const auto& G = *x.group;
  ClassFn r;
  r.group = x.group;
  for (const auto& cls : G.element_classes) {
    const int j = G.class_of_cyclic(cls.front());
    long long v = 0;
    for (std::size_t i = 0; i < G.marks.size(); ++i)
      v += x.coeffs[i] * G.marks[i][j];
    r.values.push_back(Cyclo(Rational(v)));
  }
  return r;
}

}  // namespace equicount

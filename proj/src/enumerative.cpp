#include "equicount/enumerative.hpp"

#include <algorithm>

#include "equicount/error.hpp"

namespace equicount {

namespace {

long long rank_as_ll(const ClassFn& f) {
  const Rational r = rank(f);
  if (!r.is_integer())
    fail(ErrorCode::NonIntegralRank, "count has non-integral rank " + r.str());
  internal_check(r.numerator().fits_slong_p(), "rank overflows");
  return r.numerator().get_si();
}

CountReport report_from_A(BurnsideElt countA) {
  CountReport rep;
  rep.countR = linearize(countA);
  rep.rank = cardinality(countA);
  rep.fixedCounts = marks(countA);
  if (countA.group->order == 2)
    rep.welschinger = -rep.fixedCounts[countA.group->full_class()];
  rep.countA = std::move(countA);
  return rep;
}

void check_three_lines(const GroupPtr& G, const std::vector<ClassFn>& lines) {
  if (!G->is_abelian())
    fail(ErrorCode::AbelianOnly, "pipeline needs an abelian group");
  if (lines.size() != 3)
    fail(ErrorCode::BadInput, "expected exactly three line characters");
  for (const auto& l : lines) {
    if (l.group != G)
      fail(ErrorCode::GroupMismatch, "line character over a different group");
    if (rank(l) != Rational(1))
      fail(ErrorCode::BadInput, "line characters must have rank 1");
  }
}

}  // namespace

std::variant<BurnsideElt, ClassFn> assemble_degree(
    const GroupPtr& G, const std::vector<LocalDatum>& data) {
  if (data.empty())
    fail(ErrorCode::BadInput, "cannot assemble an empty batch of local data");
  for (const auto& d : data) {
    if (d.stabilizer.parent != G)
      fail(ErrorCode::GroupMismatch, "stabilizer is not a subgroup of the group");
    if (d.local.index() != data.front().local.index())
      fail(ErrorCode::MixedCarriers,
           "local data must be uniformly Burnside-valued or character-valued");
  }
  if (std::holds_alternative<BurnsideElt>(data.front().local)) {
    auto total = burnside_zero(G);
    for (const auto& d : data) {
      const auto& x = std::get<BurnsideElt>(d.local);
      if (x.group != d.stabilizer.group)
        fail(ErrorCode::GroupMismatch, "local class not over its stabilizer");
      total = total + induce(d.stabilizer, x);
    }
    return total;
  }
  auto total = classfn_zero(G);
  for (const auto& d : data) {
    const auto& x = std::get<ClassFn>(d.local);
    if (x.group != d.stabilizer.group)
      fail(ErrorCode::GroupMismatch, "local character not over its stabilizer");
    total = total + induce_char(d.stabilizer, x);
  }
  return total;
}

ConjugationInputs conjugation_inputs(int n1) {
  if (n1 < 0 || n1 > 8 || n1 % 2 != 0)
    fail(ErrorCode::InvalidPointSplit,
         "real point count must be even and between 0 and 8, got " +
             std::to_string(n1));
  const int n2 = (8 - n1) / 2;
  ConjugationInputs in;
  in.group = named_group("cyclic", 2);
  const auto fixed = burnside_one(in.group);
  const auto pair = burnside_basis(in.group, in.group->trivial_class());
  // The plane under conjugation: fixed real locus, one free cell pair.
  in.chiP2 = fixed + pair;
  // Base locus: n1 real points, the forced ninth real point, n2 conjugate pairs.
  in.chiB = (n1 + 1) * fixed + n2 * pair;
  // Exceptional locus: one conjugation sphere over each base point.
  in.chiExceptional = in.chiB * pair;
  return in;
}

CountReport cubic_count_blowup(const BurnsideElt& chiP2,
                               const BurnsideElt& chiB,
                               const BurnsideElt& chiExceptional) {
  if (chiP2.group != chiB.group || chiP2.group != chiExceptional.group)
    fail(ErrorCode::GroupMismatch, "blowup inputs over different groups");
  return report_from_A(chiP2 - chiB + chiExceptional);
}

std::pair<long long, long long> welschinger(const CountReport& report,
                                            int element) {
  if (!report.countA || !report.countR)
    fail(ErrorCode::BadInput, "report must carry both count forms");
  const GroupPtr& G = report.countA->group;
  if (G->order != 2)
    fail(ErrorCode::WrongGroup, "real count needs the order-2 group");
  if (element != 1)
    fail(ErrorCode::BadInput, "element must be the non-identity involution");
  const long long from_a = -report.fixedCounts[G->full_class()];
  Rational v;
  if (!value_at(*report.countR, element).is_rational(&v) || !v.is_integer())
    fail(ErrorCode::InternalError, "character value at involution not integral");
  return {from_a, -v.numerator().get_si()};
}

CountReport count_from_masses(const GroupPtr& G,
                              const std::vector<LocalDatum>& orbit_masses) {
  auto assembled = assemble_degree(G, orbit_masses);
  if (!std::holds_alternative<BurnsideElt>(assembled))
    fail(ErrorCode::BadInput, "masses must be Burnside-valued");
  return report_from_A(std::get<BurnsideElt>(assembled));
}

CountReport count_from_masses(const GroupPtr& order2_group,
                              long long real_split, long long real_non_split,
                              long long complex_pairs) {
  if (order2_group->order != 2)
    fail(ErrorCode::WrongGroup, "node census needs the order-2 group");
  if (real_split < 0 || real_non_split < 0 || complex_pairs < 0)
    fail(ErrorCode::BadInput, "node counts must be non-negative");
  std::vector<LocalDatum> data;
  const auto split = make_node_type(NodeKind::RealSplit, order2_group);
  const auto nonsplit = make_node_type(NodeKind::RealNonSplit, order2_group);
  const auto cpair = make_node_type(NodeKind::ComplexPair, order2_group);
  if (real_split > 0)
    data.push_back({split.stabilizer, real_split * mass(split)});
  if (real_non_split > 0)
    data.push_back({nonsplit.stabilizer, real_non_split * mass(nonsplit)});
  if (complex_pairs > 0)
    data.push_back({cpair.stabilizer, complex_pairs * mass(cpair)});
  if (data.empty())
    data.push_back({subgroup(order2_group, order2_group->full_class()),
                    burnside_zero(order2_group)});
  return count_from_masses(order2_group, data);
}

BurnsideElt abelian_pv_euler_A(const GroupPtr& G,
                               const std::vector<ClassFn>& lines) {
  check_three_lines(G, lines);
  // Every subgroup of an abelian G fixes each isotypic projective piece, and
  // the fixed-point Euler characteristics add up to dim V per subgroup.
  std::vector<long long> ghost(G->num_subgroup_classes(), 3);
  auto e = from_marks(G, ghost);
  internal_check(e == 3 * burnside_one(G), "projective-space class must be 3[G/G]");
  return e;
}

ClassFn proj_bundle_euler_K(const ClassFn& V, int n) {
  if (n < 0) fail(ErrorCode::BadInput, "fiber dimension must be >= 0");
  if (rank(V) != Rational(n + 1))
    fail(ErrorCode::BadInput, "bundle rank must be n+1 = " + std::to_string(n + 1));
  return ext_power(V, n);
}

ClassFn serre_pushforward(const ClassFn& V, int m) {
  const Rational r = rank(V);
  if (!r.is_integer() || r.sign() <= 0)
    fail(ErrorCode::NonIntegralRank, "pushforward needs a positive integer rank");
  const int n = static_cast<int>(r.numerator().get_si()) - 1;
  if (m >= 0) return sym_power(dual(V), m);
  if (m > -n - 1) return classfn_zero(V.group);
  ClassFn top = ext_power(V, n + 1);
  ClassFn s = sym_power(dual(V), -n - 1 - m);
  ClassFn out = tensor(top, s);
  return (n % 2 == 0) ? out : -out;
}

HomBundleCount hom_bundle_count(const ClassFn& V2) {
  if (rank(V2) != Rational(3))
    fail(ErrorCode::BadInput, "plane bundle must have rank 3");
  const GroupPtr& G = V2.group;
  const ClassFn D = dual(V2);
  const ClassFn top = ext_power(V2, 3);
  const ClassFn det = det_char(V2);
  auto S = [&](int m) { return sym_power(D, m); };

  const ClassFn closed =
      tensor(top, S(3) - S(9) + 2 * S(12) - S(15)) -
      tensor(V2, tensor(top, S(2) - S(8) + 2 * S(11) - S(14))) +
      trivial_character(G) +
      tensor(det, tensor(top, S(6) - S(12) + 3 * S(18) - 2 * S(21)));

  auto R = [&](int m) { return serre_pushforward(V2, m); };
  HomBundleCount out;
  out.term_line = R(-6) - R(-12) + 2 * R(-15) - R(-18);
  out.term_tangent = tensor(V2, R(-5) - R(-11) + 2 * R(-14) - R(-17));
  out.term_unit = trivial_character(G);
  out.term_det = tensor(det, R(-9) - R(-15) + 3 * R(-21) - 2 * R(-24));
  out.assembled = out.term_det + out.term_unit - out.term_tangent + out.term_line;
  out.closed = closed;

  if (!(out.closed == out.assembled))
    fail(ErrorCode::AssemblyMismatch,
         "closed form and pushforward pipeline disagree");
  if (rank_as_ll(out.closed) != 12)
    fail(ErrorCode::AssemblyMismatch,
         "assembled count must have rank 12, got " +
             rank(out.closed).str());

  out.report.countR = out.closed;
  out.report.rank = 12;
  return out;
}

CountReport cubic_count_abelian_K(const GroupPtr& G,
                                  const std::vector<ClassFn>& lines,
                                  const BaseLocusDatum& base,
                                  TangentMode mode) {
  check_three_lines(G, lines);
  long long total = 0;
  for (const auto& o : base.orbits) {
    if (o.stabilizer_class < 0 || o.stabilizer_class >= G->num_subgroup_classes())
      fail(ErrorCode::InvalidBaseLocus, "orbit stabilizer class out of range");
    if (o.multiplicity < 0)
      fail(ErrorCode::InvalidBaseLocus, "orbit multiplicity must be >= 0");
    if (o.line && (*o.line < 0 || *o.line > 2))
      fail(ErrorCode::InvalidBaseLocus, "line index must be 0, 1 or 2");
    const long long orbit_size =
        G->order / static_cast<long long>(G->subgroup_classes[o.stabilizer_class].size());
    total += o.multiplicity * orbit_size;
  }
  if (total != 8)
    fail(ErrorCode::InvalidBaseLocus,
         "orbits must cover 8 points: the base locus is B = S + {*} with a "
         "forced G-fixed ninth point, got |S| = " + std::to_string(total));
  if (base.ninth_line < 0 || base.ninth_line > 2)
    fail(ErrorCode::InvalidBaseLocus, "ninth-point line index must be 0, 1 or 2");

  const ClassFn V = lines[0] + lines[1] + lines[2];
  // Tangent character at a point on coordinate line p, over the whole group.
  auto tangent_at = [&](int p) {
    ClassFn t = classfn_zero(G);
    for (int j = 0; j < 3; ++j)
      if (j != p) t = t + tensor(lines[j], dual(lines[p]));
    return t;
  };

  CountReport rep;
  ClassFn count = ext_power(V, 2);
  for (const auto& o : base.orbits) {
    if (o.multiplicity == 0) continue;
    const Subgroup H = subgroup(G, o.stabilizer_class);
    ClassFn local(classfn_zero(H.group));
    if (mode == TangentMode::AmbientLiteral) {
      local = restrict_char(H, V) - trivial_character(H.group);
    } else if (o.line) {
      local = restrict_char(H, tangent_at(*o.line)) - trivial_character(H.group);
    } else if (o.stabilizer_class == G->trivial_class()) {
      // Free orbit: the tangent restricts to the rank-2 trivial character.
      local = trivial_character(H.group);
    } else {
      fail(ErrorCode::MissingLineIndex,
           "orbit with non-trivial stabilizer needs its fixed-line index");
    }
    count = count + Rational(Int(static_cast<long>(o.multiplicity))) * induce_char(H, local);
  }
  // The forced ninth point, G-fixed.
  if (mode == TangentMode::AmbientLiteral) {
    count = count + V - trivial_character(G);
    rep.warnings.push_back(
        "ambient-literal tangent mode counts the full rank-3 ambient "
        "character at each base point; the total has rank 21, not the "
        "projective-tangent 12");
  } else {
    count = count + tangent_at(base.ninth_line) - trivial_character(G);
  }

  rep.rank = rank_as_ll(count);
  rep.countR = std::move(count);
  return rep;
}

}  // namespace equicount

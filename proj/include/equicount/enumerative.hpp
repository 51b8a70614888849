#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "equicount/burnside.hpp"
#include "equicount/gcw.hpp"
#include "equicount/groups.hpp"
#include "equicount/repring.hpp"

namespace equicount {

// Local contribution at one orbit: the stabilizer of a point together with
// the local degree/mass over that stabilizer. A batch must carry its locals
// uniformly in A or uniformly in R.
struct LocalDatum {
  Subgroup stabilizer;
  std::variant<BurnsideElt, ClassFn> local;
};

// Global degree as the sum of transfers of the local data:
// sum_i tr_{H_i}^G (local_i). Throws MixedCarriers on mixed batches.
std::variant<BurnsideElt, ClassFn> assemble_degree(
    const GroupPtr& G, const std::vector<LocalDatum>& data);

struct CountReport {
  std::optional<BurnsideElt> countA;
  std::optional<ClassFn> countR;
  long long rank = 0;
  // Fixed-point count per subgroup class; filled when countA is present.
  std::vector<long long> fixedCounts;
  // Real count, present for order-2 groups with an A-side answer.
  std::optional<long long> welschinger;
  std::vector<std::string> warnings;
};

// Equivariant Euler characteristics feeding the blowup count for the
// conjugation action: the plane, a base locus of 8 points split into n1 real
// points and (8-n1)/2 conjugate pairs plus the forced ninth real point, and
// the exceptional locus of the blowup at those points.
struct ConjugationInputs {
  GroupPtr group;  // the order-2 group
  BurnsideElt chiP2, chiB, chiExceptional;
};

// n1 must be even, 0 <= n1 <= 8. Throws InvalidPointSplit.
ConjugationInputs conjugation_inputs(int n1);

// Count of rational curves in the pencil through the base locus, as the
// equivariant Euler characteristic of the blown-up plane:
// chiP2 - chiB + chiExceptional. Reports both the A(G) class and its
// linearization.
CountReport cubic_count_blowup(const BurnsideElt& chiP2,
                               const BurnsideElt& chiB,
                               const BurnsideElt& chiExceptional);

// Signed real count recovered two ways from a count over the order-2 group:
// from the A-side fixed-point count and from the character value at the
// non-identity element g. Both are negated Euler numbers of the real locus.
// Throws WrongGroup unless |G| = 2; requires both carriers in the report.
std::pair<long long, long long> welschinger(const CountReport& report,
                                            int element);

// Global count assembled from per-orbit masses (Burnside carriers).
CountReport count_from_masses(const GroupPtr& G,
                              const std::vector<LocalDatum>& orbit_masses);
// Convenience for the order-2 group: a nodal-curve census by node type.
CountReport count_from_masses(const GroupPtr& order2_group,
                              long long real_split, long long real_non_split,
                              long long complex_pairs);

// Euler characteristic of P(V) in A(G) for an abelian G acting on V by three
// linear characters: every subgroup fixes chi(P(V)^H) = dim V = 3, so the
// class is 3[G/G]; computed through from_marks as a cross-check.
BurnsideElt abelian_pv_euler_A(const GroupPtr& G,
                               const std::vector<ClassFn>& lines);

// Euler class of the projective bundle P(V) -> pt in R(G): the top exterior
// power of V at rank n+1. Throws BadInput if rank(V) != n+1.
ClassFn proj_bundle_euler_K(const ClassFn& V, int n);

// Pushforward of O(m) along P(V) -> pt for rank(V) = n+1, as the alternating
// sum of cohomology:
//   m >= 0:        Sym^m V*
//   -n-1 < m < 0:  0
//   m <= -n-1:     (-1)^n  wedge^(n+1) V (x) Sym^(-n-1-m) V*
ClassFn serre_pushforward(const ClassFn& V, int m);

// Euler number of the curve-counting bundle over the pencil, computed twice:
// a closed form in sym/ext powers of V2, and the four-term pushforward
// pipeline (line, tangent, unit, det twists). The two assemblies must agree
// exactly and have rank 12 (AssemblyMismatch otherwise, an internal error).
struct HomBundleCount {
  CountReport report;  // countR = the agreed value
  ClassFn closed, assembled;
  ClassFn term_line, term_tangent, term_unit, term_det;
};

HomBundleCount hom_bundle_count(const ClassFn& V2);

// One orbit of base points: the stabilizer class, how many copies of that
// orbit, and which coordinate line the stabilizer fixes at the point (free
// orbits carry no line).
struct BaseOrbit {
  int stabilizer_class = 0;
  long long multiplicity = 0;
  std::optional<int> line;
};

// Base locus B = S + {*}: the orbits describe S (8 points in total) and the
// forced ninth point {*} is G-fixed on coordinate line ninth_line.
struct BaseLocusDatum {
  std::vector<BaseOrbit> orbits;
  int ninth_line = 0;
};

// Which tangent character each base point contributes:
//   ProjectiveTangent: Hom(L_p, V/L_p), rank 2 (the default; totals rank 12)
//   AmbientLiteral   : the ambient V restricted, rank 3 (totals rank 21;
//                       kept as a regression-locked alternative, reported
//                       with a warning)
enum class TangentMode { ProjectiveTangent, AmbientLiteral };

// R(G)-valued count for an abelian group acting on the plane by three linear
// characters, with base locus B:
//   countR = ext^2(V) + sum_orbits n_i tr_{H_i}(T_i - 1) + (T_* - 1)
// where T depends on the tangent mode. Throws AbelianOnly, InvalidBaseLocus,
// MissingLineIndex.
CountReport cubic_count_abelian_K(const GroupPtr& G,
                                  const std::vector<ClassFn>& lines,
                                  const BaseLocusDatum& base,
                                  TangentMode mode = TangentMode::ProjectiveTangent);

}  // namespace equicount

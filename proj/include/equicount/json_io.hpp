#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "equicount/enumerative.hpp"
#include "equicount/gcw.hpp"
#include "equicount/groups.hpp"
#include "equicount/repring.hpp"

namespace equicount::io {

using json = nlohmann::ordered_json;

// Structural payload problem: wrong type, missing field, out-of-range index.
// Carries a JSON-pointer-style path to the offending node.
class SchemaViolation : public std::runtime_error {
 public:
  SchemaViolation(std::string path, const std::string& message)
      : std::runtime_error(message), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Group spec:
//   {"kind":"named","name":"cyclic","n":2}
//   {"kind":"perm","degree":3,"generators":[[1,2,0]]}
//   {"kind":"product","factors":[<spec>,...]}
GroupPtr parse_group(const json& j, const std::string& path);
// Shorthand accepted by CLI flags: "trivial", "cyclic<N>", "dihedral<N>",
// "symmetric<N>", "klein4", or an inline JSON object.
GroupPtr parse_group_arg(const std::string& text, const std::string& path);

// {"basis":[{"subgroup":0,"coeff":10},{"subgroup":1,"coeff":-8}]}
BurnsideElt parse_burnside(const GroupPtr& G, const json& j,
                           const std::string& path);
json burnside_to_json(const BurnsideElt& x);

// {"classes":["12","-8",...]} with cyclotomic value grammar per entry.
ClassFn parse_classfn(const GroupPtr& G, const json& j,
                      const std::string& path);
json classfn_to_json(const ClassFn& f);

// {"kind":"permutation","degree":d,"act":[...]} | {"kind":"linear",...}
// | {"kind":"matrices",...} | {"kind":"values","classes":[...]}
RepSpec parse_repspec(const GroupPtr& G, const json& j,
                      const std::string& path);

// {"cells":[{"dim":0,"gset":<burnside>},...]}
GCW parse_gcw(const GroupPtr& G, const json& j, const std::string& path);

// {"orbits":[{"subgroup":i,"multiplicity":n,"line":j?}],"ninthLine":j}
BaseLocusDatum parse_base_locus(const GroupPtr& G, const json& j,
                                const std::string& path);

json count_report_to_json(const CountReport& rep);
json group_info_json(const GroupPtr& G);
json marks_json(const GroupPtr& G);

// Field access helpers; every failure names the exact path.
const json& require_field(const json& j, const char* key,
                          const std::string& path);
long long require_int(const json& j, const std::string& path);
std::string require_string(const json& j, const std::string& path);
const json& require_array(const json& j, const std::string& path);
const json& require_object(const json& j, const std::string& path);

}  // namespace equicount::io

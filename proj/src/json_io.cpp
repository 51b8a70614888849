#include "equicount/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "equicount/error.hpp"

namespace equicount::io {

namespace {

std::string at(const std::string& path, const std::string& key) {
  return path + "/" + key;
}
std::string at(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

int require_index(const json& j, const std::string& path, int limit,
                  const char* what) {
  const long long v = require_int(j, path);
  if (v < 0 || v >= limit)
    throw SchemaViolation(path, std::string(what) + " index " +
                                     std::to_string(v) + " out of range [0, " +
                                     std::to_string(limit) + ")");
  return static_cast<int>(v);
}

}  // namespace

const json& require_field(const json& j, const char* key,
                          const std::string& path) {
  if (!j.is_object())
    throw SchemaViolation(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end())
    throw SchemaViolation(at(path, key), "missing required field");
  return *it;
}

long long require_int(const json& j, const std::string& path) {
  if (!j.is_number_integer())
    throw SchemaViolation(path, "expected an integer");
  return j.get<long long>();
}

std::string require_string(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaViolation(path, "expected a string");
  return j.get<std::string>();
}

const json& require_array(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaViolation(path, "expected an array");
  return j;
}

const json& require_object(const json& j, const std::string& path) {
  if (!j.is_object()) throw SchemaViolation(path, "expected an object");
  return j;
}

GroupPtr parse_group(const json& j, const std::string& path) {
  const std::string kind = require_string(require_field(j, "kind", path),
                                          at(path, "kind"));
  if (kind == "named") {
    const std::string name = require_string(require_field(j, "name", path),
                                            at(path, "name"));
    long long n = 0;
    if (auto it = j.find("n"); it != j.end()) n = require_int(*it, at(path, "n"));
    return named_group(name, static_cast<int>(n));
  }
  if (kind == "perm") {
    const long long degree =
        require_int(require_field(j, "degree", path), at(path, "degree"));
    const json& gens =
        require_array(require_field(j, "generators", path), at(path, "generators"));
    std::vector<std::vector<int>> generators;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const json& g = require_array(gens[i], at(at(path, "generators"), i));
      std::vector<int> perm;
      for (std::size_t k = 0; k < g.size(); ++k)
        perm.push_back(static_cast<int>(
            require_int(g[k], at(at(at(path, "generators"), i), k))));
      generators.push_back(std::move(perm));
    }
    int cap = 200;
    if (auto it = j.find("cap"); it != j.end())
      cap = static_cast<int>(require_int(*it, at(path, "cap")));
    return group_from_generators(static_cast<int>(degree), generators, cap);
  }
  if (kind == "product") {
    const json& factors =
        require_array(require_field(j, "factors", path), at(path, "factors"));
    if (factors.empty())
      throw SchemaViolation(at(path, "factors"), "product needs factors");
    GroupPtr acc = parse_group(factors[0], at(at(path, "factors"), 0));
    for (std::size_t i = 1; i < factors.size(); ++i)
      acc = product_group(acc, parse_group(factors[i], at(at(path, "factors"), i)));
    return acc;
  }
  throw SchemaViolation(at(path, "kind"),
                        "unknown group kind '" + kind + "'");
}

GroupPtr parse_group_arg(const std::string& text, const std::string& path) {
  if (!text.empty() && text.front() == '{') {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
      throw SchemaViolation(path, "group spec is not valid JSON");
    return parse_group(j, path);
  }
  if (text == "trivial") return named_group("trivial", 0);
  if (text == "klein4") return named_group("klein4", 0);
  for (const char* prefix : {"cyclic", "dihedral", "symmetric"}) {
    const std::size_t len = std::string(prefix).size();
    if (text.rfind(prefix, 0) == 0 && text.size() > len &&
        std::all_of(text.begin() + len, text.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      return named_group(prefix, std::stoi(text.substr(len)));
  }
  throw SchemaViolation(path, "unrecognized group '" + text + "'");
}

BurnsideElt parse_burnside(const GroupPtr& G, const json& j,
                           const std::string& path) {
  const json& basis =
      require_array(require_field(j, "basis", path), at(path, "basis"));
  auto x = burnside_zero(G);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const std::string p = at(at(path, "basis"), i);
    const json& term = require_object(basis[i], p);
    const int cls = require_index(require_field(term, "subgroup", p),
                                  at(p, "subgroup"),
                                  G->num_subgroup_classes(), "subgroup class");
    const long long coeff =
        require_int(require_field(term, "coeff", p), at(p, "coeff"));
    x.coeffs[cls] += coeff;
  }
  return x;
}

json burnside_to_json(const BurnsideElt& x) {
  json basis = json::array();
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    basis.push_back({{"subgroup", i}, {"coeff", x.coeffs[i]}});
  }
  return json{{"basis", std::move(basis)}};
}

ClassFn parse_classfn(const GroupPtr& G, const json& j,
                      const std::string& path) {
  const json& classes =
      require_array(require_field(j, "classes", path), at(path, "classes"));
  if (classes.size() != G->element_classes.size())
    throw SchemaViolation(at(path, "classes"),
                          "expected one value per element class (" +
                              std::to_string(G->element_classes.size()) + ")");
  std::vector<Cyclo> values;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const std::string p = at(at(path, "classes"), i);
    try {
      values.push_back(parse_cyclo(require_string(classes[i], p)));
    } catch (const Error& e) {
      throw SchemaViolation(p, e.what());
    }
  }
  return character(G, rep_values(std::move(values)));
}

json classfn_to_json(const ClassFn& f) {
  json classes = json::array();
  for (const auto& v : f.values) classes.push_back(v.str());
  return json{{"classes", std::move(classes)}};
}

RepSpec parse_repspec(const GroupPtr& G, const json& j,
                      const std::string& path) {
  const std::string kind =
      require_string(require_field(j, "kind", path), at(path, "kind"));
  if (kind == "permutation") {
    const long long degree =
        require_int(require_field(j, "degree", path), at(path, "degree"));
    const json& rows = require_array(require_field(j, "act", path), at(path, "act"));
    std::vector<std::vector<int>> act;
    for (std::size_t g = 0; g < rows.size(); ++g) {
      const json& row = require_array(rows[g], at(at(path, "act"), g));
      std::vector<int> r;
      for (std::size_t p = 0; p < row.size(); ++p)
        r.push_back(static_cast<int>(
            require_int(row[p], at(at(at(path, "act"), g), p))));
      act.push_back(std::move(r));
    }
    return rep_permutation(make_action(G, static_cast<int>(degree), std::move(act)));
  }
  if (kind == "linear") {
    const json& exps = require_array(require_field(j, "exponents", path),
                                     at(path, "exponents"));
    std::vector<long> exponents;
    for (std::size_t i = 0; i < exps.size(); ++i)
      exponents.push_back(require_int(exps[i], at(at(path, "exponents"), i)));
    return rep_linear(std::move(exponents));
  }
  if (kind == "matrices") {
    const json& gens = require_array(require_field(j, "generators", path),
                                     at(path, "generators"));
    std::vector<std::pair<int, std::vector<std::vector<Cyclo>>>> mats;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const std::string p = at(at(path, "generators"), i);
      const json& entry = require_object(gens[i], p);
      const int elem = require_index(require_field(entry, "element", p),
                                     at(p, "element"), G->order, "element");
      const json& rows = require_array(require_field(entry, "matrix", p),
                                       at(p, "matrix"));
      std::vector<std::vector<Cyclo>> matrix;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const json& row = require_array(rows[r], at(at(p, "matrix"), r));
        std::vector<Cyclo> mrow;
        for (std::size_t c = 0; c < row.size(); ++c) {
          const std::string pc = at(at(at(p, "matrix"), r), c);
          try {
            mrow.push_back(parse_cyclo(require_string(row[c], pc)));
          } catch (const Error& e) {
            throw SchemaViolation(pc, e.what());
          }
        }
        matrix.push_back(std::move(mrow));
      }
      mats.push_back({elem, std::move(matrix)});
    }
    return rep_matrices(std::move(mats));
  }
  if (kind == "values") {
    ClassFn f = parse_classfn(G, j, path);
    return rep_values(std::move(f.values));
  }
  throw SchemaViolation(at(path, "kind"), "unknown rep kind '" + kind + "'");
}

GCW parse_gcw(const GroupPtr& G, const json& j, const std::string& path) {
  const json& cells =
      require_array(require_field(j, "cells", path), at(path, "cells"));
  std::vector<std::pair<int, BurnsideElt>> parsed;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string p = at(at(path, "cells"), i);
    const json& cell = require_object(cells[i], p);
    const long long dim =
        require_int(require_field(cell, "dim", p), at(p, "dim"));
    parsed.push_back({static_cast<int>(dim),
                      parse_burnside(G, require_field(cell, "gset", p),
                                     at(p, "gset"))});
  }
  return make_gcw(G, std::move(parsed));
}

BaseLocusDatum parse_base_locus(const GroupPtr& G, const json& j,
                                const std::string& path) {
  BaseLocusDatum base;
  const json& orbits =
      require_array(require_field(j, "orbits", path), at(path, "orbits"));
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    const std::string p = at(at(path, "orbits"), i);
    const json& o = require_object(orbits[i], p);
    BaseOrbit orbit;
    orbit.stabilizer_class =
        require_index(require_field(o, "subgroup", p), at(p, "subgroup"),
                      G->num_subgroup_classes(), "subgroup class");
    orbit.multiplicity =
        require_int(require_field(o, "multiplicity", p), at(p, "multiplicity"));
    if (auto it = o.find("line"); it != o.end() && !it->is_null()) {
      if (it->is_string() && it->get<std::string>() == "free") {
        // explicit free marker, same as omitting the field
      } else {
        orbit.line = static_cast<int>(require_int(*it, at(p, "line")));
      }
    }
    base.orbits.push_back(orbit);
  }
  if (auto it = j.find("ninthLine"); it != j.end())
    base.ninth_line = static_cast<int>(require_int(*it, at(path, "ninthLine")));
  return base;
}

json count_report_to_json(const CountReport& rep) {
  json out = json::object();
  out["rank"] = rep.rank;
  if (rep.welschinger) out["welschinger"] = *rep.welschinger;
  if (rep.countA) out["countA"] = burnside_to_json(*rep.countA);
  if (rep.countR) out["countR"] = classfn_to_json(*rep.countR);
  if (rep.countA) {
    json fixed = json::array();
    for (long long v : rep.fixedCounts) fixed.push_back(v);
    out["fixedCounts"] = std::move(fixed);
  }
  if (!rep.warnings.empty()) out["warnings"] = rep.warnings;
  return out;
}

json group_info_json(const GroupPtr& G) {
  json out = json::object();
  out["name"] = G->name;
  out["order"] = G->order;
  out["exponent"] = G->exponent;
  out["abelian"] = G->is_abelian();
  json ecls = json::array();
  for (const auto& c : G->element_classes)
    ecls.push_back({{"rep", c.front()}, {"size", c.size()}});
  out["elementClasses"] = std::move(ecls);
  json scls = json::array();
  for (int i = 0; i < G->num_subgroup_classes(); ++i) {
    const auto& s = G->subgroup_classes[i];
    scls.push_back({{"index", i},
                    {"name", subgroup_name(*G, i)},
                    {"order", s.size()},
                    {"conjugates",
                     std::count_if(G->subgroup_class_of.begin(),
                                   G->subgroup_class_of.end(),
                                   [&](const auto& kv) { return kv.second == i; })}});
  }
  out["subgroupClasses"] = std::move(scls);
  return out;
}

json marks_json(const GroupPtr& G) {
  json out = json::object();
  json names = json::array();
  for (int i = 0; i < G->num_subgroup_classes(); ++i)
    names.push_back(subgroup_name(*G, i));
  out["subgroups"] = std::move(names);
  json matrix = json::array();
  for (const auto& row : G->marks) {
    json r = json::array();
    for (long long v : row) r.push_back(v);
    matrix.push_back(std::move(r));
  }
  out["matrix"] = std::move(matrix);
  return out;
}

}  // namespace equicount::io

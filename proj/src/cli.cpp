#include "equicount/cli.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "equicount/burnside.hpp"
#include "equicount/enumerative.hpp"
#include "equicount/error.hpp"
#include "equicount/gcw.hpp"
#include "equicount/groups.hpp"
#include "equicount/json_io.hpp"
#include "equicount/repring.hpp"

namespace equicount::cli {
namespace {

using io::json;
using io::SchemaViolation;

const char* kUsage = R"(usage: equicount <command> [flags]

commands:
  group-info       order, classes, subgroup lattice summary
  marks            table of marks
  burnside-eval    Burnside-ring calculator (add/sub/mul/frommarks/...)
  char-eval        character calculator (tensor/sym/ext/induce/...)
  euler            equivariant Euler characteristics of a cell complex
  count-blowup     cubic count through the blowup pipeline
  count-abelian-k  R(G) cubic count for a linear abelian action
  count-masses     cubic count assembled from nodal masses
  hom-bundle       section-bundle Euler number, closed form vs pipeline
  welschinger      signed real count for the conjugation action
  help             this text

flags:
  --file <path>       JSON payload (flags overlay it)
  --payload <json>    inline JSON payload object
  --group <spec>      group: trivial | cyclic<N> | dihedral<N> | symmetric<N>
                      | klein4 | inline JSON spec
  --n1 <int>          real points among the eight (count-blowup, welschinger)
  --v <chars>         three line characters, e.g. '0;1;2' (count-abelian-k)
  --v2 <spec>         rank-3 character, e.g. trivial3 or 'linear:0;0;1'
  --model <name>      bundled cell complex (euler)
  --tangent-mode <m>  projective | ambient (count-abelian-k)
  --split/--nonsplit/--pairs <int>  node census (count-masses)
  --output <fmt>      json (default) | pretty
)";

struct Invocation {
  std::string command;
  json payload = json::object();
  std::string format = "json";
};

struct Output {
  json body;
  std::string pretty;
};

long long to_ll(const std::string& text, const std::string& path) {
  try {
    std::size_t pos = 0;
    long long v = std::stoll(text, &pos);
    if (pos == text.size()) return v;
  } catch (...) {
  }
  throw SchemaViolation(path, "expected an integer, got '" + text + "'");
}

Invocation parse_args(const std::vector<std::string>& args) {
  if (args.empty())
    throw SchemaViolation("/command", "missing command; run 'equicount help'");
  Invocation inv;
  inv.command = args[0];
  if (inv.command == "-h" || inv.command == "--help") inv.command = "help";

  json overlay = json::object();
  std::string file_path;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& flag = args[i];
    auto value = [&]() -> const std::string& {
      if (++i >= args.size())
        throw SchemaViolation("/args", "flag '" + flag + "' needs a value");
      return args[i];
    };
    if (flag == "--file") {
      file_path = value();
    } else if (flag == "--payload") {
      json j = json::parse(value(), nullptr, false);
      if (!j.is_object())
        throw SchemaViolation("/payload", "expected a JSON object");
      for (auto& [k, v] : j.items()) overlay[k] = v;
    } else if (flag == "--output") {
      inv.format = value();
      if (inv.format != "json" && inv.format != "pretty")
        throw SchemaViolation("/output", "expected 'json' or 'pretty'");
    } else if (flag == "--group") {
      overlay["group"] = value();
    } else if (flag == "--n1") {
      overlay["n1"] = to_ll(value(), "/n1");
    } else if (flag == "--v") {
      overlay["v"] = value();
    } else if (flag == "--v2") {
      overlay["v2"] = value();
    } else if (flag == "--model") {
      overlay["model"] = value();
    } else if (flag == "--tangent-mode") {
      overlay["tangentMode"] = value();
    } else if (flag == "--split") {
      overlay["split"] = to_ll(value(), "/split");
    } else if (flag == "--nonsplit") {
      overlay["nonsplit"] = to_ll(value(), "/nonsplit");
    } else if (flag == "--pairs") {
      overlay["pairs"] = to_ll(value(), "/pairs");
    } else {
      throw SchemaViolation("/args", "unknown flag '" + flag + "'");
    }
  }

  if (!file_path.empty()) {
    std::ifstream in(file_path);
    if (!in) throw SchemaViolation("/file", "cannot read '" + file_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    json j = json::parse(buf.str(), nullptr, false);
    if (!j.is_object())
      throw SchemaViolation("/file", "payload file is not a JSON object");
    inv.payload = std::move(j);
  }
  for (auto& [k, v] : overlay.items()) inv.payload[k] = v;
  return inv;
}

// ---- payload interpretation ----

GroupPtr payload_group(const json& p) {
  auto it = p.find("group");
  if (it == p.end())
    throw SchemaViolation("/group", "missing required field");
  if (it->is_string())
    return io::parse_group_arg(it->get<std::string>(), "/group");
  return io::parse_group(*it, "/group");
}

std::vector<long> split_exponents(const std::string& text,
                                  const std::string& path) {
  std::vector<long> exps;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ','))
    exps.push_back(to_ll(item, path));
  if (exps.empty()) throw SchemaViolation(path, "empty exponent list");
  return exps;
}

// String shorthands for a character operand: "trivial", "trivial<N>"
// (N copies of the trivial character), "linear:a,b;c,d;..." (sum of linear
// characters of an abelian group, exponents per cyclic factor).
ClassFn classfn_shorthand(const GroupPtr& G, const std::string& text,
                          const std::string& path) {
  if (text == "trivial") return trivial_character(G);
  if (text.rfind("trivial", 0) == 0) {
    const long long n = to_ll(text.substr(7), path);
    return n * trivial_character(G);
  }
  if (text.rfind("linear:", 0) == 0) {
    std::string body = text.substr(7);
    ClassFn sum = classfn_zero(G);
    std::string part;
    std::istringstream in(body);
    bool any = false;
    while (std::getline(in, part, ';')) {
      sum = sum + character(G, rep_linear(split_exponents(part, path)));
      any = true;
    }
    if (!any) throw SchemaViolation(path, "empty character list");
    return sum;
  }
  throw SchemaViolation(path, "unrecognized character '" + text + "'");
}

ClassFn classfn_any(const GroupPtr& G, const json& j, const std::string& path) {
  if (j.is_string()) return classfn_shorthand(G, j.get<std::string>(), path);
  io::require_object(j, path);
  if (j.contains("classes")) return io::parse_classfn(G, j, path);
  if (j.contains("kind")) return character(G, io::parse_repspec(G, j, path));
  throw SchemaViolation(path, "expected 'classes', a rep spec, or a shorthand");
}

// Three line characters for the abelian pipelines: "0;1;2" style text or an
// array whose entries are an exponent, an exponent list, or a character.
std::vector<ClassFn> payload_lines(const GroupPtr& G, const json& p) {
  auto it = p.find("v");
  if (it == p.end()) throw SchemaViolation("/v", "missing required field");
  std::vector<ClassFn> lines;
  if (it->is_string()) {
    std::string part;
    std::istringstream in(it->get<std::string>());
    while (std::getline(in, part, ';'))
      lines.push_back(character(G, rep_linear(split_exponents(part, "/v"))));
  } else {
    const json& arr = io::require_array(*it, "/v");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/v/" + std::to_string(i);
      const json& entry = arr[i];
      if (entry.is_number_integer()) {
        lines.push_back(character(
            G, rep_linear({static_cast<long>(entry.get<long long>())})));
      } else if (entry.is_array()) {
        std::vector<long> exps;
        for (std::size_t k = 0; k < entry.size(); ++k)
          exps.push_back(io::require_int(entry[k], path + "/" + std::to_string(k)));
        lines.push_back(character(G, rep_linear(std::move(exps))));
      } else {
        lines.push_back(classfn_any(G, entry, path));
      }
    }
  }
  if (lines.size() != 3)
    throw SchemaViolation("/v", "expected exactly three line characters");
  return lines;
}

TangentMode payload_tangent_mode(const json& p) {
  auto it = p.find("tangentMode");
  if (it == p.end()) return TangentMode::ProjectiveTangent;
  const std::string m = io::require_string(*it, "/tangentMode");
  if (m == "projective" || m == "ProjectiveTangent")
    return TangentMode::ProjectiveTangent;
  if (m == "ambient" || m == "AmbientLiteral")
    return TangentMode::AmbientLiteral;
  throw SchemaViolation("/tangentMode", "expected 'projective' or 'ambient'");
}

BurnsideElt payload_burnside(const GroupPtr& G, const json& p, const char* key) {
  return io::parse_burnside(G, io::require_field(p, key, ""),
                            std::string("/") + key);
}

// ---- formatting ----

std::string classfn_tuple(const ClassFn& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    if (i) s += ", ";
    s += f.values[i].str();
  }
  return s + ")";
}

template <typename T>
std::string int_tuple(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

void add_rank(json& out, const char* key, const Rational& r) {
  if (r.denominator() == 1 && r.numerator().fits_slong_p())
    out[key] = static_cast<long long>(r.numerator().get_si());
  else
    out[key] = r.str();
}

std::string report_pretty(const CountReport& rep) {
  std::ostringstream s;
  s << "rank: " << rep.rank << "\n";
  if (rep.welschinger) s << "welschinger: " << *rep.welschinger << "\n";
  if (rep.countA) s << "countA: " << rep.countA->str() << "\n";
  if (rep.countA) s << "fixedCounts: " << int_tuple(rep.fixedCounts) << "\n";
  if (rep.countR) s << "countR: " << classfn_tuple(*rep.countR) << "\n";
  for (const auto& w : rep.warnings) s << "warning: " << w << "\n";
  return s.str();
}

Output report_output(const CountReport& rep) {
  return {io::count_report_to_json(rep), report_pretty(rep)};
}

// ---- command handlers ----

Output cmd_group_info(const json& p) {
  GroupPtr G = payload_group(p);
  Output out{io::group_info_json(G), {}};
  std::ostringstream s;
  s << "name: " << G->name << "\n"
    << "order: " << G->order << "\n"
    << "exponent: " << G->exponent << "\n"
    << "abelian: " << (G->is_abelian() ? "yes" : "no") << "\n"
    << "element classes:\n";
  for (std::size_t i = 0; i < G->element_classes.size(); ++i)
    s << "  " << i << ": rep " << G->element_classes[i].front() << ", size "
      << G->element_classes[i].size() << "\n";
  s << "subgroup classes:\n";
  for (int i = 0; i < G->num_subgroup_classes(); ++i)
    s << "  " << i << ": " << subgroup_name(*G, i) << " (order "
      << G->subgroup_classes[i].size() << ")\n";
  out.pretty = s.str();
  return out;
}

Output cmd_marks(const json& p) {
  GroupPtr G = payload_group(p);
  Output out{io::marks_json(G), {}};
  const int n = G->num_subgroup_classes();
  std::vector<std::string> names;
  std::size_t w = 0;
  for (int i = 0; i < n; ++i) {
    names.push_back(subgroup_name(*G, i));
    w = std::max(w, names.back().size());
  }
  std::vector<std::vector<std::string>> cells(n);
  std::size_t cw = w;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cells[i].push_back(std::to_string(G->marks[i][j]));
      cw = std::max(cw, cells[i].back().size());
    }
  std::ostringstream s;
  s << std::string(w, ' ');
  for (int j = 0; j < n; ++j)
    s << "  " << std::string(cw - names[j].size(), ' ') << names[j];
  s << "\n";
  for (int i = 0; i < n; ++i) {
    s << names[i] << std::string(w - names[i].size(), ' ');
    for (int j = 0; j < n; ++j)
      s << "  " << std::string(cw - cells[i][j].size(), ' ') << cells[i][j];
    s << "\n";
  }
  out.pretty = s.str();
  return out;
}

Output burnside_output(const BurnsideElt& x) {
  json out = json::object();
  out["result"] = io::burnside_to_json(x);
  out["pretty"] = x.str();
  json m = json::array();
  for (long long v : marks(x)) m.push_back(v);
  out["marks"] = std::move(m);
  out["cardinality"] = cardinality(x);
  std::ostringstream s;
  s << "result: " << x.str() << "\n"
    << "marks: " << int_tuple(marks(x)) << "\n"
    << "cardinality: " << cardinality(x) << "\n";
  return {std::move(out), s.str()};
}

Output cmd_burnside_eval(const json& p) {
  GroupPtr G = payload_group(p);
  const std::string op =
      io::require_string(io::require_field(p, "op", ""), "/op");
  auto operand = [&](const char* key) {
    return io::parse_burnside(G, io::require_field(p, key, ""),
                              std::string("/") + key);
  };
  if (op == "eval") return burnside_output(operand("x"));
  if (op == "neg") return burnside_output(-operand("x"));
  if (op == "add") return burnside_output(operand("lhs") + operand("rhs"));
  if (op == "sub") return burnside_output(operand("lhs") - operand("rhs"));
  if (op == "mul") return burnside_output(operand("lhs") * operand("rhs"));
  if (op == "frommarks") {
    const json& arr =
        io::require_array(io::require_field(p, "marks", ""), "/marks");
    std::vector<long long> ghost;
    for (std::size_t i = 0; i < arr.size(); ++i)
      ghost.push_back(io::require_int(arr[i], "/marks/" + std::to_string(i)));
    return burnside_output(from_marks(G, ghost));
  }
  if (op == "induce" || op == "restrict") {
    const int cls = static_cast<int>(
        io::require_int(io::require_field(p, "subgroup", ""), "/subgroup"));
    if (cls < 0 || cls >= G->num_subgroup_classes())
      throw SchemaViolation("/subgroup", "subgroup class out of range");
    Subgroup H = subgroup(G, cls);
    if (op == "induce")
      return burnside_output(
          induce(H, io::parse_burnside(H.group, io::require_field(p, "x", ""),
                                       "/x")));
    return burnside_output(restrict_to(H, operand("x")));
  }
  if (op == "decompose") {
    const json& a = io::require_object(io::require_field(p, "action", ""),
                                       "/action");
    const int degree = static_cast<int>(
        io::require_int(io::require_field(a, "degree", "/action"),
                        "/action/degree"));
    const json& rows = io::require_array(
        io::require_field(a, "act", "/action"), "/action/act");
    std::vector<std::vector<int>> act;
    for (std::size_t g = 0; g < rows.size(); ++g) {
      const std::string path = "/action/act/" + std::to_string(g);
      const json& row = io::require_array(rows[g], path);
      std::vector<int> r;
      for (std::size_t k = 0; k < row.size(); ++k)
        r.push_back(static_cast<int>(
            io::require_int(row[k], path + "/" + std::to_string(k))));
      act.push_back(std::move(r));
    }
    return burnside_output(gset_decompose(make_action(G, degree, act)));
  }
  throw SchemaViolation("/op", "unknown op '" + op + "'");
}

Output classfn_output(const ClassFn& f) {
  json out = json::object();
  out["result"] = io::classfn_to_json(f);
  try {
    add_rank(out, "rank", rank(f));
  } catch (const Error&) {
    // non-rational identity value; rank omitted
  }
  std::ostringstream s;
  s << "result:\n";
  const auto& G = *f.group;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    s << "  class " << i << " (rep " << G.element_classes[i].front()
      << ", size " << G.element_classes[i].size()
      << "): " << f.values[i].str() << "\n";
  if (out.contains("rank")) {
    s << "rank: ";
    if (out["rank"].is_string())
      s << out["rank"].get<std::string>();
    else
      s << out["rank"].get<long long>();
    s << "\n";
  }
  return {std::move(out), s.str()};
}

Output scalar_output(const Cyclo& v) {
  json out = json::object();
  out["result"] = v.str();
  return {std::move(out), "result: " + v.str() + "\n"};
}

Output cmd_char_eval(const json& p) {
  GroupPtr G = payload_group(p);
  const std::string op =
      io::require_string(io::require_field(p, "op", ""), "/op");
  auto operand = [&](const char* key) {
    return classfn_any(G, io::require_field(p, key, ""),
                       std::string("/") + key);
  };
  auto k_of = [&]() {
    return io::require_int(io::require_field(p, "k", ""), "/k");
  };
  if (op == "character")
    return classfn_output(
        character(G, io::parse_repspec(G, io::require_field(p, "rep", ""),
                                       "/rep")));
  if (op == "add") return classfn_output(operand("lhs") + operand("rhs"));
  if (op == "sub") return classfn_output(operand("lhs") - operand("rhs"));
  if (op == "tensor")
    return classfn_output(tensor(operand("lhs"), operand("rhs")));
  if (op == "dual") return classfn_output(dual(operand("x")));
  if (op == "adams") return classfn_output(adams(operand("x"), k_of()));
  if (op == "sym")
    return classfn_output(sym_power(operand("x"), static_cast<int>(k_of())));
  if (op == "ext")
    return classfn_output(ext_power(operand("x"), static_cast<int>(k_of())));
  if (op == "det") return classfn_output(det_char(operand("x")));
  if (op == "induce" || op == "restrict") {
    const int cls = static_cast<int>(
        io::require_int(io::require_field(p, "subgroup", ""), "/subgroup"));
    if (cls < 0 || cls >= G->num_subgroup_classes())
      throw SchemaViolation("/subgroup", "subgroup class out of range");
    Subgroup H = subgroup(G, cls);
    if (op == "induce")
      return classfn_output(
          induce_char(H, classfn_any(H.group, io::require_field(p, "x", ""),
                                     "/x")));
    return classfn_output(restrict_char(H, operand("x")));
  }
  if (op == "linearize")
    return classfn_output(linearize(
        io::parse_burnside(G, io::require_field(p, "x", ""), "/x")));
  if (op == "inner")
    return scalar_output(inner_product(operand("lhs"), operand("rhs")));
  if (op == "value") {
    const int g = static_cast<int>(
        io::require_int(io::require_field(p, "element", ""), "/element"));
    if (g < 0 || g >= G->order)
      throw SchemaViolation("/element", "element index out of range");
    return scalar_output(value_at(operand("x"), g));
  }
  throw SchemaViolation("/op", "unknown op '" + op + "'");
}

Output cmd_euler(const json& p) {
  GroupPtr G = payload_group(p);
  GCW space{G, {}};
  if (auto it = p.find("model"); it != p.end()) {
    space = model(io::require_string(*it, "/model"), G);
  } else if (auto st = p.find("space"); st != p.end()) {
    const json& sp = io::require_object(*st, "/space");
    if (sp.contains("model"))
      space = model(io::require_string(sp["model"], "/space/model"), G);
    else
      space = io::parse_gcw(G, sp, "/space");
  } else {
    throw SchemaViolation("/space", "missing required field");
  }
  BurnsideElt a = euler_A(space);
  ClassFn kf = euler_K(space);
  json out = json::object();
  out["eulerA"] = io::burnside_to_json(a);
  out["pretty"] = a.str();
  json fixed = json::array();
  for (long long v : marks(a)) fixed.push_back(v);
  out["fixed"] = std::move(fixed);
  out["eulerK"] = io::classfn_to_json(kf);
  std::ostringstream s;
  s << "eulerA: " << a.str() << "\n"
    << "fixed: " << int_tuple(marks(a)) << "\n"
    << "eulerK: " << classfn_tuple(kf) << "\n";
  return {std::move(out), s.str()};
}

CountReport blowup_report(const json& p) {
  if (auto it = p.find("n1"); it != p.end()) {
    ConjugationInputs ci =
        conjugation_inputs(static_cast<int>(io::require_int(*it, "/n1")));
    return cubic_count_blowup(ci.chiP2, ci.chiB, ci.chiExceptional);
  }
  GroupPtr G = payload_group(p);
  return cubic_count_blowup(payload_burnside(G, p, "chiP2"),
                            payload_burnside(G, p, "chiB"),
                            payload_burnside(G, p, "chiExceptional"));
}

Output cmd_count_blowup(const json& p) { return report_output(blowup_report(p)); }

Output cmd_welschinger(const json& p) {
  if (!p.contains("n1"))
    throw SchemaViolation("/n1", "missing required field");
  return report_output(blowup_report(p));
}

Output cmd_count_masses(const json& p) {
  GroupPtr G = payload_group(p);
  if (auto it = p.find("orbits"); it != p.end()) {
    const json& arr = io::require_array(*it, "/orbits");
    std::vector<LocalDatum> data;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string path = "/orbits/" + std::to_string(i);
      const json& o = io::require_object(arr[i], path);
      const int cls = static_cast<int>(io::require_int(
          io::require_field(o, "subgroup", path), path + "/subgroup"));
      if (cls < 0 || cls >= G->num_subgroup_classes())
        throw SchemaViolation(path + "/subgroup", "subgroup class out of range");
      Subgroup H = subgroup(G, cls);
      data.push_back({H, io::parse_burnside(
                             H.group, io::require_field(o, "mass", path),
                             path + "/mass")});
    }
    return report_output(count_from_masses(G, data));
  }
  auto census = [&](const char* key) -> long long {
    auto it = p.find(key);
    return it == p.end() ? 0
                         : io::require_int(*it, std::string("/") + key);
  };
  return report_output(count_from_masses(G, census("split"),
                                         census("nonsplit"), census("pairs")));
}

Output cmd_count_abelian_k(const json& p) {
  GroupPtr G = payload_group(p);
  std::vector<ClassFn> lines = payload_lines(G, p);
  BaseLocusDatum base = io::parse_base_locus(
      G, io::require_field(p, "base", ""), "/base");
  return report_output(
      cubic_count_abelian_K(G, lines, base, payload_tangent_mode(p)));
}

Output cmd_hom_bundle(const json& p) {
  GroupPtr G = payload_group(p);
  ClassFn v2 = classfn_any(G, io::require_field(p, "v2", ""), "/v2");
  HomBundleCount hb = hom_bundle_count(v2);
  Output out = report_output(hb.report);
  json terms = json::object();
  add_rank(terms, "line", rank(hb.term_line));
  add_rank(terms, "tangent", rank(hb.term_tangent));
  add_rank(terms, "unit", rank(hb.term_unit));
  add_rank(terms, "det", rank(hb.term_det));
  out.body["termRanks"] = std::move(terms);
  std::ostringstream s;
  s << "term ranks: line " << rank(hb.term_line).str() << ", tangent "
    << rank(hb.term_tangent).str() << ", unit " << rank(hb.term_unit).str()
    << ", det " << rank(hb.term_det).str() << "\n";
  out.pretty += s.str();
  return out;
}

using Handler = Output (*)(const json&);

Handler find_handler(const std::string& command) {
  if (command == "group-info") return cmd_group_info;
  if (command == "marks") return cmd_marks;
  if (command == "burnside-eval") return cmd_burnside_eval;
  if (command == "char-eval") return cmd_char_eval;
  if (command == "euler") return cmd_euler;
  if (command == "count-blowup") return cmd_count_blowup;
  if (command == "count-abelian-k") return cmd_count_abelian_k;
  if (command == "count-masses") return cmd_count_masses;
  if (command == "hom-bundle") return cmd_hom_bundle;
  if (command == "welschinger") return cmd_welschinger;
  return nullptr;
}

void emit_error(std::ostream& out, const json& err) {
  out << err.dump(2) << "\n";
}

// Payload-shaped library failures surface as validation errors with the
// path of the field they constrain; everything else is a compute error.
const char* validation_path(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidPointSplit:
      return "/n1";
    case ErrorCode::InvalidBaseLocus:
      return "/base";
    case ErrorCode::MissingLineIndex:
      return "/base/orbits";
    default:
      return nullptr;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out) {
  Invocation inv;
  try {
    inv = parse_args(args);
    if (inv.command == "help") {
      out << kUsage;
      return 0;
    }
    Handler handler = find_handler(inv.command);
    if (!handler) {
      emit_error(out, {{"code", "UnknownCommand"},
                       {"message", "unknown command '" + inv.command + "'"},
                       {"path", "/command"}});
      return 2;
    }
    Output o = handler(inv.payload);
    if (inv.format == "pretty")
      out << o.pretty;
    else
      out << o.body.dump(2) << "\n";
    return 0;
  } catch (const SchemaViolation& e) {
    emit_error(out, {{"code", "SchemaViolation"},
                     {"message", e.what()},
                     {"path", e.path()}});
    return 2;
  } catch (const Error& e) {
    if (const char* path = validation_path(e.code())) {
      emit_error(out, {{"code", error_code_name(e.code())},
                       {"message", e.what()},
                       {"path", path}});
      return 2;
    }
    emit_error(out,
               {{"code", error_code_name(e.code())}, {"message", e.what()}});
    return 1;
  }
}

}  // namespace equicount::cli

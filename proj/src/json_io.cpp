#include "plab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "plab/errors.hpp"

namespace plab {

namespace {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

const Json& field(const Json& j, const char* key, const char* what) {
  if (!j.is_object()) throw InputError(std::string(what) + ": expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string(what) + ": missing field '" + key + "'");
  return *it;
}

Rational rational_field(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (!j.is_string()) throw InputError("rational values must be \"p/q\" strings");
  return Rational::parse(j.get<std::string>());
}

std::vector<long long> coords(const Json& j) {
  if (j.is_number_integer()) return {j.get<long long>()};
  return j.get<std::vector<long long>>();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------- graphs

LayeredGraph graph_from_json(const Json& j) {
  return guarded("graph", [&] {
    int height = field(j, "height", "graph").get<int>();
    auto labels = field(j, "labels", "graph").get<std::vector<std::string>>();
    std::vector<Vertex> vertices;
    for (const auto& v : field(j, "vertices", "graph"))
      vertices.push_back({field(v, "id", "vertex").get<std::string>(), field(v, "layer", "vertex").get<long long>(),
                          rational_field(field(v, "weight", "vertex"))});
    std::vector<EdgeSpec> edges;
    for (const auto& e : field(j, "edges", "graph"))
      edges.push_back({field(e, "tail", "edge").get<std::string>(), field(e, "head", "edge").get<std::string>(),
                       field(e, "label", "edge").get<std::string>()});
    return LayeredGraph(height, std::move(labels), std::move(vertices), edges);
  });
}

Json to_json(const EdgeSpec& e) { return {{"tail", e.tail}, {"head", e.head}, {"label", e.label}}; }

Json to_json(const LayeredGraph& g) {
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"layer", v.layer}, {"weight", v.weight.str()}});
  for (const auto& e : g.edge_specs()) es.push_back(to_json(e));
  return {{"height", g.height()}, {"labels", g.labels()}, {"vertices", vs}, {"edges", es}};
}

Json to_json(const Violation& v) { return {{"kind", v.kind}, {"where", v.where}, {"message", v.message}}; }
Json to_json(const ActionViolation& v) { return {{"kind", v.kind}, {"message", v.message}}; }

Json to_json(const CommutativityVerdict& v) {
  Json out = {{"holds", v.holds}};
  if (v.failing_edge) {
    out["failing_edge"] = to_json(*v.failing_edge);
    out["side"] = v.failed_in_dual ? "dual" : "graph";
  }
  return out;
}

Json to_json(const LayeredGraph& g, const CutsetReport& r) {
  return {{"C", r.c.str()}, {"weight", r.weight.str()}, {"cutset", g.ids(r.cutset)}, {"is_minimal", r.is_minimal}};
}

// ---------------------------------------------------------------- actions

ActionSpec action_spec_from_json(const Json& j) {
  return guarded("action", [&] {
    if (j.is_object() && j.contains("translation")) {
      FiniteAction act = translation_action(FinAbGroup(j.at("translation").get<std::vector<int>>()));
      return act.spec();
    }
    ActionSpec s;
    s.moduli = field(j, "moduli", "action").get<std::vector<int>>();
    for (const auto& a : field(j, "atoms", "action"))
      s.atoms.emplace_back(field(a, "id", "atom").get<std::string>(), rational_field(field(a, "weight", "atom")));
    for (const auto& g : field(j, "generators", "action"))
      s.generators.push_back(field(g, "perm", "generator").get<std::map<std::string, std::string>>());
    return s;
  });
}

FiniteAction action_from_json(const Json& j) { return FiniteAction(action_spec_from_json(j)); }

Json to_json(const FiniteAction& act) {
  ActionSpec s = act.spec();
  Json atoms = Json::array(), gens = Json::array();
  for (const auto& [id, w] : s.atoms) atoms.push_back({{"id", id}, {"weight", w.str()}});
  for (const auto& g : s.generators) {
    Json perm = Json::object();
    for (const auto& [x, y] : g) perm[x] = y;
    gens.push_back({{"perm", perm}});
  }
  return {{"moduli", s.moduli}, {"atoms", atoms}, {"generators", gens}};
}

GroupSet group_set_from_json(const FinAbGroup& group, const Json& j) {
  return guarded("group set", [&] {
    if (!j.is_array()) throw InputError("group set: expected an array");
    std::vector<std::vector<long long>> res;
    for (const auto& x : j) {
      if (x.is_number_integer() && group.rank() != 1)
        throw InputError("group set: bare integers need a rank 1 group");
      res.push_back(coords(x));
    }
    return GroupSet::from_residues(group, res);
  });
}

Json to_json(const GroupSet& s) {
  Json out = Json::array();
  for (const auto& r : s.residues()) {
    if (r.size() == 1)
      out.push_back(r[0]);
    else
      out.push_back(r);
  }
  return out;
}

SpaceSet space_set_from_json(const FiniteAction& act, const Json& j) {
  return guarded("atom set", [&] {
    std::vector<std::string> ids;
    for (const auto& x : j) ids.push_back(x.is_string() ? x.get<std::string>() : x.dump());
    return act.set_of(ids);
  });
}

// ---------------------------------------------------------------- periodic sets

PeriodicSet periodic_from_json(const Json& j) {
  return guarded("periodic set", [&] {
    if (!j.is_object()) throw InputError("periodic set: expected a JSON object");
    if (j.contains("finite")) {
      std::vector<Point> pts;
      for (const auto& x : j.at("finite")) pts.push_back(coords(x));
      int dim = j.contains("dim") ? j.at("dim").get<int>() : (pts.empty() ? 1 : static_cast<int>(pts[0].size()));
      return PeriodicSet::finite(dim, std::move(pts));
    }
    auto period = coords(field(j, "period", "periodic set"));
    if (j.contains("dim") && j.at("dim").get<std::size_t>() != period.size())
      throw InputError("periodic set: 'dim' does not match the period length");
    std::vector<Point> res;
    for (const auto& x : field(j, "residues", "periodic set")) res.push_back(coords(x));
    return PeriodicSet(std::move(period), std::move(res));
  });
}

Json to_json(const PeriodicSet& s) {
  Json pts = Json::array();
  for (const auto& x : s.residues()) pts.push_back(x);
  if (s.is_finite()) return {{"dim", s.dim()}, {"finite", pts}};
  return {{"dim", s.dim()}, {"period", s.period()}, {"residues", pts}};
}

// ---------------------------------------------------------------- instances

DynamicsInstance dynamics_instance_from_json(const Json& j) {
  return guarded("dynamics instance", [&] {
    DynamicsInstance inst;
    inst.action = action_from_json(field(j, "action", "dynamics instance"));
    const FinAbGroup& g = inst.action.group();
    if (j.contains("A")) inst.a = group_set_from_json(g, j.at("A"));
    if (j.contains("B")) inst.b = space_set_from_json(inst.action, j.at("B"));
    if (j.contains("E")) inst.e = space_set_from_json(inst.action, j.at("E"));
    if (j.contains("A_list"))
      for (const auto& a : j.at("A_list")) inst.a_list.push_back(group_set_from_json(g, a));
    if (j.contains("j")) inst.j = j.at("j").get<int>();
    if (j.contains("k")) inst.k = j.at("k").get<int>();
    if (j.contains("delta")) inst.delta = rational_field(j.at("delta"));
    if (j.contains("second")) {
      const Json& s = j.at("second");
      inst.action2 = action_from_json(field(s, "action", "second"));
      inst.a2 = group_set_from_json(inst.action2->group(), field(s, "A", "second"));
      inst.b2 = space_set_from_json(*inst.action2, field(s, "B", "second"));
    }
    return inst;
  });
}

Json to_json(const DynamicsInstance& inst) {
  Json out = {{"action", to_json(inst.action)},
              {"A", to_json(inst.a)},
              {"B", inst.action.ids(inst.b)},
              {"E", inst.action.ids(inst.e)}};
  Json list = Json::array();
  for (const auto& a : inst.a_list) list.push_back(to_json(a));
  out["A_list"] = list;
  out["j"] = inst.j;
  out["k"] = inst.k;
  out["delta"] = inst.delta.str();
  if (inst.action2)
    out["second"] = {{"action", to_json(*inst.action2)}, {"A", to_json(inst.a2)}, {"B", inst.action2->ids(inst.b2)}};
  return out;
}

PeriodicInstance periodic_instance_from_json(const Json& j) {
  return guarded("periodic instance", [&] {
    if (!j.is_object()) throw InputError("periodic instance: expected a JSON object");
    PeriodicInstance inst;
    if (j.contains("A")) inst.a = periodic_from_json(j.at("A"));
    if (j.contains("B")) inst.b = periodic_from_json(j.at("B"));
    if (j.contains("A0")) inst.a0 = periodic_from_json(j.at("A0"));
    if (j.contains("A_list"))
      for (const auto& a : j.at("A_list")) inst.a_list.push_back(periodic_from_json(a));
    if (j.contains("j")) inst.j = j.at("j").get<int>();
    if (j.contains("k")) inst.k = j.at("k").get<int>();
    return inst;
  });
}

Json to_json(const PeriodicInstance& inst) {
  Json out = Json::object();
  if (inst.a) out["A"] = to_json(*inst.a);
  if (inst.b) out["B"] = to_json(*inst.b);
  if (inst.a0) out["A0"] = to_json(*inst.a0);
  if (!inst.a_list.empty()) {
    Json list = Json::array();
    for (const auto& a : inst.a_list) list.push_back(to_json(a));
    out["A_list"] = list;
  }
  out["j"] = inst.j;
  out["k"] = inst.k;
  return out;
}

}  // namespace plab

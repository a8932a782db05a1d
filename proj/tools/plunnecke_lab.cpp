// plunnecke_lab: command-line front end to the plab library.
//
// Exit codes: 0 everything held or was valid, 1 some check was violated,
// 2 input or hypothesis error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "plab/batch.hpp"
#include "plab/commutativity.hpp"
#include "plab/density.hpp"
#include "plab/dynamics.hpp"
#include "plab/errors.hpp"
#include "plab/json_io.hpp"
#include "plab/magnification.hpp"

namespace fs = std::filesystem;
using namespace plab;

namespace {

constexpr int kOk = 0;
constexpr int kViolated = 1;
constexpr int kError = 2;

int default_jobs() {
  if (const char* env = std::getenv("PLUNNECKE_LAB_JOBS")) {
    try {
      int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void emit(const Json& j, const std::string& path = "") {
  if (path.empty() || path == "-") {
    std::cout << dump(j);
    return;
  }
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << dump(j);
}

std::string detect_kind(const Json& j) {
  if (j.is_object()) {
    if (j.contains("vertices")) return "graph";
    if (j.contains("moduli") || j.contains("translation")) return "action";
    if (j.contains("period") || j.contains("finite")) return "periodic";
  }
  throw InputError("cannot tell whether the document is a graph, action or periodic set");
}

std::vector<int> layer_range(const LayeredGraph& g, int j) {
  if (j > 0) return {j};
  std::vector<int> all;
  for (int k = 1; k <= g.height(); ++k) all.push_back(k);
  return all;
}

Json magnification_json(const LayeredGraph& g, const MagnificationResult& r) {
  return {{"value", r.value.str()},
          {"witness", g.ids(r.witness)},
          {"method", r.method == Method::brute ? "brute" : "mincut"}};
}

// ---------------------------------------------------------------- subcommands

int cmd_validate(const std::string& file, std::string kind) {
  Json doc = read_json_file(file);
  if (kind == "auto") kind = detect_kind(doc);
  Json out = {{"file", file}, {"kind", kind}};
  Json violations = Json::array();
  if (kind == "graph") {
    for (const auto& v : validate(graph_from_json(doc))) violations.push_back(to_json(v));
  } else if (kind == "action") {
    for (const auto& v : validate(action_spec_from_json(doc))) violations.push_back(to_json(v));
  } else if (kind == "periodic") {
    PeriodicSet s = periodic_from_json(doc);
    out["normalized"] = to_json(normalize(s));
  } else {
    throw InputError("unknown document kind '" + kind + "'");
  }
  out["valid"] = violations.empty();
  out["violations"] = violations;
  emit(out);
  return violations.empty() ? kOk : kError;
}

int cmd_commute(const std::string& file) {
  LayeredGraph g = graph_from_json(read_json_file(file));
  auto semi = is_semi_commutative(g);
  auto full = is_commutative(g);
  Json out = to_json(full);
  out["semi_commutative"] = semi.holds;
  emit(out);
  return full.holds ? kOk : kViolated;
}

int cmd_magnify(const std::string& file, int j, const std::string& method, std::size_t limit) {
  LayeredGraph g = graph_from_json(read_json_file(file));
  require_valid(g);
  if (j < 0 || j > g.height()) throw InputError("--j must lie in 1..height");
  Json rows = Json::array();
  bool agree = true;
  for (int k : layer_range(g, j)) {
    Json row = {{"j", k}};
    if (method == "brute") {
      row.update(magnification_json(g, magnification_bruteforce(g, k, limit)));
    } else if (method == "mincut") {
      row.update(magnification_json(g, magnification_mincut(g, k)));
    } else if (method == "auto") {
      row.update(magnification_json(g, magnification(g, k, limit)));
    } else if (method == "both") {
      auto b = magnification_bruteforce(g, k, limit);
      auto m = magnification_mincut(g, k);
      bool same = b.value == m.value && b.witness == m.witness;
      agree = agree && same;
      row["value"] = b.value.str();
      row["brute"] = magnification_json(g, b);
      row["mincut"] = magnification_json(g, m);
      row["agree"] = same;
    } else {
      throw InputError("unknown method '" + method + "'");
    }
    rows.push_back(row);
  }
  emit(j > 0 ? rows[0] : rows);
  return agree ? kOk : kViolated;
}

int cmd_cutset(const std::string& file, const std::string& c_text, int push, const std::string& set_json) {
  LayeredGraph g = graph_from_json(read_json_file(file));
  require_valid(g);
  Rational c = Rational::parse(c_text);
  CutsetReport best = min_weight_cutset(g, c);
  Json out = to_json(g, best);
  out["bottom_layer_weight"] = cut_weight(g, g.layer(0), c).str();
  if (push == 0) {
    emit(out);
    return kOk;
  }
  VertexSet s = best.cutset;
  if (!set_json.empty()) s = g.set_of(Json::parse(set_json).get<std::vector<std::string>>());
  VertexSet pushed = cutset_push(g, s, c, push);
  Rational before = cut_weight(g, s, c), after = cut_weight(g, pushed, c);
  Json p = {{"j", push},
            {"input", g.ids(s)},
            {"input_weight", before.str()},
            {"output", g.ids(pushed)},
            {"output_weight", after.str()},
            {"is_cutset", is_cutset(g, pushed)},
            {"still_minimal", after == best.weight}};
  out["push"] = p;
  emit(out);
  return is_cutset(g, pushed) && after <= before ? kOk : kViolated;
}

struct VerifyArgs {
  std::string theorem;
  std::vector<std::string> files;
  std::string generate;
  std::uint64_t seed = 1;
  int count = 10;
  int jobs = 1;
  std::string json_path;
  std::string csv_path;
  bool timing = false;
  std::string c;
};

int cmd_verify(const VerifyArgs& a) {
  instance_family(a.theorem);
  std::vector<BatchInstance> instances;
  Json source;
  if (!a.generate.empty()) {
    std::string kind = a.generate == "default" ? default_generator(a.theorem) : a.generate;
    instances = generate_instances(kind, a.seed, a.count);
    source = {{"generator", kind}, {"seed", a.seed}, {"count", a.count}};
  } else {
    if (a.files.empty()) throw InputError("verify needs instance files or --generate");
    for (const auto& f : a.files) instances.push_back({fs::path(f).stem().string(), read_json_file(f)});
    source = {{"files", a.files}};
  }
  TheoremOptions opts;
  opts.timing = a.timing;
  if (!a.c.empty()) opts.c = Rational::parse(a.c);
  auto outcomes = run_batch(a.theorem, instances, opts, a.jobs);

  Json reports = Json::array(), refused = Json::array();
  int held = 0, violated = 0;
  std::string csv = std::string(kCsvHeader) + "\n";
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    const auto& o = outcomes[i];
    if (o.report) {
      reports.push_back(to_json(*o.report));
      csv += csv_row(*o.report) + "\n";
      (o.report->holds ? held : violated)++;
    } else {
      Json r = {{"instance", instances[i].name}, {"error", o.error}};
      if (!o.error_details.is_null() && !o.error_details.is_discarded()) r["details"] = o.error_details;
      refused.push_back(r);
    }
  }
  Json out = {{"theorem", a.theorem},
              {"source", source},
              {"summary",
               {{"instances", instances.size()}, {"holds", held}, {"violated", violated}, {"refused", refused.size()}}},
              {"reports", reports},
              {"refused", refused}};
  emit(out, a.json_path);
  if (!a.csv_path.empty()) {
    std::ofstream f(a.csv_path);
    if (!f) throw InputError("cannot write '" + a.csv_path + "'");
    f << csv;
  }
  for (const auto& r : refused) std::cerr << r["instance"].get<std::string>() << ": " << r["error"].get<std::string>() << "\n";
  if (!refused.empty()) return kError;
  return violated ? kViolated : kOk;
}

int cmd_orbit_graph(const std::string& action_file, const std::vector<int>& translation, const std::string& a_json,
                    const std::string& y_json, int h, const std::string& out_path) {
  FiniteAction act;
  if (!action_file.empty())
    act = action_from_json(read_json_file(action_file));
  else if (!translation.empty())
    act = translation_action(FinAbGroup(translation));
  else
    throw InputError("orbit-graph needs --action or --translation");
  GroupSet a = group_set_from_json(act.group(), Json::parse(a_json));
  SpaceSet y = space_set_from_json(act, Json::parse(y_json));
  emit(to_json(orbit_graph(act, a, y, h)), out_path);
  return kOk;
}

Json density_json(const PeriodicSet& s) {
  PeriodicSet n = normalize(s);
  return {{"set", to_json(n)}, {"density", banach_density(n).str()}};
}

int cmd_density(const std::string& op, const std::vector<std::string>& files, int k, long long n, long long m) {
  if (files.empty()) throw InputError("density needs at least one periodic set file");
  std::vector<PeriodicSet> sets;
  for (const auto& f : files) sets.push_back(periodic_from_json(read_json_file(f)));
  if (op == "value") {
    emit(density_json(sets[0]));
  } else if (op == "sumset") {
    PeriodicSet s = sets[0];
    for (std::size_t i = 1; i < sets.size(); ++i) s = periodic_sumset(s, sets[i]);
    emit(density_json(s));
  } else if (op == "iterate") {
    emit(density_json(iterate_sumset(sets[0], k)));
  } else if (op == "window-scan") {
    const PeriodicSet& s = sets[0];
    auto est = window_scan([&](std::span<const long long> x) { return s.contains(x); }, s.dim(), n, m);
    emit({{"N", n}, {"M", m}, {"upper", est.upper.str()}, {"lower", est.lower.str()},
          {"density", banach_density(s).str()}});
  } else {
    throw InputError("unknown density operation '" + op + "'");
  }
  return kOk;
}

int cmd_correspond(const std::string& b_file, const std::string& a0_file) {
  // Either a bare set B or an instance document with "B" and optionally "A0".
  Json doc = read_json_file(b_file);
  std::optional<PeriodicSet> a0;
  PeriodicSet b;
  if (doc.contains("B")) {
    PeriodicInstance inst = periodic_instance_from_json(doc);
    b = *inst.b;
    a0 = inst.a0;
  } else {
    b = periodic_from_json(doc);
  }
  if (!a0_file.empty()) a0 = periodic_from_json(read_json_file(a0_file));
  ShiftSystem sys = correspondence_system(b);
  Json out = {{"points", sys.period}, {"words", sys.words}, {"clopen", sys.clopen}, {"point_mass", sys.point_mass.str()}};
  int code = kOk;
  if (a0) {
    auto r = verify_correspondence(b, *a0, fs::path(b_file).stem().string());
    out["report"] = to_json(r);
    if (!r.holds) code = kViolated;
  }
  emit(out);
  return code;
}

int cmd_generate(const std::string& kind, std::uint64_t seed, int count, const std::string& out_dir) {
  auto instances = generate_instances(kind, seed, count);
  if (out_dir.empty()) {
    if (instances.size() == 1) {
      emit(instances[0].doc);
    } else {
      Json all = Json::array();
      for (const auto& i : instances) all.push_back({{"name", i.name}, {"doc", i.doc}});
      emit(all);
    }
    return kOk;
  }
  fs::create_directories(out_dir);
  for (const auto& i : instances) emit(i.doc, (fs::path(out_dir) / (i.name + ".json")).string());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Plünnecke-type inequalities on finite measure graphs, actions and periodic sets"};
  app.require_subcommand(1);
  std::function<int()> run;

  std::string file, kind = "auto";
  auto* validate_cmd = app.add_subcommand("validate", "Check a graph, action or periodic-set file");
  validate_cmd->add_option("file", file)->required();
  validate_cmd->add_option("--kind", kind, "graph, action, periodic or auto")->capture_default_str();
  validate_cmd->callback([&] { run = [&] { return cmd_validate(file, kind); }; });

  auto* commute_cmd = app.add_subcommand("commute", "Check commutativity of a layered graph");
  commute_cmd->add_option("file", file)->required();
  commute_cmd->callback([&] { run = [&] { return cmd_commute(file); }; });

  int j = 0;
  std::string method = "auto";
  std::size_t limit = kDefaultBruteLimit;
  auto* magnify_cmd = app.add_subcommand("magnify", "Magnification ratios D_j");
  magnify_cmd->add_option("file", file)->required();
  magnify_cmd->add_option("--j", j, "layer; 0 means every layer")->capture_default_str();
  magnify_cmd->add_option("--method", method, "brute, mincut, both or auto")->capture_default_str();
  magnify_cmd->add_option("--limit", limit, "largest layer 0 for brute force")->capture_default_str();
  magnify_cmd->callback([&] { run = [&] { return cmd_magnify(file, j, method, limit); }; });

  std::string c_text, set_json;
  int push = 0;
  auto* cutset_cmd = app.add_subcommand("cutset", "Minimum-weight cutset, or one push step");
  cutset_cmd->add_option("file", file)->required();
  cutset_cmd->add_option("--C", c_text, "weight constant p/q")->required();
  cutset_cmd->add_option("--push", push, "push the cutset off layer j");
  cutset_cmd->add_option("--set", set_json, "cutset to push, JSON array of ids (default: the minimum)");
  cutset_cmd->callback([&] { run = [&] { return cmd_cutset(file, c_text, push, set_json); }; });

  VerifyArgs va;
  va.jobs = default_jobs();
  auto* verify_cmd = app.add_subcommand("verify", "Verify a theorem over instance files or generated instances");
  verify_cmd->add_option("theorem", va.theorem)->required();
  verify_cmd->add_option("files", va.files);
  verify_cmd->add_option("--generate", va.generate, "generator kind, or 'default'");
  verify_cmd->add_option("--seed", va.seed)->capture_default_str();
  verify_cmd->add_option("--count", va.count)->capture_default_str();
  verify_cmd->add_option("--jobs", va.jobs, "defaults to PLUNNECKE_LAB_JOBS or 1");
  verify_cmd->add_option("--json", va.json_path, "write the JSON report here instead of stdout");
  verify_cmd->add_option("--csv", va.csv_path, "also write CSV rows here");
  verify_cmd->add_flag("--timing", va.timing, "record per-instance milliseconds");
  verify_cmd->add_option("--C", va.c, "constant for cor-3.4 and lemma-3.3");
  verify_cmd->callback([&] { run = [&] { return cmd_verify(va); }; });

  std::string action_file, a_json = "[]", y_json = "[]", out_path;
  std::vector<int> translation;
  int h = 1;
  auto* orbit_cmd = app.add_subcommand("orbit-graph", "Emit the orbit graph of an action as graph JSON");
  orbit_cmd->add_option("--action", action_file, "action JSON file");
  orbit_cmd->add_option("--translation", translation, "moduli of a translation action");
  orbit_cmd->add_option("--A", a_json, "JSON array of group elements")->required();
  orbit_cmd->add_option("--Y", y_json, "JSON array of atom ids")->required();
  orbit_cmd->add_option("--height", h)->required();
  orbit_cmd->add_option("--out", out_path);
  orbit_cmd->callback([&] {
    run = [&] { return cmd_orbit_graph(action_file, translation, a_json, y_json, h, out_path); };
  });

  std::string op;
  std::vector<std::string> files;
  int k = 2;
  long long window = 1, radius = 1;
  auto* density_cmd = app.add_subcommand("density", "Densities, sumsets and window scans of periodic sets");
  density_cmd->add_option("op", op, "value, sumset, iterate or window-scan")->required();
  density_cmd->add_option("files", files)->required();
  density_cmd->add_option("--k", k)->capture_default_str();
  density_cmd->add_option("--N", window, "window side")->capture_default_str();
  density_cmd->add_option("--M", radius, "search radius")->capture_default_str();
  density_cmd->callback([&] { run = [&] { return cmd_density(op, files, k, window, radius); }; });

  std::string a0_file;
  auto* correspond_cmd = app.add_subcommand("correspond", "Shift system of a periodic B in Z");
  correspond_cmd->add_option("file", file)->required();
  correspond_cmd->add_option("--A0", a0_file, "periodic or finite set file");
  correspond_cmd->callback([&] { run = [&] { return cmd_correspond(file, a0_file); }; });

  std::string gen_kind, out_dir;
  std::uint64_t seed = 1;
  int count = 1;
  auto* generate_cmd = app.add_subcommand("generate", "Write seeded random instances");
  generate_cmd->add_option("kind", gen_kind, "orbit, power, corollary, graph, flow, action, periodic, periodic1")
      ->required();
  generate_cmd->add_option("--seed", seed)->capture_default_str();
  generate_cmd->add_option("--count", count)->capture_default_str();
  generate_cmd->add_option("--out", out_dir, "directory; stdout when omitted");
  generate_cmd->callback([&] { run = [&] { return cmd_generate(gen_kind, seed, count, out_dir); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return run();
  } catch (const HypothesisError& e) {
    Json err = {{"error", e.what()}, {"kind", "hypothesis"}};
    if (!e.details().empty()) err["details"] = Json::parse(e.details(), nullptr, false);
    std::cerr << dump(err);
    return kError;
  } catch (const std::exception& e) {
    std::cerr << dump({{"error", e.what()}, {"kind", "input"}});
    return kError;
  }
}

#include "plab/batch.hpp"

#include <chrono>

#include "plab/density.hpp"
#include "plab/dynamics.hpp"
#include "plab/errors.hpp"
#include "plab/generate.hpp"
#include "plab/json_io.hpp"
#include "plab/magnification.hpp"

namespace plab {

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = {"prop-2.10", "lemma-3.3", "cor-3.4",   "thm-3.5",
                                               "thm-4.2",   "thm-4.3",   "lemma-5.4", "lemma-6.1",
                                               "prop-6.2",  "thm-1.3",   "thm-1.4",   "lemma-7.1"};
  return ids;
}

std::string instance_family(const std::string& theorem) {
  if (theorem == "prop-2.10" || theorem == "lemma-3.3" || theorem == "cor-3.4" || theorem == "thm-3.5")
    return "graph";
  if (theorem == "thm-4.2" || theorem == "thm-4.3" || theorem == "lemma-5.4" || theorem == "lemma-6.1" ||
      theorem == "prop-6.2")
    return "dynamics";
  if (theorem == "thm-1.3" || theorem == "thm-1.4" || theorem == "lemma-7.1") return "periodic";
  throw InputError("unknown theorem id '" + theorem + "'");
}

std::string default_generator(const std::string& theorem) {
  std::string family = instance_family(theorem);
  if (theorem == "prop-2.10") return "flow";
  if (theorem == "cor-3.4" || theorem == "lemma-3.3") return "corollary";
  if (family == "graph") return "orbit";
  if (family == "dynamics") return "action";
  return theorem == "lemma-7.1" ? "periodic1" : "periodic";
}

namespace {

Rational corollary_c(const LayeredGraph& g, const Json& doc, const TheoremOptions& opts) {
  if (opts.c) return *opts.c;
  if (doc.contains("C")) return Rational::parse(doc.at("C").get<std::string>());
  require_valid(g);
  return corollary_constant(magnification(g, g.height()).value, g.height());
}

VerificationReport graph_theorem(const std::string& theorem, const BatchInstance& inst, const TheoremOptions& opts) {
  const Json& doc = inst.doc.contains("graph") ? inst.doc.at("graph") : inst.doc;
  LayeredGraph g = graph_from_json(doc);
  if (theorem == "prop-2.10") {
    require_valid(g);
    if (g.height() != 1) throw InputError("flow duality is stated for 1-layered graphs");
    auto r = make_report(inst.name, theorem, flow(g), Relation::equal, flow(dual(g)));
    return r;
  }
  if (theorem == "thm-3.5") return verify_graph_plunnecke(g, inst.name);
  Rational c = corollary_c(g, inst.doc, opts);
  if (theorem == "cor-3.4") return verify_bottom_layer_minimal(g, c, inst.name);
  return verify_cutset_push(g, c, inst.name);
}

VerificationReport dynamics_theorem(const std::string& theorem, const BatchInstance& inst) {
  DynamicsInstance d = dynamics_instance_from_json(inst.doc);
  if (theorem == "thm-4.2") return verify_dyn_plunnecke(d.action, d.a, d.b, d.j, d.k, inst.name);
  if (theorem == "thm-4.3") return verify_restricted_plunnecke(d.action, d.a, d.b, d.e, d.j, d.k, inst.name);
  if (theorem == "lemma-5.4") return verify_heavy_subset(d.action, d.a, d.b, d.delta, d.j, d.k, inst.name);
  if (theorem == "lemma-6.1") {
    if (!d.action2) throw InputError("multiplicativity needs a 'second' factor");
    return verify_multiplicativity(d.action, *d.action2, d.a, d.a2, d.b, d.b2, inst.name);
  }
  if (d.a_list.empty()) throw InputError("different summands needs a nonempty 'A_list'");
  return verify_different_summands(d.action, d.a_list, d.b, inst.name);
}

VerificationReport periodic_theorem(const std::string& theorem, const BatchInstance& inst) {
  PeriodicInstance p = periodic_instance_from_json(inst.doc);
  if (!p.b) throw InputError("periodic instance needs 'B'");
  if (theorem == "thm-1.3") {
    if (!p.a) throw InputError("periodic instance needs 'A'");
    return verify_density_plunnecke(*p.a, *p.b, p.j, p.k, inst.name);
  }
  if (theorem == "thm-1.4") {
    if (p.a_list.empty()) throw InputError("periodic instance needs a nonempty 'A_list'");
    return verify_density_summands(p.a_list, *p.b, inst.name);
  }
  const auto& a0 = p.a0 ? p.a0 : p.a;
  if (!a0) throw InputError("periodic instance needs 'A0'");
  return verify_correspondence(*p.b, *a0, inst.name);
}

}  // namespace

VerificationReport run_theorem(const std::string& theorem, const BatchInstance& inst, const TheoremOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  std::string family = instance_family(theorem);
  VerificationReport r = family == "graph"      ? graph_theorem(theorem, inst, opts)
                         : family == "dynamics" ? dynamics_theorem(theorem, inst)
                                                : periodic_theorem(theorem, inst);
  if (opts.timing)
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<BatchOutcome> run_batch(const std::string& theorem, const std::vector<BatchInstance>& instances,
                                    const TheoremOptions& opts, int jobs) {
  instance_family(theorem);
  std::vector<BatchOutcome> out(instances.size());
  const long long n = static_cast<long long>(instances.size());
#pragma omp parallel for schedule(dynamic) num_threads(jobs < 1 ? 1 : jobs)
  for (long long i = 0; i < n; ++i) {
    try {
      out[i].report = run_theorem(theorem, instances[i], opts);
    } catch (const HypothesisError& e) {
      out[i].error = e.what();
      if (!e.details().empty()) out[i].error_details = Json::parse(e.details(), nullptr, false);
    } catch (const std::exception& e) {
      out[i].error = e.what();
    }
  }
  return out;
}

std::vector<BatchInstance> generate_instances(const std::string& kind, std::uint64_t seed, int count) {
  if (count < 0) throw InputError("count must be >= 0");
  std::vector<BatchInstance> out;
  for (int i = 0; i < count; ++i) {
    Rng rng(seed, static_cast<std::uint64_t>(i));
    BatchInstance inst;
    inst.name = kind + "-" + std::to_string(seed) + "-" + std::to_string(i);
    if (kind == "orbit") {
      inst.doc = to_json(random_orbit(rng).graph);
    } else if (kind == "power") {
      inst.doc = to_json(perfect_power_orbit(rng).graph);
    } else if (kind == "corollary") {
      // Alternate exact perfect powers with general orbit graphs.
      inst.doc = to_json(i % 2 == 0 ? perfect_power_orbit(rng).graph : random_orbit(rng, 10, 3, 3).graph);
    } else if (kind == "graph") {
      int h = static_cast<int>(rng.uniform(1, 3));
      int labels = static_cast<int>(rng.uniform(1, 3));
      inst.doc = to_json(random_layered_graph(rng, h, 14, labels));
    } else if (kind == "flow") {
      inst.doc = to_json(random_flow_graph(rng));
    } else if (kind == "action") {
      inst.doc = to_json(random_dynamics_instance(rng));
    } else if (kind == "periodic") {
      inst.doc = to_json(random_periodic_instance(rng));
    } else if (kind == "periodic1") {
      inst.doc = to_json(random_periodic_instance(rng, 12, 1));
    } else {
      throw InputError("unknown generator kind '" + kind + "'");
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace plab

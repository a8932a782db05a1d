#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plab/commutativity.hpp"
#include "plab/density.hpp"
#include "plab/dynamics.hpp"
#include "plab/graph.hpp"
#include "plab/magnification.hpp"
#include "plab/report.hpp"

namespace plab {

// Parses a file; malformed JSON becomes an InputError carrying the path and
// byte offset.
Json read_json_file(const std::string& path);
// Canonical serialization: two-space indent, trailing newline.
std::string dump(const Json& j);

LayeredGraph graph_from_json(const Json& j);
Json to_json(const LayeredGraph& g);

// {"moduli","atoms","generators"} or the shorthand {"translation":[moduli]}.
ActionSpec action_spec_from_json(const Json& j);
FiniteAction action_from_json(const Json& j);
Json to_json(const FiniteAction& act);

// Array of residue vectors; bare integers are accepted when the rank is 1.
GroupSet group_set_from_json(const FinAbGroup& group, const Json& j);
Json to_json(const GroupSet& s);
SpaceSet space_set_from_json(const FiniteAction& act, const Json& j);

PeriodicSet periodic_from_json(const Json& j);
Json to_json(const PeriodicSet& s);

Json to_json(const Violation& v);
Json to_json(const ActionViolation& v);
Json to_json(const EdgeSpec& e);
Json to_json(const CommutativityVerdict& v);
Json to_json(const LayeredGraph& g, const CutsetReport& r);

struct DynamicsInstance {
  FiniteAction action;
  GroupSet a;
  SpaceSet b;
  SpaceSet e;
  std::vector<GroupSet> a_list;
  int j = 1;
  int k = 2;
  Rational delta = Rational(BigInt(1), BigInt(2));
  // Second factor for multiplicativity.
  std::optional<FiniteAction> action2;
  GroupSet a2;
  SpaceSet b2;
};

DynamicsInstance dynamics_instance_from_json(const Json& j);
Json to_json(const DynamicsInstance& inst);

struct PeriodicInstance {
  std::optional<PeriodicSet> a;
  std::optional<PeriodicSet> b;
  std::optional<PeriodicSet> a0;
  std::vector<PeriodicSet> a_list;
  int j = 1;
  int k = 2;
};

PeriodicInstance periodic_instance_from_json(const Json& j);
Json to_json(const PeriodicInstance& inst);

}  // namespace plab

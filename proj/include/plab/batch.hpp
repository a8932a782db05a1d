#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "plab/report.hpp"

namespace plab {

// Theorem ids accepted by run_theorem, in a fixed order.
const std::vector<std::string>& theorem_ids();
// "graph", "dynamics" or "periodic": the instance document each theorem reads.
std::string instance_family(const std::string& theorem);
// Default generator kind for a theorem ("flow", "orbit", "action", "periodic").
std::string default_generator(const std::string& theorem);

struct BatchInstance {
  std::string name;
  Json doc;
};

struct TheoremOptions {
  std::optional<Rational> c;  // cor-3.4 / lemma-3.3 constant; otherwise from the document or derived
  bool timing = false;
};

// Throws InputError or HypothesisError.
VerificationReport run_theorem(const std::string& theorem, const BatchInstance& inst, const TheoremOptions& opts);

struct BatchOutcome {
  std::optional<VerificationReport> report;
  std::string error;   // set when the instance was refused
  Json error_details;  // hypothesis payload, if any
};

// Instances run concurrently on `jobs` threads; outcomes keep input order.
std::vector<BatchOutcome> run_batch(const std::string& theorem, const std::vector<BatchInstance>& instances,
                                    const TheoremOptions& opts, int jobs);

// Instance documents for a generator kind: "orbit", "graph", "flow",
// "power", "action", "periodic". Instance i depends only on (seed, i).
std::vector<BatchInstance> generate_instances(const std::string& kind, std::uint64_t seed, int count);

}  // namespace plab

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "plab/rational.hpp"

namespace plab {

using Json = nlohmann::ordered_json;

enum class Relation { greater_equal, less_equal, equal };

std::string to_string(Relation r);
bool satisfies(const Rational& lhs, Relation r, const Rational& rhs);

// Outcome of one inequality check. lhs and rhs are the exact comparands
// after clearing fractional powers.
struct VerificationReport {
  std::string instance;
  std::string theorem;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::greater_equal;
  bool holds = false;
  std::vector<std::string> witness;
  Json details = Json::object();
  std::optional<double> millis;
};

// Fills lhs/rhs/relation and sets holds from them.
VerificationReport make_report(std::string instance, std::string theorem, Rational lhs, Relation rel,
                               Rational rhs);

Json to_json(const VerificationReport& r);

inline constexpr const char* kCsvHeader = "instance,theorem,lhs,rhs,holds,witness,millis";
std::string csv_row(const VerificationReport& r);

}  // namespace plab

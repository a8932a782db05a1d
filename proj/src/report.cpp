#include "plab/report.hpp"

#include <cstdio>

namespace plab {

std::string to_string(Relation r) {
  switch (r) {
    case Relation::greater_equal: return ">=";
    case Relation::less_equal: return "<=";
    case Relation::equal: return "==";
  }
  return "?";
}

bool satisfies(const Rational& lhs, Relation r, const Rational& rhs) {
  switch (r) {
    case Relation::greater_equal: return lhs >= rhs;
    case Relation::less_equal: return lhs <= rhs;
    case Relation::equal: return lhs == rhs;
  }
  return false;
}

VerificationReport make_report(std::string instance, std::string theorem, Rational lhs, Relation rel,
                               Rational rhs) {
  VerificationReport r;
  r.instance = std::move(instance);
  r.theorem = std::move(theorem);
  r.holds = satisfies(lhs, rel, rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.relation = rel;
  return r;
}

Json to_json(const VerificationReport& r) {
  Json j;
  j["instance"] = r.instance;
  j["theorem"] = r.theorem;
  j["lhs"] = r.lhs.str();
  j["relation"] = to_string(r.relation);
  j["rhs"] = r.rhs.str();
  j["holds"] = r.holds;
  j["witness"] = r.witness;
  if (!r.details.empty()) j["details"] = r.details;
  if (r.millis) j["millis"] = *r.millis;
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string csv_row(const VerificationReport& r) {
  std::string witness;
  for (std::size_t i = 0; i < r.witness.size(); ++i) {
    if (i) witness += ' ';
    witness += r.witness[i];
  }
  std::string millis;
  if (r.millis) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", *r.millis);
    millis = buf;
  }
  return csv_field(r.instance) + "," + csv_field(r.theorem) + "," + r.lhs.str() + "," + r.rhs.str() + "," +
         (r.holds ? "true" : "false") + "," + csv_field(witness) + "," + millis;
}

}  // namespace plab

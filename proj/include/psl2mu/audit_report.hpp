#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "psl2mu/numtheory.hpp"

namespace psl2mu {

using Json = nlohmann::ordered_json;

enum class Verdict { pass, fail, vacuous, survivor };

std::string to_string(Verdict v);

/// One replayed relation with both sides kept exactly.
///
/// Serialized field order is fixed: check, inputs, lhs, rhs, verdict, claim,
/// details. Rationals and big integers are strings ("num/den" or digits).
struct AuditReport {
  std::string check;
  Json inputs = Json::object();
  Json lhs;
  Json rhs;
  Verdict verdict = Verdict::fail;
  std::string claim;
  Json details = Json::object();

  /// Only `fail` is a failure; survivors and vacuous checks are accepted.
  bool ok() const noexcept { return verdict != Verdict::fail; }
  Json to_json() const;
};

inline Json to_json_value(const Rational& r) { return to_string(r); }
inline Json to_json_value(const BigInt& n) { return n.str(); }

Json to_json(const std::vector<AuditReport>& reports);

}  // namespace psl2mu

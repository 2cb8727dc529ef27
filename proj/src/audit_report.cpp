#include "psl2mu/audit_report.hpp"

namespace psl2mu {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::vacuous:
      return "vacuous";
    case Verdict::survivor:
      return "survivor";
  }
  return "fail";
}

Json AuditReport::to_json() const {
  Json j = Json::object();
  j["check"] = check;
  j["inputs"] = inputs;
  j["lhs"] = lhs;
  j["rhs"] = rhs;
  j["verdict"] = to_string(verdict);
  j["claim"] = claim;
  j["details"] = details;
  return j;
}

Json to_json(const std::vector<AuditReport>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return arr;
}

}  // namespace psl2mu

#include "htcraig/json_io.hpp"

namespace htcraig {

using nlohmann::json;

json to_json(const Assignment& v) {
  json out = json::object();
  for (const auto& [atom, value] : v.values()) out[atom] = std::string(to_string(value));
  return out;
}

json to_json(const SplitSequent& s) {
  auto members = [](const std::vector<LabeledFormula>& v) {
    json arr = json::array();
    for (const auto& lf : v) {
      arr.push_back({{"f", print(lf.formula)}, {"prov", std::string(1, to_char(lf.prov))}});
    }
    return arr;
  };
  return {{"ant", members(s.antecedent())}, {"suc", members(s.succedent())}};
}

json to_json(const ProofNode& node) {
  json premises = json::array();
  for (const auto& p : node.premises) premises.push_back(to_json(p));
  json out = {{"rule", std::string(to_string(node.rule))},
              {"sequent", to_json(node.conclusion)},
              {"interpolant", print(node.interpolant)},
              {"premises", std::move(premises)}};
  if (node.principal) {
    out["principal"] = {
        {"side", node.principal->side == Side::Antecedent ? "ant" : "suc"},
        {"index", node.principal->index}};
  }
  return out;
}

json to_json(const VerificationReport& r) {
  json out = {{"a_entails_c", r.a_entails_c},
              {"c_entails_b", r.c_entails_b},
              {"c_entails_cprime", r.c_entails_cprime},
              {"voc_ok", r.voc_ok}};
  if (r.countermodel) out["countermodel"] = to_json(*r.countermodel);
  return out;
}

json to_json(const InterpolationResult& r) {
  json out;
  out["status"] = std::string(to_string(r.status));
  out["interpolant"] = r.final ? json(print(*r.final)) : json(nullptr);
  out["stage1"] = r.stage1 ? json(print(*r.stage1)) : json(nullptr);
  out["countermodel"] = r.countermodel ? to_json(*r.countermodel) : json(nullptr);
  out["verification"] =
      r.status == InterpolationStatus::Entails ? to_json(r.report) : json(nullptr);
  out["normalized_b"] = print(r.normalized_b);
  out["proof"] = r.proof ? to_json(*r.proof) : json(nullptr);
  return out;
}

json to_json(const std::vector<TruthTableRow>& rows) {
  json out = json::array();
  for (const auto& row : rows) {
    out.push_back({{"assignment", to_json(row.assignment)},
                   {"value", std::string(to_string(row.value))}});
  }
  return out;
}

} // namespace htcraig

// JSON renderings of proofs, interpolation results, and truth tables.

#pragma once

#include <json.hpp>

#include "htcraig/calculus.hpp"
#include "htcraig/interpolation.hpp"
#include "htcraig/semantics.hpp"

namespace htcraig {

nlohmann::json to_json(const Assignment& v);
nlohmann::json to_json(const SplitSequent& s);
/// {"rule", "sequent": {"ant", "suc"}, "interpolant", "premises"}
nlohmann::json to_json(const ProofNode& node);
nlohmann::json to_json(const VerificationReport& r);
/// {"status", "interpolant", "stage1", "countermodel", "verification", "proof"}
nlohmann::json to_json(const InterpolationResult& r);
/// [{"assignment", "value"}, ...]
nlohmann::json to_json(const std::vector<TruthTableRow>& rows);

} // namespace htcraig

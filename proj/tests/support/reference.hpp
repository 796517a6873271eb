// Independent reference semantics for tests. Evaluation reads the truth
// tables of the connectives as literal lookup tables and entailment is a
// plain loop over all assignments; nothing here calls the library's
// semantics module.

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "htcraig/formula.hpp"

namespace htcraig::testing {

/// 0 = F, 1 = NF, 2 = T.
using RefValue = int;
using RefAssignment = std::map<std::string, RefValue>;

extern const RefValue kRefNot[3];
extern const RefValue kRefNh[3];
extern const RefValue kRefAnd[3][3];
extern const RefValue kRefOr[3][3];
extern const RefValue kRefImp[3][3];

RefValue ref_eval(const Formula& f, const RefAssignment& v);

/// Calls `fn` on every assignment over `atoms`; stops early when fn returns false.
void for_each_assignment(const std::vector<std::string>& atoms,
                         const std::function<bool(const RefAssignment&)>& fn);

std::vector<std::string> joint_vocabulary(std::initializer_list<Formula> fs);

/// Pointwise a <= b over the joint vocabulary.
bool ref_entails(const Formula& a, const Formula& b);
bool ref_equivalent(const Formula& a, const Formula& b);

} // namespace htcraig::testing

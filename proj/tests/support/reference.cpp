#include "support/reference.hpp"

#include <set>
#include <stdexcept>

namespace htcraig::testing {

//                          F  NF  T
const RefValue kRefNot[3] = {2, 0, 0};
const RefValue kRefNh[3] = {2, 2, 0};

// Rows: left operand F, NF, T. Columns: right operand F, NF, T.
const RefValue kRefAnd[3][3] = {{0, 0, 0}, {0, 1, 1}, {0, 1, 2}};
const RefValue kRefOr[3][3] = {{0, 1, 2}, {1, 1, 2}, {2, 2, 2}};
const RefValue kRefImp[3][3] = {{2, 2, 2}, {0, 2, 2}, {0, 1, 2}};

RefValue ref_eval(const Formula& f, const RefAssignment& v) {
  switch (f.kind()) {
  case Connective::Atom: {
    auto it = v.find(f.name());
    if (it == v.end()) throw std::out_of_range("unassigned atom " + f.name());
    return it->second;
  }
  case Connective::Falsum:
    return 0;
  case Connective::Verum:
    return 2;
  case Connective::Not:
    return kRefNot[ref_eval(f.operand(), v)];
  case Connective::Nh:
    return kRefNh[ref_eval(f.operand(), v)];
  case Connective::And:
    return kRefAnd[ref_eval(f.left(), v)][ref_eval(f.right(), v)];
  case Connective::Or:
    return kRefOr[ref_eval(f.left(), v)][ref_eval(f.right(), v)];
  case Connective::Imp:
    return kRefImp[ref_eval(f.left(), v)][ref_eval(f.right(), v)];
  }
  throw std::logic_error("unknown connective");
}

void for_each_assignment(const std::vector<std::string>& atoms,
                         const std::function<bool(const RefAssignment&)>& fn) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < atoms.size(); ++i) total *= 3;
  RefAssignment v;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t rest = code;
    for (std::size_t i = atoms.size(); i-- > 0;) {
      v[atoms[i]] = static_cast<RefValue>(rest % 3);
      rest /= 3;
    }
    if (!fn(v)) return;
  }
}

std::vector<std::string> joint_vocabulary(std::initializer_list<Formula> fs) {
  std::set<std::string> all;
  for (const auto& f : fs) {
    auto s = voc(f);
    all.insert(s.begin(), s.end());
  }
  return {all.begin(), all.end()};
}

bool ref_entails(const Formula& a, const Formula& b) {
  bool holds = true;
  for_each_assignment(joint_vocabulary({a, b}), [&](const RefAssignment& v) {
    if (ref_eval(a, v) > ref_eval(b, v)) holds = false;
    return holds;
  });
  return holds;
}

bool ref_equivalent(const Formula& a, const Formula& b) {
  bool holds = true;
  for_each_assignment(joint_vocabulary({a, b}), [&](const RefAssignment& v) {
    if (ref_eval(a, v) != ref_eval(b, v)) holds = false;
    return holds;
  });
  return holds;
}

} // namespace htcraig::testing

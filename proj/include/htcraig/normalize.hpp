// Equivalence-preserving rewrites: negation and nh pushing, nh-NNF,
// body-normalization, clause form, and truth-constant absorption.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "htcraig/formula.hpp"

namespace htcraig {

/// Raised when an input lies outside the domain of a normal-form conversion.
class NormalFormError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Clause nh(E1) | ... | nh(Em) | F, where F is a disjunction of plain literals.
struct NhClause {
  std::vector<std::string> nh_atoms;
  /// Each of the shape p, ~p, ~~p, true or false.
  std::vector<Formula> rest;

  /// Disjunction with the nh literals first; the empty clause is `false`.
  Formula to_formula() const;
  friend bool operator==(const NhClause&, const NhClause&) = default;
};

/// Conjunction of the clauses; the empty list is `true`.
Formula cnf_to_formula(const std::vector<NhClause>& clauses);

/// Moves negations down to atoms. Throws NormalFormError on an nh occurrence
/// of negative polarity.
Formula push_negations(const Formula& f);

/// Moves nh down to atoms. Throws NormalFormError when an nh argument
/// contains an implication or another nh.
Formula push_nh(const Formula& f);

/// Converts an nh-formula to an equivalent nh-NNF formula.
Formula to_nh_nnf(const Formula& f);

/// Rewrites an HT formula so that no implication occurs in the antecedent of
/// another implication. The core step is
///   (A -> B) -> C  ~>  (~A -> C) & (B -> C) & (C | A | ~B)
/// together with currying of conjunctive antecedents, splitting of
/// disjunctive antecedents, and negation pushing under negated antecedents.
Formula body_normalize(const Formula& f);

/// True if no implication occurs inside the antecedent of an implication.
bool is_body_normalized(const Formula& f);

/// Clause form of an nh-NNF formula by distribution. Introduces no atoms.
std::vector<NhClause> to_cnf(const Formula& f);

/// Absorbs true/false bottom-up (A & true ~> A, false -> A ~> true, ...).
Formula simplify_constants(const Formula& f);

} // namespace htcraig

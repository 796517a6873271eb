#include "htcraig/interpolation.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "htcraig/normalize.hpp"

namespace htcraig {

namespace {

using C = Connective;

void collect(const Formula& f, Connective op, std::vector<Formula>& out) {
  if (f.is(op)) {
    collect(f.left(), op, out);
    collect(f.right(), op, out);
  } else {
    out.push_back(f);
  }
}

Formula fold(const std::vector<Formula>& parts, Connective op) {
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    out = op == C::And ? Formula::conjunction(out, parts[i]) : Formula::disjunction(out, parts[i]);
  }
  return out;
}

Formula tidy_chain(const Formula& f, Connective op) {
  const Connective absorbing = op == C::And ? C::Falsum : C::Verum;
  const Connective neutral = op == C::And ? C::Verum : C::Falsum;
  std::vector<Formula> flat;
  collect(f, op, flat);
  std::vector<Formula> kept;
  for (const auto& member : flat) {
    Formula g = tidy(member);
    std::vector<Formula> inner;
    collect(g, op, inner);
    for (auto& h : inner) {
      if (h.is(absorbing)) return h;
      if (h.is(neutral)) continue;
      if (std::find(kept.begin(), kept.end(), h) == kept.end()) kept.push_back(std::move(h));
    }
  }
  if (kept.empty()) return op == C::And ? Formula::verum() : Formula::falsum();
  return fold(kept, op);
}

void require_ht(const Formula& f, const char* which) {
  if (!in_class(f, FormulaClass::HT)) {
    throw std::invalid_argument(std::string(which) + " is not an HT formula: " + print(f));
  }
}

bool voc_within(const Formula& c, const Formula& a, const Formula& b) {
  auto va = voc(a);
  auto vb = voc(b);
  for (const auto& atom : voc(c)) {
    if (!va.count(atom) || !vb.count(atom)) return false;
  }
  return true;
}

} // namespace

std::string_view to_string(InterpolationStatus s) {
  return s == InterpolationStatus::Entails ? "entails" : "not-entails";
}

Formula tidy(const Formula& f) {
  switch (f.kind()) {
  case C::And:
  case C::Or:
    return tidy_chain(f, f.kind());
  case C::Not:
  case C::Nh:
  case C::Imp:
    return simplify_constants([&] {
      if (f.is(C::Imp)) return Formula::implication(tidy(f.left()), tidy(f.right()));
      Formula g = tidy(f.operand());
      return f.is(C::Not) ? Formula::negation(g) : Formula::nh(g);
    }());
  default:
    return f;
  }
}

Formula strengthen(const Formula& cprime) {
  auto clauses = to_cnf(cprime);
  if (clauses.empty()) return Formula::verum();
  std::vector<Formula> parts;
  for (const auto& clause : clauses) {
    Formula consequent = Formula::falsum();
    if (!clause.rest.empty()) consequent = fold(clause.rest, C::Or);
    if (clause.nh_atoms.empty()) {
      parts.push_back(consequent);
      continue;
    }
    std::vector<Formula> body;
    for (const auto& e : clause.nh_atoms) body.push_back(Formula::atom(e));
    parts.push_back(Formula::implication(fold(body, C::And), consequent));
  }
  return fold(parts, C::And);
}

Stage1Result stage1(const Formula& a, const Formula& b, const InterpolationOptions& opts) {
  require_ht(a, "left formula");
  require_ht(b, "right formula");
  Stage1Result out;
  out.normalized_b = body_normalize(b);
  Prover prover(opts.prover);
  auto outcome = prover.prove(SplitSequent({L(a)}, {R(out.normalized_b)}));
  out.invariants = prover.report();
  if (!outcome.proved()) {
    out.countermodel = outcome.failure().countermodel;
    return out;
  }
  out.interpolant = tidy(to_nh_nnf(simplify_constants(outcome.proof().interpolant)));
  out.proof = outcome.proof();
  return out;
}

InterpolationResult craig_interpolant(const Formula& a, const Formula& b,
                                      const InterpolationOptions& opts) {
  auto s1 = stage1(a, b, opts);
  auto oracle = entails(a, b);
  if (oracle.holds != s1.interpolant.has_value()) {
    throw std::logic_error("prover and oracle disagree on " + print(a) + " |= " + print(b));
  }

  InterpolationResult out;
  out.normalized_b = s1.normalized_b;
  out.proof = std::move(s1.proof);
  out.invariants = s1.invariants;
  if (!s1.interpolant) {
    out.status = InterpolationStatus::NotEntails;
    out.countermodel = std::move(s1.countermodel);
    return out;
  }
  out.status = InterpolationStatus::Entails;
  out.stage1 = s1.interpolant;
  out.final = tidy(strengthen(*s1.interpolant));
  out.report = verify_interpolant(a, *out.final, b, out.stage1);
  return out;
}

VerificationReport verify_interpolant(const Formula& a, const Formula& c, const Formula& b,
                                      const std::optional<Formula>& cprime) {
  VerificationReport r;
  auto first = entails(a, c);
  auto second = entails(c, b);
  r.a_entails_c = first.holds;
  r.c_entails_b = second.holds;
  r.c_entails_cprime = true;
  if (cprime) {
    auto third = entails(c, *cprime);
    r.c_entails_cprime = third.holds;
    if (!third.holds) r.countermodel = third.countermodel;
  }
  if (!second.holds) r.countermodel = second.countermodel;
  if (!first.holds) r.countermodel = first.countermodel;
  r.voc_ok = voc_within(c, a, b);
  return r;
}

} // namespace htcraig

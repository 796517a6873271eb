#include "htcraig/normalize.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <set>

namespace htcraig {

namespace {

using C = Connective;

// Negation normal forms of f, ~f and ~~f respectively. The three functions
// together realize the rewrites
//   ~(A & B) ~> ~A | ~B     ~(A | B) ~> ~A & ~B     ~(A -> B) ~> ~~A & ~B
//   ~~~A ~> ~A   ~true ~> false   ~false ~> true   ~~nh(A) ~> nh(A)
// applied to a fixpoint.
Formula nnf_neg(const Formula& f);
Formula nnf_negneg(const Formula& f);

Formula nnf_pos(const Formula& f) {
  if (!f.contains(C::Not)) return f;
  switch (f.kind()) {
  case C::Not:
    return nnf_neg(f.operand());
  case C::Nh:
    return Formula::nh(nnf_pos(f.operand()));
  case C::And:
    return Formula::conjunction(nnf_pos(f.left()), nnf_pos(f.right()));
  case C::Or:
    return Formula::disjunction(nnf_pos(f.left()), nnf_pos(f.right()));
  case C::Imp:
    return Formula::implication(nnf_pos(f.left()), nnf_pos(f.right()));
  default:
    return f;
  }
}

Formula nnf_neg(const Formula& f) {
  switch (f.kind()) {
  case C::Atom:
    return Formula::negation(f);
  case C::Falsum:
    return Formula::verum();
  case C::Verum:
    return Formula::falsum();
  case C::Not:
    return nnf_negneg(f.operand());
  case C::Nh:
    throw NormalFormError("nh occurs with negative polarity in " + print(f));
  case C::And:
    return Formula::disjunction(nnf_neg(f.left()), nnf_neg(f.right()));
  case C::Or:
    return Formula::conjunction(nnf_neg(f.left()), nnf_neg(f.right()));
  case C::Imp:
    return Formula::conjunction(nnf_negneg(f.left()), nnf_neg(f.right()));
  }
  return f;
}

Formula nnf_negneg(const Formula& f) {
  switch (f.kind()) {
  case C::Atom:
    return Formula::negation(Formula::negation(f));
  case C::Falsum:
  case C::Verum:
    return f;
  case C::Not:
    return nnf_neg(f.operand());
  case C::Nh:
    return nnf_pos(f);
  case C::And:
    return Formula::conjunction(nnf_negneg(f.left()), nnf_negneg(f.right()));
  case C::Or:
    return Formula::disjunction(nnf_negneg(f.left()), nnf_negneg(f.right()));
  case C::Imp:
    return Formula::disjunction(nnf_neg(f.left()), nnf_negneg(f.right()));
  }
  return f;
}

// nh(A) with nh moved inward, A an argument free of -> and nh.
Formula nh_inward(const Formula& f) {
  switch (f.kind()) {
  case C::Atom:
    return Formula::nh(f);
  case C::Falsum:
    return Formula::verum();
  case C::Verum:
    return Formula::falsum();
  case C::Not:
    if (f.contains(C::Nh) || f.contains(C::Imp)) break;
    return Formula::negation(f);
  case C::And:
    return Formula::disjunction(nh_inward(f.left()), nh_inward(f.right()));
  case C::Or:
    return Formula::conjunction(nh_inward(f.left()), nh_inward(f.right()));
  default:
    break;
  }
  throw NormalFormError("nh argument contains -> or nh: " + print(f));
}

Formula push_nh_rec(const Formula& f) {
  if (!f.contains(C::Nh)) return f;
  switch (f.kind()) {
  case C::Nh:
    return nh_inward(f.operand());
  case C::Not:
    return Formula::negation(push_nh_rec(f.operand()));
  case C::And:
    return Formula::conjunction(push_nh_rec(f.left()), push_nh_rec(f.right()));
  case C::Or:
    return Formula::disjunction(push_nh_rec(f.left()), push_nh_rec(f.right()));
  case C::Imp:
    return Formula::implication(push_nh_rec(f.left()), push_nh_rec(f.right()));
  default:
    return f;
  }
}

Formula body_rec(const Formula& f);

// (X -> consequent) rewritten so that no implication remains in an antecedent.
// X is taken as written; the consequent is already body-normalized.
Formula imp_normal(const Formula& x, const Formula& consequent) {
  if (!x.contains(C::Imp)) return Formula::implication(x, consequent);
  switch (x.kind()) {
  case C::Not:
    return Formula::implication(push_negations(x), consequent);
  case C::And:
    return imp_normal(x.left(), imp_normal(x.right(), consequent));
  case C::Or:
    return Formula::conjunction(imp_normal(x.left(), consequent),
                                imp_normal(x.right(), consequent));
  case C::Imp: {
    const Formula& a = x.left();
    const Formula& b = x.right();
    Formula first = Formula::implication(push_negations(Formula::negation(a)), consequent);
    Formula second = imp_normal(b, consequent);
    Formula third = Formula::disjunction(Formula::disjunction(consequent, body_rec(a)),
                                         body_rec(Formula::negation(b)));
    return Formula::conjunction(Formula::conjunction(std::move(first), std::move(second)),
                                std::move(third));
  }
  default:
    return Formula::implication(x, consequent);
  }
}

Formula body_rec(const Formula& f) {
  if (!f.contains(C::Imp)) return f;
  switch (f.kind()) {
  case C::Not:
    return Formula::negation(body_rec(f.operand()));
  case C::And:
    return Formula::conjunction(body_rec(f.left()), body_rec(f.right()));
  case C::Or:
    return Formula::disjunction(body_rec(f.left()), body_rec(f.right()));
  case C::Imp:
    return imp_normal(f.left(), body_rec(f.right()));
  default:
    return f;
  }
}

// Clauses are sorted literal ids. Duplicate, subsumed and always-true
// clauses are dropped as soon as they appear so the product in a disjunction
// stays small.
class ClauseBuilder {
public:
  using Clause = std::vector<int>;

  std::vector<Clause> build(const Formula& f) {
    switch (f.kind()) {
    case C::Verum:
      return {};
    case C::Falsum:
      return {Clause{}};
    case C::And: {
      auto l = build(f.left());
      auto r = build(f.right());
      l.insert(l.end(), r.begin(), r.end());
      return reduce(std::move(l));
    }
    case C::Or: {
      auto l = build(f.left());
      auto r = build(f.right());
      std::vector<Clause> out;
      out.reserve(l.size() * r.size());
      for (const auto& cl : l) {
        for (const auto& cr : r) {
          Clause c;
          std::set_union(cl.begin(), cl.end(), cr.begin(), cr.end(), std::back_inserter(c));
          if (!always_true(c)) out.push_back(std::move(c));
        }
      }
      return reduce(std::move(out));
    }
    default:
      return {Clause{intern(f)}};
    }
  }

  const Formula& literal(int id) const { return literals_[static_cast<std::size_t>(id)]; }

private:
  int intern(const Formula& f) {
    auto [it, inserted] = ids_.try_emplace(f, static_cast<int>(literals_.size()));
    if (inserted) literals_.push_back(f);
    return it->second;
  }

  bool has(const Clause& c, const Formula& f) const {
    auto it = ids_.find(f);
    return it != ids_.end() && std::binary_search(c.begin(), c.end(), it->second);
  }

  // p | nh(p) and ~p | ~~p take the value T everywhere.
  bool always_true(const Clause& c) const {
    for (int id : c) {
      const Formula& lit = literal(id);
      if (lit.is(C::Atom) && has(c, Formula::nh(lit))) return true;
      if (lit.is(C::Not) && lit.operand().is(C::Atom) && has(c, Formula::negation(lit))) return true;
    }
    return false;
  }

  static std::vector<Clause> reduce(std::vector<Clause> cs) {
    std::vector<std::size_t> order(cs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return cs[a].size() < cs[b].size(); });
    std::vector<bool> keep(cs.size(), false);
    std::vector<std::size_t> kept;
    for (std::size_t i : order) {
      bool subsumed = false;
      for (std::size_t k : kept) {
        if (std::includes(cs[i].begin(), cs[i].end(), cs[k].begin(), cs[k].end())) {
          subsumed = true;
          break;
        }
      }
      if (!subsumed) {
        keep[i] = true;
        kept.push_back(i);
      }
    }
    std::vector<Clause> out;
    out.reserve(kept.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (keep[i]) out.push_back(std::move(cs[i]));
    }
    return out;
  }

  std::map<Formula, int> ids_;
  std::vector<Formula> literals_;
};

} // namespace

Formula NhClause::to_formula() const {
  std::vector<Formula> parts;
  for (const auto& e : nh_atoms) parts.push_back(Formula::nh(Formula::atom(e)));
  parts.insert(parts.end(), rest.begin(), rest.end());
  if (parts.empty()) return Formula::falsum();
  Formula out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = Formula::disjunction(out, parts[i]);
  return out;
}

Formula cnf_to_formula(const std::vector<NhClause>& clauses) {
  if (clauses.empty()) return Formula::verum();
  Formula out = clauses.front().to_formula();
  for (std::size_t i = 1; i < clauses.size(); ++i) {
    out = Formula::conjunction(out, clauses[i].to_formula());
  }
  return out;
}

Formula push_negations(const Formula& f) { return nnf_pos(f); }

Formula push_nh(const Formula& f) { return push_nh_rec(f); }

Formula to_nh_nnf(const Formula& f) {
  if (f.contains(C::Imp)) throw NormalFormError("nh-NNF input contains ->: " + print(f));
  return push_negations(push_nh(f));
}

Formula body_normalize(const Formula& f) {
  if (f.contains(C::Nh)) throw NormalFormError("body-normalization needs an HT formula");
  return body_rec(f);
}

bool is_body_normalized(const Formula& f) {
  switch (f.kind()) {
  case C::Not:
  case C::Nh:
    return is_body_normalized(f.operand());
  case C::And:
  case C::Or:
    return is_body_normalized(f.left()) && is_body_normalized(f.right());
  case C::Imp:
    return !f.left().contains(C::Imp) && is_body_normalized(f.right());
  default:
    return true;
  }
}

std::vector<NhClause> to_cnf(const Formula& f) {
  if (!in_class(f, FormulaClass::NH_NNF)) {
    throw NormalFormError("clause form needs an nh-NNF formula: " + print(f));
  }
  ClauseBuilder builder;
  std::vector<NhClause> out;
  for (const auto& c : builder.build(f)) {
    NhClause clause;
    for (int id : c) {
      const Formula& lit = builder.literal(id);
      if (lit.is(C::Nh)) {
        clause.nh_atoms.push_back(lit.operand().name());
      } else {
        clause.rest.push_back(lit);
      }
    }
    out.push_back(std::move(clause));
  }
  return out;
}

Formula simplify_constants(const Formula& f) {
  if (!f.contains(C::Verum) && !f.contains(C::Falsum)) return f;
  switch (f.kind()) {
  case C::Not: {
    Formula g = simplify_constants(f.operand());
    if (g.is(C::Verum)) return Formula::falsum();
    if (g.is(C::Falsum)) return Formula::verum();
    return Formula::negation(std::move(g));
  }
  case C::Nh: {
    Formula g = simplify_constants(f.operand());
    if (g.is(C::Verum)) return Formula::falsum();
    if (g.is(C::Falsum)) return Formula::verum();
    return Formula::nh(std::move(g));
  }
  case C::And: {
    Formula l = simplify_constants(f.left());
    Formula r = simplify_constants(f.right());
    if (l.is(C::Falsum) || r.is(C::Falsum)) return Formula::falsum();
    if (l.is(C::Verum)) return r;
    if (r.is(C::Verum)) return l;
    return Formula::conjunction(std::move(l), std::move(r));
  }
  case C::Or: {
    Formula l = simplify_constants(f.left());
    Formula r = simplify_constants(f.right());
    if (l.is(C::Verum) || r.is(C::Verum)) return Formula::verum();
    if (l.is(C::Falsum)) return r;
    if (r.is(C::Falsum)) return l;
    return Formula::disjunction(std::move(l), std::move(r));
  }
  case C::Imp: {
    Formula l = simplify_constants(f.left());
    Formula r = simplify_constants(f.right());
    if (l.is(C::Falsum) || r.is(C::Verum)) return Formula::verum();
    if (l.is(C::Verum)) return r;
    return Formula::implication(std::move(l), std::move(r));
  }
  default:
    return f;
  }
}

} // namespace htcraig

#include "htcraig/calculus.hpp"

#include <algorithm>
#include <stdexcept>

namespace htcraig {

namespace {

using C = Connective;

void insert_sorted(std::vector<LabeledFormula>& v, LabeledFormula lf) {
  auto it = std::lower_bound(v.begin(), v.end(), lf);
  if (it == v.end() || *it != lf) v.insert(it, std::move(lf));
}

void normalize(std::vector<LabeledFormula>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool has_unnegated_atom(const Formula& f) {
  switch (f.kind()) {
  case C::Atom:
    return true;
  case C::Not:
  case C::Falsum:
  case C::Verum:
    return false;
  case C::Nh:
    return has_unnegated_atom(f.operand());
  default:
    return has_unnegated_atom(f.left()) || has_unnegated_atom(f.right());
  }
}

// True if some nh in f has an argument containing -> or nh.
bool has_bad_nh_argument(const Formula& f) {
  if (!f.contains(C::Nh)) return false;
  switch (f.kind()) {
  case C::Nh:
    return f.operand().contains(C::Imp) || f.operand().contains(C::Nh);
  case C::Not:
    return has_bad_nh_argument(f.operand());
  case C::And:
  case C::Or:
  case C::Imp:
    return has_bad_nh_argument(f.left()) || has_bad_nh_argument(f.right());
  default:
    return false;
  }
}

Formula neg(Formula f) { return Formula::negation(std::move(f)); }

std::string labeled_text(const LabeledFormula& lf) {
  std::string body = print(lf.formula);
  if (!lf.formula.is(C::Atom) && !lf.formula.is_constant()) body = "(" + body + ")";
  return body + "^" + to_char(lf.prov);
}

} // namespace

// ---------------------------------------------------------------------------
// SplitSequent
// ---------------------------------------------------------------------------

SplitSequent::SplitSequent(std::vector<LabeledFormula> antecedent,
                           std::vector<LabeledFormula> succedent)
    : ant_(std::move(antecedent)), suc_(std::move(succedent)) {
  normalize(ant_);
  normalize(suc_);
}

bool SplitSequent::contains(Side s, const Formula& f, Provenance prov) const {
  const auto& v = side(s);
  return std::binary_search(v.begin(), v.end(), LabeledFormula{f, prov});
}

std::uint64_t SplitSequent::weight() const noexcept {
  std::uint64_t w = 0;
  for (const auto& lf : ant_) w += lf.formula.weight();
  for (const auto& lf : suc_) w += lf.formula.weight();
  return w;
}

std::set<std::string> SplitSequent::vocabulary() const {
  std::set<std::string> out;
  for (const auto* v : {&ant_, &suc_}) {
    for (const auto& lf : *v) {
      auto atoms = voc(lf.formula);
      out.insert(atoms.begin(), atoms.end());
    }
  }
  return out;
}

SplitSequent SplitSequent::replace(Position principal,
                                   std::initializer_list<LabeledFormula> add_antecedent,
                                   std::initializer_list<LabeledFormula> add_succedent) const {
  SplitSequent out = *this;
  auto& from = principal.side == Side::Antecedent ? out.ant_ : out.suc_;
  from.erase(from.begin() + static_cast<std::ptrdiff_t>(principal.index));
  for (const auto& lf : add_antecedent) insert_sorted(out.ant_, lf);
  for (const auto& lf : add_succedent) insert_sorted(out.suc_, lf);
  return out;
}

std::string format_sequent(const SplitSequent& s) {
  std::string out;
  auto list = [&](const std::vector<LabeledFormula>& v) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ", ";
      out += labeled_text(v[i]);
    }
  };
  list(s.antecedent());
  out += s.antecedent().empty() ? "=>" : " =>";
  if (!s.succedent().empty()) out += ' ';
  list(s.succedent());
  return out;
}

// ---------------------------------------------------------------------------
// Rules
// ---------------------------------------------------------------------------

std::string_view to_string(RuleId r) {
  switch (r) {
  case RuleId::Ax1LL: return "Ax-1-LL";
  case RuleId::Ax1LR: return "Ax-1-LR";
  case RuleId::Ax1RL: return "Ax-1-RL";
  case RuleId::Ax1RR: return "Ax-1-RR";
  case RuleId::Ax2LL: return "Ax-2-LL";
  case RuleId::Ax2LR: return "Ax-2-LR";
  case RuleId::Ax2LRPrime: return "Ax-2-LR'";
  case RuleId::AxNh1LR: return "Ax-nh-1-LR";
  case RuleId::AxNh1RR: return "Ax-nh-1-RR";
  case RuleId::AxNh2LR: return "Ax-nh-2-LR";
  case RuleId::AxNh2RR: return "Ax-nh-2-RR";
  case RuleId::AxFalseL: return "Ax-false-L";
  case RuleId::AxFalseR: return "Ax-false-R";
  case RuleId::AxTrueL: return "Ax-true-L";
  case RuleId::AxTrueR: return "Ax-true-R";
  case RuleId::TrueLeft: return "true=>";
  case RuleId::FalseRight: return "=>false";
  case RuleId::AndLeft: return "and=>";
  case RuleId::AndRightL: return "=>and-L";
  case RuleId::AndRightR: return "=>and-R";
  case RuleId::OrLeftL: return "or=>L";
  case RuleId::OrLeftR: return "or=>R";
  case RuleId::OrRight: return "=>or";
  case RuleId::NotNotLeft: return "notnot=>";
  case RuleId::NotNotRight: return "=>notnot";
  case RuleId::NotAndLeft: return "not-and=>";
  case RuleId::NotAndRight: return "=>not-and";
  case RuleId::NotOrLeft: return "not-or=>";
  case RuleId::NotOrRight: return "=>not-or";
  case RuleId::NotImpLeft: return "not-imp=>";
  case RuleId::NotImpRight: return "=>not-imp";
  case RuleId::NotTrueLeft: return "not-true=>";
  case RuleId::NotTrueRight: return "=>not-true";
  case RuleId::NotFalseLeft: return "not-false=>";
  case RuleId::NotFalseRight: return "=>not-false";
  case RuleId::NhNot: return "=>nh-not";
  case RuleId::NhAnd: return "=>nh-and";
  case RuleId::NhOr: return "=>nh-or";
  case RuleId::NhTrue: return "=>nh-true";
  case RuleId::NhFalse: return "=>nh-false";
  case RuleId::ImpLeftL: return "imp=>L";
  case RuleId::ImpRightL: return "=>imp-L";
  case RuleId::ImpStarRightR: return "=>imp*-R";
  }
  return "?";
}

bool is_axiom(RuleId r) { return r <= RuleId::AxTrueR; }

Formula combine(Combiner c, std::span<const Formula> hs) {
  if (hs.empty()) throw std::invalid_argument("combine needs at least one premise interpolant");
  if (c == Combiner::PassThrough) return hs.front();
  Formula out = hs.front();
  for (std::size_t i = 1; i < hs.size(); ++i) {
    out = c == Combiner::Disjunction ? Formula::disjunction(out, hs[i])
                                     : Formula::conjunction(out, hs[i]);
  }
  return out;
}

std::optional<AxiomMatch> axiom_match(const SplitSequent& s, Ax2Variant variant) {
  const auto& ant = s.antecedent();
  const auto& suc = s.succedent();
  auto in_ant = [&](const Formula& f, Provenance p) { return s.contains(Side::Antecedent, f, p); };
  auto in_suc = [&](const Formula& f, Provenance p) { return s.contains(Side::Succedent, f, p); };
  auto is_negated_atom = [](const Formula& f) {
    return f.is(C::Not) && f.operand().is(C::Atom);
  };
  using P = Provenance;

  // Ax-1: the same literal on both sides.
  for (const auto& lf : ant) {
    if (lf.prov == P::L && lf.formula.is_literal() && in_suc(lf.formula, P::L)) {
      return AxiomMatch{RuleId::Ax1LL, Formula::falsum()};
    }
  }
  for (const auto& lf : ant) {
    if (lf.prov == P::L && lf.formula.is_literal() && in_suc(lf.formula, P::R)) {
      return AxiomMatch{RuleId::Ax1LR, lf.formula};
    }
  }
  for (const auto& lf : ant) {
    if (lf.prov == P::R && is_negated_atom(lf.formula) && in_suc(lf.formula, P::L)) {
      return AxiomMatch{RuleId::Ax1RL, neg(lf.formula)};
    }
  }
  for (const auto& lf : ant) {
    if (lf.prov == P::R && is_negated_atom(lf.formula) && in_suc(lf.formula, P::R)) {
      return AxiomMatch{RuleId::Ax1RR, Formula::verum()};
    }
  }
  // Ax-2: an atom and its negation in the antecedent.
  for (const auto& lf : ant) {
    if (lf.prov == P::L && lf.formula.is(C::Atom) && in_ant(neg(lf.formula), P::L)) {
      return AxiomMatch{RuleId::Ax2LL, Formula::falsum()};
    }
  }
  for (const auto& lf : ant) {
    if (lf.prov == P::L && lf.formula.is(C::Atom) && in_ant(neg(lf.formula), P::R)) {
      if (variant == Ax2Variant::DoubleNegation) {
        return AxiomMatch{RuleId::Ax2LRPrime, neg(neg(lf.formula))};
      }
      return AxiomMatch{RuleId::Ax2LR, lf.formula};
    }
  }
  // Ax-nh-1: A and nh(A) in the succedent.
  for (const auto& lf : suc) {
    if (lf.prov == P::L && lf.formula.is(C::Atom) && in_suc(Formula::nh(lf.formula), P::R)) {
      return AxiomMatch{RuleId::AxNh1LR, Formula::nh(lf.formula)};
    }
  }
  for (const auto& lf : suc) {
    if (lf.prov == P::R && lf.formula.is(C::Atom) && in_suc(Formula::nh(lf.formula), P::R)) {
      return AxiomMatch{RuleId::AxNh1RR, Formula::verum()};
    }
  }
  // Ax-nh-2: ~A in the antecedent, nh(A) in the succedent.
  for (const auto& lf : ant) {
    if (lf.prov == P::L && is_negated_atom(lf.formula) &&
        in_suc(Formula::nh(lf.formula.operand()), P::R)) {
      return AxiomMatch{RuleId::AxNh2LR, lf.formula};
    }
  }
  for (const auto& lf : ant) {
    if (lf.prov == P::R && is_negated_atom(lf.formula) &&
        in_suc(Formula::nh(lf.formula.operand()), P::R)) {
      return AxiomMatch{RuleId::AxNh2RR, Formula::verum()};
    }
  }
  // Truth constants.
  if (in_ant(Formula::falsum(), P::L)) return AxiomMatch{RuleId::AxFalseL, Formula::falsum()};
  if (in_ant(Formula::falsum(), P::R)) return AxiomMatch{RuleId::AxFalseR, Formula::verum()};
  if (in_suc(Formula::verum(), P::L)) return AxiomMatch{RuleId::AxTrueL, Formula::falsum()};
  if (in_suc(Formula::verum(), P::R)) return AxiomMatch{RuleId::AxTrueR, Formula::verum()};
  return std::nullopt;
}

bool is_reducible(const SplitSequent& s, Position p) {
  const Formula& f = s.at(p).formula;
  bool ant = p.side == Side::Antecedent;
  switch (f.kind()) {
  case C::Atom:
    return false;
  case C::Falsum:
    return !ant;
  case C::Verum:
    return ant;
  case C::Not:
  case C::Nh:
    return !f.operand().is(C::Atom);
  default:
    return true;
  }
}

Expansion expand(const SplitSequent& s, Position p) {
  if (!is_reducible(s, p)) {
    throw std::invalid_argument("no rule applies to " + labeled_text(s.at(p)));
  }
  const LabeledFormula& principal = s.at(p);
  const Formula& f = principal.formula;
  const Provenance x = principal.prov;
  const bool isL = x == Provenance::L;
  auto lab = [x](Formula g) { return LabeledFormula{std::move(g), x}; };
  auto single = [&](RuleId r, std::initializer_list<LabeledFormula> a,
                    std::initializer_list<LabeledFormula> d) {
    return Expansion{r, {s.replace(p, a, d)}, Combiner::PassThrough};
  };
  auto omitted = [&](const char* why) -> Expansion {
    throw std::logic_error(std::string(why) + ": " + labeled_text(principal) + " in " +
                           format_sequent(s));
  };

  if (p.side == Side::Antecedent) {
    switch (f.kind()) {
    case C::Verum:
      return single(RuleId::TrueLeft, {}, {});
    case C::And:
      return single(RuleId::AndLeft, {lab(f.left()), lab(f.right())}, {});
    case C::Or:
      return Expansion{isL ? RuleId::OrLeftL : RuleId::OrLeftR,
                       {s.replace(p, {lab(f.left())}, {}), s.replace(p, {lab(f.right())}, {})},
                       isL ? Combiner::Disjunction : Combiner::Conjunction};
    case C::Imp: {
      if (!isL) return omitted("no rule for an R-labeled implication in the antecedent");
      const Formula& a = f.left();
      const Formula& b = f.right();
      return Expansion{RuleId::ImpLeftL,
                       {s.replace(p, {L(neg(a))}, {}), s.replace(p, {}, {L(a), L(neg(b))}),
                        s.replace(p, {L(b)}, {})},
                       Combiner::Disjunction};
    }
    case C::Nh:
      return omitted("nh in the antecedent");
    case C::Not: {
      const Formula& g = f.operand();
      switch (g.kind()) {
      case C::Verum:
        return single(RuleId::NotTrueLeft, {lab(Formula::falsum())}, {});
      case C::Falsum:
        return single(RuleId::NotFalseLeft, {lab(Formula::verum())}, {});
      case C::Not:
        return single(RuleId::NotNotLeft, {}, {lab(g)});
      case C::And:
        return single(RuleId::NotAndLeft,
                      {lab(Formula::disjunction(neg(g.left()), neg(g.right())))}, {});
      case C::Or:
        return single(RuleId::NotOrLeft,
                      {lab(Formula::conjunction(neg(g.left()), neg(g.right())))}, {});
      case C::Imp:
        return single(RuleId::NotImpLeft,
                      {lab(Formula::conjunction(neg(neg(g.left())), neg(g.right())))}, {});
      case C::Nh:
        return omitted("negated nh in the antecedent");
      default:
        break;
      }
      break;
    }
    default:
      break;
    }
  } else {
    switch (f.kind()) {
    case C::Falsum:
      return single(RuleId::FalseRight, {}, {});
    case C::Or:
      return single(RuleId::OrRight, {}, {lab(f.left()), lab(f.right())});
    case C::And:
      return Expansion{isL ? RuleId::AndRightL : RuleId::AndRightR,
                       {s.replace(p, {}, {lab(f.left())}), s.replace(p, {}, {lab(f.right())})},
                       isL ? Combiner::Disjunction : Combiner::Conjunction};
    case C::Imp: {
      const Formula& a = f.left();
      const Formula& b = f.right();
      if (isL) {
        return Expansion{RuleId::ImpRightL,
                         {s.replace(p, {L(a)}, {L(b)}), s.replace(p, {L(neg(b))}, {L(neg(a))})},
                         Combiner::Disjunction};
      }
      return Expansion{RuleId::ImpStarRightR,
                       {s.replace(p, {}, {R(Formula::nh(a)), R(b)}),
                        s.replace(p, {R(neg(b))}, {R(neg(a))})},
                       Combiner::Conjunction};
    }
    case C::Not: {
      const Formula& g = f.operand();
      switch (g.kind()) {
      case C::Verum:
        return single(RuleId::NotTrueRight, {}, {lab(Formula::falsum())});
      case C::Falsum:
        return single(RuleId::NotFalseRight, {}, {lab(Formula::verum())});
      case C::Not:
        return single(RuleId::NotNotRight, {lab(g)}, {});
      case C::And:
        return single(RuleId::NotAndRight, {},
                      {lab(Formula::disjunction(neg(g.left()), neg(g.right())))});
      case C::Or:
        return single(RuleId::NotOrRight, {},
                      {lab(Formula::conjunction(neg(g.left()), neg(g.right())))});
      case C::Imp:
        return single(RuleId::NotImpRight, {},
                      {lab(Formula::conjunction(neg(neg(g.left())), neg(g.right())))});
      case C::Nh:
        return omitted("negated nh in the succedent");
      default:
        break;
      }
      break;
    }
    case C::Nh: {
      if (isL) return omitted("L-labeled nh");
      const Formula& g = f.operand();
      switch (g.kind()) {
      case C::Verum:
        return single(RuleId::NhTrue, {}, {R(Formula::falsum())});
      case C::Falsum:
        return single(RuleId::NhFalse, {}, {R(Formula::verum())});
      case C::Not:
        return single(RuleId::NhNot, {}, {R(neg(neg(g.operand())))});
      case C::And:
        return single(RuleId::NhAnd, {},
                      {R(Formula::disjunction(Formula::nh(g.left()), Formula::nh(g.right())))});
      case C::Or:
        return single(RuleId::NhOr, {},
                      {R(Formula::conjunction(Formula::nh(g.left()), Formula::nh(g.right())))});
      default:
        return omitted("nh argument contains -> or nh");
      }
    }
    default:
      break;
    }
  }
  throw std::invalid_argument("no rule applies to " + labeled_text(principal));
}

// ---------------------------------------------------------------------------
// Proof search
// ---------------------------------------------------------------------------

std::size_t ProofNode::size() const {
  std::size_t n = 1;
  for (const auto& p : premises) n += p.size();
  return n;
}

std::size_t ProofNode::depth() const {
  std::size_t d = 0;
  for (const auto& p : premises) d = std::max(d, p.depth());
  return d + 1;
}

std::string_view to_string(Invariant i) {
  switch (i) {
  case Invariant::InterpolantIsNhNnf:
    return "interpolant is nh-NNF";
  case Invariant::NhHasProvenanceR:
    return "nh has provenance R";
  case Invariant::NhOnlyInSuccedent:
    return "nh only in succedent";
  case Invariant::NhArgumentPlain:
    return "nh argument free of -> and nh";
  case Invariant::RightAntecedentNegated:
    return "R antecedent atoms negated";
  case Invariant::WeightDecreases:
    return "weight decreases";
  }
  return "?";
}

bool InvariantReport::clean() const noexcept { return total_violations() == 0; }

std::size_t InvariantReport::total_violations() const noexcept {
  std::size_t n = 0;
  for (auto v : violations) n += v;
  return n;
}

void InvariantReport::merge(const InvariantReport& other) {
  for (std::size_t i = 0; i < kInvariantCount; ++i) violations[i] += other.violations[i];
  sequents_checked += other.sequents_checked;
  expansions_checked += other.expansions_checked;
  if (first_violation.empty()) first_violation = other.first_violation;
}

void Prover::record(Invariant i, const std::string& detail) {
  ++report_.violations[static_cast<std::size_t>(i)];
  if (report_.first_violation.empty()) {
    report_.first_violation = std::string(to_string(i)) + ": " + detail;
  }
}

void Prover::check_sequent(const SplitSequent& s) {
  ++report_.sequents_checked;
  for (const auto& lf : s.antecedent()) {
    if (lf.formula.contains(C::Nh)) record(Invariant::NhOnlyInSuccedent, format_sequent(s));
    if (lf.formula.contains(C::Nh) && lf.prov == Provenance::L) {
      record(Invariant::NhHasProvenanceR, format_sequent(s));
    }
    if (lf.prov == Provenance::R && has_unnegated_atom(lf.formula)) {
      record(Invariant::RightAntecedentNegated, format_sequent(s));
    }
    if (has_bad_nh_argument(lf.formula)) record(Invariant::NhArgumentPlain, format_sequent(s));
  }
  for (const auto& lf : s.succedent()) {
    if (lf.formula.contains(C::Nh) && lf.prov == Provenance::L) {
      record(Invariant::NhHasProvenanceR, format_sequent(s));
    }
    if (has_bad_nh_argument(lf.formula)) record(Invariant::NhArgumentPlain, format_sequent(s));
  }
}

SearchOutcome Prover::prove(const SplitSequent& root) {
  for (const auto& lf : root.antecedent()) {
    if (lf.formula.contains(C::Nh)) {
      throw std::invalid_argument("root antecedent contains nh: " + format_sequent(root));
    }
    if (lf.prov == Provenance::R && has_unnegated_atom(lf.formula)) {
      throw std::invalid_argument("R-labeled root antecedent member has an unnegated atom: " +
                                  format_sequent(root));
    }
  }
  for (const auto& lf : root.succedent()) {
    if (lf.formula.contains(C::Nh) && lf.prov == Provenance::L) {
      throw std::invalid_argument("L-labeled nh in the root succedent: " + format_sequent(root));
    }
  }
  universe_ = root.vocabulary();
  failure_.reset();
  auto proof = search(root);
  if (proof) return SearchOutcome(std::move(*proof));
  return SearchOutcome(std::move(*failure_));
}

namespace {

bool branches(const Formula& f, Side side) {
  switch (f.kind()) {
  case C::Imp:
    return true;
  case C::Or:
    return side == Side::Antecedent;
  case C::And:
    return side == Side::Succedent;
  default:
    return false;
  }
}

} // namespace

std::optional<ProofNode> Prover::search(const SplitSequent& s) {
  if (config_.check_invariants) check_sequent(s);

  if (auto ax = axiom_match(s, config_.ax2)) {
    return ProofNode{s, ax->rule, std::nullopt, {}, std::move(ax->interpolant)};
  }

  std::optional<Position> principal;
  // Truth constants are dropped before anything else.
  for (std::size_t i = 0; i < s.antecedent().size() && !principal; ++i) {
    if (s.antecedent()[i].formula.is(C::Verum)) principal = Position{Side::Antecedent, i};
  }
  for (std::size_t i = 0; i < s.succedent().size() && !principal; ++i) {
    if (s.succedent()[i].formula.is(C::Falsum)) principal = Position{Side::Succedent, i};
  }
  // Single-premise steps go first; among equals the heaviest, leftmost wins.
  for (bool branching : {false, true}) {
    if (principal) break;
    std::uint64_t best = 0;
    for (Side side : {Side::Antecedent, Side::Succedent}) {
      for (std::size_t i = 0; i < s.side(side).size(); ++i) {
        Position pos{side, i};
        if (branches(s.at(pos).formula, side) != branching) continue;
        std::uint64_t w = s.at(pos).formula.weight();
        if (w > best && is_reducible(s, pos)) {
          best = w;
          principal = pos;
        }
      }
    }
  }

  if (!principal) {
    failure_ = SearchFailure{s, leaf_countermodel(s, universe_)};
    return std::nullopt;
  }

  Expansion ex = expand(s, *principal);
  if (config_.check_invariants) {
    ++report_.expansions_checked;
    for (const auto& prem : ex.premises) {
      if (prem.weight() >= s.weight()) {
        record(Invariant::WeightDecreases,
               std::string(to_string(ex.rule)) + " on " + format_sequent(s));
      }
    }
  }

  ProofNode node{s, ex.rule, principal, {}, Formula::verum()};
  node.premises.reserve(ex.premises.size());
  std::vector<Formula> hs;
  hs.reserve(ex.premises.size());
  for (const auto& prem : ex.premises) {
    auto sub = search(prem);
    if (!sub) return std::nullopt;
    hs.push_back(sub->interpolant);
    node.premises.push_back(std::move(*sub));
  }
  node.interpolant = combine(ex.combiner, hs);
  if (config_.check_invariants && !in_class(node.interpolant, FormulaClass::NH_NNF)) {
    record(Invariant::InterpolantIsNhNnf, print(node.interpolant));
  }
  return node;
}

SearchOutcome prove(const SplitSequent& root, const ProverConfig& config) {
  Prover prover(config);
  return prover.prove(root);
}

Assignment leaf_countermodel(const SplitSequent& s) { return leaf_countermodel(s, s.vocabulary()); }

Assignment leaf_countermodel(const SplitSequent& s, const std::set<std::string>& universe) {
  for (Side side : {Side::Antecedent, Side::Succedent}) {
    for (std::size_t i = 0; i < s.side(side).size(); ++i) {
      if (is_reducible(s, {side, i})) {
        throw std::invalid_argument("sequent is reducible: " + format_sequent(s));
      }
    }
  }
  auto in_ant = [&](const Formula& f) {
    return s.contains(Side::Antecedent, f, Provenance::L) ||
           s.contains(Side::Antecedent, f, Provenance::R);
  };
  auto in_suc = [&](const Formula& f) {
    return s.contains(Side::Succedent, f, Provenance::L) ||
           s.contains(Side::Succedent, f, Provenance::R);
  };
  std::set<std::string> atoms = universe;
  auto own = s.vocabulary();
  atoms.insert(own.begin(), own.end());

  Assignment v;
  for (const auto& name : atoms) {
    Formula a = Formula::atom(name);
    if (in_ant(a) || in_suc(Formula::nh(a))) {
      v.set(name, TruthValue::T);
    } else if (in_suc(neg(a))) {
      v.set(name, TruthValue::NF);
    } else {
      v.set(name, TruthValue::F);
    }
  }
  return v;
}

// ---------------------------------------------------------------------------
// Oracle check of the relative-interpolant conditions
// ---------------------------------------------------------------------------

namespace {

Formula conj_of(const std::vector<LabeledFormula>& v, Provenance p) {
  std::optional<Formula> out;
  for (const auto& lf : v) {
    if (lf.prov != p) continue;
    out = out ? Formula::conjunction(*out, lf.formula) : lf.formula;
  }
  return out ? *out : Formula::verum();
}

Formula disj_of(const std::vector<LabeledFormula>& v, Provenance p) {
  std::optional<Formula> out;
  for (const auto& lf : v) {
    if (lf.prov != p) continue;
    out = out ? Formula::disjunction(*out, lf.formula) : lf.formula;
  }
  return out ? *out : Formula::falsum();
}

std::set<std::string> side_voc(const SplitSequent& s, Provenance p) {
  std::set<std::string> out;
  for (const auto* v : {&s.antecedent(), &s.succedent()}) {
    for (const auto& lf : *v) {
      if (lf.prov != p) continue;
      auto atoms = voc(lf.formula);
      out.insert(atoms.begin(), atoms.end());
    }
  }
  return out;
}

} // namespace

RelativeInterpolantCheck check_relative_interpolant(const SplitSequent& s, const Formula& h) {
  RelativeInterpolantCheck out;
  out.i1 = entails(conj_of(s.antecedent(), Provenance::L),
                   Formula::disjunction(h, disj_of(s.succedent(), Provenance::L)))
               .holds;
  out.i2 = entails(Formula::conjunction(conj_of(s.antecedent(), Provenance::R), h),
                   disj_of(s.succedent(), Provenance::R))
               .holds;
  auto left = side_voc(s, Provenance::L);
  auto right = side_voc(s, Provenance::R);
  out.i3 = true;
  for (const auto& a : voc(h)) {
    if (!left.count(a) || !right.count(a)) out.i3 = false;
  }
  return out;
}

} // namespace htcraig

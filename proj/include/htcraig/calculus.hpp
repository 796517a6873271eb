// Split sequents, the interpolating rule set, and backward proof search.
//
// A split sequent labels every formula occurrence with the side (L or R) of
// the interpolation problem it descends from. Proof search is deterministic
// and never backtracks: every retained rule is invertible, so the first
// irreducible non-axiom leaf refutes the root.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "htcraig/formula.hpp"
#include "htcraig/semantics.hpp"

namespace htcraig {

struct LabeledFormula {
  Formula formula;
  Provenance prov;

  friend bool operator==(const LabeledFormula&, const LabeledFormula&) = default;
  friend std::strong_ordering operator<=>(const LabeledFormula& a, const LabeledFormula& b) {
    if (auto c = a.formula <=> b.formula; c != 0) return c;
    return a.prov <=> b.prov;
  }
};

inline LabeledFormula L(Formula f) { return {std::move(f), Provenance::L}; }
inline LabeledFormula R(Formula f) { return {std::move(f), Provenance::R}; }

enum class Side : std::uint8_t { Antecedent, Succedent };

struct Position {
  Side side;
  std::size_t index;
  friend bool operator==(const Position&, const Position&) = default;
};

/// Antecedent and succedent are kept sorted and duplicate-free.
class SplitSequent {
public:
  SplitSequent() = default;
  SplitSequent(std::vector<LabeledFormula> antecedent, std::vector<LabeledFormula> succedent);

  const std::vector<LabeledFormula>& antecedent() const noexcept { return ant_; }
  const std::vector<LabeledFormula>& succedent() const noexcept { return suc_; }
  const std::vector<LabeledFormula>& side(Side s) const noexcept {
    return s == Side::Antecedent ? ant_ : suc_;
  }
  const LabeledFormula& at(Position p) const { return side(p.side).at(p.index); }

  bool contains(Side s, const Formula& f, Provenance prov) const;
  /// Sum of member weights.
  std::uint64_t weight() const noexcept;
  std::set<std::string> vocabulary() const;

  /// Copy with the principal occurrence removed and the given occurrences added.
  SplitSequent replace(Position principal, std::initializer_list<LabeledFormula> add_antecedent,
                       std::initializer_list<LabeledFormula> add_succedent) const;

  friend bool operator==(const SplitSequent&, const SplitSequent&) = default;

private:
  std::vector<LabeledFormula> ant_;
  std::vector<LabeledFormula> suc_;
};

/// "p^L, (~q)^R => r^R"
std::string format_sequent(const SplitSequent& s);

enum class RuleId : std::uint8_t {
  // axioms
  Ax1LL,
  Ax1LR,
  Ax1RL,
  Ax1RR,
  Ax2LL,
  Ax2LR,
  Ax2LRPrime,
  AxNh1LR,
  AxNh1RR,
  AxNh2LR,
  AxNh2RR,
  AxFalseL,
  AxFalseR,
  AxTrueL,
  AxTrueR,
  // truth constants
  TrueLeft,
  FalseRight,
  // conjunction and disjunction
  AndLeft,
  AndRightL,
  AndRightR,
  OrLeftL,
  OrLeftR,
  OrRight,
  // double negation
  NotNotLeft,
  NotNotRight,
  // negation inward
  NotAndLeft,
  NotAndRight,
  NotOrLeft,
  NotOrRight,
  NotImpLeft,
  NotImpRight,
  NotTrueLeft,
  NotTrueRight,
  NotFalseLeft,
  NotFalseRight,
  // nh inward
  NhNot,
  NhAnd,
  NhOr,
  NhTrue,
  NhFalse,
  // implication
  ImpLeftL,
  ImpRightL,
  ImpStarRightR,
};

std::string_view to_string(RuleId r);
bool is_axiom(RuleId r);

/// How the premise interpolants combine into the conclusion interpolant.
enum class Combiner : std::uint8_t { PassThrough, Disjunction, Conjunction };

Formula combine(Combiner c, std::span<const Formula> premise_interpolants);

struct Expansion {
  RuleId rule;
  std::vector<SplitSequent> premises;
  Combiner combiner;
};

struct AxiomMatch {
  RuleId rule;
  Formula interpolant;
};

/// Which interpolant the axiom A^L, (~A)^R => uses: A, or ~~A.
enum class Ax2Variant : std::uint8_t { Atom, DoubleNegation };

/// First matching axiom in fixed priority order.
std::optional<AxiomMatch> axiom_match(const SplitSequent& s, Ax2Variant variant = Ax2Variant::Atom);

bool is_reducible(const SplitSequent& s, Position p);

/// Applies the rule for the principal occurrence at `p`. Throws
/// std::invalid_argument for an irreducible occurrence and std::logic_error
/// for occurrences that cannot arise in a search from a valid root (an
/// R-labeled implication in the antecedent, nh in the antecedent, L-labeled nh,
/// negated nh).
Expansion expand(const SplitSequent& s, Position p);

struct ProofNode {
  SplitSequent conclusion;
  RuleId rule;
  std::optional<Position> principal;
  std::vector<ProofNode> premises;
  /// Relative interpolant of the conclusion.
  Formula interpolant;

  std::size_t size() const;
  std::size_t depth() const;
};

struct SearchFailure {
  SplitSequent leaf;
  Assignment countermodel;
};

class SearchOutcome {
public:
  explicit SearchOutcome(ProofNode proof) : value_(std::move(proof)) {}
  explicit SearchOutcome(SearchFailure failure) : value_(std::move(failure)) {}

  bool proved() const noexcept { return value_.index() == 0; }
  const ProofNode& proof() const { return std::get<ProofNode>(value_); }
  const SearchFailure& failure() const { return std::get<SearchFailure>(value_); }

private:
  std::variant<ProofNode, SearchFailure> value_;
};

/// Structural properties every sequent of a search from a valid root has.
enum class Invariant : std::uint8_t {
  InterpolantIsNhNnf,       // relative interpolants are nh-NNF
  NhHasProvenanceR,         // nh occurs only in R-labeled members
  NhOnlyInSuccedent,        // no antecedent member contains nh
  NhArgumentPlain,          // nh arguments contain neither -> nor nh
  RightAntecedentNegated,   // R-labeled antecedent atoms sit under a negation
  WeightDecreases,          // each premise weighs less than its conclusion
};
inline constexpr std::size_t kInvariantCount = 6;

std::string_view to_string(Invariant i);

struct InvariantReport {
  std::array<std::size_t, kInvariantCount> violations{};
  std::size_t sequents_checked = 0;
  std::size_t expansions_checked = 0;
  /// Description of the first violation seen, if any.
  std::string first_violation;

  bool clean() const noexcept;
  std::size_t total_violations() const noexcept;
  void merge(const InvariantReport& other);
};

#ifdef NDEBUG
inline constexpr bool kCheckInvariantsByDefault = false;
#else
inline constexpr bool kCheckInvariantsByDefault = true;
#endif

struct ProverConfig {
  Ax2Variant ax2 = Ax2Variant::Atom;
  bool check_invariants = kCheckInvariantsByDefault;
};

class Prover {
public:
  explicit Prover(ProverConfig config = {}) : config_(config) {}

  /// Throws std::invalid_argument when the root has nh in the antecedent, an
  /// L-labeled nh, or an R-labeled antecedent member with an unnegated atom.
  SearchOutcome prove(const SplitSequent& root);

  const InvariantReport& report() const noexcept { return report_; }

private:
  std::optional<ProofNode> search(const SplitSequent& s);
  void check_sequent(const SplitSequent& s);
  void record(Invariant i, const std::string& detail);

  ProverConfig config_;
  InvariantReport report_;
  std::set<std::string> universe_;
  std::optional<SearchFailure> failure_;
};

SearchOutcome prove(const SplitSequent& root, const ProverConfig& config = {});

/// Countermodel for an irreducible sequent: an atom is T if it is an
/// antecedent member or occurs as nh(A) in the succedent, NF if ~A is in the
/// succedent, F otherwise. Throws std::invalid_argument on reducible input.
Assignment leaf_countermodel(const SplitSequent& s);
/// Same case analysis over a larger universe of atoms.
Assignment leaf_countermodel(const SplitSequent& s, const std::set<std::string>& universe);

/// Oracle check of the relative-interpolant conditions for `h` at `s`:
///   i1: /\Gamma^L |= h \/ \/Delta^L
///   i2: /\Gamma^R /\ h |= \/Delta^R
///   i3: voc(h) within the shared vocabulary of the two sides.
struct RelativeInterpolantCheck {
  bool i1 = false;
  bool i2 = false;
  bool i3 = false;
  bool all() const noexcept { return i1 && i2 && i3; }
};
RelativeInterpolantCheck check_relative_interpolant(const SplitSequent& s, const Formula& h);

} // namespace htcraig

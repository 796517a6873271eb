// End-to-end Craig interpolation: an nh-NNF interpolant read off a
// split-sequent proof, then strengthened into an HT interpolant.

#pragma once

#include <optional>

#include "htcraig/calculus.hpp"
#include "htcraig/formula.hpp"
#include "htcraig/semantics.hpp"

namespace htcraig {

struct VerificationReport {
  bool a_entails_c = false;
  bool c_entails_b = false;
  /// Vacuously true when no stage-1 interpolant was supplied.
  bool c_entails_cprime = false;
  bool voc_ok = false;
  /// First failing assignment among the entailment checks, if any.
  std::optional<Assignment> countermodel;

  bool all() const noexcept { return a_entails_c && c_entails_b && c_entails_cprime && voc_ok; }
};

enum class InterpolationStatus : std::uint8_t { Entails, NotEntails };

std::string_view to_string(InterpolationStatus s);

struct InterpolationResult {
  InterpolationStatus status = InterpolationStatus::NotEntails;
  /// C': nh-NNF interpolant of a and the normalized b.
  std::optional<Formula> stage1;
  /// C: the HT interpolant.
  std::optional<Formula> final;
  /// b after body-normalization; the right-hand side actually proved.
  Formula normalized_b = Formula::verum();
  std::optional<ProofNode> proof;
  std::optional<Assignment> countermodel;
  VerificationReport report;
  InvariantReport invariants;
};

struct InterpolationOptions {
  ProverConfig prover;
};

struct Stage1Result {
  /// Present on success.
  std::optional<Formula> interpolant;
  Formula normalized_b = Formula::verum();
  std::optional<ProofNode> proof;
  /// Present on failure.
  std::optional<Assignment> countermodel;
  InvariantReport invariants;
};

/// Proves a^L => body_normalize(b)^R. On success the root interpolant is
/// returned with constants absorbed, in nh-NNF, tidied. Throws
/// std::invalid_argument when a or b is not an HT formula.
Stage1Result stage1(const Formula& a, const Formula& b, const InterpolationOptions& opts = {});

/// Turns an nh-NNF formula x into an HT formula C with C |= x: every clause
/// nh(E1) | ... | nh(Em) | F of the clause form of x becomes E1 & ... & Em -> F.
Formula strengthen(const Formula& cprime);

/// Flattens &/| chains, drops repeated members, absorbs constants.
Formula tidy(const Formula& f);

/// Throws std::invalid_argument on non-HT input and std::logic_error if the
/// prover and the oracle ever disagree on entailment.
InterpolationResult craig_interpolant(const Formula& a, const Formula& b,
                                      const InterpolationOptions& opts = {});

VerificationReport verify_interpolant(const Formula& a, const Formula& c, const Formula& b,
                                      const std::optional<Formula>& cprime = std::nullopt);

} // namespace htcraig

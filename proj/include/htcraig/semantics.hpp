// Three-valued (Goedel G3 / here-and-there) semantics and the exhaustive
// entailment oracle.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "htcraig/formula.hpp"

namespace htcraig {

/// Ordered F < NF < T. Conjunction is min, disjunction is max.
enum class TruthValue : std::uint8_t { F = 0, NF = 1, T = 2 };

inline constexpr TruthValue kTruthValues[] = {TruthValue::F, TruthValue::NF, TruthValue::T};

std::string_view to_string(TruthValue v);
/// Accepts "F", "NF", "T".
std::optional<TruthValue> parse_truth_value(std::string_view s);

TruthValue tv_not(TruthValue a);
TruthValue tv_nh(TruthValue a);
TruthValue tv_and(TruthValue a, TruthValue b);
TruthValue tv_or(TruthValue a, TruthValue b);
TruthValue tv_imp(TruthValue a, TruthValue b);

class UndeclaredAtom : public std::out_of_range {
public:
  explicit UndeclaredAtom(const std::string& atom)
      : std::out_of_range("atom '" + atom + "' is not assigned"), atom_(atom) {}
  const std::string& atom() const noexcept { return atom_; }

private:
  std::string atom_;
};

/// Map from atom names to truth values over a declared universe.
class Assignment {
public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const std::string, TruthValue>> init)
      : values_(init) {}

  void set(const std::string& atom, TruthValue v) { values_[atom] = v; }
  /// Throws UndeclaredAtom when `atom` is outside the universe.
  TruthValue at(const std::string& atom) const;
  bool declares(const std::string& atom) const { return values_.count(atom) != 0; }
  std::size_t size() const noexcept { return values_.size(); }
  const std::map<std::string, TruthValue>& values() const noexcept { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

private:
  std::map<std::string, TruthValue> values_;
};

/// "p=T,q=NF"; throws std::invalid_argument on malformed text.
Assignment parse_assignment(std::string_view text);
std::string format_assignment(const Assignment& v);

struct EntailmentVerdict {
  bool holds = false;
  /// Present iff `holds` is false.
  std::optional<Assignment> countermodel;
};

TruthValue eval(const Formula& f, const Assignment& v);

/// Decides entailment by enumerating every assignment over voc(a) | voc(b).
///
/// Assignments are visited in lexicographic order: atoms sorted by name, the
/// first atom most significant, values in the order F, NF, T. The reported
/// countermodel is the first failing assignment in that order.
EntailmentVerdict entails(const Formula& a, const Formula& b);
EntailmentVerdict equivalent(const Formula& a, const Formula& b);
bool valid(const Formula& f);

struct TruthTableRow {
  Assignment assignment;
  TruthValue value;
};

inline constexpr std::size_t kDefaultAtomCap = 12;

/// Rows in the enumeration order documented on entails(). Throws
/// std::length_error when voc(f) exceeds `max_atoms`.
std::vector<TruthTableRow> truth_table(const Formula& f, std::size_t max_atoms = kDefaultAtomCap);

/// Plain-text rendering: a header of the sorted atoms followed by the formula,
/// then one row per assignment.
std::string format_truth_table(const Formula& f, const std::vector<TruthTableRow>& rows);

} // namespace htcraig

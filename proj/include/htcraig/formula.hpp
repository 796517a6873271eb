// Formulas of here-and-there logic extended with the "not here" operator nh.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace htcraig {

enum class Connective : std::uint8_t { Atom, Falsum, Verum, Not, Nh, Or, And, Imp };

/// Immutable, value-semantic formula tree. Copies share structure.
class Formula {
public:
  static Formula atom(std::string name);
  static Formula falsum();
  static Formula verum();
  static Formula negation(Formula operand);
  static Formula nh(Formula operand);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula conjunction(Formula lhs, Formula rhs);
  static Formula implication(Formula lhs, Formula rhs);

  Connective kind() const noexcept;
  bool is(Connective c) const noexcept { return kind() == c; }
  bool is_constant() const noexcept {
    return is(Connective::Falsum) || is(Connective::Verum);
  }
  bool is_binary() const noexcept {
    return is(Connective::Or) || is(Connective::And) || is(Connective::Imp);
  }
  /// Atom, or negation of an atom.
  bool is_literal() const noexcept;

  /// Name of an atom; throws std::logic_error on other nodes.
  const std::string& name() const;
  /// Operand of Not/Nh.
  const Formula& operand() const;
  const Formula& left() const;
  const Formula& right() const;

  /// Number of nodes.
  std::size_t size() const noexcept;
  /// Termination measure used by proof search (saturating on overflow).
  std::uint64_t weight() const noexcept;
  std::size_t hash() const noexcept;

  bool contains(Connective c) const noexcept;

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept;

private:
  struct Node;
  static bool equal_nodes(const Node* a, const Node* b) noexcept;
  static std::strong_ordering compare_nodes(const Node* a, const Node* b) noexcept;

  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

Formula operator!(Formula f);
Formula operator&(Formula a, Formula b);
Formula operator|(Formula a, Formula b);

enum class FormulaClass : std::uint8_t { HT, NH, NH_NNF, HTNH };

enum class Provenance : std::uint8_t { L, R };

std::string_view to_string(FormulaClass c);
char to_char(Provenance p);

class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t position, const std::string& what);
  /// Zero-based character offset into the input.
  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// True for identifiers usable as atom names: [a-z][a-zA-Z0-9_]* and not a keyword.
bool is_atom_name(std::string_view s) noexcept;

Formula parse(std::string_view text);
std::string print(const Formula& f);

std::set<std::string> voc(const Formula& f);
std::set<FormulaClass> classify(const Formula& f);
bool in_class(const Formula& f, FormulaClass c);

std::uint64_t weight(const Formula& f);

} // namespace htcraig

template <>
struct std::hash<htcraig::Formula> {
  std::size_t operator()(const htcraig::Formula& f) const noexcept { return f.hash(); }
};

#include "htcraig/formula.hpp"

#include <cctype>
#include <functional>
#include <limits>
#include <utility>

namespace htcraig {

namespace {

constexpr std::uint64_t kWeightMax = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > kWeightMax - b ? kWeightMax : a + b;
}

std::uint64_t sat_mul3(std::uint64_t a) { return a > kWeightMax / 3 ? kWeightMax : 3 * a; }

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::uint8_t bit(Connective c) { return static_cast<std::uint8_t>(1u << static_cast<unsigned>(c)); }

} // namespace

struct Formula::Node {
  Connective kind;
  std::string name;
  Formula lhs;
  Formula rhs;
  std::size_t size = 1;
  std::uint64_t weight = 1;
  std::size_t hash = 0;
  std::uint8_t connectives = 0;
};

Formula Formula::atom(std::string name) {
  if (!is_atom_name(name)) {
    throw std::invalid_argument("invalid atom name '" + name + "'");
  }
  auto n = std::make_shared<Node>();
  n->kind = Connective::Atom;
  n->hash = mix(static_cast<std::size_t>(Connective::Atom), std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->connectives = bit(Connective::Atom);
  return Formula(std::move(n));
}

Formula Formula::falsum() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::Falsum;
    n->hash = mix(0, static_cast<std::size_t>(Connective::Falsum));
    n->connectives = bit(Connective::Falsum);
    return Formula(std::move(n));
  }();
  return f;
}

Formula Formula::verum() {
  static const Formula f = [] {
    auto n = std::make_shared<Node>();
    n->kind = Connective::Verum;
    n->hash = mix(0, static_cast<std::size_t>(Connective::Verum));
    n->connectives = bit(Connective::Verum);
    return Formula(std::move(n));
  }();
  return f;
}

namespace {

template <class Node, class F>
std::shared_ptr<Node> make_unary(Connective kind, const Node& operand, F&& child) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = operand.size + 1;
  n->weight = sat_mul3(operand.weight);
  if (kind == Connective::Nh) {
    n->weight = sat_add(n->weight, 1);
  }
  n->hash = mix(mix(static_cast<std::size_t>(kind), operand.hash), 0x51);
  n->connectives = static_cast<std::uint8_t>(operand.connectives | bit(kind));
  n->lhs = std::forward<F>(child);
  return n;
}

template <class Node, class F>
std::shared_ptr<Node> make_binary(Connective kind, const Node& lhs, const Node& rhs, F&& lf,
                                  F&& rf) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->size = lhs.size + rhs.size + 1;
  if (kind == Connective::Imp) {
    n->weight = sat_add(sat_add(sat_mul3(lhs.weight), sat_mul3(rhs.weight)), 2);
  } else {
    n->weight = sat_add(sat_add(lhs.weight, rhs.weight), 1);
  }
  n->hash = mix(mix(static_cast<std::size_t>(kind), lhs.hash), rhs.hash);
  n->connectives = static_cast<std::uint8_t>(lhs.connectives | rhs.connectives | bit(kind));
  n->lhs = std::forward<F>(lf);
  n->rhs = std::forward<F>(rf);
  return n;
}

} // namespace

Formula Formula::negation(Formula operand) {
  const Node& o = *operand.node_;
  return Formula(make_unary<Node>(Connective::Not, o, std::move(operand)));
}

Formula Formula::nh(Formula operand) {
  const Node& o = *operand.node_;
  return Formula(make_unary<Node>(Connective::Nh, o, std::move(operand)));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  const Node& l = *lhs.node_;
  const Node& r = *rhs.node_;
  return Formula(make_binary<Node>(Connective::Or, l, r, std::move(lhs), std::move(rhs)));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  const Node& l = *lhs.node_;
  const Node& r = *rhs.node_;
  return Formula(make_binary<Node>(Connective::And, l, r, std::move(lhs), std::move(rhs)));
}

Formula Formula::implication(Formula lhs, Formula rhs) {
  const Node& l = *lhs.node_;
  const Node& r = *rhs.node_;
  return Formula(make_binary<Node>(Connective::Imp, l, r, std::move(lhs), std::move(rhs)));
}

Connective Formula::kind() const noexcept { return node_->kind; }

bool Formula::is_literal() const noexcept {
  return is(Connective::Atom) || (is(Connective::Not) && node_->lhs.kind() == Connective::Atom);
}

const std::string& Formula::name() const {
  if (node_->kind != Connective::Atom) {
    throw std::logic_error("name() on a non-atom formula");
  }
  return node_->name;
}

const Formula& Formula::operand() const {
  if (node_->kind != Connective::Not && node_->kind != Connective::Nh) {
    throw std::logic_error("operand() on a non-unary formula");
  }
  return node_->lhs;
}

const Formula& Formula::left() const {
  if (!is_binary()) {
    throw std::logic_error("left() on a non-binary formula");
  }
  return node_->lhs;
}

const Formula& Formula::right() const {
  if (!is_binary()) {
    throw std::logic_error("right() on a non-binary formula");
  }
  return node_->rhs;
}

std::size_t Formula::size() const noexcept { return node_->size; }
std::uint64_t Formula::weight() const noexcept { return node_->weight; }
std::size_t Formula::hash() const noexcept { return node_->hash; }

bool Formula::contains(Connective c) const noexcept { return (node_->connectives & bit(c)) != 0; }

bool Formula::equal_nodes(const Node* a, const Node* b) noexcept {
  while (true) {
    if (a == b) return true;
    if (a->hash != b->hash || a->kind != b->kind || a->size != b->size) return false;
    switch (a->kind) {
    case Connective::Atom:
      return a->name == b->name;
    case Connective::Falsum:
    case Connective::Verum:
      return true;
    case Connective::Not:
    case Connective::Nh:
      a = a->lhs.node_.get();
      b = b->lhs.node_.get();
      continue;
    default:
      if (!equal_nodes(a->lhs.node_.get(), b->lhs.node_.get())) return false;
      a = a->rhs.node_.get();
      b = b->rhs.node_.get();
      continue;
    }
  }
}

std::strong_ordering Formula::compare_nodes(const Node* a, const Node* b) noexcept {
  while (true) {
    if (a == b) return std::strong_ordering::equal;
    if (a->kind != b->kind) return a->kind <=> b->kind;
    switch (a->kind) {
    case Connective::Atom: {
      int c = a->name.compare(b->name);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    case Connective::Falsum:
    case Connective::Verum:
      return std::strong_ordering::equal;
    case Connective::Not:
    case Connective::Nh:
      a = a->lhs.node_.get();
      b = b->lhs.node_.get();
      continue;
    default:
      if (auto c = compare_nodes(a->lhs.node_.get(), b->lhs.node_.get()); c != 0) return c;
      a = a->rhs.node_.get();
      b = b->rhs.node_.get();
      continue;
    }
  }
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  return Formula::equal_nodes(a.node_.get(), b.node_.get());
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) noexcept {
  return Formula::compare_nodes(a.node_.get(), b.node_.get());
}

Formula operator!(Formula f) { return Formula::negation(std::move(f)); }
Formula operator&(Formula a, Formula b) { return Formula::conjunction(std::move(a), std::move(b)); }
Formula operator|(Formula a, Formula b) { return Formula::disjunction(std::move(a), std::move(b)); }

std::string_view to_string(FormulaClass c) {
  switch (c) {
  case FormulaClass::HT:
    return "HT";
  case FormulaClass::NH:
    return "NH";
  case FormulaClass::NH_NNF:
    return "NH_NNF";
  case FormulaClass::HTNH:
    return "HTNH";
  }
  return "?";
}

char to_char(Provenance p) { return p == Provenance::L ? 'L' : 'R'; }

ParseError::ParseError(std::size_t position, const std::string& what)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + what),
      position_(position) {}

bool is_atom_name(std::string_view s) noexcept {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return s != "true" && s != "false" && s != "nh";
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

namespace {

enum class Tok { End, Ident, Arrow, Bar, Amp, Tilde, LParen, RParen };

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

class Parser {
public:
  explicit Parser(std::string_view src) : src_(src) { advance(); }

  Formula parse_all() {
    if (cur_.kind == Tok::End) throw ParseError(cur_.pos, "empty input");
    Formula f = parse_imp();
    if (cur_.kind != Tok::End) {
      throw ParseError(cur_.pos, "unexpected '" + std::string(cur_.text) + "'");
    }
    return f;
  }

private:
  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= src_.size()) {
      cur_ = {Tok::End, start, {}};
      return;
    }
    char c = src_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      cur_ = {k, start, src_.substr(start, 1)};
    };
    switch (c) {
    case '|':
      return single(Tok::Bar);
    case '&':
      return single(Tok::Amp);
    case '~':
      return single(Tok::Tilde);
    case '(':
      return single(Tok::LParen);
    case ')':
      return single(Tok::RParen);
    case '-':
      if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
        pos_ += 2;
        cur_ = {Tok::Arrow, start, src_.substr(start, 2)};
        return;
      }
      throw ParseError(start, "expected '->'");
    default:
      break;
    }
    if (c >= 'a' && c <= 'z') {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      cur_ = {Tok::Ident, start, src_.substr(start, pos_ - start)};
      return;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  void expect(Tok k, const char* what) {
    if (cur_.kind != k) throw ParseError(cur_.pos, std::string("expected ") + what);
    advance();
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (cur_.kind == Tok::Arrow) {
      advance();
      return Formula::implication(std::move(lhs), parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (cur_.kind == Tok::Bar) {
      advance();
      f = Formula::disjunction(std::move(f), parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (cur_.kind == Tok::Amp) {
      advance();
      f = Formula::conjunction(std::move(f), parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (cur_.kind) {
    case Tok::Tilde:
      advance();
      return Formula::negation(parse_unary());
    case Tok::LParen: {
      advance();
      Formula f = parse_imp();
      expect(Tok::RParen, "')'");
      return f;
    }
    case Tok::Ident: {
      Token t = cur_;
      advance();
      if (t.text == "true") return Formula::verum();
      if (t.text == "false") return Formula::falsum();
      if (t.text == "nh") {
        expect(Tok::LParen, "'(' after nh");
        Formula f = parse_imp();
        expect(Tok::RParen, "')'");
        return Formula::nh(std::move(f));
      }
      return Formula::atom(std::string(t.text));
    }
    case Tok::End:
      throw ParseError(cur_.pos, "unexpected end of input");
    default:
      throw ParseError(cur_.pos, "unexpected '" + std::string(cur_.text) + "'");
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, 0, {}};
};

int precedence(const Formula& f) {
  switch (f.kind()) {
  case Connective::Imp:
    return 1;
  case Connective::Or:
    return 2;
  case Connective::And:
    return 3;
  default:
    return 4;
  }
}

void print_into(const Formula& f, int min_prec, std::string& out) {
  bool parens = precedence(f) < min_prec;
  if (parens) out += '(';
  switch (f.kind()) {
  case Connective::Atom:
    out += f.name();
    break;
  case Connective::Falsum:
    out += "false";
    break;
  case Connective::Verum:
    out += "true";
    break;
  case Connective::Not:
    out += '~';
    print_into(f.operand(), 4, out);
    break;
  case Connective::Nh:
    out += "nh(";
    print_into(f.operand(), 0, out);
    out += ')';
    break;
  case Connective::Imp:
    print_into(f.left(), 2, out);
    out += " -> ";
    print_into(f.right(), 1, out);
    break;
  case Connective::Or:
    print_into(f.left(), 2, out);
    out += " | ";
    print_into(f.right(), 3, out);
    break;
  case Connective::And:
    print_into(f.left(), 3, out);
    out += " & ";
    print_into(f.right(), 4, out);
    break;
  }
  if (parens) out += ')';
}

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
  case Connective::Atom:
    out.insert(f.name());
    return;
  case Connective::Falsum:
  case Connective::Verum:
    return;
  case Connective::Not:
  case Connective::Nh:
    collect_atoms(f.operand(), out);
    return;
  default:
    collect_atoms(f.left(), out);
    collect_atoms(f.right(), out);
  }
}

// Polarity counts enclosing negations; with `imp_flips` the antecedent of an
// implication counts as a negative position as well.
bool nh_positive(const Formula& f, bool positive, bool imp_flips) {
  if (!f.contains(Connective::Nh)) return true;
  switch (f.kind()) {
  case Connective::Not:
    return nh_positive(f.operand(), !positive, imp_flips);
  case Connective::Nh:
    return positive && nh_positive(f.operand(), positive, imp_flips);
  case Connective::Imp:
    return nh_positive(f.left(), imp_flips ? !positive : positive, imp_flips) &&
           nh_positive(f.right(), positive, imp_flips);
  case Connective::Or:
  case Connective::And:
    return nh_positive(f.left(), positive, imp_flips) &&
           nh_positive(f.right(), positive, imp_flips);
  default:
    return true;
  }
}

bool is_nh_nnf(const Formula& f) {
  switch (f.kind()) {
  case Connective::Atom:
  case Connective::Falsum:
  case Connective::Verum:
    return true;
  case Connective::Not: {
    const Formula& g = f.operand();
    return g.is(Connective::Atom) || (g.is(Connective::Not) && g.operand().is(Connective::Atom));
  }
  case Connective::Nh:
    return f.operand().is(Connective::Atom);
  case Connective::Or:
  case Connective::And:
    return is_nh_nnf(f.left()) && is_nh_nnf(f.right());
  case Connective::Imp:
    return false;
  }
  return false;
}

} // namespace

Formula parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Formula& f) {
  std::string out;
  print_into(f, 0, out);
  return out;
}

std::set<std::string> voc(const Formula& f) {
  std::set<std::string> out;
  collect_atoms(f, out);
  return out;
}

bool in_class(const Formula& f, FormulaClass c) {
  switch (c) {
  case FormulaClass::HT:
    return !f.contains(Connective::Nh);
  case FormulaClass::NH:
    return !f.contains(Connective::Imp) && nh_positive(f, true, false);
  case FormulaClass::NH_NNF:
    return is_nh_nnf(f);
  case FormulaClass::HTNH:
    return nh_positive(f, true, true);
  }
  return false;
}

std::set<FormulaClass> classify(const Formula& f) {
  std::set<FormulaClass> out;
  for (auto c : {FormulaClass::HT, FormulaClass::NH, FormulaClass::NH_NNF, FormulaClass::HTNH}) {
    if (in_class(f, c)) out.insert(c);
  }
  return out;
}

std::uint64_t weight(const Formula& f) { return f.weight(); }

} // namespace htcraig

#include "htcraig/semantics.hpp"

#include <algorithm>
#include <sstream>

namespace htcraig {

std::string_view to_string(TruthValue v) {
  switch (v) {
  case TruthValue::F:
    return "F";
  case TruthValue::NF:
    return "NF";
  case TruthValue::T:
    return "T";
  }
  return "?";
}

std::optional<TruthValue> parse_truth_value(std::string_view s) {
  if (s == "F") return TruthValue::F;
  if (s == "NF") return TruthValue::NF;
  if (s == "T") return TruthValue::T;
  return std::nullopt;
}

TruthValue tv_not(TruthValue a) { return a == TruthValue::F ? TruthValue::T : TruthValue::F; }
TruthValue tv_nh(TruthValue a) { return a == TruthValue::T ? TruthValue::F : TruthValue::T; }
TruthValue tv_and(TruthValue a, TruthValue b) { return std::min(a, b); }
TruthValue tv_or(TruthValue a, TruthValue b) { return std::max(a, b); }
TruthValue tv_imp(TruthValue a, TruthValue b) { return a <= b ? TruthValue::T : b; }

TruthValue Assignment::at(const std::string& atom) const {
  auto it = values_.find(atom);
  if (it == values_.end()) throw UndeclaredAtom(atom);
  return it->second;
}

Assignment parse_assignment(std::string_view text) {
  Assignment v;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  while (!trim(text).empty()) {
    auto comma = text.find(',');
    std::string_view item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw std::invalid_argument("expected atom=VALUE, got '" + std::string(item) + "'");
    }
    std::string atom(trim(item.substr(0, eq)));
    auto value = parse_truth_value(trim(item.substr(eq + 1)));
    if (!is_atom_name(atom)) throw std::invalid_argument("invalid atom name '" + atom + "'");
    if (!value) {
      throw std::invalid_argument("invalid truth value in '" + std::string(item) + "'");
    }
    v.set(atom, *value);
  }
  return v;
}

std::string format_assignment(const Assignment& v) {
  std::string out;
  for (const auto& [atom, value] : v.values()) {
    if (!out.empty()) out += ',';
    out += atom;
    out += '=';
    out += to_string(value);
  }
  return out;
}

TruthValue eval(const Formula& f, const Assignment& v) {
  switch (f.kind()) {
  case Connective::Atom:
    return v.at(f.name());
  case Connective::Falsum:
    return TruthValue::F;
  case Connective::Verum:
    return TruthValue::T;
  case Connective::Not:
    return tv_not(eval(f.operand(), v));
  case Connective::Nh:
    return tv_nh(eval(f.operand(), v));
  case Connective::Or:
    return tv_or(eval(f.left(), v), eval(f.right(), v));
  case Connective::And:
    return tv_and(eval(f.left(), v), eval(f.right(), v));
  case Connective::Imp:
    return tv_imp(eval(f.left(), v), eval(f.right(), v));
  }
  return TruthValue::F;
}

namespace {

// Postfix program over atom indices; evaluating it is the same bottom-up
// computation as eval() without name lookups.
class Program {
public:
  Program(const Formula& f, const std::vector<std::string>& atoms) { compile(f, atoms); }

  TruthValue run(const std::vector<TruthValue>& values, std::vector<TruthValue>& stack) const {
    stack.clear();
    for (const auto& op : code_) {
      switch (op.kind) {
      case Connective::Atom:
        stack.push_back(values[op.atom]);
        break;
      case Connective::Falsum:
        stack.push_back(TruthValue::F);
        break;
      case Connective::Verum:
        stack.push_back(TruthValue::T);
        break;
      case Connective::Not:
        stack.back() = tv_not(stack.back());
        break;
      case Connective::Nh:
        stack.back() = tv_nh(stack.back());
        break;
      default: {
        TruthValue r = stack.back();
        stack.pop_back();
        TruthValue l = stack.back();
        stack.back() = op.kind == Connective::Or    ? tv_or(l, r)
                       : op.kind == Connective::And ? tv_and(l, r)
                                                    : tv_imp(l, r);
      }
      }
    }
    return stack.back();
  }

private:
  struct Op {
    Connective kind;
    std::uint32_t atom;
  };

  void compile(const Formula& f, const std::vector<std::string>& atoms) {
    switch (f.kind()) {
    case Connective::Atom: {
      auto it = std::lower_bound(atoms.begin(), atoms.end(), f.name());
      code_.push_back({Connective::Atom, static_cast<std::uint32_t>(it - atoms.begin())});
      return;
    }
    case Connective::Falsum:
    case Connective::Verum:
      code_.push_back({f.kind(), 0});
      return;
    case Connective::Not:
    case Connective::Nh:
      compile(f.operand(), atoms);
      code_.push_back({f.kind(), 0});
      return;
    default:
      compile(f.left(), atoms);
      compile(f.right(), atoms);
      code_.push_back({f.kind(), 0});
    }
  }

  std::vector<Op> code_;
};

std::vector<std::string> joint_atoms(const Formula& a, const Formula& b) {
  auto s = voc(a);
  auto t = voc(b);
  s.insert(t.begin(), t.end());
  return {s.begin(), s.end()};
}

// Advances `values` to the next assignment in lexicographic order; false once
// every assignment has been visited.
bool next_assignment(std::vector<TruthValue>& values) {
  for (std::size_t i = values.size(); i-- > 0;) {
    if (values[i] != TruthValue::T) {
      values[i] = static_cast<TruthValue>(static_cast<int>(values[i]) + 1);
      return true;
    }
    values[i] = TruthValue::F;
  }
  return false;
}

Assignment make_assignment(const std::vector<std::string>& atoms,
                           const std::vector<TruthValue>& values) {
  Assignment v;
  for (std::size_t i = 0; i < atoms.size(); ++i) v.set(atoms[i], values[i]);
  return v;
}

template <class Fail>
EntailmentVerdict search(const Formula& a, const Formula& b, Fail fails) {
  auto atoms = joint_atoms(a, b);
  Program pa(a, atoms), pb(b, atoms);
  std::vector<TruthValue> values(atoms.size(), TruthValue::F);
  std::vector<TruthValue> stack;
  stack.reserve(std::max(a.size(), b.size()));
  do {
    if (fails(pa.run(values, stack), pb.run(values, stack))) {
      return {false, make_assignment(atoms, values)};
    }
  } while (next_assignment(values));
  return {true, std::nullopt};
}

} // namespace

EntailmentVerdict entails(const Formula& a, const Formula& b) {
  return search(a, b, [](TruthValue x, TruthValue y) { return x > y; });
}

EntailmentVerdict equivalent(const Formula& a, const Formula& b) {
  return search(a, b, [](TruthValue x, TruthValue y) { return x != y; });
}

bool valid(const Formula& f) { return entails(Formula::verum(), f).holds; }

std::vector<TruthTableRow> truth_table(const Formula& f, std::size_t max_atoms) {
  auto atom_set = voc(f);
  if (atom_set.size() > max_atoms) {
    throw std::length_error("formula has " + std::to_string(atom_set.size()) +
                            " atoms, truth table cap is " + std::to_string(max_atoms));
  }
  std::vector<std::string> atoms(atom_set.begin(), atom_set.end());
  Program p(f, atoms);
  std::vector<TruthValue> values(atoms.size(), TruthValue::F);
  std::vector<TruthValue> stack;
  std::vector<TruthTableRow> rows;
  do {
    rows.push_back({make_assignment(atoms, values), p.run(values, stack)});
  } while (next_assignment(values));
  return rows;
}

std::string format_truth_table(const Formula& f, const std::vector<TruthTableRow>& rows) {
  auto atoms = voc(f);
  std::vector<std::string> header(atoms.begin(), atoms.end());
  header.push_back(print(f));
  std::vector<std::size_t> width;
  for (const auto& h : header) width.push_back(std::max<std::size_t>(h.size(), 2));

  std::ostringstream out;
  auto cell = [&](std::size_t col, std::string_view text) {
    out << text;
    if (col + 1 < width.size()) out << std::string(width[col] - text.size() + 1, ' ');
  };
  for (std::size_t i = 0; i < header.size(); ++i) cell(i, header[i]);
  out << '\n';
  for (const auto& row : rows) {
    std::size_t i = 0;
    for (const auto& [atom, value] : row.assignment.values()) cell(i++, to_string(value));
    cell(i, to_string(row.value));
    out << '\n';
  }
  return out.str();
}

} // namespace htcraig

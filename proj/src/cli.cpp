#include "htcraig/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "htcraig/interpolation.hpp"
#include "htcraig/json_io.hpp"
#include "htcraig/normalize.hpp"

namespace htcraig::cli {

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string first;
  std::string second;
  std::string assign;
  std::string proof_out;
  std::string ax2 = "atom";
  bool stage1 = false;
  bool verify = false;
  bool nnf = false;
  bool body = false;
  bool cnf = false;
};

void format_proof_rec(const ProofNode& node, std::size_t depth, std::ostringstream& out) {
  out << std::string(2 * depth, ' ') << to_string(node.rule) << "  " << format_sequent(node.conclusion)
      << "  [" << print(node.interpolant) << "]\n";
  for (const auto& p : node.premises) format_proof_rec(p, depth + 1, out);
}

void write_proof_file(const std::string& path, const json& proof) {
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write proof to '" + path + "'");
  file << proof.dump(2) << '\n';
}

Ax2Variant parse_ax2(const std::string& s) {
  return s == "negneg" ? Ax2Variant::DoubleNegation : Ax2Variant::Atom;
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

int cmd_eval(const Options& o, std::ostream& out) {
  Formula f = parse(o.first);
  Assignment v = parse_assignment(o.assign);
  TruthValue value = eval(f, v);
  if (o.format == "json") {
    emit(out, {{"formula", print(f)}, {"assignment", to_json(v)},
               {"value", std::string(to_string(value))}});
  } else {
    out << to_string(value) << '\n';
  }
  return kOk;
}

int cmd_entails(const Options& o, std::ostream& out) {
  Formula a = parse(o.first);
  Formula b = parse(o.second);
  auto verdict = entails(a, b);
  if (o.format == "json") {
    emit(out, {{"holds", verdict.holds},
               {"countermodel", verdict.countermodel ? to_json(*verdict.countermodel)
                                                     : json(nullptr)}});
  } else if (verdict.holds) {
    out << "entails\n";
  } else {
    out << "does not entail\ncountermodel: " << format_assignment(*verdict.countermodel)
        << '\n';
  }
  return verdict.holds ? kOk : kNegative;
}

int cmd_prove(const Options& o, std::ostream& out) {
  Formula a = parse(o.first);
  Formula b = parse(o.second);
  if (!in_class(a, FormulaClass::HT) || !in_class(b, FormulaClass::HT)) {
    throw UsageError("prove takes HT formulas");
  }
  Formula nb = body_normalize(b);
  ProverConfig config;
  config.ax2 = parse_ax2(o.ax2);
  auto outcome = prove(SplitSequent({L(a)}, {R(nb)}), config);

  if (outcome.proved()) {
    json proof = to_json(outcome.proof());
    if (!o.proof_out.empty()) write_proof_file(o.proof_out, proof);
    if (o.format == "json") {
      emit(out, {{"proved", true}, {"proof", proof}});
    } else {
      out << format_proof(outcome.proof());
    }
    return kOk;
  }
  const auto& failure = outcome.failure();
  if (o.format == "json") {
    emit(out, {{"proved", false},
               {"leaf", to_json(failure.leaf)},
               {"countermodel", to_json(failure.countermodel)}});
  } else {
    out << "not provable\nfailed leaf: " << format_sequent(failure.leaf)
        << "\ncountermodel: " << format_assignment(failure.countermodel) << '\n';
  }
  return kNegative;
}

int cmd_interpolate(const Options& o, std::ostream& out, std::ostream& err) {
  Formula a = parse(o.first);
  Formula b = parse(o.second);
  InterpolationOptions opts;
  opts.prover.ax2 = parse_ax2(o.ax2);
  auto result = craig_interpolant(a, b, opts);

  if (result.proof && !o.proof_out.empty()) write_proof_file(o.proof_out, to_json(*result.proof));

  if (o.format == "json") {
    json j = to_json(result);
    if (o.proof_out.empty()) j["proof"] = nullptr;
    emit(out, j);
  } else if (result.status == InterpolationStatus::Entails) {
    if (o.stage1) out << "stage1: " << print(*result.stage1) << '\n';
    out << print(*result.final) << '\n';
  } else {
    out << "does not entail\ncountermodel: " << format_assignment(*result.countermodel)
        << '\n';
  }
  if (result.status == InterpolationStatus::NotEntails) return kNegative;
  if (o.verify && !result.report.all()) {
    err << "verification failed for " << print(*result.final) << '\n';
    return kError;
  }
  return kOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  Formula f = parse(o.first);
  if (o.cnf) {
    auto clauses = to_cnf(to_nh_nnf(f));
    if (o.format == "json") {
      json arr = json::array();
      for (const auto& c : clauses) arr.push_back(print(c.to_formula()));
      emit(out, {{"clauses", arr}});
    } else {
      for (const auto& c : clauses) out << print(c.to_formula()) << '\n';
    }
    return kOk;
  }
  Formula g = o.body ? body_normalize(f) : to_nh_nnf(f);
  if (o.format == "json") {
    emit(out, {{"formula", print(g)}});
  } else {
    out << print(g) << '\n';
  }
  return kOk;
}

int cmd_truthtable(const Options& o, std::ostream& out) {
  Formula f = parse(o.first);
  auto rows = truth_table(f);
  if (o.format == "json") {
    emit(out, to_json(rows));
  } else {
    out << format_truth_table(f, rows);
  }
  return kOk;
}

} // namespace

std::string format_proof(const ProofNode& node) {
  std::ostringstream out;
  format_proof_rec(node, 0, out);
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Craig interpolation for here-and-there logic", "htcraig"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_ax2 = [&](CLI::App* sub) {
    sub->add_option("--ax2", o.ax2, "Interpolant of the mixed Ax-2 axiom: atom or negneg")
        ->check(CLI::IsMember({"atom", "negneg"}));
  };

  auto* ev = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  ev->add_option("formula", o.first)->required();
  ev->add_option("--assign", o.assign, "Assignment such as p=T,q=NF")->required();
  add_format(ev);

  auto* en = app.add_subcommand("entails", "Decide entailment by the truth-table oracle");
  en->add_option("a", o.first)->required();
  en->add_option("b", o.second)->required();
  add_format(en);

  auto* pr = app.add_subcommand("prove", "Search for a split-sequent proof of a => b");
  pr->add_option("a", o.first)->required();
  pr->add_option("b", o.second)->required();
  pr->add_option("--proof-out", o.proof_out, "Write the proof as JSON to this file");
  add_ax2(pr);
  add_format(pr);

  auto* ip = app.add_subcommand("interpolate", "Compute an HT Craig interpolant");
  ip->add_option("a", o.first)->required();
  ip->add_option("b", o.second)->required();
  ip->add_flag("--stage1", o.stage1, "Also print the nh-NNF interpolant");
  ip->add_option("--proof-out", o.proof_out, "Write the proof as JSON to this file");
  ip->add_flag("--verify", o.verify, "Exit 2 unless the oracle confirms the interpolant");
  add_ax2(ip);
  add_format(ip);

  auto* nm = app.add_subcommand("normalize", "Print a normal form");
  nm->add_option("formula", o.first)->required();
  auto* nnf = nm->add_flag("--nnf", o.nnf, "nh-NNF");
  auto* body = nm->add_flag("--body", o.body, "Body-normalized HT formula");
  auto* cnf = nm->add_flag("--cnf", o.cnf, "Clause form, one clause per line");
  nnf->excludes(body)->excludes(cnf);
  body->excludes(cnf);
  add_format(nm);

  auto* tt = app.add_subcommand("truthtable", "Print the truth table");
  tt->add_option("formula", o.first)->required();
  add_format(tt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (nm->parsed() && !o.nnf && !o.body && !o.cnf) {
      throw UsageError("normalize needs one of --nnf, --body, --cnf");
    }
    if (ev->parsed()) return cmd_eval(o, out);
    if (en->parsed()) return cmd_entails(o, out);
    if (pr->parsed()) return cmd_prove(o, out);
    if (ip->parsed()) return cmd_interpolate(o, out, err);
    if (nm->parsed()) return cmd_normalize(o, out);
    return cmd_truthtable(o, out);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const ParseError& e) {
    err << e.what() << '\n';
    return kError;
  } catch (const std::logic_error& e) {
    // invalid_argument, NormalFormError, out_of_range (undeclared atoms), length_error
    err << "error: " << e.what() << '\n';
    return kError;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
}

} // namespace htcraig::cli

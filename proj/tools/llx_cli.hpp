#pragma once

// The `llx` command line. `run()` takes its streams as arguments so tests can
// drive it in-process; tools/llx.cpp is the thin main().
//
// Exit codes: 0 proven / pass / agree, 1 refuted / violation / disagree,
// 2 usage, I/O, parse and limit errors.

#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "llx/llx.hpp"

namespace llx::cli {

struct Config {
  std::string input;
  SearchMode mode = SearchMode::all_paths;
  std::string style = "full";
  std::string format = "dot";
  std::optional<std::size_t> path;
  SearchLimits limits;
  std::size_t oracle_depth = 8;
  std::string policy;
  std::string output;
  DotOptions dot;
  bool color = false;
};

namespace detail {

constexpr int kOk = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct Failure {
  std::string message;
};

inline std::string paint(const Config& c, const char* code, const std::string& s) {
  return c.color ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{"cannot open '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

inline Problem load_problem(const std::string& path) {
  std::string text = read_file(path);
  try {
    if (ends_with(path, ".json")) return cfir_to_problem(text);
    return parse_problem(text);
  } catch (const ParseError& e) {
    throw Failure{path + ":" + e.what()};
  } catch (const Error& e) {
    throw Failure{path + ": " + e.what()};
  }
}

inline std::string paths_word(std::size_t n) {
  return std::to_string(n) + (n == 1 ? " path" : " paths");
}

inline std::string trace_text(const Trace& t) {
  return t.firings.empty() ? "(empty)" : to_string(t.firings);
}

inline void print_refutation(const Config& c, const Problem& p, const Verdict& v,
                             std::ostream& out) {
  out << paint(c, "31", "REFUTED") << ": " << v.note << "\n";
  if (!v.stuck) return;
  AtomOrder order = atom_order(p);
  auto braced = [&](const Multiset& m) { return "{" + m.to_string_ordered(order) + "}"; };
  const StuckReport& r = *v.stuck;
  out << "  choices: " << (r.choices.empty() ? "(none)" : to_string(r.choices)) << "\n";
  for (const auto& b : r.blocked)
    out << "  stuck at " << braced(r.state) << ": " << b.rule << " missing " << braced(b.missing)
        << "\n";
  if (r.blocked.empty()) out << "  stuck at " << braced(r.state) << ": no rules\n";
  if (!r.leftover.empty()) out << "  leftover: " << braced(r.leftover) << "\n";
}

// Prints the verdict summary shared by check, prove and audit; returns the
// exit code it implies.
inline int report_verdict(const Config& c, const Problem& p, const Verdict& v, std::ostream& out,
                          std::ostream& err, bool list_paths) {
  if (v.proven()) {
    out << paint(c, "32", "VERIFIED") << " (" << paths_word(v.traces.size()) << ")\n";
    if (list_paths)
      for (std::size_t i = 0; i < v.traces.size(); ++i)
        out << "  path " << i << ": " << trace_text(v.traces[i]) << "\n";
    return kOk;
  }
  if (v.refuted()) {
    print_refutation(c, p, v, out);
    return kNo;
  }
  err << "llx: limit exceeded (" << to_string(*v.limit) << "): " << v.note << "\n";
  return kError;
}

inline int cmd_check(const Config& c, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(c.input);
  Verdict v = prove(p, c.mode, c.limits);
  return report_verdict(c, p, v, out, err, true);
}

inline int cmd_prove(const Config& c, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(c.input);
  Verdict v = prove_all_paths(p, c.limits);
  if (!v.proven()) return report_verdict(c, p, v, out, err, false);
  if (c.path && *c.path >= v.traces.size())
    throw Failure{"--path " + std::to_string(*c.path) + " out of range (" +
                  paths_word(v.traces.size()) + ")"};
  if (c.style == "interchange" && !c.path && v.traces.size() > 1)
    throw Failure{"interchange output needs --path (" + paths_word(v.traces.size()) + ")"};

  AtomOrder order = atom_order(p);
  auto emit = [&](std::size_t i) {
    ProofTree proof = trace_to_proof(p, v.traces[i]);
    if (c.style == "interchange") {
      out << proof_to_interchange(proof);
      return;
    }
    ProofStyle style = c.style == "simplified"   ? ProofStyle::simplified
                       : c.style == "transition" ? ProofStyle::transition
                                                 : ProofStyle::full;
    out << render_proof(proof, style, order);
  };
  if (c.path) {
    emit(*c.path);
    return kOk;
  }
  for (std::size_t i = 0; i < v.traces.size(); ++i) {
    if (i) out << "\n";
    if (c.style != "interchange") out << "== path " << i << ": " << trace_text(v.traces[i]) << "\n";
    emit(i);
  }
  return kOk;
}

inline int cmd_export(const Config& c, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(c.input);
  std::string text;
  if (c.format == "dot") {
    text = export_dot(to_petri(p), c.dot);
  } else if (c.format == "clf") {
    std::vector<std::string> warnings;
    text = export_clf(p, &warnings);
    for (const auto& w : warnings) err << "llx: warning: " << w << "\n";
  } else {
    text = problem_to_cfir(p);
  }
  if (c.output.empty() || c.output == "-") {
    out << text;
    return kOk;
  }
  std::ofstream f(c.output, std::ios::binary);
  if (!f || !(f << text)) throw Failure{"cannot write '" + c.output + "'"};
  return kOk;
}

inline int cmd_audit(const Config& c, std::ostream& out, std::ostream& err) {
  Problem p = load_problem(c.input);
  Policy pol;
  try {
    pol = parse_policy(read_file(c.policy));
    validate_policy(p, pol);
  } catch (const PolicyError& e) {
    throw Failure{c.policy + ": " + e.what()};
  }
  Verdict v = prove(p, c.mode, c.limits);
  if (!v.proven()) return report_verdict(c, p, v, out, err, false);

  AuditReport r = audit(p, v, pol);
  std::string phase = pol.phase.empty() ? "" : " (phase " + pol.phase + ")";
  if (r.pass) {
    out << paint(c, "32", "PASS") << phase << ": " << paths_word(v.traces.size()) << " checked\n";
    return kOk;
  }
  out << paint(c, "31", "VIOLATION") << phase << ": " << r.findings.size()
      << (r.findings.size() == 1 ? " finding\n" : " findings\n");
  for (const auto& f : r.findings) {
    out << "  path " << f.trace_index;
    switch (f.kind) {
      case ViolationKind::forbidden:
        out << ", firing " << *f.firing_index << ": " << f.rule << " consumes forbidden "
            << f.atom << "\n";
        break;
      case ViolationKind::not_allowed:
        out << ", firing " << *f.firing_index << ": " << f.rule << " consumes " << f.atom
            << ", which is not allowed\n";
        break;
      case ViolationKind::not_consumed:
        out << ": required " << f.atom << " is never consumed\n";
        break;
    }
  }
  return kNo;
}

inline std::string verdict_word(const Verdict& v) {
  if (v.proven()) return "proven (" + paths_word(v.traces.size()) + ")";
  if (v.refuted()) return "refuted";
  return std::string("limit exceeded (") + to_string(*v.limit) + ")";
}

inline int cmd_oracle(const Config& c, std::ostream& out, std::ostream&) {
  Problem p = load_problem(c.input);
  Verdict engine = prove(p, c.mode, c.limits);
  Verdict oracle = oracle_reachable(p, c.oracle_depth, c.mode);
  out << "engine: " << verdict_word(engine) << "\n";
  out << "oracle: " << verdict_word(oracle) << " at depth " << c.oracle_depth << "\n";
  if (engine.limit_exceeded() || oracle.limit_exceeded()) {
    out << "INCONCLUSIVE\n";
    return kError;
  }
  if (engine.kind == oracle.kind) {
    out << paint(c, "32", "AGREES") << "\n";
    return kOk;
  }
  out << paint(c, "31", "DISAGREES") << "\n";
  return kNo;
}

}  // namespace detail

/// Parses `argv` and runs one command. `tty` says whether `out` is a
/// terminal, which enables color unless `--no-color` is given.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
               bool tty = false) {
  Config c;
  bool no_color = false;
  std::string mode = "all-paths";
  std::size_t path = 0;

  CLI::App app{"Linear-logic prover for multiset-rewriting problems", "llx"};
  app.require_subcommand(1);
  app.add_flag("--no-color", no_color, "Disable ANSI colors");

  const std::vector<std::string> modes{"exists", "all-paths"};
  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-depth", c.limits.max_depth, "Maximum number of firings")
        ->check(CLI::PositiveNumber);
    sub->add_option("--max-states", c.limits.max_states, "Maximum search-node expansions")
        ->check(CLI::PositiveNumber);
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", c.input, "Problem file (.llx or .cfir.json)")->required();
  };
  auto add_mode = [&](CLI::App* sub) {
    sub->add_option("--mode", mode, "exists or all-paths")->check(CLI::IsMember(modes));
  };

  CLI::App* check = app.add_subcommand("check", "Decide the problem and report the verdict");
  add_input(check);
  add_mode(check);
  add_limits(check);

  CLI::App* prove_cmd = app.add_subcommand("prove", "Emit the sequent proof of each path");
  add_input(prove_cmd);
  prove_cmd->add_option("--style", c.style, "full, simplified, transition or interchange")
      ->check(CLI::IsMember({"full", "simplified", "transition", "interchange"}));
  CLI::Option* path_opt = prove_cmd->add_option("--path", path, "Only this path index");
  add_limits(prove_cmd);

  CLI::App* exp = app.add_subcommand("export", "Write the problem in another format");
  add_input(exp);
  exp->add_option("--format", c.format, "dot, clf or cfir")
      ->check(CLI::IsMember({"dot", "clf", "cfir"}));
  exp->add_option("-o,--output", c.output, "Output file (default stdout)");
  exp->add_option("--control-color", c.dot.control_color, "DOT fill for control places");
  exp->add_option("--resource-color", c.dot.resource_color, "DOT fill for resource places");
  exp->add_option("--transition-color", c.dot.transition_color, "DOT fill for transitions");

  CLI::App* aud = app.add_subcommand("audit", "Check resource consumption against a policy");
  add_input(aud);
  aud->add_option("--policy", c.policy, "Policy JSON file")->required();
  add_mode(aud);
  add_limits(aud);

  CLI::App* orc = app.add_subcommand("oracle", "Cross-check the engine with brute force");
  add_input(orc);
  orc->add_option("--max-depth", c.oracle_depth, "Oracle enumeration depth");
  add_mode(orc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? detail::kOk : detail::kError;
  }

  c.mode = mode == "exists" ? SearchMode::exists : SearchMode::all_paths;
  c.color = tty && !no_color;
  if (path_opt->count()) c.path = path;

  try {
    if (check->parsed()) return detail::cmd_check(c, out, err);
    if (prove_cmd->parsed()) return detail::cmd_prove(c, out, err);
    if (exp->parsed()) return detail::cmd_export(c, out, err);
    if (aud->parsed()) return detail::cmd_audit(c, out, err);
    return detail::cmd_oracle(c, out, err);
  } catch (const detail::Failure& f) {
    err << "llx: " << f.message << "\n";
  } catch (const std::exception& e) {
    err << "llx: " << e.what() << "\n";
  }
  return detail::kError;
}

}  // namespace llx::cli

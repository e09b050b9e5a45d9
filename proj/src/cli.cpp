#include "lamsub/cli.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "lamsub/error.hpp"
#include "lamsub/feature_logic.hpp"
#include "lamsub/grammar.hpp"
#include "lamsub/layered.hpp"
#include "lamsub/prover.hpp"
#include "lamsub/type_syntax.hpp"

namespace lamsub {

namespace {

using nlohmann::json;

struct Options {
  std::string grammar;
  std::string regime;
  bool cut = false;
  std::size_t cut_depth = 3;
  bool json = false;
  std::size_t check = 0;
  bool parallel = false;
  std::size_t max_solutions = 0;
  std::string sequent, sentence, phi, psi, script;
};

Grammar require_grammar(const Options& o) {
  if (o.grammar.empty()) throw ParseError("this command needs --grammar", 0);
  return load_grammar(o.grammar);
}

Regime effective_regime(const Options& o, const Grammar& g) {
  if (o.regime.empty()) return g.regime;
  auto r = regime_from_string(o.regime);
  if (!r) throw ParseError("unknown regime '" + o.regime + "'", 0);
  return *r;
}

int cmd_prove(const Options& o, std::ostream& out) {
  Grammar g = require_grammar(o);
  Regime r = effective_regime(o, g);
  Sequent s = parse_sequent(o.sequent, g.base.get(), r);
  SearchConfig cfg{r, o.cut, o.cut ? o.cut_depth : 0, true};
  ProofPtr p = prove(s, cfg, *g.base);
  if (o.json) {
    out << json{{"provable", p != nullptr},
                {"regime", std::string(to_string(r))},
                {"sequent", to_string(s, r)},
                {"proof", p ? proof_to_json(*p) : json(nullptr)}}
               .dump(2)
        << "\n";
  } else if (p) {
    out << proof_to_text(*p, r);
  } else {
    out << "not provable: " << to_string(s, r) << "\n";
  }
  return p ? kExitOk : kExitNegative;
}

int cmd_member_layered(const Options& o, const Grammar& g, std::ostream& out) {
  LayeredConfig cfg;
  cfg.max_solutions = o.max_solutions;
  LayeredStats stats;
  auto words = split_words(o.sentence);
  auto readings = layered_membership(g, words, cfg, &stats);
  if (o.json) {
    json rs = json::array();
    for (const auto& rd : readings)
      rs.push_back({{"proof", proof_to_json(*rd.solution.proof)}, {"environment", canonical_env(rd.solution.env)}});
    out << json{{"accepted", !readings.empty()}, {"words", words}, {"readings", rs}, {"pruned", stats.pruned}}.dump(2)
        << "\n";
  } else {
    out << (readings.empty() ? "reject" : "accept") << ": " << o.sentence << "\n";
    out << "readings: " << readings.size() << " (pruned axioms: " << stats.pruned << ")\n";
    for (std::size_t i = 0; i < readings.size(); ++i) {
      out << "reading " << i + 1 << ":\n" << proof_to_text(*readings[i].solution.proof, g.regime);
      out << "environment: " << canonical_env(readings[i].solution.env) << "\n";
    }
  }
  return readings.empty() ? kExitNegative : kExitOk;
}

int cmd_member(const Options& o, std::ostream& out) {
  Grammar g = require_grammar(o);
  if (!o.regime.empty()) g.regime = effective_regime(o, g);
  if (g.layered) return cmd_member_layered(o, g, out);
  MembershipReport r = membership(g, split_words(o.sentence));
  if (o.json) {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << report_to_text(r);
  }
  return r.accepted ? kExitOk : kExitNegative;
}

int cmd_compile_out(const Options& o, std::ostream& out) {
  Grammar g = require_grammar(o);
  CompiledFamily f = compile_out(g);
  std::optional<CompileCheck> check;
  if (o.check > 0) check = check_compile_out(g, f, o.check);
  if (o.json) {
    json lex = json::object();
    for (const auto& [w, types] : f.lexicon) {
      json ts = json::array();
      for (const auto& t : types) ts.push_back(to_string(t));
      lex[w] = ts;
    }
    json starts = json::array();
    for (const auto& s : f.start_types) starts.push_back(to_string(s));
    json j{{"start_types", starts}, {"lexicon", lex}};
    if (check)
      j["check"] = {{"max_length", o.check},
                    {"strings", check->strings},
                    {"accepted", check->accepted},
                    {"mismatches", check->mismatches}};
    out << j.dump(2) << "\n";
  } else {
    out << "start types (" << f.start_types.size() << "):";
    for (const auto& s : f.start_types) out << " " << to_string(s);
    out << "\nlexicon:\n";
    for (const auto& w : g.words) {
      const auto& types = f.lexicon.at(w);
      out << "  " << w << " (" << types.size() << "):";
      for (const auto& t : types) out << " " << to_string(t);
      out << "\n";
    }
    if (check) {
      out << "check up to length " << o.check << ": " << check->strings << " strings, " << check->accepted
          << " accepted, " << check->mismatches.size() << " mismatches\n";
      for (const auto& m : check->mismatches) out << "  mismatch: " << m << "\n";
    }
  }
  return check && !check->mismatches.empty() ? kExitNegative : kExitOk;
}

int cmd_entail(const Options& o, std::ostream& out) {
  FeatureTerm phi = parse_feature_term(o.phi);
  FeatureTerm psi = parse_feature_term(o.psi);
  FeatureBase base;
  Verdict v = base.entails(BasicType{to_string(phi)}, BasicType{to_string(psi)});
  if (o.json) {
    out << json{{"context", to_string(phi)}, {"guard", to_string(psi)}, {"verdict", std::string(to_string(v))}}.dump(2)
        << "\n";
  } else {
    out << to_string(v) << "\n";
  }
  return v == Verdict::Entailed ? kExitOk : kExitNegative;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> std::quoted(tok)) out.push_back(tok);
  return out;
}

int cmd_batch(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream in(o.script);
  if (!in) throw ParseError("cannot read script '" + o.script + "'", 0);
  struct Job {
    std::size_t line;
    int expected;
    std::vector<std::string> args;
  };
  std::vector<Job> jobs;
  std::string grammar = o.grammar;
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    auto toks = tokenize(raw);
    if (toks.empty() || toks[0].starts_with("#")) continue;
    if (toks[0] == "grammar" && toks.size() == 2) {
      grammar = toks[1];
    } else if (toks[0] == "expect" && toks.size() >= 3) {
      int code = 0;
      try {
        code = std::stoi(toks[1]);
      } catch (const std::exception&) {
        throw ParseError("bad exit code '" + toks[1] + "'", 0, lineno);
      }
      std::vector<std::string> args(toks.begin() + 2, toks.end());
      if (!grammar.empty() && args[0] != "entail" && args[0] != "batch") args.insert(args.begin() + 1, {"--grammar", grammar});
      jobs.push_back({lineno, code, std::move(args)});
    } else {
      throw ParseError("expected 'grammar <path>' or 'expect <code> <command...>'", 1, lineno);
    }
  }
  struct Outcome {
    int code;
    std::string out, err;
  };
  auto exec = [](const std::vector<std::string>& args) {
    std::ostringstream o2, e2;
    int code = run(args, o2, e2);
    return Outcome{code, o2.str(), e2.str()};
  };
  std::vector<Outcome> results;
  if (o.parallel) {
    std::vector<std::future<Outcome>> futures;
    for (const auto& j : jobs) futures.push_back(std::async(std::launch::async, exec, j.args));
    for (auto& f : futures) results.push_back(f.get());
  } else {
    for (const auto& j : jobs) results.push_back(exec(j.args));
  }
  std::size_t passed = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    bool ok = results[i].code == jobs[i].expected;
    passed += ok;
    std::string cmd;
    for (const auto& a : jobs[i].args) cmd += (cmd.empty() ? "" : " ") + a;
    out << (ok ? "PASS" : "FAIL") << "  line " << jobs[i].line << ": " << cmd << " (exit " << results[i].code
        << ", expected " << jobs[i].expected << ")\n";
    if (!ok && !results[i].err.empty()) err << results[i].err;
  }
  out << passed << "/" << jobs.size() << " passed\n";
  return passed == jobs.size() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Subtyped Lambek calculus engine", "lamsub"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("-g,--grammar", o.grammar, "grammar file (also searched in LAMSUB_GRAMMAR_PATH)");
  app.add_option("--regime", o.regime, "override the grammar's regime: NL, L, LP or NLP");
  app.add_flag("--json", o.json, "machine-readable output");

  auto* prove_cmd = app.add_subcommand("prove", "prove a sequent 'A, B => C'");
  prove_cmd->add_option("sequent", o.sequent)->required();
  prove_cmd->add_flag("--cut", o.cut, "enable bounded cut");
  prove_cmd->add_option("--cut-depth", o.cut_depth, "nesting bound for cut")->capture_default_str();

  auto* member_cmd = app.add_subcommand("member", "test sentence membership");
  member_cmd->add_option("sentence", o.sentence)->required();
  member_cmd->add_option("--max-solutions", o.max_solutions, "layered grammars: reading cap (0: all)");

  auto* compile_cmd = app.add_subcommand("compile-out", "compile to a family of identity-ordered grammars");
  compile_cmd->add_option("--check", o.check, "compare memberships on all strings up to this length");

  auto* entail_cmd = app.add_subcommand("entail", "feature-term entailment: phi entails psi?");
  entail_cmd->add_option("phi", o.phi)->required();
  entail_cmd->add_option("psi", o.psi)->required();

  auto* batch_cmd = app.add_subcommand("batch", "run a script of 'grammar' and 'expect' lines");
  batch_cmd->add_option("script", o.script)->required();
  batch_cmd->add_flag("--parallel", o.parallel, "run the commands concurrently");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*prove_cmd) return cmd_prove(o, out);
    if (*member_cmd) return cmd_member(o, out);
    if (*compile_cmd) return cmd_compile_out(o, out);
    if (*entail_cmd) return cmd_entail(o, out);
    return cmd_batch(o, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.line()) err << " [line " << e.line() << "]";
    err << "\n";
    return kExitInput;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace lamsub

// Runs the acceptance criteria and prints one PASS/FAIL line for each.
// Exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <set>
#include <iostream>
#include <sstream>
#include <string>

#include "lamsub/error.hpp"
#include "lamsub/feature_logic.hpp"
#include "lamsub/grammar.hpp"
#include "lamsub/layered.hpp"
#include "lamsub/prover.hpp"
#include "lamsub/type_syntax.hpp"
#include "support/generators.hpp"

using namespace lamsub;
namespace tg = lamsub::testgen;

namespace {

constexpr Regime kAll[] = {Regime::NL, Regime::L, Regime::LP, Regime::NLP};

std::string fixtures_dir;

Grammar fixture(const std::string& name) { return load_grammar(fixtures_dir + "/" + name); }

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome double_coordination() {
  Grammar en = fixture("english.gram");
  Grammar de = fixture("german.gram");
  struct Case {
    const Grammar* g;
    const char* label;
    const char* sentence;
    bool expect;
  };
  const Case cases[] = {
      {&en, "1a", "Kim became wealthy and a_Republican", true},
      {&en, "1b", "Kim grew wealthy and a_Republican", false},
      {&en, "1c", "Kim grew wealthy", true},
      {&en, "1d", "Kim grew a_Republican", false},
      {&en, "2", "Kim grew and remained wealthy and a_Republican", false},
      {&de, "3c", "Er findet und hilft Frauen", true},
      {&de, "4", "Er findet und hilft Männer und Kindern", false},
  };
  std::string wrong;
  for (const auto& c : cases)
    if (membership(*c.g, split_words(c.sentence)).accepted != c.expect) wrong += std::string(" ") + c.label;
  return {wrong.empty(), wrong.empty() ? "7/7 verdicts match" : "wrong:" + wrong};
}

Outcome cut_elimination() {
  tg::Rng rng(7001);
  auto atoms = tg::names("p", 4);
  std::size_t n = 0, provable = 0, bad = 0;
  for (int round = 0; round < 10; ++round) {
    PosetBase base(atoms, tg::poset_edges(rng, atoms, 0.4));
    for (int i = 0; i < 100; ++i) {
      Sequent s = i % 3 == 0 ? tg::applicative_sequent(rng, atoms, 1 + tg::pick(rng, 2)) : tg::sequent(rng, atoms, 8);
      if (connective_count(s) > 8) s = tg::sequent(rng, atoms, 8);
      ++n;
      for (Regime r : kAll) {
        bool free = prove(s, SearchConfig{r}, base) != nullptr;
        auto with = prove_with_cut(s, 3, r, base);
        provable += free;
        if (free != (with != nullptr) || (with && check_proof(*with, r, base))) ++bad;
      }
    }
  }
  std::ostringstream d;
  d << n << " sequents x 4 regimes, " << provable << " provable, " << bad << " discrepancies";
  return {bad == 0 && n >= 1000, d.str()};
}

Outcome subtype_derivable() {
  tg::Rng rng(7002);
  auto atoms = tg::names("p", 4);
  std::size_t failures = 0, n = 0;
  for (int round = 0; round < 25; ++round) {
    PosetBase base(atoms, tg::poset_edges(rng, atoms, 0.4));
    for (int i = 0; i < 20; ++i, ++n) {
      Formula a = tg::formula(rng, atoms, tg::pick(rng, 4));
      Formula b = tg::related_super(rng, a, atoms, base);
      for (Regime r : kAll) {
        try {
          auto p = check_subtype_derivable(a, b, r, base);
          if (!p || check_proof(*p, r, base)) ++failures;
        } catch (const DomainError&) {
          ++failures;
        }
      }
    }
  }
  std::ostringstream d;
  d << n << " pairs x 4 regimes, " << failures << " failures";
  return {failures == 0, d.str()};
}

std::vector<Formula> all_formulae(const std::vector<std::string>& atoms, std::size_t conn) {
  std::vector<Formula> out;
  if (conn == 0) {
    for (const auto& a : atoms) out.push_back(Formula::basic(a));
    return out;
  }
  for (std::size_t left = 0; left < conn; ++left)
    for (const auto& r : all_formulae(atoms, left))
      for (const auto& a : all_formulae(atoms, conn - 1 - left)) {
        out.push_back(Formula::over(r, a));
        out.push_back(Formula::under(a, r));
      }
  return out;
}

Outcome substitution_oracle() {
  std::vector<std::string> atoms{"c1", "c2", "c3"};
  PosetBase chain(atoms, {{"c1", "c2"}, {"c2", "c3"}});
  std::vector<BasicType> universe{BasicType{"c1"}, BasicType{"c2"}, BasicType{"c3"}};
  std::vector<Formula> all;
  for (std::size_t k = 0; k <= 3; ++k)
    for (auto& f : all_formulae(atoms, k)) all.push_back(f);
  std::size_t mismatches = 0, related = 0;
  for (const auto& a : all)
    for (const auto& b : all) {
      bool s = subtype(a, b, chain);
      related += s;
      mismatches += s != lemma12_oracle(a, b, universe, chain);
    }
  std::ostringstream d;
  d << all.size() << "^2 pairs, " << related << " related, " << mismatches << " mismatches";
  return {mismatches == 0, d.str()};
}

Outcome compile_out_check() {
  Grammar toy = fixture("toy.gram");
  auto fam = compile_out(toy);
  auto check = check_compile_out(toy, fam, 4);
  Grammar app = fixture("appendix.gram");
  auto af = compile_out(app);
  std::string listed;
  for (const auto& f : af.lexicon.at("w")) listed += (listed.empty() ? "" : ", ") + to_string(f);
  const std::string expected = "b1/(b1/b1), b1/(b1/b2), b2/(b1/b1), b2/(b1/b2)";
  std::ostringstream d;
  d << check.strings << " strings, " << check.accepted << " accepted, " << check.mismatches.size()
    << " mismatches; super+ = {" << listed << "}";
  return {check.strings == 120 && check.mismatches.empty() && listed == expected, d.str()};
}

Outcome feature_entailment() {
  tg::Rng rng(7006);
  std::vector<std::string> feats{"f", "g", "h", "i", "j", "k"};
  std::vector<std::string> atoms{"a", "b", "c"};
  std::size_t n = 0, entailed = 0, dis = 0, bad = 0;
  while (n < 2400) {
    auto a = tg::with_sharing(rng, tg::feature_term(rng, 3, feats, atoms), feats);
    auto b = tg::with_sharing(rng, tg::feature_term(rng, 3, feats, atoms), feats);
    if (!normalize("x", a) || !normalize("x", b)) continue;
    if (tg::coin(rng, 0.3)) b = ft_join(a, b);
    ++n;
    Verdict v = entail_check(a, b);
    entailed += v == Verdict::Entailed;
    dis += v == Verdict::Disentailed;
    if ((v == Verdict::Entailed) != simulation_oracle(a, b)) ++bad;
    if (v == Verdict::Disentailed && ft_meet(a, b)) ++bad;
  }
  std::ostringstream d;
  d << n << " pairs (" << entailed << " entailed, " << dis << " disentailed), " << bad << " violations";
  return {bad == 0, d.str()};
}

Outcome deep_chain() {
  std::string s;
  for (int i = 0; i < 10000; ++i) s += "f:(";
  s += "a" + std::string(10000, ')');
  FeatureTerm t = parse_feature_term(s);
  auto start = std::chrono::steady_clock::now();
  Verdict v = entail_check(t, t);
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream d;
  d << "depth 10000: " << to_string(v) << " in " << ms << " ms";
  return {v == Verdict::Entailed && ms < 1000, d.str()};
}

Outcome separations() {
  PosetBase base({"a", "b", "c"}, {});
  std::string wrong;
  for (Regime r : kAll) {
    bool assoc = r == Regime::L || r == Regime::LP;
    bool comm = r == Regime::LP || r == Regime::NLP;
    Sequent comp = parse_sequent(assoc ? "a/b, b/c => a/c" : "(a/b, b/c) => a/c", &base, r);
    Sequent perm = parse_sequent("b\\a, b => a", &base, r);
    Sequent app = parse_sequent("b, b\\a => a", &base, r);
    if ((prove(comp, SearchConfig{r}, base) != nullptr) != assoc) wrong += " composition/" + std::string(to_string(r));
    if ((prove(perm, SearchConfig{r}, base) != nullptr) != comm) wrong += " permutation/" + std::string(to_string(r));
    if (!prove(app, SearchConfig{r}, base)) wrong += " application/" + std::string(to_string(r));
  }
  return {wrong.empty(), wrong.empty() ? "composition L,LP only; permuted application LP,NLP only" : "wrong:" + wrong};
}

Outcome double_layering() {
  Grammar g = fixture("persuade.gram");
  auto readings = layered_membership(g, split_words("Kim persuades Sandy to_leave"));
  bool ok = readings.size() == 1;
  std::string detail = std::to_string(readings.size()) + " reading(s)";
  if (ok) {
    const auto& env = readings[0].solution.env;
    auto at = [&](const std::string& v, std::vector<std::string> path) { return query_env(env, v, path); };
    auto rel = at("S_1", {"content", "relation"});
    ok = rel.kind == QueryResult::Kind::Atom && rel.text == "persuade" &&
         at("S_1", {"content", "influence"}).text == at("X_1", {}).text &&
         at("X_1", {}).text == at("K_0", {}).text &&
         at("S_1", {"content", "influenced"}).text == at("Y_1", {}).text &&
         at("Y_1", {}).text == at("N_2", {}).text &&
         at("S_1", {"content", "soa_arg"}).text == at("Z_1", {}).text &&
         at("Z_1", {}).text == at("B_3", {}).text;
    detail += ok ? ", content matrix matches" : ", content matrix differs";
  }
  Grammar c = fixture("clash.gram");
  auto words = split_words("Kim sleep");
  bool plain = membership(c, words).accepted;
  bool layered = !layered_membership(c, words).empty();
  detail += std::string("; clash: prove ") + (plain ? "succeeds" : "fails") + ", layered " +
            (layered ? "succeeds" : "empty");
  return {ok && plain && !layered, detail};
}

void leaf_paths(const GTerm& t, Occurrence at, std::vector<Occurrence>& out) {
  if (t.is_leaf()) {
    out.push_back(at);
    return;
  }
  at.path.push_back(Step::Left);
  leaf_paths(t.left(), at, out);
  at.path.back() = Step::Right;
  leaf_paths(t.right(), at, out);
}

Outcome admissibility() {
  tg::Rng rng(7010);
  auto atoms = tg::names("p", 4);
  std::size_t n = 0, failures = 0;
  while (n < 300) {
    PosetBase base(atoms, tg::poset_edges(rng, atoms, 0.5));
    Regime r = kAll[n % 4];
    Sequent s = tg::applicative_sequent(rng, atoms, 1 + tg::pick(rng, 3));
    auto p = prove(s, SearchConfig{r}, base);
    if (!p) continue;
    ++n;
    try {
      if (n % 2) {
        std::vector<Occurrence> leaves;
        leaf_paths(p->conclusion.antecedent, {}, leaves);
        const Occurrence& occ = leaves[tg::pick(rng, leaves.size())];
        const Formula& b = subterm_at(p->conclusion.antecedent, occ).formula();
        Formula a = tg::related_super(rng, b, atoms, base, Polarity::Negative);  // a subtype of b
        auto q = check_strengthen_left(*p, occ, a, r, base);
        if (!q || check_proof(*q, r, base)) ++failures;
      } else {
        Formula c2 = tg::related_super(rng, p->conclusion.succedent, atoms, base);
        auto q = check_weaken_right(*p, c2, r, base);
        if (!q || check_proof(*q, r, base)) ++failures;
      }
    } catch (const DomainError&) {
      ++failures;
    }
  }
  std::ostringstream d;
  d << n << " instances, " << failures << " failures";
  return {failures == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  // usage: acceptance [fixtures-dir] [criterion ids...]
  fixtures_dir = argc > 1 && std::string(argv[1]) != "-" ? argv[1] : LAMSUB_FIXTURES;
  std::set<int> only;
  for (int i = 2; i < argc; ++i) only.insert(std::stoi(argv[i]));
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_s;  // 0: none
  };
  const Criterion criteria[] = {
      {1, "double coordination suite", double_coordination, 5},
      {2, "cut elimination", cut_elimination, 60},
      {3, "subtypes derivable", subtype_derivable, 0},
      {4, "substitution oracle", substitution_oracle, 0},
      {5, "compile-out", compile_out_check, 120},
      {6, "feature entailment", feature_entailment, 0},
      {7, "entailment scaling", deep_chain, 0},
      {8, "structural separations", separations, 0},
      {9, "double layering", double_layering, 0},
      {10, "admissible rules", admissibility, 0},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    if (!only.empty() && !only.contains(c.id)) continue;
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool ok = o.ok && (c.limit_s == 0 || s < c.limit_s);
    failed += !ok;
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << s << "s";
    if (c.limit_s) t << " (limit " << c.limit_s << "s)";
    std::cout << (ok ? "PASS" : "FAIL") << "  " << c.id << ". " << c.name << ": " << o.detail << " [" << t.str()
              << "]" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

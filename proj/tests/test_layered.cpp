#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lamsub/error.hpp"
#include "lamsub/grammar.hpp"
#include "lamsub/layered.hpp"
#include "lamsub/type_syntax.hpp"

using namespace lamsub;

namespace {

Grammar fixture(const std::string& name) { return load_grammar(std::string(LAMSUB_FIXTURES) + "/" + name); }

std::string rep(const Environment& env, const std::string& var, std::vector<std::string> path = {}) {
  return query_env(env, var, path).text;
}

// Proof with node conclusions only, for comparing solution sets.
std::string erased(const Proof& p) {
  std::string out = std::string(to_string(p.rule)) + "[" + to_string(p.conclusion, Regime::L) + "]";
  for (const auto& q : p.premises) out += erased(*q);
  return out;
}

}  // namespace

TEST_CASE("persuade: one reading with the composed content") {
  Grammar g = fixture("persuade.gram");
  REQUIRE(g.layered);
  auto words = split_words("Kim persuades Sandy to_leave");
  auto readings = layered_membership(g, words);
  REQUIRE(readings.size() == 1);
  const Environment& env = readings[0].solution.env;

  auto rel = query_env(env, "S_1", {"content", "relation"});
  CHECK(rel.kind == QueryResult::Kind::Atom);
  CHECK(rel.text == "persuade");

  auto influence = query_env(env, "S_1", {"content", "influence"});
  CHECK(influence.kind == QueryResult::Kind::Var);
  CHECK(influence.text == rep(env, "K_0"));    // the subject
  CHECK(rep(env, "S_1", {"content", "influence"}) == rep(env, "X_1"));
  CHECK(rep(env, "S_1", {"content", "influenced"}) == rep(env, "N_2"));  // the object
  CHECK(rep(env, "S_1", {"content", "influenced"}) == rep(env, "Y_1"));
  CHECK(rep(env, "S_1", {"content", "soa_arg"}) == rep(env, "B_3"));    // the complement
  CHECK(rep(env, "S_1", {"content", "soa_arg"}) == rep(env, "Z_1"));
  CHECK(rep(env, "S_1", {"content", "influenced", "index"}) == "sandy");
  // object control: the complement's agent is the object
  CHECK(rep(env, "B_3", {"content", "agent"}) == rep(env, "N_2"));
  CHECK(rep(env, "S_1") == rep(env, "_0_g"));

  CHECK(query_env(env, "S_1", {"content", "mood"}).kind == QueryResult::Kind::Top);
  CHECK_THROWS_AS(query_env(env, "S_1", {"content", "relation", "x"}), DomainError);
  CHECK_THROWS_AS(query_env(env, "Q_9", {}), DomainError);
}

TEST_CASE("clash: provable skeleton, no layered reading") {
  Grammar g = fixture("clash.gram");
  auto words = split_words("Kim sleep");
  CHECK(membership(g, words).accepted);
  LayeredStats stats;
  CHECK(layered_membership(g, words, {}, &stats).empty());
  CHECK(stats.pruned > 0);
}

TEST_CASE("projection soundness and order independence") {
  Grammar g = fixture("persuade.gram");
  for (const char* s : {"Kim persuades Sandy to_leave", "Sandy persuades Kim to_leave", "Kim to_leave"}) {
    auto words = split_words(s);
    LayeredConfig fwd, rev;
    rev.reverse_sites = true;
    auto a = layered_membership(g, words, fwd);
    auto b = layered_membership(g, words, rev);
    std::set<std::pair<std::string, std::string>> sa, sb;
    for (const auto& r : a) {
      CHECK_FALSE(check_proof(*r.solution.proof, Regime::L, *g.base));
      sa.emplace(erased(*r.solution.proof), canonical_env(r.solution.env));
    }
    for (const auto& r : b) sb.emplace(erased(*r.solution.proof), canonical_env(r.solution.env));
    CHECK(sa == sb);
    CHECK(!a.empty() == membership(g, words).accepted);
  }
}

TEST_CASE("no constraints: same proofs as the plain prover") {
  Grammar g = parse_grammar("regime L\nbase feature\nlex a : [cat:np]\nlex f : [cat:np]\\[cat:s]\ngoal [cat:s]\n");
  auto r = layered_membership(g, split_words("a f"));
  REQUIRE(r.size() == 1);
  auto plain = membership(g, split_words("a f"));
  CHECK(plain.accepted);
  CHECK(erased(*r[0].solution.proof) == erased(*plain.proof));
}

TEST_CASE("instantiate") {
  Grammar g = fixture("persuade.gram");
  const LexicalEntry& e = g.lexicon.at("persuades").front();
  auto i1 = instantiate(e, "_1");
  auto i2 = instantiate(e, "_2");
  std::set<std::string> v1, v2;
  for (const auto& [occ, v] : i1.vars) v1.insert(v);
  for (const auto& [occ, v] : i2.vars) v2.insert(v);
  CHECK(v1 == std::set<std::string>{"S_1", "X_1", "Y_1", "Z_1"});
  for (const auto& v : v1) CHECK_FALSE(v2.contains(v));
  // Y labels both object positions
  std::size_t ys = 0;
  for (const auto& [occ, v] : i1.vars) ys += v == "Y_1";
  CHECK(ys == 2);
  CHECK(i1.type == e.type);

  // alpha-equivalence of two instantiations
  std::map<std::string, std::string> bij;
  for (const auto& [occ, v] : i1.vars) {
    auto [it, fresh] = bij.emplace(v, i2.vars.at(occ));
    CHECK(it->second == i2.vars.at(occ));
  }
  REQUIRE(i1.constraints.size() == i2.constraints.size());
  for (std::size_t k = 0; k < i1.constraints.size(); ++k) CHECK(bij.at(i1.constraints[k].first) == i2.constraints[k].first);

  Grammar plain = parse_grammar("regime L\nbase feature\nlex a : [cat:np]^V\ngoal [cat:np]\n");
  auto p = instantiate(plain.lexicon.at("a").front(), "_7");
  CHECK(p.constraints.empty());
  CHECK(p.vars.begin()->second == "V_7");
}

TEST_CASE("layered mode limits") {
  Grammar g = fixture("persuade.gram");
  LayeredConfig one;
  one.max_solutions = 1;
  CHECK(layered_membership(g, split_words("Kim persuades Sandy to_leave"), one).size() == 1);
  Grammar nl = g;
  nl.regime = Regime::NL;
  CHECK_THROWS_AS(layered_membership(nl, split_words("Kim to_leave")), ConfigError);
  Grammar withconj = parse_grammar("regime L\nbase feature\nlex a : [cat:np]^X\nconj and\ngoal [cat:np]\n");
  CHECK_THROWS_AS(layered_membership(withconj, split_words("a and a")), ConfigError);
}

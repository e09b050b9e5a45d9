#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "lamsub/base_logic.hpp"
#include "lamsub/error.hpp"
#include "lamsub/formula.hpp"
#include "lamsub/type_syntax.hpp"
#include "support/generators.hpp"

using namespace lamsub;

namespace {

Formula F(const char* s) { return parse_formula(s); }
GTerm T(const char* s, Regime r) { return parse_gterm(s, nullptr, r); }

Occurrence path(std::initializer_list<Step> steps) { return Occurrence{steps}; }

// All trees reachable from t by swapping children anywhere.
std::set<std::string> swap_closure(const GTerm& t) {
  if (t.is_leaf()) return {t.key()};
  std::set<std::string> out;
  std::function<std::vector<GTerm>(const GTerm&)> all = [&](const GTerm& u) -> std::vector<GTerm> {
    if (u.is_leaf()) return {u};
    std::vector<GTerm> res;
    for (const auto& l : all(u.left()))
      for (const auto& r : all(u.right())) {
        res.push_back(GTerm::node(l, r));
        res.push_back(GTerm::node(r, l));
      }
    return res;
  };
  for (const auto& u : all(t)) out.insert(u.key());
  return out;
}

}  // namespace

TEST_CASE("formula parsing and printing") {
  CHECK(F("a/b/c") == Formula::over(Formula::over(F("a"), F("b")), F("c")));
  CHECK(F("a\\b\\c") == Formula::under(F("a"), Formula::under(F("b"), F("c"))));
  CHECK(F("a/(b\\c)").connectives() == 2);
  CHECK(to_string(F("(a/b)/c")) == to_string(F("a/b/c")));
  for (const char* s : {"a", "a/b", "a/(b\\c)", "(b\\a)/c", "[np & acc]/b"}) CHECK(parse_formula(to_string(F(s))) == F(s));
  CHECK_THROWS_AS(F("a/"), ParseError);
  CHECK_THROWS_AS(F("(a/b"), ParseError);
}

TEST_CASE("polarity_of") {
  CHECK(polarity_of(F("a"), {}) == Polarity::Positive);
  CHECK(polarity_of(F("a/b"), path({Step::Arg})) == Polarity::Negative);
  CHECK(polarity_of(F("a/(b/c)"), path({Step::Arg, Step::Arg})) == Polarity::Positive);
  CHECK_THROWS_AS(polarity_of(F("a"), path({Step::Arg})), DomainError);

  SUBCASE("parity of argument steps, random formulae up to 12 connectives") {
    testgen::Rng rng(11);
    auto atoms = testgen::names("a", 3);
    for (int i = 0; i < 300; ++i) {
      Formula f = testgen::formula(rng, atoms, testgen::pick(rng, 13));
      for (const auto& bo : basic_occurrences(f)) {
        auto args = std::count(bo.occ.path.begin(), bo.occ.path.end(), Step::Arg);
        CHECK(polarity_of(f, bo.occ) == (args % 2 ? Polarity::Negative : Polarity::Positive));
      }
    }
  }
}

TEST_CASE("subtype on complex types") {
  PosetBase base({"a", "b1", "b2"}, {{"b1", "b2"}});
  CHECK(subtype(F("a/b2"), F("a/b1"), base));
  CHECK_FALSE(subtype(F("a/b1"), F("a/b2"), base));
  CHECK(subtype(F("b2\\a"), F("b1\\a"), base));
  CHECK(subtype(F("b1/a"), F("b2/a"), base));
  CHECK_FALSE(subtype(F("a/b1"), F("b1\\a"), base));
  CHECK_FALSE(subtype(F("a"), F("a/a"), base));

  SUBCASE("preorder and shape preservation on random posets") {
    testgen::Rng rng(5);
    auto atoms = testgen::names("p", 4);
    for (int round = 0; round < 20; ++round) {
      PosetBase pb(atoms, testgen::poset_edges(rng, atoms));
      for (int i = 0; i < 50; ++i) {
        std::size_t c = testgen::pick(rng, 4);
        Formula a = testgen::formula(rng, atoms, c);
        Formula b = testgen::related_super(rng, a, atoms, pb);
        Formula d = testgen::related_super(rng, b, atoms, pb);
        CHECK(subtype(a, a, pb));
        CHECK(subtype(a, b, pb));
        CHECK(subtype(a, d, pb));  // transitivity
        Formula other = testgen::formula(rng, atoms, c);
        if (subtype(a, other, pb)) {
          // same skeleton: erase basics
          auto skel = [](Formula f) {
            std::string k = to_string(f);
            std::string out;
            for (char ch : k)
              if (ch == '/' || ch == '\\' || ch == '(' || ch == ')') out += ch;
            return out;
          };
          CHECK(skel(a) == skel(other));
        }
      }
    }
  }
}

TEST_CASE("canonicalize") {
  GTerm left = T("((a, b), c)", Regime::NL);
  GTerm right = T("(a, (b, c))", Regime::NL);
  CHECK(canonicalize(left, Regime::L) == canonicalize(right, Regime::L));
  CHECK(canonicalize(left, Regime::L).items().size() == 3);
  CHECK_FALSE(canonicalize(left, Regime::NL) == canonicalize(right, Regime::NL));
  CHECK(canonicalize(T("(a, b)", Regime::NL), Regime::NLP) == canonicalize(T("(b, a)", Regime::NL), Regime::NLP));
  CHECK_FALSE(canonicalize(left, Regime::NLP) == canonicalize(right, Regime::NLP));
  CHECK(canonicalize(T("((a, b), c)", Regime::NL), Regime::LP) ==
        canonicalize(T("(c, (b, a))", Regime::NL), Regime::LP));

  SUBCASE("NLP identity agrees with the closure of child swaps on 3-leaf trees") {
    std::vector<GTerm> trees;
    for (const char* x : {"a", "b", "c"})
      for (const char* y : {"a", "b", "c"})
        for (const char* z : {"a", "b", "c"}) {
          std::string l = std::string("((") + x + ", " + y + "), " + z + ")";
          std::string r = std::string("(") + x + ", (" + y + ", " + z + "))";
          trees.push_back(parse_gterm(l, nullptr, Regime::NL));
          trees.push_back(parse_gterm(r, nullptr, Regime::NL));
        }
    for (const auto& s : trees)
      for (const auto& t : trees) {
        bool same = swap_closure(s).contains(t.key());
        CHECK((canonical_key(s, Regime::NLP) == canonical_key(t, Regime::NLP)) == same);
      }
  }

  SUBCASE("idempotent and rebracketing-invariant") {
    testgen::Rng rng(3);
    auto atoms = testgen::names("a", 3);
    for (int i = 0; i < 200; ++i) {
      std::vector<Formula> leaves;
      std::size_t n = 1 + testgen::pick(rng, 5);
      for (std::size_t k = 0; k < n; ++k) leaves.push_back(testgen::formula(rng, atoms, testgen::pick(rng, 2)));
      GTerm t1 = testgen::tree(rng, leaves, 0, n);
      GTerm t2 = testgen::tree(rng, leaves, 0, n);
      CHECK(canonical_key(t1, Regime::L) == canonical_key(t2, Regime::L));
      CHECK(canonical_key(t1, Regime::LP) == canonical_key(t2, Regime::LP));
      for (Regime r : {Regime::NL, Regime::NLP}) {
        auto c = canonicalize(t1, r);
        CHECK(canonical_key(*c.tree(), r) == c.key());
      }
    }
  }
}

TEST_CASE("subformula_closure") {
  auto cl = subformula_closure(FormulaSet{F("a/(b\\c)")});
  CHECK(cl == FormulaSet{F("a/(b\\c)"), F("a"), F("b\\c"), F("b"), F("c")});
  CHECK(subformula_closure(FormulaSet{F("a")}) == FormulaSet{F("a")});
  CHECK(subformula_closure(FormulaSet{F("a/b"), F("b\\a")}) == FormulaSet{F("a/b"), F("b\\a"), F("a"), F("b")});
}

TEST_CASE("sequent parsing") {
  Sequent s = parse_sequent("a/b, b => a", nullptr, Regime::L);
  CHECK(s.antecedent.leaf_count() == 2);
  CHECK(s.succedent == F("a"));
  CHECK(parse_sequent("a ⇒ a", nullptr, Regime::NL).antecedent.is_leaf());
  CHECK_THROWS_AS(parse_sequent("a, b, c => a", nullptr, Regime::NL), ParseError);
  CHECK_NOTHROW(parse_sequent("(a, b), c => a", nullptr, Regime::NL));
  CHECK_THROWS_AS(parse_sequent("=> a", nullptr, Regime::L), ParseError);
}

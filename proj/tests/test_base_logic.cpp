#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <queue>

#include "lamsub/base_logic.hpp"
#include "lamsub/error.hpp"
#include "lamsub/prop_logic.hpp"
#include "support/generators.hpp"

using namespace lamsub;

namespace {

Verdict pe(const char* a, const char* b) { return prop_entails(parse_prop(a), parse_prop(b)); }

bool equiv(const PropFormula& a, const PropFormula& b) {
  return prop_entails(a, b) == Verdict::Entailed && prop_entails(b, a) == Verdict::Entailed;
}

PropFormula random_prop(testgen::Rng& rng, std::size_t depth, std::size_t atoms) {
  if (depth == 0 || testgen::coin(rng, 0.3)) return PropFormula::atom("p" + std::to_string(testgen::pick(rng, atoms)));
  auto a = random_prop(rng, depth - 1, atoms);
  auto b = random_prop(rng, depth - 1, atoms);
  return testgen::coin(rng) ? PropFormula::conj(a, b) : PropFormula::disj(a, b);
}

// Breadth-first reachability over the raw edge list.
bool reachable(const std::vector<std::pair<std::string, std::string>>& edges, const std::string& from,
               const std::string& to) {
  std::set<std::string> seen{from};
  std::queue<std::string> q;
  q.push(from);
  while (!q.empty()) {
    auto x = q.front();
    q.pop();
    if (x == to) return true;
    for (const auto& [a, b] : edges)
      if (a == x && seen.insert(b).second) q.push(b);
  }
  return false;
}

}  // namespace

TEST_CASE("poset_entails") {
  PosetBase pb({"b1", "b2", "b3"}, {{"b1", "b2"}});
  BasicType b1{"b1"}, b2{"b2"};
  CHECK(pb.entails(b1, b2) == Verdict::Entailed);
  CHECK(pb.entails(b2, b2) == Verdict::Entailed);
  CHECK(pb.entails(b2, b1) == Verdict::Blocked);
  CHECK_THROWS_AS(pb.entails(b1, BasicType{"nope"}), DomainError);
  CHECK_THROWS_AS(pb.parse("nope"), DomainError);

  auto text = PosetBase::from_text("# chain\natom x y z\nsub x y\nsub y z\n");
  CHECK(text.entails(BasicType{"x"}, BasicType{"z"}) == Verdict::Entailed);

  SUBCASE("agrees with independent reachability") {
    testgen::Rng rng(17);
    auto atoms = testgen::names("q", 6);
    for (int round = 0; round < 30; ++round) {
      auto edges = testgen::poset_edges(rng, atoms, 0.25);
      PosetBase p(atoms, edges);
      for (const auto& a : atoms)
        for (const auto& b : atoms)
          CHECK((p.entails(BasicType{a}, BasicType{b}) == Verdict::Entailed) == reachable(edges, a, b));
    }
  }

  SUBCASE("join is the unique least upper bound") {
    PosetBase d({"l", "r", "u", "v"}, {{"l", "u"}, {"r", "u"}, {"l", "v"}, {"r", "v"}});
    CHECK_FALSE(d.join(BasicType{"l"}, BasicType{"r"}).has_value());
    PosetBase c({"l", "r", "u"}, {{"l", "u"}, {"r", "u"}});
    CHECK(c.join(BasicType{"l"}, BasicType{"r"}) == BasicType{"u"});
    CHECK_FALSE(c.meet(BasicType{"l"}, BasicType{"r"}).has_value());
  }
}

TEST_CASE("prop_entails") {
  CHECK(pe("np&acc&dat", "np&acc") == Verdict::Entailed);
  CHECK(pe("np&(acc|dat)", "np&acc&dat") == Verdict::Blocked);
  CHECK(pe("np", "np|ap") == Verdict::Entailed);
  CHECK(pe("ap", "np|ap") == Verdict::Entailed);
  CHECK(pe("np|ap", "ap") == Verdict::Blocked);
  CHECK(to_string(parse_prop("a|b&c")) == to_string(parse_prop("a|(b&c)")));
  CHECK_THROWS_AS(parse_prop("a&"), ParseError);

  SUBCASE("disjunction introduction, never Disentailed") {
    testgen::Rng rng(2);
    for (int i = 0; i < 200; ++i) {
      auto a = random_prop(rng, 3, 4), b = random_prop(rng, 3, 4);
      CHECK(prop_entails(a, PropFormula::disj(a, b)) == Verdict::Entailed);
      CHECK(prop_entails(a, b) != Verdict::Disentailed);
    }
  }

  SUBCASE("preorder on 1000 random triples") {
    testgen::Rng rng(23);
    for (int i = 0; i < 1000; ++i) {
      auto a = random_prop(rng, 4, 5), b = random_prop(rng, 4, 5), c = random_prop(rng, 4, 5);
      CHECK(prop_entails(a, a) == Verdict::Entailed);
      if (prop_entails(a, b) == Verdict::Entailed && prop_entails(b, c) == Verdict::Entailed)
        CHECK(prop_entails(a, c) == Verdict::Entailed);
    }
  }
}

TEST_CASE("prop_meet and prop_join") {
  auto j = prop_join(parse_prop("np&acc"), parse_prop("np&dat"));
  CHECK(to_string(j) == to_string(parse_prop("(np&acc)|(np&dat)")));
  CHECK(equiv(j, parse_prop("np&(acc|dat)")));
  CHECK(equiv(prop_meet(parse_prop("np"), parse_prop("np")), parse_prop("np")));
  CHECK(equiv(prop_meet(parse_prop("np|ap"), parse_prop("ap")), parse_prop("ap")));

  SUBCASE("lattice laws up to equivalence") {
    testgen::Rng rng(29);
    for (int i = 0; i < 300; ++i) {
      auto a = random_prop(rng, 3, 4), b = random_prop(rng, 3, 4), c = random_prop(rng, 3, 4);
      CHECK(equiv(prop_join(a, b), prop_join(b, a)));
      CHECK(equiv(prop_meet(a, b), prop_meet(b, a)));
      CHECK(equiv(prop_join(prop_join(a, b), c), prop_join(a, prop_join(b, c))));
      CHECK(equiv(prop_meet(prop_meet(a, b), c), prop_meet(a, prop_meet(b, c))));
      CHECK(equiv(prop_join(a, prop_meet(a, b)), a));
      CHECK(equiv(prop_meet(a, prop_join(a, b)), a));
    }
  }
}

TEST_CASE("PropBase basics") {
  PropBase pb;
  BasicType a = pb.parse("np & acc & dat");
  BasicType b = pb.parse("np&acc");
  CHECK(pb.leq(a, b));
  CHECK_FALSE(pb.leq(b, a));
  auto j = pb.join(pb.parse("np&acc"), pb.parse("np&dat"));
  REQUIRE(j);
  CHECK(pb.leq(pb.parse("np&acc"), *j));
  CHECK(pb.leq(pb.parse("np&dat"), *j));
}

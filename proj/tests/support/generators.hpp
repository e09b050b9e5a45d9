#pragma once

// Random inputs for property tests and the acceptance run. Every generator
// draws from a caller-owned mt19937 so runs are reproducible.

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lamsub/base_logic.hpp"
#include "lamsub/feature_logic.hpp"
#include "lamsub/formula.hpp"

namespace lamsub::testgen {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

// Formula with exactly `conn` connectives over `atoms`.
inline Formula formula(Rng& rng, const std::vector<std::string>& atoms, std::size_t conn) {
  if (conn == 0) return Formula::basic(atoms[pick(rng, atoms.size())]);
  std::size_t left = pick(rng, conn);
  Formula a = formula(rng, atoms, left);
  Formula b = formula(rng, atoms, conn - 1 - left);
  return coin(rng) ? Formula::over(a, b) : Formula::under(b, a);
}

// Random binary tree over the given leaves (in order).
inline GTerm tree(Rng& rng, const std::vector<Formula>& leaves, std::size_t lo, std::size_t hi) {
  if (hi - lo == 1) return GTerm::leaf(leaves[lo]);
  std::size_t mid = lo + 1 + pick(rng, hi - lo - 1);
  return GTerm::node(tree(rng, leaves, lo, mid), tree(rng, leaves, mid, hi));
}

// Sequent with at most `max_conn` connectives in total.
inline Sequent sequent(Rng& rng, const std::vector<std::string>& atoms, std::size_t max_conn) {
  std::size_t total = pick(rng, max_conn + 1);
  std::size_t n = 1 + pick(rng, 3);
  std::vector<std::size_t> share(n + 1, 0);
  for (std::size_t i = 0; i < total; ++i) ++share[pick(rng, n + 1)];
  std::vector<Formula> leaves;
  for (std::size_t i = 0; i < n; ++i) leaves.push_back(formula(rng, atoms, share[i]));
  return Sequent{tree(rng, leaves, 0, n), formula(rng, atoms, share[n])};
}

// Sequent provable in every regime: starting from leaf `goal`, repeatedly
// expand a leaf X into (X/Y, Y) or (Y, Y\X).
inline Sequent applicative_sequent(Rng& rng, const std::vector<std::string>& atoms, std::size_t steps,
                                   std::size_t arg_conn = 1) {
  Formula goal = formula(rng, atoms, pick(rng, 2));
  std::function<GTerm(const Formula&, std::size_t)> grow = [&](const Formula& x, std::size_t k) -> GTerm {
    if (k == 0) return GTerm::leaf(x);
    Formula y = formula(rng, atoms, pick(rng, arg_conn + 1));
    std::size_t left = pick(rng, k);
    if (coin(rng)) return GTerm::node(grow(Formula::over(x, y), left), grow(y, k - 1 - left));
    return GTerm::node(grow(y, left), grow(Formula::under(y, x), k - 1 - left));
  };
  return Sequent{grow(goal, steps), goal};
}

// Random order on atoms a0..a{n-1}: each forward pair is an edge with
// probability p. Acyclic by construction.
inline std::vector<std::pair<std::string, std::string>> poset_edges(Rng& rng, const std::vector<std::string>& atoms,
                                                                    double p = 0.35) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j)
      if (coin(rng, p)) edges.emplace_back(atoms[i], atoms[j]);
  return edges;
}

inline std::vector<std::string> names(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

// Replaces every basic occurrence by a random related type: supertypes at
// positive occurrences, subtypes at negative ones. The result is a supertype
// of `a`.
inline Formula related_super(Rng& rng, const Formula& a, const std::vector<std::string>& atoms, const BaseLogic& base,
                             Polarity pol = Polarity::Positive) {
  if (a.is_basic()) {
    std::vector<std::string> cand;
    for (const auto& b : atoms) {
      BasicType t{b};
      bool ok = pol == Polarity::Positive ? base.leq(a.basic_type(), t) : base.leq(t, a.basic_type());
      if (ok) cand.push_back(b);
    }
    return Formula::basic(cand[pick(rng, cand.size())]);
  }
  Formula res = related_super(rng, a.result(), atoms, base, pol);
  Formula arg = related_super(rng, a.arg(), atoms, base, flip(pol));
  return a.kind() == Formula::Kind::Over ? Formula::over(res, arg) : Formula::under(arg, res);
}

// Feature term over a small vocabulary: conjunctions of feature paths ending
// in atoms or top, occasionally reusing a shared existential.
inline FeatureTerm feature_term(Rng& rng, std::size_t depth, const std::vector<std::string>& feats,
                                const std::vector<std::string>& atoms) {
  std::size_t parts = 1 + pick(rng, 3);
  std::optional<FeatureTerm> acc;
  for (std::size_t i = 0; i < parts; ++i) {
    FeatureTerm t = FeatureTerm::top();
    std::size_t roll = pick(rng, 10);
    if (depth > 0 && roll < 6) {
      t = FeatureTerm::feat(feats[pick(rng, feats.size())], feature_term(rng, depth - 1, feats, atoms));
    } else if (roll < 9) {
      t = FeatureTerm::atom(atoms[pick(rng, atoms.size())]);
    }
    acc = acc ? FeatureTerm::conj(*acc, t) : t;
  }
  return *acc;
}

// Occasionally wraps `t` so two feature paths share a node.
inline FeatureTerm with_sharing(Rng& rng, const FeatureTerm& t, const std::vector<std::string>& feats) {
  if (!coin(rng, 0.25)) return t;
  const auto& f = feats[pick(rng, feats.size())];
  const auto& g = feats[pick(rng, feats.size())];
  FeatureTerm v = FeatureTerm::var("Q");
  return FeatureTerm::exists("Q", FeatureTerm::conj(t, FeatureTerm::conj(FeatureTerm::feat(f, v), FeatureTerm::feat(g, FeatureTerm::feat(f, v)))));
}

}  // namespace lamsub::testgen

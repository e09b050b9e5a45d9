#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lamsub/feature_logic.hpp"
#include "lamsub/grammar.hpp"
#include "lamsub/prover.hpp"

namespace lamsub {

// Renames every layer variable and every free variable of the constraints
// by appending `suffix`; sharing inside the entry is kept. Basic
// occurrences without a variable receive fresh ones.
LexicalEntry instantiate(const LexicalEntry& e, const std::string& suffix);

// The global constraint, one value per search branch.
struct Environment {
  FeatureGraph phi;
};

struct LayeredSolution {
  ProofPtr proof;  // plain proof over the skeletons
  Environment env;
};

struct LayeredConfig {
  std::size_t max_solutions = 0;  // 0: all
  bool reverse_sites = false;     // enumerate left-rule sites right to left
};

struct LayeredStats {
  std::size_t axioms = 0;  // axiom attempts passing the entailment check
  std::size_t pruned = 0;  // of those, rejected by unification
};

// Search in L over an instantiated goal: antecedent entries in order and a
// succedent entry. The initial environment conjoins all their constraints.
std::vector<LayeredSolution> prove_layered(const std::vector<LexicalEntry>& antecedent, const LexicalEntry& goal,
                                           const BaseLogic& base, const LayeredConfig& cfg = {},
                                           LayeredStats* stats = nullptr);

struct LayeredReading {
  std::vector<LexicalEntry> items;  // instantiated, one per word
  LexicalEntry goal;
  LayeredSolution solution;
};

// Every reading of `words` over all lexical choices. Entry i of word k is
// instantiated with suffix "_<k>", the goal with "_g". Throws ConfigError
// for non-L grammars or when coordination particles occur.
std::vector<LayeredReading> layered_membership(const Grammar& g, const std::vector<std::string>& words,
                                               const LayeredConfig& cfg = {}, LayeredStats* stats = nullptr);

struct QueryResult {
  enum class Kind { Atom, Var, Top };
  Kind kind;
  std::string text;  // atom name or representative variable
};

// Follows `path` from `var` in the environment. DomainError when `var` is
// unknown or the path runs through an atom.
QueryResult query_env(const Environment& env, const std::string& var, const std::vector<std::string>& path);

// Rendering keyed on the named variables; equal for alpha-equivalent
// environments over the same names.
std::string canonical_env(const Environment& env);

}  // namespace lamsub

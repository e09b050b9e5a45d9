#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "lamsub/base_logic.hpp"
#include "lamsub/formula.hpp"

namespace lamsub {

enum class RuleName { Ax, SlashL, SlashR, BackslashL, BackslashR, Cut, StrengthenL, WeakenR, Coord };

std::string_view to_string(RuleName r);
std::optional<RuleName> rule_from_string(std::string_view s);

struct Proof;
using ProofPtr = std::shared_ptr<const Proof>;

// For /L and \L the site addresses the sub-G-term (A/B, V) resp. (V, B\A)
// in the conclusion's antecedent; for Cut it addresses V.
struct Proof {
  RuleName rule;
  Sequent conclusion;
  std::vector<ProofPtr> premises;
  Occurrence site;
};

struct SearchConfig {
  Regime regime = Regime::L;
  bool allow_cut = false;
  std::size_t cut_depth_bound = 0;
  bool memoize = true;
  // Reject goals whose atom counts don't balance. Sound in all four
  // regimes: counts are per class of base types linked by the order.
  bool count_check = true;
};

struct SearchStats {
  std::size_t goals = 0;      // distinct goals expanded
  std::size_t memo_hits = 0;
  std::size_t count_pruned = 0;
};

// Backward proof search. One instance per search thread; the memo table is
// scoped to the instance, hence to one regime and one base logic.
class Prover {
 public:
  Prover(const BaseLogic& base, SearchConfig cfg);

  // Null when not provable.
  ProofPtr prove(const Sequent& s);

  const SearchConfig& config() const { return cfg_; }
  const SearchStats& stats() const { return stats_; }

 private:
  ProofPtr seq(std::vector<Formula> items, const Formula& goal, std::size_t budget);
  ProofPtr seq_expand(const std::vector<Formula>& items, const Formula& goal, std::size_t budget);
  ProofPtr tree(const GTerm& u, const Formula& goal, std::size_t budget);
  ProofPtr tree_expand(const GTerm& u, const Formula& goal, std::size_t budget);
  bool axiom(const Formula& a, const Formula& goal) const;
  void index_classes(const std::vector<Formula>& fs);
  bool balanced(const std::vector<Formula>& items, const Formula& goal);

  const BaseLogic& base_;
  SearchConfig cfg_;
  std::vector<Formula> cut_formulae_;
  std::map<BasicType, std::size_t> class_of_;
  std::size_t classes_ = 0;
  std::unordered_map<std::string, ProofPtr> memo_;
  SearchStats stats_;
};

ProofPtr prove(const Sequent& s, const SearchConfig& cfg, const BaseLogic& base);
// Same search with Cut enabled; cut formulae come from the subformula
// closure of `s`.
ProofPtr prove_with_cut(const Sequent& s, std::size_t depth_bound, Regime r, const BaseLogic& base);

// Re-validates every node against the rule schemata. Returns a description
// of the first defect, or nullopt when the proof is sound.
std::optional<std::string> check_proof(const Proof& p, Regime r, const BaseLogic& base);
// Conclusion equal to `goal` modulo the regime and every node valid.
bool proves(const Proof& p, const Sequent& goal, Regime r, const BaseLogic& base);

std::size_t non_axiom_nodes(const Proof& p);
std::size_t connective_count(const Sequent& s);

// Admissible rules, realised by fresh search. A failed search throws
// DomainError: it would refute admissibility.
//   strengthen-L: from p : U[B] => C and A <= B, a proof of U[A] => C.
ProofPtr check_strengthen_left(const Proof& p, const Occurrence& occ, const Formula& a, Regime r,
                               const BaseLogic& base);
//   weaken-R: from p : U => C and C <= C', a proof of U => C'.
ProofPtr check_weaken_right(const Proof& p, const Formula& c2, Regime r, const BaseLogic& base);
//   A <= B gives A => B.
ProofPtr check_subtype_derivable(const Formula& a, const Formula& b, Regime r, const BaseLogic& base);

// One node per line, children indented by two spaces.
std::string proof_to_text(const Proof& p, Regime r);
nlohmann::json proof_to_json(const Proof& p);
// Basic types are read back verbatim (no base-logic canonicalisation).
ProofPtr proof_from_json(const nlohmann::json& j);

}  // namespace lamsub

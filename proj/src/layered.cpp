#include "lamsub/layered.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <set>

#include "lamsub/error.hpp"

namespace lamsub {

namespace {

FeatureTerm rename(const FeatureTerm& t, const std::string& suffix, const std::set<std::string>& bound) {
  using K = FeatureTerm::Kind;
  switch (t.kind()) {
    case K::Var:
      return bound.contains(t.name()) ? t : FeatureTerm::var(t.name() + suffix);
    case K::Atom:
    case K::Top:
    case K::Bottom:
      return t;
    case K::Feat:
      return FeatureTerm::feat(t.name(), rename(t.body(), suffix, bound));
    case K::Exists: {
      auto inner = bound;
      inner.insert(t.name());
      return FeatureTerm::exists(t.name(), rename(t.body(), suffix, inner));
    }
    case K::Conj:
      return FeatureTerm::conj(rename(t.body(), suffix, bound), rename(t.rhs(), suffix, bound));
  }
  return t;
}

// Formula with a layer variable on each basic node.
struct AF;
using AFP = std::shared_ptr<const AF>;
struct AF {
  Formula f;
  std::string var;
  AFP result, arg;
};

AFP annotate(const Formula& f, const std::map<Occurrence, std::string>& vars, Occurrence& at) {
  auto node = std::make_shared<AF>(AF{f, {}, nullptr, nullptr});
  if (f.is_basic()) {
    auto it = vars.find(at);
    if (it == vars.end()) throw DomainError("basic occurrence without layer variable in " + f.key());
    node->var = it->second;
    return node;
  }
  at.path.push_back(Step::Result);
  node->result = annotate(f.result(), vars, at);
  at.path.back() = Step::Arg;
  node->arg = annotate(f.arg(), vars, at);
  at.path.pop_back();
  return node;
}

AFP annotate(const LexicalEntry& e) {
  Occurrence at;
  return annotate(e.type, e.vars, at);
}

ProofPtr make(RuleName rule, GTerm ant, Formula succ, std::vector<ProofPtr> premises = {}, Occurrence site = {}) {
  return std::make_shared<const Proof>(
      Proof{rule, Sequent{std::move(ant), std::move(succ)}, std::move(premises), std::move(site)});
}

GTerm fold(const std::vector<AFP>& items, std::size_t from, std::size_t to) {
  std::vector<GTerm> parts;
  for (std::size_t i = from; i < to; ++i) parts.push_back(GTerm::leaf(items[i]->f));
  return fold_left(parts);
}

using Sink = std::function<bool(const ProofPtr&, const FeatureGraph&)>;  // true: stop

class LayeredSearch {
 public:
  LayeredSearch(const BaseLogic& base, const LayeredConfig& cfg, LayeredStats* stats)
      : base_(base), cfg_(cfg), stats_(stats) {}

  // Calls `sink` for every derivation of items => goal extending `env`.
  bool search(const std::vector<AFP>& items, const AFP& goal, const FeatureGraph& env, const Sink& sink) {
    const std::size_t n = items.size();
    GTerm ant = fold(items, 0, n);

    if (n == 1 && items[0]->f.is_basic() && goal->f.is_basic() &&
        base_.leq(items[0]->f.basic_type(), goal->f.basic_type())) {
      if (stats_) ++stats_->axioms;
      FeatureGraph next = env;
      if (next.unify(next.named(items[0]->var), next.named(goal->var))) {
        if (sink(make(RuleName::Ax, ant, goal->f), next)) return true;
      } else if (stats_) {
        ++stats_->pruned;
      }
    }

    if (goal->f.kind() == Formula::Kind::Over) {
      auto ext = items;
      ext.push_back(goal->arg);
      if (search(ext, goal->result, env, [&](const ProofPtr& p, const FeatureGraph& e) {
            return sink(make(RuleName::SlashR, ant, goal->f, {p}), e);
          }))
        return true;
    }
    if (goal->f.kind() == Formula::Kind::Under) {
      std::vector<AFP> ext{goal->arg};
      ext.insert(ext.end(), items.begin(), items.end());
      if (search(ext, goal->result, env, [&](const ProofPtr& p, const FeatureGraph& e) {
            return sink(make(RuleName::BackslashR, ant, goal->f, {p}), e);
          }))
        return true;
    }

    for (std::size_t step = 0; step < n; ++step) {
      std::size_t i = cfg_.reverse_sites ? n - 1 - step : step;
      const AFP& fun = items[i];
      if (fun->f.is_basic()) continue;
      const bool over = fun->f.kind() == Formula::Kind::Over;
      // Candidate windows V = items[from, to).
      std::vector<std::pair<std::size_t, std::size_t>> windows;
      if (over) {
        for (std::size_t j = i + 2; j <= n; ++j) windows.emplace_back(i + 1, j);
      } else {
        for (std::size_t k = i; k-- > 0;) windows.emplace_back(k, i);
      }
      if (cfg_.reverse_sites) std::reverse(windows.begin(), windows.end());
      for (auto [from, to] : windows) {
        std::vector<AFP> v(items.begin() + static_cast<std::ptrdiff_t>(from), items.begin() + static_cast<std::ptrdiff_t>(to));
        std::vector<AFP> ctx;
        std::size_t lo = over ? i : from;
        std::size_t hi = over ? to : i + 1;
        ctx.insert(ctx.end(), items.begin(), items.begin() + static_cast<std::ptrdiff_t>(lo));
        ctx.push_back(fun->result);
        ctx.insert(ctx.end(), items.begin() + static_cast<std::ptrdiff_t>(hi), items.end());
        GTerm vt = fold(v, 0, v.size());
        GTerm active = over ? GTerm::node(GTerm::leaf(fun->f), vt) : GTerm::node(vt, GTerm::leaf(fun->f));
        std::vector<GTerm> parts;
        for (std::size_t m = 0; m < lo; ++m) parts.push_back(GTerm::leaf(items[m]->f));
        parts.push_back(active);
        for (std::size_t m = hi; m < n; ++m) parts.push_back(GTerm::leaf(items[m]->f));
        GTerm conc = fold_left(parts);
        Occurrence site = fold_path(parts.size(), lo);
        RuleName rule = over ? RuleName::SlashL : RuleName::BackslashL;
        bool stop = search(v, fun->arg, env, [&](const ProofPtr& p1, const FeatureGraph& e1) {
          return search(ctx, goal, e1, [&](const ProofPtr& p2, const FeatureGraph& e2) {
            return sink(make(rule, conc, goal->f, {p1, p2}, site), e2);
          });
        });
        if (stop) return true;
      }
    }
    return false;
  }

 private:
  const BaseLogic& base_;
  const LayeredConfig& cfg_;
  LayeredStats* stats_;
};

}  // namespace

LexicalEntry instantiate(const LexicalEntry& e, const std::string& suffix) {
  LexicalEntry out{e.type, {}, {}};
  for (const auto& [occ, v] : e.vars) out.vars.emplace(occ, v + suffix);
  // unannotated occurrences (plain grammars) get their own variables
  std::size_t k = 0;
  for (const auto& bo : basic_occurrences(e.type))
    if (!out.vars.contains(bo.occ)) out.vars.emplace(bo.occ, "_u" + std::to_string(k++) + suffix);
  for (const auto& [v, t] : e.constraints) out.constraints.emplace_back(v + suffix, rename(t, suffix, {}));
  return out;
}

std::vector<LayeredSolution> prove_layered(const std::vector<LexicalEntry>& antecedent, const LexicalEntry& goal,
                                           const BaseLogic& base, const LayeredConfig& cfg, LayeredStats* stats) {
  if (antecedent.empty()) throw DomainError("empty antecedent");
  FeatureGraph env;
  std::vector<AFP> items;
  auto load = [&](const LexicalEntry& e) {
    for (const auto& [occ, v] : e.vars) env.named(v);
    for (const auto& [v, t] : e.constraints) env.add(env.named(v), t);
  };
  for (const auto& e : antecedent) {
    load(e);
    items.push_back(annotate(e));
  }
  load(goal);
  std::vector<LayeredSolution> out;
  if (!env.consistent()) return out;
  LayeredSearch search(base, cfg, stats);
  search.search(items, annotate(goal), env, [&](const ProofPtr& p, const FeatureGraph& e) {
    out.push_back({p, Environment{e}});
    return cfg.max_solutions != 0 && out.size() >= cfg.max_solutions;
  });
  return out;
}

std::vector<LayeredReading> layered_membership(const Grammar& g, const std::vector<std::string>& words,
                                               const LayeredConfig& cfg, LayeredStats* stats) {
  if (g.regime != Regime::L) throw ConfigError("layered search is available for regime L only");
  if (words.empty()) throw DomainError("empty sentence");
  std::vector<const std::vector<LexicalEntry>*> choices;
  for (const auto& w : words) {
    if (g.conj_markers.contains(w)) throw ConfigError("coordination is disabled in layered mode");
    auto it = g.lexicon.find(w);
    if (it == g.lexicon.end()) throw DomainError("unknown word '" + w + "'");
    choices.push_back(&it->second);
  }
  LexicalEntry goal = instantiate(*g.goal, "_g");
  std::vector<LayeredReading> out;
  std::vector<std::size_t> idx(words.size(), 0);
  for (;;) {
    std::vector<LexicalEntry> items;
    for (std::size_t k = 0; k < words.size(); ++k)
      items.push_back(instantiate((*choices[k])[idx[k]], "_" + std::to_string(k)));
    LayeredConfig local = cfg;
    if (cfg.max_solutions) local.max_solutions = cfg.max_solutions - out.size();
    for (auto& s : prove_layered(items, goal, *g.base, local, stats)) out.push_back({items, goal, std::move(s)});
    if (cfg.max_solutions && out.size() >= cfg.max_solutions) return out;
    std::size_t k = words.size();
    while (k > 0) {
      --k;
      if (++idx[k] < choices[k]->size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

QueryResult query_env(const Environment& env, const std::string& var, const std::vector<std::string>& path) {
  auto start = env.phi.lookup(var);
  if (!start) throw DomainError("variable '" + var + "' is not in the environment");
  FeatureGraph::Node n = *start;
  for (const auto& f : path) {
    if (env.phi.atom(n)) throw DomainError("path through atom '" + *env.phi.atom(n) + "' at feature " + f);
    const auto& feats = env.phi.features(n);
    auto it = feats.find(f);
    if (it == feats.end()) return {QueryResult::Kind::Top, "top"};
    n = it->second;
  }
  if (const auto& a = env.phi.atom(n)) return {QueryResult::Kind::Atom, *a};
  return {QueryResult::Kind::Var, env.phi.display_name(n, "_")};
}

std::string canonical_env(const Environment& env) {
  std::string out;
  for (const auto& [name, node] : env.phi.names()) {
    if (!out.empty()) out += "; ";
    out += name + " = " + to_string(term_of(env.phi, node));
  }
  return out;
}

}  // namespace lamsub

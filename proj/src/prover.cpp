#include "lamsub/prover.hpp"

#include <algorithm>
#include <set>

#include "lamsub/error.hpp"
#include "lamsub/type_syntax.hpp"

namespace lamsub {

std::string_view to_string(RuleName r) {
  switch (r) {
    case RuleName::Ax: return "Ax";
    case RuleName::SlashL: return "/L";
    case RuleName::SlashR: return "/R";
    case RuleName::BackslashL: return "\\L";
    case RuleName::BackslashR: return "\\R";
    case RuleName::Cut: return "Cut";
    case RuleName::StrengthenL: return "StrengthenL";
    case RuleName::WeakenR: return "WeakenR";
    case RuleName::Coord: return "Coord";
  }
  return "?";
}

std::optional<RuleName> rule_from_string(std::string_view s) {
  for (RuleName r : {RuleName::Ax, RuleName::SlashL, RuleName::SlashR, RuleName::BackslashL,
                     RuleName::BackslashR, RuleName::Cut, RuleName::StrengthenL, RuleName::WeakenR,
                     RuleName::Coord})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

namespace {

ProofPtr make(RuleName rule, GTerm ant, Formula succ, std::vector<ProofPtr> premises = {},
              Occurrence site = {}) {
  return std::make_shared<const Proof>(
      Proof{rule, Sequent{std::move(ant), std::move(succ)}, std::move(premises), std::move(site)});
}

std::vector<GTerm> leaves_of(const std::vector<Formula>& fs, std::size_t from, std::size_t to) {
  std::vector<GTerm> out;
  for (std::size_t i = from; i < to; ++i) out.push_back(GTerm::leaf(fs[i]));
  return out;
}

std::vector<Formula> slice(const std::vector<Formula>& fs, std::size_t from, std::size_t to) {
  return {fs.begin() + static_cast<std::ptrdiff_t>(from), fs.begin() + static_cast<std::ptrdiff_t>(to)};
}

// items[0..from) ++ [mid] ++ items[to..), folded, with the path to `mid`.
std::pair<GTerm, Occurrence> splice(const std::vector<Formula>& items, std::size_t from, std::size_t to,
                                    const GTerm& mid) {
  std::vector<GTerm> parts = leaves_of(items, 0, from);
  parts.push_back(mid);
  for (std::size_t i = to; i < items.size(); ++i) parts.push_back(GTerm::leaf(items[i]));
  return {fold_left(parts), fold_path(parts.size(), from)};
}

// Every subset of a sorted multiset, once per distinct sub-multiset: for
// each run of equal items, choose how many to take.
void sub_multisets(const std::vector<Formula>& items, const auto& visit) {
  std::vector<std::pair<std::size_t, std::size_t>> runs;  // start, length
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j] == items[i]) ++j;
    runs.emplace_back(i, j - i);
    i = j;
  }
  std::vector<std::size_t> take(runs.size(), 0);
  for (;;) {
    std::vector<Formula> in, out;
    for (std::size_t r = 0; r < runs.size(); ++r) {
      auto [start, len] = runs[r];
      for (std::size_t k = 0; k < len; ++k) (k < take[r] ? in : out).push_back(items[start + k]);
    }
    if (!in.empty() && visit(in, out)) return;
    std::size_t r = 0;
    while (r < runs.size() && take[r] == runs[r].second) take[r++] = 0;
    if (r == runs.size()) return;
    ++take[r];
  }
}

void subterm_paths(const GTerm& t, Occurrence& at, std::vector<Occurrence>& out) {
  out.push_back(at);
  if (t.is_leaf()) return;
  at.path.push_back(Step::Left);
  subterm_paths(t.left(), at, out);
  at.path.back() = Step::Right;
  subterm_paths(t.right(), at, out);
  at.path.pop_back();
}

std::vector<Occurrence> subterm_paths(const GTerm& t) {
  std::vector<Occurrence> out;
  Occurrence at;
  subterm_paths(t, at, out);
  return out;
}

}  // namespace

Prover::Prover(const BaseLogic& base, SearchConfig cfg) : base_(base), cfg_(cfg) {}

bool Prover::axiom(const Formula& a, const Formula& goal) const {
  return a.is_basic() && goal.is_basic() && base_.leq(a.basic_type(), goal.basic_type());
}

namespace {

void collect_basics(const Formula& f, std::vector<BasicType>& out) {
  if (f.is_basic()) {
    out.push_back(f.basic_type());
    return;
  }
  collect_basics(f.result(), out);
  collect_basics(f.arg(), out);
}

void add_counts(const Formula& f, int sign, const std::map<BasicType, std::size_t>& cls, std::vector<int>& acc) {
  if (f.is_basic()) {
    acc[cls.at(f.basic_type())] += sign;
    return;
  }
  add_counts(f.result(), sign, cls, acc);
  add_counts(f.arg(), -sign, cls, acc);
}

}  // namespace

// Classes: connected components of the order restricted to the base types
// that can occur during the search.
void Prover::index_classes(const std::vector<Formula>& fs) {
  std::vector<BasicType> bs;
  for (const auto& f : fs) collect_basics(f, bs);
  std::sort(bs.begin(), bs.end());
  bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
  std::vector<std::size_t> parent(bs.size());
  for (std::size_t i = 0; i < bs.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < bs.size(); ++i)
    for (std::size_t j = i + 1; j < bs.size(); ++j)
      if (find(i) != find(j) && (base_.leq(bs[i], bs[j]) || base_.leq(bs[j], bs[i]))) parent[find(i)] = find(j);
  class_of_.clear();
  std::map<std::size_t, std::size_t> number;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    auto [it, fresh] = number.emplace(find(i), number.size());
    class_of_.emplace(bs[i], it->second);
  }
  classes_ = number.size();
}

bool Prover::balanced(const std::vector<Formula>& items, const Formula& goal) {
  if (!cfg_.count_check) return true;
  std::vector<int> acc(classes_, 0);
  add_counts(goal, 1, class_of_, acc);
  for (const auto& f : items) add_counts(f, -1, class_of_, acc);
  for (int c : acc)
    if (c != 0) {
      ++stats_.count_pruned;
      return false;
    }
  return true;
}

ProofPtr Prover::prove(const Sequent& s) {
  std::vector<Formula> all = s.antecedent.leaves();
  all.push_back(s.succedent);
  index_classes(all);
  if (cfg_.allow_cut) {
    FormulaSet closure = subformula_closure(all);
    cut_formulae_.assign(closure.begin(), closure.end());
  } else {
    cut_formulae_.clear();
  }
  std::size_t budget = cfg_.allow_cut ? cfg_.cut_depth_bound : 0;
  if (is_associative(cfg_.regime)) return seq(s.antecedent.leaves(), s.succedent, budget);
  return tree(s.antecedent, s.succedent, budget);
}

// ---------------------------------------------------------------------------
// L and LP: antecedents as sequences (sorted for LP).

ProofPtr Prover::seq(std::vector<Formula> items, const Formula& goal, std::size_t budget) {
  if (cfg_.regime == Regime::LP) std::sort(items.begin(), items.end());
  std::string key;
  if (cfg_.memoize) {
    for (const auto& f : items) key += f.key() + ",";
    key += "=>" + goal.key() + "#" + std::to_string(budget);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
  }
  ++stats_.goals;
  ProofPtr p = balanced(items, goal) ? seq_expand(items, goal, budget) : nullptr;
  if (cfg_.memoize) memo_.emplace(std::move(key), p);
  return p;
}

ProofPtr Prover::seq_expand(const std::vector<Formula>& items, const Formula& goal, std::size_t budget) {
  const bool perm = cfg_.regime == Regime::LP;
  const std::size_t n = items.size();
  GTerm ant = fold_left(items);

  if (n == 1 && axiom(items[0], goal)) return make(RuleName::Ax, ant, goal);

  if (goal.kind() == Formula::Kind::Over) {
    auto ext = items;
    ext.push_back(goal.arg());
    if (auto p = seq(ext, goal.result(), budget))
      return make(RuleName::SlashR, ant, goal, {p});
  }
  if (goal.kind() == Formula::Kind::Under) {
    std::vector<Formula> ext{goal.arg()};
    ext.insert(ext.end(), items.begin(), items.end());
    if (auto p = seq(ext, goal.result(), budget))
      return make(RuleName::BackslashR, ant, goal, {p});
  }

  for (std::size_t i = 0; i < n; ++i) {
    const Formula& f = items[i];
    if (f.is_basic()) continue;
    const bool over = f.kind() == Formula::Kind::Over;
    const RuleName rule = over ? RuleName::SlashL : RuleName::BackslashL;
    if (perm) {
      if (i > 0 && items[i - 1] == f) continue;  // same functor, same outcome
      std::vector<Formula> rest = items;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      ProofPtr found;
      sub_multisets(rest, [&](const std::vector<Formula>& v, const std::vector<Formula>& gamma) {
        auto p1 = seq(v, f.arg(), budget);
        if (!p1) return false;
        auto ctx = gamma;
        ctx.push_back(f.result());
        auto p2 = seq(ctx, goal, budget);
        if (!p2) return false;
        GTerm active = over ? GTerm::node(GTerm::leaf(f), fold_left(v)) : GTerm::node(fold_left(v), GTerm::leaf(f));
        std::vector<GTerm> parts{active};
        for (const auto& g : gamma) parts.push_back(GTerm::leaf(g));
        found = make(rule, fold_left(parts), goal, {p1, p2}, fold_path(parts.size(), 0));
        return true;
      });
      if (found) return found;
      continue;
    }
    if (over) {
      for (std::size_t j = i + 2; j <= n; ++j) {  // V = items[i+1, j)
        auto v = slice(items, i + 1, j);
        auto p1 = seq(v, f.arg(), budget);
        if (!p1) continue;
        auto ctx = slice(items, 0, i);
        ctx.push_back(f.result());
        for (std::size_t k = j; k < n; ++k) ctx.push_back(items[k]);
        auto p2 = seq(ctx, goal, budget);
        if (!p2) continue;
        auto [conc, site] = splice(items, i, j, GTerm::node(GTerm::leaf(f), fold_left(v)));
        return make(rule, conc, goal, {p1, p2}, site);
      }
    } else {
      for (std::size_t k = i; k-- > 0;) {  // V = items[k, i)
        auto v = slice(items, k, i);
        auto p1 = seq(v, f.arg(), budget);
        if (!p1) continue;
        auto ctx = slice(items, 0, k);
        ctx.push_back(f.result());
        for (std::size_t m = i + 1; m < n; ++m) ctx.push_back(items[m]);
        auto p2 = seq(ctx, goal, budget);
        if (!p2) continue;
        auto [conc, site] = splice(items, k, i + 1, GTerm::node(fold_left(v), GTerm::leaf(f)));
        return make(rule, conc, goal, {p1, p2}, site);
      }
    }
  }

  if (budget == 0) return nullptr;
  auto try_cut = [&](const std::vector<Formula>& v, const std::vector<Formula>& ctx_before,
                     const std::vector<Formula>& ctx_after, GTerm conc, Occurrence site) -> ProofPtr {
    for (const auto& a : cut_formulae_) {
      auto p1 = seq(v, a, budget - 1);
      if (!p1) continue;
      auto ctx = ctx_before;
      ctx.push_back(a);
      ctx.insert(ctx.end(), ctx_after.begin(), ctx_after.end());
      auto p2 = seq(ctx, goal, budget - 1);
      if (p2) return make(RuleName::Cut, conc, goal, {p1, p2}, site);
    }
    return nullptr;
  };
  if (perm) {
    ProofPtr found;
    sub_multisets(items, [&](const std::vector<Formula>& v, const std::vector<Formula>& gamma) {
      std::vector<GTerm> parts{fold_left(v)};
      for (const auto& g : gamma) parts.push_back(GTerm::leaf(g));
      found = try_cut(v, {}, gamma, fold_left(parts), fold_path(parts.size(), 0));
      return found != nullptr;
    });
    return found;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) {
      auto v = slice(items, i, j);
      auto [conc, site] = splice(items, i, j, fold_left(v));
      if (auto p = try_cut(v, slice(items, 0, i), slice(items, j, n), conc, site)) return p;
    }
  }
  return nullptr;
}

// ---------------------------------------------------------------------------
// NL and NLP: antecedents as trees (NLP memoised up to child swaps).

ProofPtr Prover::tree(const GTerm& u, const Formula& goal, std::size_t budget) {
  std::string key;
  if (cfg_.memoize) {
    key = canonical_key(u, cfg_.regime) + "=>" + goal.key() + "#" + std::to_string(budget);
    if (auto it = memo_.find(key); it != memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
  }
  ++stats_.goals;
  ProofPtr p = balanced(u.leaves(), goal) ? tree_expand(u, goal, budget) : nullptr;
  if (cfg_.memoize) memo_.emplace(std::move(key), p);
  return p;
}

ProofPtr Prover::tree_expand(const GTerm& u, const Formula& goal, std::size_t budget) {
  const bool perm = cfg_.regime == Regime::NLP;

  if (u.is_leaf() && axiom(u.formula(), goal)) return make(RuleName::Ax, u, goal);

  if (goal.kind() == Formula::Kind::Over) {
    if (auto p = tree(GTerm::node(u, GTerm::leaf(goal.arg())), goal.result(), budget))
      return make(RuleName::SlashR, u, goal, {p});
  }
  if (goal.kind() == Formula::Kind::Under) {
    if (auto p = tree(GTerm::node(GTerm::leaf(goal.arg()), u), goal.result(), budget))
      return make(RuleName::BackslashR, u, goal, {p});
  }

  std::vector<Occurrence> paths = subterm_paths(u);
  for (const auto& at : paths) {
    const GTerm& s = subterm_at(u, at);
    if (s.is_leaf()) continue;
    // (functor, V, functor on the left?)
    struct Option {
      Formula functor;
      GTerm v;
      bool functor_left;
    };
    std::vector<Option> options;
    auto functor = [](const GTerm& t, Formula::Kind k) { return t.is_leaf() && t.formula().kind() == k; };
    if (functor(s.left(), Formula::Kind::Over)) options.push_back({s.left().formula(), s.right(), true});
    if (perm && functor(s.right(), Formula::Kind::Over)) options.push_back({s.right().formula(), s.left(), true});
    if (functor(s.right(), Formula::Kind::Under)) options.push_back({s.right().formula(), s.left(), false});
    if (perm && functor(s.left(), Formula::Kind::Under)) options.push_back({s.left().formula(), s.right(), false});
    for (const auto& o : options) {
      auto p1 = tree(o.v, o.functor.arg(), budget);
      if (!p1) continue;
      auto p2 = tree(replace_at(u, at, GTerm::leaf(o.functor.result())), goal, budget);
      if (!p2) continue;
      GTerm active = o.functor_left ? GTerm::node(GTerm::leaf(o.functor), o.v)
                                    : GTerm::node(o.v, GTerm::leaf(o.functor));
      RuleName rule = o.functor_left ? RuleName::SlashL : RuleName::BackslashL;
      return make(rule, replace_at(u, at, active), goal, {p1, p2}, at);
    }
  }

  if (budget == 0) return nullptr;
  for (const auto& at : paths) {
    const GTerm& v = subterm_at(u, at);
    for (const auto& a : cut_formulae_) {
      auto p1 = tree(v, a, budget - 1);
      if (!p1) continue;
      auto p2 = tree(replace_at(u, at, GTerm::leaf(a)), goal, budget - 1);
      if (p2) return make(RuleName::Cut, u, goal, {p1, p2}, at);
    }
  }
  return nullptr;
}

ProofPtr prove(const Sequent& s, const SearchConfig& cfg, const BaseLogic& base) {
  Prover p(base, cfg);
  return p.prove(s);
}

ProofPtr prove_with_cut(const Sequent& s, std::size_t depth_bound, Regime r, const BaseLogic& base) {
  return prove(s, SearchConfig{r, true, depth_bound, true}, base);
}

// ---------------------------------------------------------------------------
// Checking

namespace {

bool same_sequent(const Sequent& a, const Sequent& b, Regime r) {
  return a.succedent == b.succedent && canonical_key(a.antecedent, r) == canonical_key(b.antecedent, r);
}

std::optional<std::string> check_node(const Proof& p, Regime r, const BaseLogic& base) {
  const GTerm& u = p.conclusion.antecedent;
  const Formula& c = p.conclusion.succedent;
  auto arity = [&](std::size_t k) -> std::optional<std::string> {
    if (p.premises.size() != k) return std::string(to_string(p.rule)) + ": wrong number of premises";
    for (const auto& q : p.premises)
      if (!q) return std::string(to_string(p.rule)) + ": missing premise";
    return std::nullopt;
  };
  auto expect = [&](std::size_t i, const Sequent& want) -> std::optional<std::string> {
    if (same_sequent(p.premises[i]->conclusion, want, r)) return std::nullopt;
    return std::string(to_string(p.rule)) + ": premise " + std::to_string(i + 1) + " is " +
           to_string(p.premises[i]->conclusion, r) + ", expected " + to_string(want, r);
  };
  switch (p.rule) {
    case RuleName::Ax:
      if (auto e = arity(0)) return e;
      if (!u.is_leaf() || !u.formula().is_basic() || !c.is_basic()) return "Ax: not a basic sequent";
      if (!base.leq(u.formula().basic_type(), c.basic_type())) return "Ax: side condition fails";
      return std::nullopt;
    case RuleName::SlashR:
    case RuleName::BackslashR: {
      if (auto e = arity(1)) return e;
      bool over = p.rule == RuleName::SlashR;
      if (c.kind() != (over ? Formula::Kind::Over : Formula::Kind::Under))
        return std::string(to_string(p.rule)) + ": succedent has the wrong shape";
      GTerm ext = over ? GTerm::node(u, GTerm::leaf(c.arg())) : GTerm::node(GTerm::leaf(c.arg()), u);
      return expect(0, {ext, c.result()});
    }
    case RuleName::SlashL:
    case RuleName::BackslashL: {
      if (auto e = arity(2)) return e;
      bool over = p.rule == RuleName::SlashL;
      const GTerm& s = subterm_at(u, p.site);
      if (s.is_leaf()) return std::string(to_string(p.rule)) + ": site is a leaf";
      const GTerm& fun = over ? s.left() : s.right();
      const GTerm& v = over ? s.right() : s.left();
      if (!fun.is_leaf() || fun.formula().kind() != (over ? Formula::Kind::Over : Formula::Kind::Under))
        return std::string(to_string(p.rule)) + ": no functor at site";
      const Formula& f = fun.formula();
      if (auto e = expect(0, {v, f.arg()})) return e;
      return expect(1, {replace_at(u, p.site, GTerm::leaf(f.result())), c});
    }
    case RuleName::Cut: {
      if (auto e = arity(2)) return e;
      const GTerm& v = subterm_at(u, p.site);
      const Formula& a = p.premises[0]->conclusion.succedent;
      if (auto e = expect(0, {v, a})) return e;
      return expect(1, {replace_at(u, p.site, GTerm::leaf(a)), c});
    }
    default:
      return std::string(to_string(p.rule)) + ": not a sequent rule";
  }
}

std::size_t formula_connectives(const GTerm& t) {
  std::size_t n = 0;
  for (const auto& f : t.leaves()) n += f.connectives();
  return n;
}

}  // namespace

std::optional<std::string> check_proof(const Proof& p, Regime r, const BaseLogic& base) {
  std::vector<const Proof*> todo{&p};
  while (!todo.empty()) {
    const Proof* q = todo.back();
    todo.pop_back();
    try {
      if (auto e = check_node(*q, r, base)) return *e + " at " + to_string(q->conclusion, r);
    } catch (const DomainError& e) {
      return std::string(e.what()) + " at " + to_string(q->conclusion, r);
    }
    for (const auto& c : q->premises) todo.push_back(c.get());
  }
  return std::nullopt;
}

bool proves(const Proof& p, const Sequent& goal, Regime r, const BaseLogic& base) {
  return same_sequent(p.conclusion, goal, r) && !check_proof(p, r, base);
}

std::size_t non_axiom_nodes(const Proof& p) {
  std::size_t n = p.rule == RuleName::Ax ? 0 : 1;
  for (const auto& q : p.premises) n += non_axiom_nodes(*q);
  return n;
}

std::size_t connective_count(const Sequent& s) {
  return formula_connectives(s.antecedent) + s.succedent.connectives();
}

// ---------------------------------------------------------------------------
// Admissible rules

namespace {

ProofPtr reprove(const Sequent& s, Regime r, const BaseLogic& base, const char* what) {
  auto p = prove(s, SearchConfig{r, false, 0, true}, base);
  if (!p) throw DomainError(std::string(what) + ": admissibility violated for " + to_string(s, r));
  return p;
}

}  // namespace

ProofPtr check_strengthen_left(const Proof& p, const Occurrence& occ, const Formula& a, Regime r,
                               const BaseLogic& base) {
  const GTerm& at = subterm_at(p.conclusion.antecedent, occ);
  if (!at.is_leaf()) throw DomainError("strengthen-L: occurrence is not a formula");
  if (!subtype(a, at.formula(), base))
    throw DomainError("strengthen-L: " + to_string(a) + " is not a subtype of " + to_string(at.formula()));
  Sequent s{replace_at(p.conclusion.antecedent, occ, GTerm::leaf(a)), p.conclusion.succedent};
  return reprove(s, r, base, "strengthen-L");
}

ProofPtr check_weaken_right(const Proof& p, const Formula& c2, Regime r, const BaseLogic& base) {
  if (!subtype(p.conclusion.succedent, c2, base))
    throw DomainError("weaken-R: " + to_string(p.conclusion.succedent) + " is not a subtype of " + to_string(c2));
  return reprove(Sequent{p.conclusion.antecedent, c2}, r, base, "weaken-R");
}

ProofPtr check_subtype_derivable(const Formula& a, const Formula& b, Regime r, const BaseLogic& base) {
  if (!subtype(a, b, base)) throw DomainError(to_string(a) + " is not a subtype of " + to_string(b));
  return reprove(Sequent{GTerm::leaf(a), b}, r, base, "subtype");
}

// ---------------------------------------------------------------------------
// Serialisation

namespace {

void text_rec(const Proof& p, Regime r, std::size_t depth, std::string& out) {
  out.append(2 * depth, ' ');
  out += to_string(p.rule);
  out += "  ";
  out += to_string(p.conclusion, r);
  out += '\n';
  for (const auto& q : p.premises) text_rec(*q, r, depth + 1, out);
}

}  // namespace

std::string proof_to_text(const Proof& p, Regime r) {
  std::string out;
  text_rec(p, r, 0, out);
  return out;
}

nlohmann::json proof_to_json(const Proof& p) {
  nlohmann::json site = nlohmann::json::array();
  for (Step s : p.site.path) site.push_back(s == Step::Left ? "left" : "right");
  nlohmann::json premises = nlohmann::json::array();
  for (const auto& q : p.premises) premises.push_back(proof_to_json(*q));
  return {
      {"rule", std::string(to_string(p.rule))},
      {"conclusion",
       {{"antecedent", to_bracketed_string(p.conclusion.antecedent)},
        {"succedent", to_string(p.conclusion.succedent)}}},
      {"site", site},
      {"premises", premises},
  };
}

ProofPtr proof_from_json(const nlohmann::json& j) {
  auto rule = rule_from_string(j.at("rule").get<std::string>());
  if (!rule) throw ParseError("unknown rule '" + j.at("rule").get<std::string>() + "'", 0);
  const auto& c = j.at("conclusion");
  GTerm ant = parse_gterm(c.at("antecedent").get<std::string>(), nullptr, Regime::NL);
  Formula succ = parse_formula(c.at("succedent").get<std::string>());
  Occurrence site;
  for (const auto& s : j.at("site")) {
    auto step = s.get<std::string>();
    if (step == "left") {
      site.path.push_back(Step::Left);
    } else if (step == "right") {
      site.path.push_back(Step::Right);
    } else {
      throw ParseError("bad site step '" + step + "'", 0);
    }
  }
  std::vector<ProofPtr> premises;
  for (const auto& q : j.at("premises")) premises.push_back(proof_from_json(q));
  return make(*rule, ant, succ, std::move(premises), std::move(site));
}

}  // namespace lamsub

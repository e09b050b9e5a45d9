#include "lamsub/feature_logic.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <limits>
#include <set>

#include "lamsub/error.hpp"

namespace lamsub {

// ---------------------------------------------------------------------------
// Terms

FeatureTerm FeatureTerm::var(std::string name) {
  return FeatureTerm(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr}));
}

FeatureTerm FeatureTerm::atom(std::string name) {
  return FeatureTerm(std::make_shared<const Node>(Node{Kind::Atom, std::move(name), nullptr}));
}

FeatureTerm FeatureTerm::top() {
  return FeatureTerm(std::make_shared<const Node>(Node{Kind::Top, "top", nullptr}));
}

FeatureTerm FeatureTerm::bottom() {
  return FeatureTerm(std::make_shared<const Node>(Node{Kind::Bottom, "bot", nullptr}));
}

FeatureTerm FeatureTerm::feat(std::string feature, FeatureTerm body) {
  using Pair = std::pair<FeatureTerm, std::optional<FeatureTerm>>;
  return FeatureTerm(std::make_shared<const Node>(
      Node{Kind::Feat, std::move(feature), std::make_shared<const Pair>(std::move(body), std::nullopt)}));
}

FeatureTerm FeatureTerm::exists(std::string var, FeatureTerm body) {
  using Pair = std::pair<FeatureTerm, std::optional<FeatureTerm>>;
  return FeatureTerm(std::make_shared<const Node>(
      Node{Kind::Exists, std::move(var), std::make_shared<const Pair>(std::move(body), std::nullopt)}));
}

FeatureTerm FeatureTerm::conj(FeatureTerm a, FeatureTerm b) {
  using Pair = std::pair<FeatureTerm, std::optional<FeatureTerm>>;
  return FeatureTerm(std::make_shared<const Node>(
      Node{Kind::Conj, "&", std::make_shared<const Pair>(std::move(a), std::move(b))}));
}

namespace {

bool is_variable_name(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s.front()));
}

class FeatureParser {
 public:
  explicit FeatureParser(std::string_view text) : text_(text) {}

  FeatureTerm parse() {
    FeatureTerm t = term();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return t;
  }

 private:
  FeatureTerm term() {
    FeatureTerm lhs = factor();
    while (accept('&')) lhs = FeatureTerm::conj(lhs, factor());
    return lhs;
  }

  FeatureTerm factor() {
    skip_ws();
    if (accept('(')) {
      FeatureTerm inner = term();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    std::string id = identifier();
    skip_ws();
    if (accept(':')) return FeatureTerm::feat(id, factor());
    if (id == "top") return FeatureTerm::top();
    if (id == "bot") return FeatureTerm::bottom();
    if (id == "exists") {
      std::vector<std::string> vars;
      skip_ws();
      while (pos_ < text_.size() && std::isupper(static_cast<unsigned char>(text_[pos_]))) {
        vars.push_back(identifier());
        skip_ws();
      }
      if (vars.empty()) fail("expected variable after 'exists'");
      if (!accept('(')) fail("expected '(' after exists variables");
      FeatureTerm body = term();
      if (!accept(')')) fail("expected ')'");
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = FeatureTerm::exists(*it, body);
      return body;
    }
    return is_variable_name(id) ? FeatureTerm::var(id) : FeatureTerm::atom(id);
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
            text_[pos_] == '-'))
      ++pos_;
    if (start == pos_) fail("expected identifier");
    if (!std::isalpha(static_cast<unsigned char>(text_[start])))
      fail("identifier must start with a letter");
    return std::string(text_.substr(start, pos_ - start));
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                         std::string(text_) + "'",
                     pos_ + 1);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FeatureTerm parse_feature_term(std::string_view text) { return FeatureParser(text).parse(); }

std::string to_string(const FeatureTerm& t) {
  using K = FeatureTerm::Kind;
  switch (t.kind()) {
    case K::Var:
    case K::Atom:
    case K::Top:
    case K::Bottom:
      return t.name();
    case K::Feat: {
      const FeatureTerm& b = t.body();
      bool wrap = b.kind() == K::Conj;
      return t.name() + ":" + (wrap ? "(" + to_string(b) + ")" : to_string(b));
    }
    case K::Exists:
      return "exists " + t.name() + " (" + to_string(t.body()) + ")";
    case K::Conj: {
      std::string r = to_string(t.rhs());
      if (t.rhs().kind() == K::Conj) r = "(" + r + ")";
      return to_string(t.body()) + " & " + r;
    }
  }
  return {};
}

std::string to_string(const SimpleConstraint& c) {
  using K = SimpleConstraint::Kind;
  switch (c.kind) {
    case K::EqAtom: return c.var + " = " + c.label;
    case K::EqTop: return c.var + " = top";
    case K::EqBottom: return c.var + " = bot";
    case K::EqFeat: return c.var + " = " + c.label + ":" + c.target;
  }
  return {};
}

std::string to_string(const SolvedForm& s) {
  std::string body;
  for (const auto& c : s.constraints) {
    if (!body.empty()) body += " & ";
    body += to_string(c);
  }
  if (s.bound.empty()) return body;
  std::string head = "exists";
  for (const auto& v : s.bound) head += " " + v;
  return head + " (" + body + ")";
}

// ---------------------------------------------------------------------------
// Constraint store

FeatureGraph::Node FeatureGraph::make_node(std::optional<std::string> name) {
  auto id = static_cast<Node>(parent_.size());
  parent_.push_back(id);
  rank_.push_back(0);
  atom_.emplace_back();
  feats_.emplace_back();
  if (name) by_name_.emplace(*name, id);
  name_.push_back(std::move(name));
  return id;
}

FeatureGraph::Node FeatureGraph::named(const std::string& var) {
  if (auto it = by_name_.find(var); it != by_name_.end()) return it->second;
  return make_node(var);
}

FeatureGraph::Node FeatureGraph::fresh() { return make_node(std::nullopt); }

std::optional<FeatureGraph::Node> FeatureGraph::lookup(const std::string& var) const {
  if (auto it = by_name_.find(var); it != by_name_.end()) return it->second;
  return std::nullopt;
}

FeatureGraph::Node FeatureGraph::find(Node n) const {
  Node root = n;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[n] != root) {
    Node next = parent_[n];
    parent_[n] = root;
    n = next;
  }
  return root;
}

bool FeatureGraph::unify(Node a, Node b) {
  std::vector<std::pair<Node, Node>> work{{a, b}};
  while (!work.empty() && ok_) {
    auto [x, y] = work.back();
    work.pop_back();
    x = find(x);
    y = find(y);
    if (x == y) continue;
    if (rank_[x] < rank_[y]) std::swap(x, y);
    parent_[y] = x;
    if (rank_[x] == rank_[y]) ++rank_[x];
    if (atom_[y]) {
      if (atom_[x] && *atom_[x] != *atom_[y]) {
        fail();
        break;
      }
      atom_[x] = atom_[y];
    }
    auto moved = std::move(feats_[y]);
    feats_[y].clear();
    for (auto& [f, t] : moved) {
      auto it = feats_[x].find(f);
      if (it == feats_[x].end()) {
        feats_[x].emplace(f, t);
      } else {
        work.emplace_back(it->second, t);
      }
    }
    if (atom_[x] && !feats_[x].empty()) fail();
  }
  return ok_;
}

bool FeatureGraph::add_atom(Node x, const std::string& atom) {
  Node r = find(x);
  if ((atom_[r] && *atom_[r] != atom) || !feats_[r].empty()) {
    fail();
    return ok_;
  }
  // One node per atom: equal atoms are equal nodes.
  auto [it, fresh] = atom_node_.emplace(atom, r);
  if (fresh) {
    atom_[r] = atom;
    return ok_;
  }
  return unify(r, it->second);
}

bool FeatureGraph::add_feature(Node x, const std::string& feature, Node target) {
  Node r = find(x);
  if (atom_[r]) {
    fail();
    return ok_;
  }
  auto it = feats_[r].find(feature);
  if (it == feats_[r].end()) {
    feats_[r].emplace(feature, target);
    return ok_;
  }
  return unify(it->second, target);
}

namespace {

struct Scope {
  std::string var;
  FeatureGraph::Node node;
  std::shared_ptr<const Scope> up;
};

}  // namespace

bool FeatureGraph::add(Node x, const FeatureTerm& t) {
  using K = FeatureTerm::Kind;
  struct Task {
    Node node;
    const FeatureTerm* term;
    std::shared_ptr<const Scope> scope;
  };
  std::vector<Task> stack{{x, &t, nullptr}};
  while (!stack.empty() && ok_) {
    Task task = std::move(stack.back());
    stack.pop_back();
    const FeatureTerm& term = *task.term;
    switch (term.kind()) {
      case K::Var: {
        const Scope* s = task.scope.get();
        while (s && s->var != term.name()) s = s->up.get();
        unify(task.node, s ? s->node : named(term.name()));
        break;
      }
      case K::Atom:
        add_atom(task.node, term.name());
        break;
      case K::Top:
        break;
      case K::Bottom:
        fail();
        break;
      case K::Feat: {
        Node r = find(task.node);
        if (atom_[r]) {
          fail();
          break;
        }
        Node target;
        if (auto it = feats_[r].find(term.name()); it != feats_[r].end()) {
          target = it->second;
        } else {
          target = fresh();
          feats_[r].emplace(term.name(), target);
        }
        stack.push_back({target, &term.body(), task.scope});
        break;
      }
      case K::Exists: {
        Node bound = fresh();
        auto scope = std::make_shared<const Scope>(Scope{term.name(), bound, task.scope});
        stack.push_back({task.node, &term.body(), std::move(scope)});
        break;
      }
      case K::Conj:
        stack.push_back({task.node, &term.rhs(), task.scope});
        stack.push_back({task.node, &term.body(), task.scope});
        break;
    }
  }
  return ok_;
}

std::string FeatureGraph::display_name(Node n, std::string_view prefix) const {
  Node r = find(n);
  for (const auto& [name, id] : by_name_)
    if (find(id) == r) return name;
  return std::string(prefix) + std::to_string(r);
}

std::vector<FeatureGraph::Node> FeatureGraph::reachable_classes(const std::vector<Node>& roots) const {
  std::vector<bool> seen(size(), false);
  std::vector<Node> todo;
  for (Node r : roots) todo.push_back(find(r));
  for (const auto& [name, id] : by_name_) todo.push_back(find(id));
  std::vector<Node> classes;
  while (!todo.empty()) {
    Node c = todo.back();
    todo.pop_back();
    if (seen[c]) continue;
    seen[c] = true;
    classes.push_back(c);
    for (const auto& [f, t] : feats_[c]) todo.push_back(find(t));
  }
  std::vector<Node> least(size(), std::numeric_limits<Node>::max());
  for (Node i = 0; i < size(); ++i) {
    Node r = find(i);
    least[r] = std::min(least[r], i);
  }
  std::sort(classes.begin(), classes.end(), [&](Node a, Node b) { return least[a] < least[b]; });
  return classes;
}

SolvedForm FeatureGraph::solved(Node root, std::string_view prefix) const {
  using K = SimpleConstraint::Kind;
  std::vector<Node> classes = reachable_classes({root});
  std::map<Node, std::string> names;
  SolvedForm out;
  Node rc = find(root);
  std::size_t counter = 0;
  for (Node c : classes) {
    std::optional<std::string> best;
    if (c == rc && name_[root]) best = *name_[root];
    for (const auto& [name, id] : by_name_)
      if (!best && find(id) == c) best = name;
    if (best) {
      names[c] = *best;
    } else {
      names[c] = std::string(prefix) + std::to_string(counter++);
      out.bound.push_back(names[c]);
    }
  }
  out.root = names[rc];
  for (Node c : classes) {
    if (atom_[c]) out.constraints.push_back({K::EqAtom, names[c], *atom_[c], {}});
    for (const auto& [f, t] : feats_[c]) out.constraints.push_back({K::EqFeat, names[c], f, names[find(t)]});
    if (!atom_[c] && feats_[c].empty()) out.constraints.push_back({K::EqTop, names[c], {}, {}});
  }
  return out;
}

std::optional<SolvedForm> normalize(const std::string& x, const FeatureTerm& t, std::string_view prefix) {
  FeatureGraph g;
  auto root = g.named(x);
  if (!g.add(root, t)) return std::nullopt;
  return g.solved(root, prefix);
}

// ---------------------------------------------------------------------------
// Entailment by guard simplification

EntailTrace entail_check_traced(const FeatureTerm& context, const FeatureTerm& guard) {
  using K = SimpleConstraint::Kind;
  auto ctx = normalize("x", context, "c");
  auto grd = normalize("x", guard, "g");
  if (!ctx) throw DomainError("entailment check: inconsistent context " + to_string(context));
  if (!grd) throw DomainError("entailment check: inconsistent guard " + to_string(guard));

  std::map<std::string, std::string> ctx_atom;
  std::map<std::pair<std::string, std::string>, std::string> ctx_feat;
  std::set<std::string> ctx_has_feat;
  for (const auto& c : ctx->constraints) {
    if (c.kind == K::EqAtom) ctx_atom[c.var] = c.label;
    if (c.kind == K::EqFeat) {
      ctx_feat[{c.var, c.label}] = c.target;
      ctx_has_feat.insert(c.var);
    }
  }

  std::vector<SimpleConstraint> g = grd->constraints;
  std::set<std::string> existential(grd->bound.begin(), grd->bound.end());
  std::map<std::string, std::string> subst;  // guard existential -> context variable
  auto res = [&](const std::string& v) -> const std::string& {
    auto it = subst.find(v);
    return it == subst.end() ? v : it->second;
  };
  auto open = [&](const std::string& v) { return existential.contains(v) && !subst.contains(v); };

  EntailTrace trace;
  trace.step_bound = g.size() * (ctx->constraints.size() + 1);
  std::vector<bool> alive(g.size(), true);
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < g.size(); ++i) queue.push_back(i);
  std::deque<std::size_t> exist_queue;
  std::map<std::string, std::vector<std::size_t>> parked;

  for (;;) {
    // Cancellations first: SAtom and SFeat.
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      if (!alive[i]) continue;
      const SimpleConstraint& c = g[i];
      const std::string& subject = res(c.var);
      if (open(subject)) {
        parked[subject].push_back(i);
        continue;
      }
      if (c.kind == K::EqAtom) {
        auto it = ctx_atom.find(subject);
        if (it != ctx_atom.end() && it->second == c.label) {
          alive[i] = false;
          ++trace.steps;
        }
      } else if (c.kind == K::EqFeat) {
        auto it = ctx_feat.find({subject, c.label});
        if (it == ctx_feat.end()) continue;
        const std::string& target = res(c.target);
        if (target == it->second) {
          alive[i] = false;
          ++trace.steps;
        } else if (open(target)) {
          exist_queue.push_back(i);
        }
      }
    }
    // Then one SFeatExist step, if any applies.
    bool applied = false;
    while (!exist_queue.empty() && !applied) {
      std::size_t i = exist_queue.front();
      exist_queue.pop_front();
      if (!alive[i]) continue;
      const SimpleConstraint& c = g[i];
      std::string subject = res(c.var);
      std::string target = res(c.target);
      if (!open(target)) {
        queue.push_back(i);
        applied = true;
        continue;
      }
      subst[target] = ctx_feat.at({subject, c.label});
      ++trace.steps;
      queue.push_back(i);
      if (auto it = parked.find(target); it != parked.end()) {
        for (std::size_t j : it->second) queue.push_back(j);
        parked.erase(it);
      }
      applied = true;
    }
    if (!applied) break;
  }

  bool all_top = true;
  bool clash = false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!alive[i]) continue;
    SimpleConstraint c = g[i];
    c.var = res(c.var);
    if (c.kind == K::EqFeat) c.target = res(c.target);
    trace.residual.push_back(c);
    if (c.kind == K::EqTop) continue;
    all_top = false;
    if (open(c.var)) continue;
    auto atom = ctx_atom.find(c.var);
    if (c.kind == K::EqAtom) {
      if ((atom != ctx_atom.end() && atom->second != c.label) || ctx_has_feat.contains(c.var)) clash = true;
    } else if (c.kind == K::EqFeat) {
      if (atom != ctx_atom.end()) clash = true;
      // Shared atoms make guard targets context nodes; the guard then
      // equates two context nodes, which clash if their contents do.
      auto edge = ctx_feat.find({c.var, c.label});
      if (edge != ctx_feat.end() && !open(c.target)) {
        auto a1 = ctx_atom.find(edge->second), a2 = ctx_atom.find(c.target);
        bool f1 = ctx_has_feat.contains(edge->second), f2 = ctx_has_feat.contains(c.target);
        if (a1 != ctx_atom.end() && a2 != ctx_atom.end() && a1->second != a2->second) clash = true;
        if ((a1 != ctx_atom.end() && f2) || (a2 != ctx_atom.end() && f1)) clash = true;
      }
    }
  }
  trace.verdict = all_top ? Verdict::Entailed : clash ? Verdict::Disentailed : Verdict::Blocked;
  return trace;
}

Verdict entail_check(const FeatureTerm& context, const FeatureTerm& guard) {
  return entail_check_traced(context, guard).verdict;
}

// ---------------------------------------------------------------------------
// Meet, join, read-back

FeatureTerm term_of(const FeatureGraph& g, FeatureGraph::Node root) {
  using Node = FeatureGraph::Node;
  Node rc = g.find(root);
  // Reachable classes from root, with in-degrees.
  std::map<Node, std::size_t> indeg;
  std::vector<Node> order;
  std::vector<Node> todo{rc};
  std::set<Node> seen;
  while (!todo.empty()) {
    Node c = todo.back();
    todo.pop_back();
    if (!seen.insert(c).second) continue;
    order.push_back(c);
    for (const auto& [f, t] : g.features(c)) {
      Node tc = g.find(t);
      ++indeg[tc];
      todo.push_back(tc);
    }
  }
  std::map<Node, std::string> var;
  std::vector<std::string> anonymous;
  std::size_t counter = 0;
  for (Node c : order) {
    std::optional<std::string> named;
    for (const auto& [name, id] : g.names())
      if (g.find(id) == c) {
        named = name;
        break;
      }
    if (named) {
      var[c] = *named;
    } else if (indeg[c] >= 2 || (c == rc && indeg[c] >= 1)) {
      std::string v;
      do {
        v = "V" + std::to_string(++counter);
      } while (g.names().contains(v));
      var[c] = v;
      anonymous.push_back(v);
    }
  }
  std::set<Node> visited;
  auto render = [&](auto&& self, Node c) -> FeatureTerm {
    auto v = var.find(c);
    if (!visited.insert(c).second) return v != var.end() ? FeatureTerm::var(v->second) : FeatureTerm::top();
    std::vector<FeatureTerm> parts;
    if (v != var.end()) parts.push_back(FeatureTerm::var(v->second));
    if (const auto& a = g.atom(c)) parts.push_back(FeatureTerm::atom(*a));
    for (const auto& [f, t] : g.features(c)) parts.push_back(FeatureTerm::feat(f, self(self, g.find(t))));
    if (parts.empty()) return FeatureTerm::top();
    FeatureTerm out = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) out = FeatureTerm::conj(out, parts[i]);
    return out;
  };
  FeatureTerm body = render(render, rc);
  for (auto it = anonymous.rbegin(); it != anonymous.rend(); ++it) body = FeatureTerm::exists(*it, body);
  return body;
}

std::optional<FeatureTerm> ft_meet(const FeatureTerm& a, const FeatureTerm& b) {
  FeatureGraph g;
  auto root = g.fresh();
  if (!g.add(root, FeatureTerm::conj(a, b))) return std::nullopt;
  return term_of(g, root);
}

FeatureTerm ft_join(const FeatureTerm& a, const FeatureTerm& b) {
  using Node = FeatureGraph::Node;
  FeatureGraph ga, gb;
  Node ra = ga.fresh();
  Node rb = gb.fresh();
  if (!ga.add(ra, a) || !gb.add(rb, b)) throw DomainError("ft_join on inconsistent input");
  FeatureGraph out;
  std::map<std::pair<Node, Node>, Node> pairs;
  std::vector<std::pair<Node, Node>> work;
  auto get = [&](Node p, Node q) {
    std::pair key{ga.find(p), gb.find(q)};
    if (auto it = pairs.find(key); it != pairs.end()) return it->second;
    Node n = out.fresh();
    pairs.emplace(key, n);
    work.push_back(key);
    return n;
  };
  Node root = get(ra, rb);
  while (!work.empty()) {
    auto [p, q] = work.back();
    work.pop_back();
    Node n = pairs.at({p, q});
    const auto& atom_p = ga.atom(p);
    const auto& atom_q = gb.atom(q);
    if (atom_p && atom_q && *atom_p == *atom_q) out.add_atom(n, *atom_p);
    for (const auto& [f, tp] : ga.features(p)) {
      const auto& fq = gb.features(q);
      auto it = fq.find(f);
      if (it != fq.end()) out.add_feature(n, f, get(tp, it->second));
    }
  }
  return term_of(out, root);
}

// ---------------------------------------------------------------------------
// Simulation oracle: deliberately shares no code with the store above.

namespace {

struct PlainGraph {
  std::vector<std::vector<std::string>> atoms;
  std::vector<std::vector<std::pair<std::string, int>>> edges;
  std::vector<std::pair<int, int>> equalities;
  std::map<std::string, int> free_vars;
  bool bottom = false;

  int add_node() {
    atoms.emplace_back();
    edges.emplace_back();
    return static_cast<int>(atoms.size()) - 1;
  }

  int free_var(const std::string& v) {
    auto it = free_vars.find(v);
    if (it != free_vars.end()) return it->second;
    int n = add_node();
    free_vars.emplace(v, n);
    return n;
  }

  void build(int node, const FeatureTerm& t, const std::map<std::string, int>& scope) {
    using K = FeatureTerm::Kind;
    switch (t.kind()) {
      case K::Var: {
        auto it = scope.find(t.name());
        equalities.emplace_back(node, it != scope.end() ? it->second : free_var(t.name()));
        break;
      }
      case K::Atom: atoms[node].push_back(t.name()); break;
      case K::Top: break;
      case K::Bottom: bottom = true; break;
      case K::Feat: {
        int child = add_node();
        edges[node].emplace_back(t.name(), child);
        build(child, t.body(), scope);
        break;
      }
      case K::Exists: {
        auto inner = scope;
        inner[t.name()] = add_node();
        build(node, t.body(), inner);
        break;
      }
      case K::Conj:
        build(node, t.body(), scope);
        build(node, t.rhs(), scope);
        break;
    }
  }
};

// Quotient of a PlainGraph under equalities and feature functionality.
struct Quotient {
  std::vector<int> cls;
  std::map<int, std::string> atom;
  std::map<int, std::map<std::string, int>> feats;
  bool consistent = true;
};

Quotient quotient(const PlainGraph& g) {
  Quotient q;
  int n = static_cast<int>(g.atoms.size());
  q.cls.resize(n);
  for (int i = 0; i < n; ++i) q.cls[i] = i;
  auto relabel = [&](int from, int to) {
    for (int& c : q.cls)
      if (c == from) c = to;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : g.equalities) {
      if (q.cls[a] != q.cls[b]) {
        relabel(q.cls[b], q.cls[a]);
        changed = true;
      }
    }
    // an atom names one individual
    std::map<std::string, int> holder;
    for (int i = 0; i < n; ++i)
      for (const auto& a : g.atoms[i]) {
        auto [it, fresh] = holder.emplace(a, q.cls[i]);
        if (!fresh && it->second != q.cls[i]) {
          relabel(q.cls[i], it->second);
          changed = true;
        }
      }
    std::map<std::pair<int, std::string>, int> target;
    for (int i = 0; i < n; ++i) {
      for (const auto& [f, t] : g.edges[i]) {
        auto [it, fresh] = target.emplace(std::pair{q.cls[i], f}, q.cls[t]);
        if (!fresh && it->second != q.cls[t]) {
          relabel(q.cls[t], it->second);
          changed = true;
        }
      }
    }
  }
  q.consistent = !g.bottom;
  for (int i = 0; i < n; ++i) {
    int c = q.cls[i];
    for (const auto& a : g.atoms[i]) {
      auto [it, fresh] = q.atom.emplace(c, a);
      if (!fresh && it->second != a) q.consistent = false;
    }
    for (const auto& [f, t] : g.edges[i]) q.feats[c][f] = q.cls[t];
  }
  for (const auto& [c, a] : q.atom)
    if (q.feats.contains(c) && !q.feats[c].empty()) q.consistent = false;
  return q;
}

}  // namespace

bool simulation_oracle(const FeatureTerm& context, const FeatureTerm& guard) {
  PlainGraph gc, gg;
  int rc = gc.add_node();
  int rg = gg.add_node();
  gc.build(rc, context, {});
  gg.build(rg, guard, {});
  // Free variables of the guard are distinguished: they map to themselves.
  for (const auto& [v, node] : gg.free_vars) gc.free_var(v);
  Quotient qc = quotient(gc);
  Quotient qg = quotient(gg);
  if (!qc.consistent || !qg.consistent) throw DomainError("simulation_oracle on inconsistent input");

  std::map<int, int> image;
  std::vector<int> todo;
  auto assign = [&](int from, int to) {
    auto [it, fresh] = image.emplace(from, to);
    if (fresh) todo.push_back(from);
    return it->second == to;
  };
  if (!assign(qg.cls[rg], qc.cls[rc])) return false;
  for (const auto& [v, node] : gg.free_vars)
    if (!assign(qg.cls[node], qc.cls[gc.free_vars.at(v)])) return false;
  while (!todo.empty()) {
    int from = todo.back();
    todo.pop_back();
    int to = image.at(from);
    if (auto a = qg.atom.find(from); a != qg.atom.end()) {
      auto b = qc.atom.find(to);
      if (b == qc.atom.end() || b->second != a->second) return false;
    }
    auto fg = qg.feats.find(from);
    if (fg == qg.feats.end()) continue;
    for (const auto& [f, t] : fg->second) {
      auto fc = qc.feats.find(to);
      if (fc == qc.feats.end()) return false;
      auto e = fc->second.find(f);
      if (e == fc->second.end()) return false;
      if (!assign(t, e->second)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Base-logic binding

BasicType FeatureBase::parse(std::string_view text) const {
  return BasicType{to_string(parse_feature_term(text))};
}

bool FeatureBase::consistent(const BasicType& b) const {
  return normalize("x", parse_feature_term(b.payload)).has_value();
}

Verdict FeatureBase::entails(const BasicType& a, const BasicType& b) const {
  if (auto hit = cache_.find(a.payload, b.payload)) return *hit;
  Verdict v;
  if (!consistent(a)) {
    v = Verdict::Entailed;
  } else if (!consistent(b)) {
    v = Verdict::Disentailed;
  } else {
    v = entail_check(parse_feature_term(a.payload), parse_feature_term(b.payload));
  }
  cache_.store(a.payload, b.payload, v);
  return v;
}

std::optional<BasicType> FeatureBase::meet(const BasicType& a, const BasicType& b) const {
  auto m = ft_meet(parse_feature_term(a.payload), parse_feature_term(b.payload));
  if (!m) return std::nullopt;
  return BasicType{to_string(*m)};
}

std::optional<BasicType> FeatureBase::join(const BasicType& a, const BasicType& b) const {
  return BasicType{to_string(ft_join(parse_feature_term(a.payload), parse_feature_term(b.payload)))};
}

}  // namespace lamsub

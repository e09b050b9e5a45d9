#include "lamsub/formula.hpp"

#include <algorithm>
#include <cctype>

#include "lamsub/base_logic.hpp"
#include "lamsub/error.hpp"

namespace lamsub {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '\'';
  });
}

std::string basic_key(const BasicType& b) {
  return is_identifier(b.payload) ? b.payload : "[" + b.payload + "]";
}

}  // namespace

bool is_associative(Regime r) { return r == Regime::L || r == Regime::LP; }
bool is_commutative(Regime r) { return r == Regime::LP || r == Regime::NLP; }

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::NL: return "NL";
    case Regime::L: return "L";
    case Regime::LP: return "LP";
    case Regime::NLP: return "NLP";
  }
  return "?";
}

std::optional<Regime> regime_from_string(std::string_view s) {
  if (s == "NL") return Regime::NL;
  if (s == "L") return Regime::L;
  if (s == "LP") return Regime::LP;
  if (s == "NLP") return Regime::NLP;
  return std::nullopt;
}

Formula Formula::basic(BasicType b) {
  auto key = basic_key(b);
  return Formula(std::make_shared<const Node>(
      Node{Kind::Basic, std::move(b), std::nullopt, std::nullopt, 0, std::move(key)}));
}

Formula Formula::over(Formula result, Formula arg) {
  std::size_t n = result.connectives() + arg.connectives() + 1;
  std::string key = "(" + result.key() + "/" + arg.key() + ")";
  return Formula(std::make_shared<const Node>(
      Node{Kind::Over, {}, std::move(result), std::move(arg), n, std::move(key)}));
}

Formula Formula::under(Formula arg, Formula result) {
  std::size_t n = result.connectives() + arg.connectives() + 1;
  std::string key = "(" + arg.key() + "\\" + result.key() + ")";
  return Formula(std::make_shared<const Node>(
      Node{Kind::Under, {}, std::move(result), std::move(arg), n, std::move(key)}));
}

const BasicType& Formula::basic_type() const {
  if (!is_basic()) throw DomainError("basic_type() on a complex formula " + key());
  return node_->basic;
}

const Formula& Formula::result() const {
  if (is_basic()) throw DomainError("result() on basic type " + key());
  return *node_->result;
}

const Formula& Formula::arg() const {
  if (is_basic()) throw DomainError("arg() on basic type " + key());
  return *node_->arg;
}

GTerm GTerm::leaf(Formula f) {
  std::size_t c = f.connectives();
  std::string key = f.key();
  return GTerm(std::make_shared<const Node>(
      Node{std::move(f), std::nullopt, std::nullopt, 1, c, std::move(key)}));
}

GTerm GTerm::node(GTerm left, GTerm right) {
  std::size_t leaves = left.leaf_count() + right.leaf_count();
  std::size_t c = left.connectives() + right.connectives();
  std::string key = "(" + left.key() + ", " + right.key() + ")";
  return GTerm(std::make_shared<const Node>(
      Node{std::nullopt, std::move(left), std::move(right), leaves, c, std::move(key)}));
}

const Formula& GTerm::formula() const {
  if (!is_leaf()) throw DomainError("formula() on a composite G-term " + key());
  return *node_->formula;
}

const GTerm& GTerm::left() const {
  if (is_leaf()) throw DomainError("left() on a leaf G-term " + key());
  return *node_->left;
}

const GTerm& GTerm::right() const {
  if (is_leaf()) throw DomainError("right() on a leaf G-term " + key());
  return *node_->right;
}

std::vector<Formula> GTerm::leaves() const {
  std::vector<Formula> out;
  out.reserve(leaf_count());
  std::vector<const GTerm*> stack{this};
  while (!stack.empty()) {
    const GTerm* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) {
      out.push_back(t->formula());
    } else {
      stack.push_back(&t->right());
      stack.push_back(&t->left());
    }
  }
  return out;
}

GTerm fold_left(const std::vector<GTerm>& items) {
  if (items.empty()) throw DomainError("empty G-term");
  GTerm acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = GTerm::node(acc, items[i]);
  return acc;
}

GTerm fold_left(const std::vector<Formula>& items) {
  std::vector<GTerm> leaves;
  leaves.reserve(items.size());
  for (const auto& f : items) leaves.push_back(GTerm::leaf(f));
  return fold_left(leaves);
}

Occurrence fold_path(std::size_t count, std::size_t index) {
  if (index >= count) throw DomainError("fold_path: index out of range");
  Occurrence occ;
  // Walk down the left spine from the root until the item's parent.
  std::size_t n = count;
  while (n > 1) {
    if (index == n - 1) {
      occ.path.push_back(Step::Right);
      return occ;
    }
    occ.path.push_back(Step::Left);
    --n;
  }
  return occ;
}

const Formula& subformula_at(const Formula& root, const Occurrence& occ) {
  const Formula* f = &root;
  for (Step s : occ.path) {
    if (f->is_basic()) throw DomainError("occurrence path descends below basic type " + f->key());
    if (s == Step::Result) {
      f = &f->result();
    } else if (s == Step::Arg) {
      f = &f->arg();
    } else {
      throw DomainError("G-term step in a formula occurrence");
    }
  }
  return *f;
}

const GTerm& subterm_at(const GTerm& root, const Occurrence& occ) {
  const GTerm* t = &root;
  for (Step s : occ.path) {
    if (t->is_leaf()) throw DomainError("occurrence path descends below leaf " + t->key());
    if (s == Step::Left) {
      t = &t->left();
    } else if (s == Step::Right) {
      t = &t->right();
    } else {
      throw DomainError("formula step in a G-term occurrence");
    }
  }
  return *t;
}

namespace {

GTerm replace_rec(const GTerm& t, const std::vector<Step>& path, std::size_t i, const GTerm& r) {
  if (i == path.size()) return r;
  if (t.is_leaf()) throw DomainError("occurrence path descends below leaf " + t.key());
  if (path[i] == Step::Left) return GTerm::node(replace_rec(t.left(), path, i + 1, r), t.right());
  if (path[i] == Step::Right) return GTerm::node(t.left(), replace_rec(t.right(), path, i + 1, r));
  throw DomainError("formula step in a G-term occurrence");
}

Formula replace_rec(const Formula& f, const std::vector<Step>& path, std::size_t i,
                    const Formula& r) {
  if (i == path.size()) return r;
  if (f.is_basic()) throw DomainError("occurrence path descends below basic type " + f.key());
  bool over = f.kind() == Formula::Kind::Over;
  Formula res = f.result();
  Formula arg = f.arg();
  if (path[i] == Step::Result) {
    res = replace_rec(res, path, i + 1, r);
  } else if (path[i] == Step::Arg) {
    arg = replace_rec(arg, path, i + 1, r);
  } else {
    throw DomainError("G-term step in a formula occurrence");
  }
  return over ? Formula::over(res, arg) : Formula::under(arg, res);
}

}  // namespace

GTerm replace_at(const GTerm& root, const Occurrence& occ, const GTerm& replacement) {
  return replace_rec(root, occ.path, 0, replacement);
}

Formula replace_at(const Formula& root, const Occurrence& occ, const Formula& replacement) {
  return replace_rec(root, occ.path, 0, replacement);
}

Polarity polarity_of(const Formula& root, const Occurrence& occ) {
  Polarity p = Polarity::Positive;
  const Formula* f = &root;
  for (Step s : occ.path) {
    if (f->is_basic()) throw DomainError("occurrence path descends below basic type " + f->key());
    if (s == Step::Result) {
      f = &f->result();
    } else if (s == Step::Arg) {
      f = &f->arg();
      p = flip(p);
    } else {
      throw DomainError("G-term step in a formula occurrence");
    }
  }
  return p;
}

namespace {

void collect_basics(const Formula& f, Occurrence& at, Polarity p, std::vector<BasicOccurrence>& out) {
  if (f.is_basic()) {
    out.push_back({at, f.basic_type(), p});
    return;
  }
  // Left-to-right in surface order: A/B shows A first, B\A shows B first.
  auto visit = [&](Step s) {
    at.path.push_back(s);
    collect_basics(s == Step::Result ? f.result() : f.arg(), at,
                   s == Step::Result ? p : flip(p), out);
    at.path.pop_back();
  };
  if (f.kind() == Formula::Kind::Over) {
    visit(Step::Result);
    visit(Step::Arg);
  } else {
    visit(Step::Arg);
    visit(Step::Result);
  }
}

}  // namespace

std::vector<BasicOccurrence> basic_occurrences(const Formula& f) {
  std::vector<BasicOccurrence> out;
  Occurrence at;
  collect_basics(f, at, Polarity::Positive, out);
  return out;
}

bool subtype(const Formula& a, const Formula& b, const BaseLogic& base) {
  if (a.kind() != b.kind()) return false;
  if (a.is_basic()) return base.leq(a.basic_type(), b.basic_type());
  return subtype(a.result(), b.result(), base) && subtype(b.arg(), a.arg(), base);
}

namespace {

GTerm canonical_tree_nlp(const GTerm& t) {
  if (t.is_leaf()) return t;
  GTerm l = canonical_tree_nlp(t.left());
  GTerm r = canonical_tree_nlp(t.right());
  if (r.key() < l.key()) std::swap(l, r);
  return GTerm::node(std::move(l), std::move(r));
}

std::string join_keys(const std::vector<Formula>& items) {
  std::string key;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) key += ", ";
    key += items[i].key();
  }
  return key;
}

}  // namespace

CanonicalGTerm canonicalize(const GTerm& u, Regime r) {
  CanonicalGTerm c;
  c.regime_ = r;
  switch (r) {
    case Regime::NL:
      c.tree_ = u;
      c.key_ = u.key();
      break;
    case Regime::NLP:
      c.tree_ = canonical_tree_nlp(u);
      c.key_ = c.tree_->key();
      break;
    case Regime::L:
      c.items_ = u.leaves();
      c.key_ = join_keys(c.items_);
      break;
    case Regime::LP:
      c.items_ = u.leaves();
      std::sort(c.items_.begin(), c.items_.end());
      c.key_ = join_keys(c.items_);
      break;
  }
  return c;
}

std::string canonical_key(const GTerm& u, Regime r) { return canonicalize(u, r).key(); }

FormulaSet subformula_closure(const FormulaSet& fs) {
  FormulaSet out;
  std::vector<Formula> todo(fs.begin(), fs.end());
  while (!todo.empty()) {
    Formula f = todo.back();
    todo.pop_back();
    if (!out.insert(f).second) continue;
    if (!f.is_basic()) {
      todo.push_back(f.result());
      todo.push_back(f.arg());
    }
  }
  return out;
}

FormulaSet subformula_closure(const std::vector<Formula>& fs) {
  return subformula_closure(FormulaSet(fs.begin(), fs.end()));
}

std::set<BasicType> basic_types_of(const Formula& f) {
  std::set<BasicType> out;
  for (const auto& occ : basic_occurrences(f)) out.insert(occ.type);
  return out;
}

}  // namespace lamsub

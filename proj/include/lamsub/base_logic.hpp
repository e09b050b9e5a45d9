#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lamsub/formula.hpp"

namespace lamsub {

enum class Verdict { Entailed, Disentailed, Blocked };

std::string_view to_string(Verdict v);

// The black box describing basic categories. Only its consequence preorder
// is visible to the Lambek layer; meet and join are used by coordination.
//
// Implementations are immutable after construction apart from internal
// caches, which are guarded so concurrent queries are safe.
class BaseLogic {
 public:
  virtual ~BaseLogic() = default;

  virtual std::string_view name() const = 0;

  // Parses base-formula text into a basic type with canonical payload.
  // Throws ParseError on malformed text.
  virtual BasicType parse(std::string_view text) const = 0;
  virtual std::string render(const BasicType& b) const { return b.payload; }

  virtual Verdict entails(const BasicType& a, const BasicType& b) const = 0;
  virtual bool consistent(const BasicType&) const { return true; }

  virtual bool has_lattice() const { return false; }
  // Greatest lower bound; nullopt when inconsistent or undefined.
  // Throws ConfigError when has_lattice() is false.
  virtual std::optional<BasicType> meet(const BasicType& a, const BasicType& b) const;
  // Least upper bound; nullopt when undefined.
  virtual std::optional<BasicType> join(const BasicType& a, const BasicType& b) const;

  bool leq(const BasicType& a, const BasicType& b) const {
    return entails(a, b) == Verdict::Entailed;
  }
};

// Explicit finite preorder over declared atoms.
class PosetBase final : public BaseLogic {
 public:
  PosetBase(std::vector<std::string> atoms,
            const std::vector<std::pair<std::string, std::string>>& edges);

  // Lines `atom <name>` and `sub <b1> <b2>`; `#` starts a comment.
  static PosetBase from_text(std::string_view text);

  std::string_view name() const override { return "poset"; }
  BasicType parse(std::string_view text) const override;
  Verdict entails(const BasicType& a, const BasicType& b) const override;
  bool has_lattice() const override { return true; }
  std::optional<BasicType> meet(const BasicType& a, const BasicType& b) const override;
  std::optional<BasicType> join(const BasicType& a, const BasicType& b) const override;

  const std::vector<std::string>& atoms() const { return atoms_; }
  bool declared(std::string_view atom) const { return index_.contains(std::string(atom)); }

 private:
  std::size_t index_of(const BasicType& b) const;

  std::vector<std::string> atoms_;
  std::map<std::string, std::size_t> index_;
  std::vector<std::vector<bool>> leq_;
};

// Syntactic identity as the subtype order over another base's formulae:
// the order used by pure Lambek grammars.
class IdentityBase final : public BaseLogic {
 public:
  explicit IdentityBase(std::shared_ptr<const BaseLogic> syntax) : syntax_(std::move(syntax)) {}

  std::string_view name() const override { return "identity"; }
  BasicType parse(std::string_view text) const override { return syntax_->parse(text); }
  std::string render(const BasicType& b) const override { return syntax_->render(b); }
  Verdict entails(const BasicType& a, const BasicType& b) const override {
    return a == b ? Verdict::Entailed : Verdict::Blocked;
  }

 private:
  std::shared_ptr<const BaseLogic> syntax_;
};

// Thread-safe memo table for pairwise base-logic queries.
template <typename Value>
class PairCache {
 public:
  std::optional<Value> find(const std::string& a, const std::string& b) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find({a, b});
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& a, const std::string& b, Value v) const {
    std::lock_guard lock(mutex_);
    table_.emplace(std::pair{a, b}, std::move(v));
  }

 private:
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::string, std::string>, Value> table_;
};

}  // namespace lamsub

#pragma once

// Divisor queries over a dynamic set of monomials, each tagged with a payload
// id. Four interchangeable structures:
//
//   List       every entry is tested for divisibility
//   DivList    entries carry a divmask that is consulted first
//   KdTree     binary tree whose interior nodes hold a pure power x_i^k;
//              entries divisible by x_i^k live in the right subtree, which
//              is skipped when x_i^k does not divide the query
//   DivKdTree  kd-tree whose nodes also carry the divmask of the gcd of
//              their subtree, pruning whole subtrees
//
// Retired entries become tombstones and are purged by the next rebuild.
// A rebuild happens when insertions plus retirements since the last one
// exceed half the live size; it recalibrates the divmap.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sigbasis/detail/function_ref.hpp"
#include "sigbasis/divmask.hpp"
#include "sigbasis/monomial.hpp"

namespace sigbasis {

enum class LookupKind { List, DivList, KdTree, DivKdTree };

inline std::string to_string(LookupKind k) {
  switch (k) {
    case LookupKind::List: return "list";
    case LookupKind::DivList: return "divlist";
    case LookupKind::KdTree: return "kdtree";
    case LookupKind::DivKdTree: return "divkdtree";
  }
  return {};
}

class MonomialLookup {
 public:
  using Id = std::uint32_t;
  /// Return true to stop the enumeration.
  using Visitor = detail::FunctionRef<bool(Id, const Monomial&)>;

  virtual ~MonomialLookup() = default;

  virtual LookupKind kind() const = 0;
  virtual void insert(const Monomial& m, Id id) = 0;
  virtual void retire(Id id) = 0;
  /// Calls visit for live entries dividing q until it returns true. Returns
  /// whether the enumeration was stopped.
  virtual bool visit_divisors(const Monomial& q, Visitor visit) = 0;
  virtual bool maybe_rebuild() = 0;
  virtual void rebuild() = 0;
  virtual std::size_t size() const = 0;     // live entries
  virtual std::size_t stored() const = 0;   // including tombstones
  virtual bool audit() const = 0;

  std::optional<Id> find_divisor(const Monomial& q) {
    std::optional<Id> found;
    visit_divisors(q, [&](Id id, const Monomial&) {
      found = id;
      return true;
    });
    return found;
  }

  std::vector<Id> find_all_divisors(const Monomial& q) {
    std::vector<Id> out;
    visit_divisors(q, [&](Id id, const Monomial&) {
      out.push_back(id);
      return false;
    });
    return out;
  }

  const DivmaskStats& divmask_stats() const { return stats_; }
  const DivMap& divmap() const { return divmap_; }
  std::size_t rebuild_count() const { return rebuilds_; }

 protected:
  explicit MonomialLookup(std::size_t num_vars) : num_vars_(num_vars), divmap_(DivMap::standard(num_vars)) {}

  // Classifies one divmask consultation and returns whether a | b.
  bool consult(Divmask a_mask, Divmask b_mask, const Monomial& a, const Monomial& b) {
    ++stats_.consultations;
    if (!may_divide(a_mask, b_mask)) {
      ++stats_.hits;
      return false;
    }
    if (mono_divides(a, b)) {
      ++stats_.divisibilities;
      return true;
    }
    ++stats_.misses;
    return false;
  }

  bool churn_exceeded() const { return churn_ > 0 && 2 * churn_ > size(); }

  std::size_t num_vars_;
  DivMap divmap_;
  DivmaskStats stats_;
  std::size_t churn_ = 0;
  std::size_t rebuilds_ = 0;
};

namespace detail {

struct LookupEntry {
  Monomial mono;
  MonomialLookup::Id id = 0;
  Divmask mask = 0;
  bool live = true;
};

class ListLookup final : public MonomialLookup {
 public:
  ListLookup(std::size_t num_vars, bool masks) : MonomialLookup(num_vars), masks_(masks) {}

  LookupKind kind() const override { return masks_ ? LookupKind::DivList : LookupKind::List; }

  void insert(const Monomial& m, Id id) override {
    if (where_.count(id) != 0) throw std::invalid_argument("lookup id already present");
    where_[id] = entries_.size();
    entries_.push_back({m, id, masks_ ? divmap_.mask(m) : 0, true});
    ++live_;
    ++churn_;
  }

  void retire(Id id) override {
    auto it = where_.find(id);
    if (it == where_.end()) throw std::invalid_argument("unknown lookup id");
    entries_[it->second].live = false;
    where_.erase(it);
    --live_;
    ++churn_;
  }

  bool visit_divisors(const Monomial& q, Visitor visit) override {
    const Divmask qm = masks_ ? divmap_.mask(q) : 0;
    for (const auto& e : entries_) {
      if (!e.live) continue;
      const bool divides = masks_ ? consult(e.mask, qm, e.mono, q) : mono_divides(e.mono, q);
      if (divides && visit(e.id, e.mono)) return true;
    }
    return false;
  }

  bool maybe_rebuild() override {
    if (!churn_exceeded()) return false;
    rebuild();
    return true;
  }

  void rebuild() override {
    std::erase_if(entries_, [](const LookupEntry& e) { return !e.live; });
    if (!entries_.empty()) {
      std::vector<std::reference_wrapper<const Monomial>> monos;
      for (const auto& e : entries_) monos.emplace_back(e.mono);
      divmap_ = calibrate_divmap(monos);
    }
    where_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      entries_[i].mask = masks_ ? divmap_.mask(entries_[i].mono) : 0;
      where_[entries_[i].id] = i;
    }
    churn_ = 0;
    ++rebuilds_;
  }

  std::size_t size() const override { return live_; }
  std::size_t stored() const override { return entries_.size(); }

  bool audit() const override {
    for (const auto& e : entries_)
      if (e.live && masks_ && e.mask != divmap_.mask(e.mono)) return false;
    return true;
  }

 private:
  bool masks_;
  std::vector<LookupEntry> entries_;
  std::unordered_map<Id, std::size_t> where_;
  std::size_t live_ = 0;
};

class KdTreeLookup final : public MonomialLookup {
 public:
  KdTreeLookup(std::size_t num_vars, bool masks, std::size_t leaf_capacity = 32)
      : MonomialLookup(num_vars), masks_(masks), leaf_capacity_(std::max<std::size_t>(leaf_capacity, 1)) {
    nodes_.push_back(Node::leaf(0));
  }

  LookupKind kind() const override { return masks_ ? LookupKind::DivKdTree : LookupKind::KdTree; }

  void insert(const Monomial& m, Id id) override {
    if (where_.count(id) != 0) throw std::invalid_argument("lookup id already present");
    place({m, id, masks_ ? divmap_.mask(m) : 0, true});
    ++live_;
    ++churn_;
  }

  void retire(Id id) override {
    auto it = where_.find(id);
    if (it == where_.end()) throw std::invalid_argument("unknown lookup id");
    for (auto& e : nodes_[it->second].entries)
      if (e.id == id && e.live) {
        e.live = false;
        break;
      }
    where_.erase(it);
    --live_;
    ++churn_;
  }

  bool visit_divisors(const Monomial& q, Visitor visit) override {
    const Divmask qm = masks_ ? divmap_.mask(q) : 0;
    stack_.clear();
    stack_.push_back(0);
    while (!stack_.empty()) {
      const Node& n = nodes_[stack_.back()];
      stack_.pop_back();
      if (masks_ && !may_divide(n.mask, qm)) continue;
      if (!n.is_leaf) {
        if (q[n.var] >= n.exp) stack_.push_back(n.right);
        stack_.push_back(n.left);
        continue;
      }
      for (const auto& e : n.entries) {
        if (!e.live) continue;
        const bool divides = masks_ ? consult(e.mask, qm, e.mono, q) : mono_divides(e.mono, q);
        if (divides && visit(e.id, e.mono)) return true;
      }
    }
    return false;
  }

  bool maybe_rebuild() override {
    if (!churn_exceeded()) return false;
    rebuild();
    return true;
  }

  void rebuild() override {
    std::vector<LookupEntry> live;
    for (auto& n : nodes_)
      for (auto& e : n.entries)
        if (e.live) live.push_back(std::move(e));
    if (!live.empty()) {
      std::vector<std::reference_wrapper<const Monomial>> monos;
      for (const auto& e : live) monos.emplace_back(e.mono);
      divmap_ = calibrate_divmap(monos);
    }
    nodes_.clear();
    nodes_.push_back(Node::leaf(0));
    where_.clear();
    for (auto& e : live) {
      e.mask = masks_ ? divmap_.mask(e.mono) : 0;
      place(std::move(e));
    }
    churn_ = 0;
    ++rebuilds_;
  }

  std::size_t size() const override { return live_; }
  std::size_t stored() const override {
    std::size_t n = 0;
    for (const auto& node : nodes_) n += node.entries.size();
    return n;
  }

  /// Routing invariant plus mask soundness (node mask below every live
  /// descendant's mask).
  bool audit() const override { return audit_node(0, {}, nullptr); }

  /// After a rebuild: node masks equal the mask of the gcd of the live
  /// monomials below.
  bool masks_exact() const {
    if (!masks_) return true;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      Divmask acc = ~Divmask{0};
      bool any = false;
      collect_mask(i, acc, any);
      if (any && nodes_[i].mask != acc) return false;
    }
    return true;
  }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t leaf_capacity() const { return leaf_capacity_; }

 private:
  struct Node {
    bool is_leaf = true;
    std::uint32_t var = 0;    // interior: split variable; leaf: next split variable
    Exponent exp = 0;
    std::uint32_t left = 0, right = 0;
    Divmask mask = ~Divmask{0};  // AND of masks below == mask of the gcd
    std::vector<LookupEntry> entries;

    static Node leaf(std::uint32_t next_var) {
      Node n;
      n.var = next_var;
      return n;
    }
  };

  struct Constraint {
    std::uint32_t var;
    Exponent exp;
    bool right;
  };

  void place(LookupEntry e) {
    std::uint32_t k = 0;
    while (true) {
      Node& n = nodes_[k];
      n.mask &= e.mask;
      if (n.is_leaf) break;
      k = e.mono[n.var] >= n.exp ? n.right : n.left;
    }
    where_[e.id] = k;
    nodes_[k].entries.push_back(std::move(e));
    if (nodes_[k].entries.size() > leaf_capacity_) split(k);
  }

  void split(std::uint32_t k) {
    const auto& entries = nodes_[k].entries;
    const std::uint32_t start = nodes_[k].var;
    for (std::uint32_t step = 0; step < num_vars_; ++step) {
      const std::uint32_t v = static_cast<std::uint32_t>((start + step) % num_vars_);
      Exponent lo = UINT32_MAX, hi = 0;
      for (const auto& e : entries) {
        lo = std::min(lo, e.mono[v]);
        hi = std::max(hi, e.mono[v]);
      }
      if (lo == hi) continue;
      // Rounded-up average so both halves are nonempty.
      const Exponent cut = static_cast<Exponent>((static_cast<std::uint64_t>(lo) + hi + 1) / 2);
      const std::uint32_t next = static_cast<std::uint32_t>((v + 1) % num_vars_);
      Node left = Node::leaf(next), right = Node::leaf(next);
      for (auto& e : nodes_[k].entries) {
        Node& side = e.mono[v] >= cut ? right : left;
        side.mask &= e.mask;
        side.entries.push_back(std::move(e));
      }
      const auto li = static_cast<std::uint32_t>(nodes_.size());
      nodes_.push_back(std::move(left));
      nodes_.push_back(std::move(right));
      Node& n = nodes_[k];
      n.entries.clear();
      n.entries.shrink_to_fit();
      n.is_leaf = false;
      n.var = v;
      n.exp = cut;
      n.left = li;
      n.right = li + 1;
      for (const std::uint32_t c : {li, li + 1}) {
        for (const auto& e : nodes_[c].entries)
          if (e.live) where_[e.id] = c;
        if (nodes_[c].entries.size() > leaf_capacity_) split(c);
      }
      return;
    }
  }

  void collect_mask(std::size_t i, Divmask& acc, bool& any) const {
    const Node& n = nodes_[i];
    if (n.is_leaf) {
      for (const auto& e : n.entries)
        if (e.live) {
          acc &= divmap_.mask(e.mono);
          any = true;
        }
      return;
    }
    collect_mask(n.left, acc, any);
    collect_mask(n.right, acc, any);
  }

  bool audit_node(std::size_t i, std::vector<Constraint> path, const Divmask* parent_mask) const {
    const Node& n = nodes_[i];
    if (masks_ && parent_mask && !may_divide(*parent_mask, n.mask) && n.mask != ~Divmask{0}) return false;
    if (!n.is_leaf) {
      auto l = path, r = path;
      l.push_back({n.var, n.exp, false});
      r.push_back({n.var, n.exp, true});
      return audit_node(n.left, l, &n.mask) && audit_node(n.right, r, &n.mask);
    }
    for (const auto& e : n.entries) {
      for (const auto& c : path)
        if ((e.mono[c.var] >= c.exp) != c.right) return false;
      if (e.live && masks_) {
        if (e.mask != divmap_.mask(e.mono)) return false;
        if (!may_divide(n.mask, e.mask)) return false;
      }
    }
    return true;
  }

  bool masks_;
  std::size_t leaf_capacity_;
  std::vector<Node> nodes_;
  std::unordered_map<Id, std::uint32_t> where_;  // id -> leaf
  std::vector<std::uint32_t> stack_;
  std::size_t live_ = 0;
};

}  // namespace detail

inline std::unique_ptr<MonomialLookup> make_lookup(LookupKind kind, std::size_t num_vars,
                                                   std::size_t leaf_capacity = 32) {
  switch (kind) {
    case LookupKind::List: return std::make_unique<detail::ListLookup>(num_vars, false);
    case LookupKind::DivList: return std::make_unique<detail::ListLookup>(num_vars, true);
    case LookupKind::KdTree: return std::make_unique<detail::KdTreeLookup>(num_vars, false, leaf_capacity);
    case LookupKind::DivKdTree: return std::make_unique<detail::KdTreeLookup>(num_vars, true, leaf_capacity);
  }
  throw std::invalid_argument("unknown lookup kind");
}

}  // namespace sigbasis

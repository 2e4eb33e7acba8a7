#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "mopls/objective.hpp"
#include "mopls/rng.hpp"
#include "mopls/weights.hpp"

namespace mopls {

// Pareto archive organized as an ND-Tree. Entries are recursively split into
// nodes; every node carries an approximate ideal point (componentwise max
// over its subtree) and an approximate nadir point (componentwise min).
// Bounding with these two points lets update() and minimize_chebycheff()
// skip whole subtrees:
//  - a candidate weakly dominated by a node's nadir is dominated or equal to
//    every entry below it;
//  - a candidate strictly dominating a node's ideal dominates every entry
//    below it, so the subtree is removed wholesale;
//  - a subtree whose box can neither contain a dominator of the candidate
//    nor a victim of it is skipped;
//  - for the argmin query, the Chebycheff value of a node's ideal lower
//    bounds the value of every entry below it.
template <typename Payload = std::monostate>
class NDTreeArchive {
 public:
  struct Entry {
    ObjectiveVector objectives;
    Payload payload;
  };

  struct Query {
    const Entry* entry = nullptr;
    double value = 0.0;
    std::size_t visited_nodes = 0;
  };

  explicit NDTreeArchive(std::size_t dim, std::size_t leaf_capacity = 20,
                         std::size_t max_children = 0)
      : dim_(dim),
        leaf_capacity_(leaf_capacity),
        max_children_(max_children ? max_children : dim + 1) {
    if (dim_ < 1) throw std::invalid_argument("archive dimension must be >= 1");
    if (leaf_capacity_ < 2) throw std::invalid_argument("leaf capacity must be >= 2");
    if (max_children_ < 2) throw std::invalid_argument("max children must be >= 2");
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return root_ ? root_->count : 0; }
  bool empty() const { return root_ == nullptr; }

  bool update(ObjectiveVector y, Payload payload = {}) {
    if (y.size() != dim_) throw std::invalid_argument("update: dimension mismatch");
    if (!all_finite(y)) throw std::invalid_argument("update: non-finite objective value");
    if (!root_) {
      root_ = make_leaf(Entry{std::move(y), std::move(payload)});
      maxima_ = root_->ideal;
      minima_ = root_->nadir;
      return true;
    }
    std::vector<char> dirty_min(dim_, 0);
    bool pruned = false;
    if (prune(*root_, y, dirty_min, pruned) == PruneOutcome::Rejected) return false;
    if (root_->count == 0) root_.reset();

    if (!root_) {
      root_ = make_leaf(Entry{y, std::move(payload)});
      maxima_ = y;
      minima_ = y;
      return true;
    }
    insert_entry(Entry{y, std::move(payload)});
    // Deleted entries were all dominated by y, so maxima can only move to y;
    // minima may rise and are recomputed only for objectives where a deleted
    // entry (or cleared subtree) attained the minimum.
    for (std::size_t k = 0; k < dim_; ++k) {
      if (y[k] > maxima_[k]) maxima_[k] = y[k];
      if (y[k] < minima_[k]) minima_[k] = y[k];
    }
    if (pruned) {
      bool any = false;
      for (char c : dirty_min)
        if (c) any = true;
      if (any) recompute_minima(dirty_min);
    }
    return true;
  }

  const ObjectiveVector& maxima() const {
    require_nonempty();
    return maxima_;
  }
  const ObjectiveVector& minima() const {
    require_nonempty();
    return minima_;
  }

  Query minimize_chebycheff(const ChebycheffFunction& f) const {
    require_nonempty();
    if (f.dim() != dim_) throw std::invalid_argument("minimize_chebycheff: dimension mismatch");
    Query q;
    q.value = std::numeric_limits<double>::infinity();
    visit_min(*root_, f, q);
    return q;
  }

  const Entry& sample_uniform(Rng& rng) const {
    require_nonempty();
    const Node* n = root_.get();
    while (!n->leaf()) {
      std::uniform_int_distribution<std::size_t> pick(0, n->count - 1);
      std::size_t r = pick(rng);
      std::size_t acc = 0;
      const Node* next = nullptr;
      for (const auto& c : n->children) {
        acc += c->count;
        if (r < acc) {
          next = c.get();
          break;
        }
      }
      n = next;
    }
    std::uniform_int_distribution<std::size_t> pick(0, n->entries.size() - 1);
    return n->entries[pick(rng)];
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    if (root_) walk(*root_, fn);
  }

  std::vector<ObjectiveVector> snapshot() const {
    std::vector<ObjectiveVector> out;
    out.reserve(size());
    for_each([&](const Entry& e) { out.push_back(e.objectives); });
    return out;
  }

  std::size_t depth() const { return root_ ? depth_of(*root_) : 0; }
  std::size_t leaf_capacity() const { return leaf_capacity_; }

  // Test support: walks the whole tree checking the structural properties
  // (bounds cover the subtree, child bounds nested in parent bounds, counts
  // consistent, leaf sizes within capacity). Throws on violation.
  void validate() const {
    if (!root_) return;
    std::size_t total = validate_node(*root_, nullptr);
    if (total != root_->count) throw std::logic_error("nd-tree: root count mismatch");
  }

 private:
  struct Node {
    std::vector<std::unique_ptr<Node>> children;  // empty -> leaf
    std::vector<Entry> entries;                   // leaf only
    ObjectiveVector ideal;
    ObjectiveVector nadir;
    std::size_t count = 0;

    bool leaf() const { return children.empty(); }
  };

  enum class PruneOutcome { Rejected, Unchanged, Changed };

  void require_nonempty() const {
    if (!root_) throw std::runtime_error("archive is empty");
  }

  std::unique_ptr<Node> make_leaf(Entry e) {
    auto n = std::make_unique<Node>();
    n->ideal = e.objectives;
    n->nadir = e.objectives;
    n->entries.push_back(std::move(e));
    n->count = 1;
    return n;
  }

  static void extend_bounds(Node& n, const ObjectiveVector& y) {
    for (std::size_t k = 0; k < y.size(); ++k) {
      if (y[k] > n.ideal[k]) n.ideal[k] = y[k];
      if (y[k] < n.nadir[k]) n.nadir[k] = y[k];
    }
  }

  static void recompute_leaf_bounds(Node& n) {
    n.ideal = n.entries.front().objectives;
    n.nadir = n.entries.front().objectives;
    for (std::size_t i = 1; i < n.entries.size(); ++i) {
      const ObjectiveVector& y = n.entries[i].objectives;
      for (std::size_t k = 0; k < y.size(); ++k) {
        if (y[k] > n.ideal[k]) n.ideal[k] = y[k];
        if (y[k] < n.nadir[k]) n.nadir[k] = y[k];
      }
    }
    n.count = n.entries.size();
  }

  static void recompute_internal_bounds(Node& n) {
    n.ideal = n.children.front()->ideal;
    n.nadir = n.children.front()->nadir;
    n.count = n.children.front()->count;
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      const Node& c = *n.children[i];
      for (std::size_t k = 0; k < n.ideal.size(); ++k) {
        if (c.ideal[k] > n.ideal[k]) n.ideal[k] = c.ideal[k];
        if (c.nadir[k] < n.nadir[k]) n.nadir[k] = c.nadir[k];
      }
      n.count += c.count;
    }
  }

  void mark_dirty_min(const ObjectiveVector& nadir, std::vector<char>& dirty) const {
    for (std::size_t k = 0; k < dim_; ++k)
      if (nadir[k] == minima_[k]) dirty[k] = 1;
  }

  PruneOutcome prune(Node& n, const ObjectiveVector& y, std::vector<char>& dirty_min,
                     bool& pruned) {
    if (weakly_dominates(n.nadir, y)) return PruneOutcome::Rejected;
    if (strictly_dominates(y, n.ideal)) {
      mark_dirty_min(n.nadir, dirty_min);
      n.children.clear();
      n.entries.clear();
      n.count = 0;
      pruned = true;
      return PruneOutcome::Changed;
    }
    // A subtree can interact with y only if its box may contain a dominator
    // of y (ideal >= y) or a victim of y (y >= nadir).
    if (!weakly_dominates(n.ideal, y) && !weakly_dominates(y, n.nadir))
      return PruneOutcome::Unchanged;

    if (n.leaf()) {
      bool changed = false;
      for (std::size_t i = 0; i < n.entries.size();) {
        switch (compare(n.entries[i].objectives, y)) {
          case Dominance::Dominates:
          case Dominance::Equal:
            // Cannot follow a removal: a dominator of y and a victim of y
            // cannot coexist in a mutually non-dominated set.
            return PruneOutcome::Rejected;
          case Dominance::DominatedBy:
            mark_dirty_min(n.entries[i].objectives, dirty_min);
            n.entries.erase(n.entries.begin() + static_cast<std::ptrdiff_t>(i));
            changed = true;
            pruned = true;
            break;
          case Dominance::Incomparable:
            ++i;
            break;
        }
      }
      if (!changed) return PruneOutcome::Unchanged;
      if (!n.entries.empty()) recompute_leaf_bounds(n);
      n.count = n.entries.size();
      return PruneOutcome::Changed;
    }

    bool changed = false;
    for (std::size_t i = 0; i < n.children.size();) {
      PruneOutcome r = prune(*n.children[i], y, dirty_min, pruned);
      if (r == PruneOutcome::Rejected) return PruneOutcome::Rejected;
      if (r == PruneOutcome::Changed) {
        changed = true;
        if (n.children[i]->count == 0) {
          n.children.erase(n.children.begin() + static_cast<std::ptrdiff_t>(i));
          continue;
        }
      }
      ++i;
    }
    if (!changed) return PruneOutcome::Unchanged;
    if (n.children.empty()) {
      n.count = 0;
      return PruneOutcome::Changed;
    }
    if (n.children.size() == 1) {
      // Collapse single-child internal nodes to keep the tree shallow.
      auto child = std::move(n.children.front());
      n.children = std::move(child->children);
      n.entries = std::move(child->entries);
      n.ideal = std::move(child->ideal);
      n.nadir = std::move(child->nadir);
      n.count = child->count;
    } else {
      recompute_internal_bounds(n);
    }
    return PruneOutcome::Changed;
  }

  static double sq_distance(const ObjectiveVector& a, const ObjectiveVector& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      double diff = a[k] - b[k];
      s += diff * diff;
    }
    return s;
  }

  static double sq_distance_to_box_center(const ObjectiveVector& y, const Node& n) {
    double s = 0.0;
    for (std::size_t k = 0; k < y.size(); ++k) {
      double diff = y[k] - 0.5 * (n.ideal[k] + n.nadir[k]);
      s += diff * diff;
    }
    return s;
  }

  void insert_entry(Entry e) {
    Node* n = root_.get();
    extend_bounds(*n, e.objectives);
    ++n->count;
    while (!n->leaf()) {
      Node* best = nullptr;
      double best_d = std::numeric_limits<double>::infinity();
      for (const auto& c : n->children) {
        double d2 = sq_distance_to_box_center(e.objectives, *c);
        if (d2 < best_d) {
          best_d = d2;
          best = c.get();
        }
      }
      n = best;
      extend_bounds(*n, e.objectives);
      ++n->count;
    }
    n->entries.push_back(std::move(e));
    n->count = n->entries.size();
    if (n->entries.size() > leaf_capacity_) split_leaf(*n);
  }

  void split_leaf(Node& n) {
    std::vector<Entry> pool = std::move(n.entries);
    n.entries.clear();
    const std::size_t m = pool.size();

    // Seeds are the entries with the greatest average distance to the rest.
    std::vector<double> avg(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) {
        double d2 = sq_distance(pool[i].objectives, pool[j].objectives);
        avg[i] += d2;
        avg[j] += d2;
      }
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      if (avg[a] != avg[b]) return avg[a] > avg[b];
      return a < b;
    });

    const std::size_t num_children = std::min(max_children_, m);
    std::vector<char> is_seed(m, 0);
    n.children.reserve(num_children);
    for (std::size_t c = 0; c < num_children; ++c) {
      std::size_t idx = order[c];
      is_seed[idx] = 1;
      n.children.push_back(make_leaf(std::move(pool[idx])));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (is_seed[i]) continue;
      std::size_t best = 0;
      double best_d = std::numeric_limits<double>::infinity();
      for (std::size_t c = 0; c < num_children; ++c) {
        double d2 = sq_distance(pool[i].objectives, n.children[c]->entries.front().objectives);
        if (d2 < best_d) {
          best_d = d2;
          best = c;
        }
      }
      Node& child = *n.children[best];
      extend_bounds(child, pool[i].objectives);
      child.entries.push_back(std::move(pool[i]));
      child.count = child.entries.size();
    }
    recompute_internal_bounds(n);
  }

  void visit_min(const Node& n, const ChebycheffFunction& f, Query& q) const {
    ++q.visited_nodes;
    if (n.leaf()) {
      for (const Entry& e : n.entries) {
        double v = f.value(e.objectives);
        if (v < q.value) {
          q.value = v;
          q.entry = &e;
        }
      }
      return;
    }
    // Children in ascending order of their ideal-point bound; the bound is a
    // lower bound on every entry value below, so once it fails to beat the
    // incumbent the remaining children cannot either.
    std::vector<std::pair<double, const Node*>> ranked;
    ranked.reserve(n.children.size());
    for (const auto& c : n.children) ranked.emplace_back(f.value(c->ideal), c.get());
    std::sort(ranked.begin(), ranked.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [bound, child] : ranked) {
      if (bound >= q.value) break;
      visit_min(*child, f, q);
    }
  }

  template <typename Fn>
  static void walk(const Node& n, Fn& fn) {
    if (n.leaf()) {
      for (const Entry& e : n.entries) fn(e);
      return;
    }
    for (const auto& c : n.children) walk(*c, fn);
  }

  static std::size_t depth_of(const Node& n) {
    if (n.leaf()) return 1;
    std::size_t d = 0;
    for (const auto& c : n.children) d = std::max(d, depth_of(*c));
    return 1 + d;
  }

  void recompute_minima(const std::vector<char>& dirty) {
    for (std::size_t k = 0; k < dim_; ++k)
      if (dirty[k]) minima_[k] = std::numeric_limits<double>::infinity();
    for_each([&](const Entry& e) {
      for (std::size_t k = 0; k < dim_; ++k)
        if (dirty[k] && e.objectives[k] < minima_[k]) minima_[k] = e.objectives[k];
    });
  }

  std::size_t validate_node(const Node& n, const Node* parent) const {
    if (n.ideal.size() != dim_ || n.nadir.size() != dim_)
      throw std::logic_error("nd-tree: bound dimension mismatch");
    if (parent) {
      if (!weakly_dominates(parent->ideal, n.ideal))
        throw std::logic_error("nd-tree: child ideal exceeds parent ideal");
      if (!weakly_dominates(n.nadir, parent->nadir))
        throw std::logic_error("nd-tree: child nadir below parent nadir");
    }
    if (n.leaf()) {
      if (n.entries.empty()) throw std::logic_error("nd-tree: empty leaf");
      if (n.entries.size() > leaf_capacity_) throw std::logic_error("nd-tree: leaf over capacity");
      if (n.count != n.entries.size()) throw std::logic_error("nd-tree: leaf count mismatch");
      for (const Entry& e : n.entries) {
        if (!weakly_dominates(n.ideal, e.objectives) || !weakly_dominates(e.objectives, n.nadir))
          throw std::logic_error("nd-tree: entry outside node bounds");
      }
      return n.entries.size();
    }
    if (n.children.size() < 2 || n.children.size() > max_children_)
      throw std::logic_error("nd-tree: bad child count");
    std::size_t total = 0;
    for (const auto& c : n.children) total += validate_node(*c, &n);
    if (total != n.count) throw std::logic_error("nd-tree: internal count mismatch");
    return total;
  }

  std::size_t dim_;
  std::size_t leaf_capacity_;
  std::size_t max_children_;
  std::unique_ptr<Node> root_;
  ObjectiveVector maxima_;
  ObjectiveVector minima_;
};

}  // namespace mopls

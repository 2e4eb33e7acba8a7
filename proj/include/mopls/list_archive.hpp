#pragma once

#include <cstddef>
#include <stdexcept>
#include <variant>
#include <vector>

#include "mopls/objective.hpp"
#include "mopls/rng.hpp"
#include "mopls/weights.hpp"

namespace mopls {

// Brute-force Pareto archive kept as a flat list. Serves both as the oracle
// the ND-Tree is checked against and as the "List" backend of the search
// variants. Entries keep insertion order (survivors only).
template <typename Payload = std::monostate>
class ListArchive {
 public:
  struct Entry {
    ObjectiveVector objectives;
    Payload payload;
  };

  struct Query {
    const Entry* entry = nullptr;
    double value = 0.0;
    std::size_t visited_nodes = 0;  // flat scan counts entries
  };

  explicit ListArchive(std::size_t dim) : dim_(dim) {
    if (dim_ < 1) throw std::invalid_argument("archive dimension must be >= 1");
  }

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Inserts the candidate unless some stored entry dominates or equals it;
  // entries the candidate dominates are removed. Returns true iff inserted.
  bool update(ObjectiveVector y, Payload payload = {}) {
    if (y.size() != dim_) throw std::invalid_argument("update: dimension mismatch");
    if (!all_finite(y)) throw std::invalid_argument("update: non-finite objective value");
    bool removed = false;
    std::size_t keep = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      switch (compare(entries_[i].objectives, y)) {
        case Dominance::Dominates:
        case Dominance::Equal:
          // No removal can have happened before a rejection: an entry
          // dominated by y and an entry dominating y cannot coexist.
          return false;
        case Dominance::DominatedBy:
          removed = true;
          break;
        case Dominance::Incomparable:
          if (keep != i) entries_[keep] = std::move(entries_[i]);
          ++keep;
          break;
      }
    }
    entries_.resize(keep);
    entries_.push_back(Entry{std::move(y), std::move(payload)});
    if (removed || entries_.size() == 1)
      recompute_extremes();
    else
      extend_extremes(entries_.back().objectives);
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
    Query q;
    q.value = std::numeric_limits<double>::infinity();
    for (const Entry& e : entries_) {
      ++q.visited_nodes;
      double v = f.value(e.objectives);
      if (v < q.value) {
        q.value = v;
        q.entry = &e;
      }
    }
    return q;
  }

  const Entry& sample_uniform(Rng& rng) const {
    require_nonempty();
    std::uniform_int_distribution<std::size_t> pick(0, entries_.size() - 1);
    return entries_[pick(rng)];
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (const Entry& e : entries_) fn(e);
  }

  std::vector<ObjectiveVector> snapshot() const {
    std::vector<ObjectiveVector> out;
    out.reserve(entries_.size());
    for (const Entry& e : entries_) out.push_back(e.objectives);
    return out;
  }

 private:
  void require_nonempty() const {
    if (entries_.empty()) throw std::runtime_error("archive is empty");
  }

  void extend_extremes(const ObjectiveVector& y) {
    for (std::size_t k = 0; k < dim_; ++k) {
      if (y[k] > maxima_[k]) maxima_[k] = y[k];
      if (y[k] < minima_[k]) minima_[k] = y[k];
    }
  }

  void recompute_extremes() {
    maxima_ = entries_.front().objectives;
    minima_ = entries_.front().objectives;
    for (std::size_t i = 1; i < entries_.size(); ++i) extend_extremes(entries_[i].objectives);
  }

  std::size_t dim_;
  std::vector<Entry> entries_;
  ObjectiveVector maxima_;
  ObjectiveVector minima_;
};

}  // namespace mopls

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mopls {

// Point in objective space. Canonical orientation is maximization for every
// component; minimized quantities (route costs) are negated at the problem
// boundary. Comparisons are exact, no epsilon.
using ObjectiveVector = std::vector<double>;

enum class Dominance { Dominates, DominatedBy, Incomparable, Equal };

inline void require_same_dim(const ObjectiveVector& a, const ObjectiveVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("objective vectors have mismatched dimension");
}

inline bool all_finite(const ObjectiveVector& v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

inline Dominance compare(const ObjectiveVector& a, const ObjectiveVector& b) {
  require_same_dim(a, b);
  bool a_better = false;
  bool b_better = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k])
      a_better = true;
    else if (a[k] < b[k])
      b_better = true;
  }
  if (a_better && b_better) return Dominance::Incomparable;
  if (a_better) return Dominance::Dominates;
  if (b_better) return Dominance::DominatedBy;
  return Dominance::Equal;
}

// a >= b componentwise (covers equality).
inline bool weakly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] < b[k]) return false;
  return true;
}

inline bool strictly_dominates(const ObjectiveVector& a, const ObjectiveVector& b) {
  return compare(a, b) == Dominance::Dominates;
}

}  // namespace mopls

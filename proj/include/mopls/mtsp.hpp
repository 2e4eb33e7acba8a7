#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "mopls/move.hpp"
#include "mopls/objective.hpp"
#include "mopls/rng.hpp"

namespace mopls {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double euclid(const Point2& a, const Point2& b) {
  double dx = a.x - b.x;
  double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

// Symmetric Euclidean multiobjective TSP instance: one coordinate plane per
// objective, edge cost k = distance in plane k. Candidate lists are the
// symmetric closure of the union over objectives of each node's k nearest
// neighbors.
struct MTSPInstance {
  int n = 0;
  int d = 0;
  std::vector<std::vector<Point2>> planes;    // [d][n]
  std::vector<std::vector<int>> candidates;   // per node, sorted ascending
  std::vector<std::vector<char>> cand_flag;   // n x n adjacency

  double cost(int k, int i, int j) const {
    if (!cost_cache.empty()) return cost_cache[static_cast<std::size_t>(k) * n * n + i * n + j];
    return euclid(planes[k][i], planes[k][j]);
  }

  bool is_candidate(int u, int v) const { return cand_flag[u][v] != 0; }

  // Optional n x n x d matrix of precomputed distances; values are bit-equal
  // to the on-the-fly computation.
  void build_cost_cache();
  void drop_cost_cache() { cost_cache.clear(); }
  bool has_cost_cache() const { return !cost_cache.empty(); }

 private:
  std::vector<double> cost_cache;
};

MTSPInstance generate_mtsp(int n, int d, std::uint64_t seed, int cand_k = 8);
void build_candidate_lists(MTSPInstance& inst, int cand_k);

struct Tour {
  std::vector<int> order;        // permutation of 0..n-1
  std::vector<int> position;     // node -> index in order

  int size() const { return static_cast<int>(order.size()); }

  static Tour identity(int n);
  static Tour random(int n, Rng& rng);
  void rebuild_positions();
  bool valid(int n) const;
};

// Canonical objective vector: negated per-plane tour length, closing edge
// included.
ObjectiveVector evaluate_tour(const MTSPInstance& inst, const Tour& t);

void enumerate_tour_moves(const MTSPInstance& inst, const Tour& t, std::vector<Move>& out);
Move sample_tour_move(const MTSPInstance& inst, const Tour& t, Rng& rng);
void tour_move_delta(const MTSPInstance& inst, const Tour& t, const Move& m, ObjectiveVector& delta);
void apply_tour_move(Tour& t, const Move& m);

// Search adapter around an instance.
struct MtspProblem {
  const MTSPInstance* inst = nullptr;

  using Solution = Tour;

  int objective_count() const { return inst->d; }
  ObjectiveVector evaluate(const Solution& s) const { return evaluate_tour(*inst, s); }
  void enumerate_moves(const Solution& s, std::vector<Move>& out) const {
    enumerate_tour_moves(*inst, s, out);
  }
  Move sample_move(const Solution& s, Rng& rng) const { return sample_tour_move(*inst, s, rng); }
  void move_delta(const Solution& s, const Move& m, ObjectiveVector& delta) const {
    tour_move_delta(*inst, s, m, delta);
  }
  void apply_move(Solution& s, const Move& m) const { apply_tour_move(s, m); }
  Solution random_solution(Rng& rng) const { return Tour::random(inst->n, rng); }
};

}  // namespace mopls

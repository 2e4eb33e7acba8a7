#pragma once

#include <cstdint>
#include <vector>

#include "mopls/move.hpp"
#include "mopls/mtsp.hpp"
#include "mopls/objective.hpp"
#include "mopls/rng.hpp"

namespace mopls {

// Traveling salesperson with profits: select a subset of nodes and a cycle
// through them. d1 route-cost objectives (minimized, one plane each) followed
// by d2 node-profit objectives (maximized). Canonical orientation negates the
// costs.
struct MTSPWPInstance {
  int n = 0;
  int d1 = 0;  // cost objectives
  int d2 = 0;  // profit objectives
  std::vector<std::vector<Point2>> planes;     // [d1][n]
  std::vector<std::vector<double>> profits;    // [n][d2]
  std::vector<std::vector<int>> candidates;    // from cost planes
  std::vector<std::vector<char>> cand_flag;

  int d() const { return d1 + d2; }

  double cost(int k, int i, int j) const {
    if (!cost_cache.empty()) return cost_cache[static_cast<std::size_t>(k) * n * n + i * n + j];
    return euclid(planes[k][i], planes[k][j]);
  }

  bool is_candidate(int u, int v) const { return cand_flag[u][v] != 0; }

  void build_cost_cache();
  bool has_cost_cache() const { return !cost_cache.empty(); }

 private:
  std::vector<double> cost_cache;
};

MTSPWPInstance generate_mtspwp(int n, int d1, int d2, std::uint64_t seed, int cand_k = 8);
void build_candidate_lists(MTSPWPInstance& inst, int cand_k);

// Ordered selection of distinct nodes; never empty. A single-node route has
// zero cost (no self edge).
struct Route {
  std::vector<int> seq;        // visiting order of the selected nodes
  std::vector<int> position;   // node -> index in seq, -1 when not selected

  int size() const { return static_cast<int>(seq.size()); }
  bool contains(int v) const { return position[v] >= 0; }

  static Route of(std::vector<int> nodes, int n);
  static Route random_half(int n, Rng& rng);
  void rebuild_positions(int n);
  bool valid(int n) const;
};

ObjectiveVector evaluate_route(const MTSPWPInstance& inst, const Route& r);

void enumerate_route_moves(const MTSPWPInstance& inst, const Route& r, std::vector<Move>& out);
Move sample_route_move(const MTSPWPInstance& inst, const Route& r, Rng& rng);
void route_move_delta(const MTSPWPInstance& inst, const Route& r, const Move& m,
                      ObjectiveVector& delta);
void apply_route_move(Route& r, const Move& m);

struct MtspwpProblem {
  const MTSPWPInstance* inst = nullptr;

  using Solution = Route;

  int objective_count() const { return inst->d(); }
  ObjectiveVector evaluate(const Solution& s) const { return evaluate_route(*inst, s); }
  void enumerate_moves(const Solution& s, std::vector<Move>& out) const {
    enumerate_route_moves(*inst, s, out);
  }
  Move sample_move(const Solution& s, Rng& rng) const { return sample_route_move(*inst, s, rng); }
  void move_delta(const Solution& s, const Move& m, ObjectiveVector& delta) const {
    route_move_delta(*inst, s, m, delta);
  }
  void apply_move(Solution& s, const Move& m) const { apply_route_move(s, m); }
  Solution random_solution(Rng& rng) const { return Route::random_half(inst->n, rng); }
};

}  // namespace mopls

#include "mopls/mtsp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mopls {

void MTSPInstance::build_cost_cache() {
  if (n > 512) throw std::invalid_argument("cost cache supported for n <= 512 only");
  cost_cache.assign(static_cast<std::size_t>(d) * n * n, 0.0);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cost_cache[static_cast<std::size_t>(k) * n * n + i * n + j] = euclid(planes[k][i], planes[k][j]);
}

void build_candidate_lists(MTSPInstance& inst, int cand_k) {
  if (cand_k < 1) throw std::invalid_argument("candidate list size must be >= 1");
  const int n = inst.n;
  inst.cand_flag.assign(n, std::vector<char>(n, 0));

  std::vector<int> others;
  others.reserve(n - 1);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < inst.d; ++k) {
      others.clear();
      for (int u = 0; u < n; ++u)
        if (u != v) others.push_back(u);
      const int take = std::min<int>(cand_k, static_cast<int>(others.size()));
      // k nearest under this plane; ties broken by node index so instances
      // reload identically.
      std::partial_sort(others.begin(), others.begin() + take, others.end(), [&](int a, int b) {
        double da = euclid(inst.planes[k][v], inst.planes[k][a]);
        double db = euclid(inst.planes[k][v], inst.planes[k][b]);
        if (da != db) return da < db;
        return a < b;
      });
      for (int t = 0; t < take; ++t) inst.cand_flag[v][others[t]] = 1;
    }
  }
  // Symmetric closure.
  for (int v = 0; v < n; ++v)
    for (int u = v + 1; u < n; ++u)
      if (inst.cand_flag[v][u] || inst.cand_flag[u][v]) {
        inst.cand_flag[v][u] = 1;
        inst.cand_flag[u][v] = 1;
      }
  inst.candidates.assign(n, {});
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (inst.cand_flag[v][u]) inst.candidates[v].push_back(u);
}

MTSPInstance generate_mtsp(int n, int d, std::uint64_t seed, int cand_k) {
  if (n < 5) throw std::invalid_argument("mtsp: n must be >= 5");
  if (d < 2) throw std::invalid_argument("mtsp: d must be >= 2");
  MTSPInstance inst;
  inst.n = n;
  inst.d = d;
  inst.planes.assign(d, std::vector<Point2>(n));
  Rng rng(derive_seed(seed, 0x4d545350));  // instance stream
  std::uniform_real_distribution<double> coord(0.0, 1000.0);
  for (int k = 0; k < d; ++k)
    for (int i = 0; i < n; ++i) {
      inst.planes[k][i].x = coord(rng);
      inst.planes[k][i].y = coord(rng);
    }
  build_candidate_lists(inst, cand_k);
  return inst;
}

Tour Tour::identity(int n) {
  Tour t;
  t.order.resize(n);
  std::iota(t.order.begin(), t.order.end(), 0);
  t.rebuild_positions();
  return t;
}

Tour Tour::random(int n, Rng& rng) {
  Tour t = identity(n);
  std::shuffle(t.order.begin(), t.order.end(), rng);
  t.rebuild_positions();
  return t;
}

void Tour::rebuild_positions() {
  position.assign(order.size(), -1);
  for (int idx = 0; idx < static_cast<int>(order.size()); ++idx) position[order[idx]] = idx;
}

bool Tour::valid(int n) const {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : order) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

ObjectiveVector evaluate_tour(const MTSPInstance& inst, const Tour& t) {
  if (!t.valid(inst.n)) throw std::invalid_argument("evaluate_tour: invalid permutation");
  ObjectiveVector y(inst.d, 0.0);
  const int n = inst.n;
  for (int k = 0; k < inst.d; ++k) {
    double total = 0.0;
    for (int i = 0; i + 1 < n; ++i) total += inst.cost(k, t.order[i], t.order[i + 1]);
    total += inst.cost(k, t.order[n - 1], t.order[0]);
    y[k] = -total;
  }
  return y;
}

namespace {

// Candidate-restricted 2-edge exchanges. A move qualifies when one of its two
// new edges joins a candidate pair. Case A anchors the first new edge
// (seq[i], seq[j]); case B anchors the second (seq[i+1], seq[j+1]) and skips
// moves already produced by case A.
template <typename Emit>
void for_each_candidate_two_edge(const MTSPInstance& inst, const std::vector<int>& seq,
                                 const std::vector<int>& pos, Emit&& emit) {
  const int m = static_cast<int>(seq.size());
  if (m < 4) return;
  for (int i = 0; i < m; ++i) {
    int a = seq[i];
    for (int c : inst.candidates[a]) {
      if (pos[c] < 0) continue;  // routes: candidate not selected
      int j = pos[c];
      if (detail::two_edge_pair_valid(i, j, m)) emit(i, j);
    }
  }
  for (int p = 0; p < m; ++p) {
    int u = seq[p];
    for (int c : inst.candidates[u]) {
      if (pos[c] < 0) continue;
      int q = pos[c];
      int i = (p + m - 1) % m;
      int j = (q + m - 1) % m;
      if (i > j) std::swap(i, j);
      if (!detail::two_edge_pair_valid(i, j, m)) continue;
      if (p < q) continue;  // each unordered pair once
      if (inst.is_candidate(seq[i], seq[j])) continue;  // case A already emitted it
      emit(i, j);
    }
  }
}

}  // namespace

void enumerate_tour_moves(const MTSPInstance& inst, const Tour& t, std::vector<Move>& out) {
  out.clear();
  for_each_candidate_two_edge(inst, t.order, t.position,
                              [&](int i, int j) { out.push_back(Move::two_edge_exchange(i, j)); });
}

Move sample_tour_move(const MTSPInstance& inst, const Tour& t, Rng& rng) {
  const int n = inst.n;
  std::uniform_int_distribution<int> pick_node(0, n - 1);
  for (int attempt = 0; attempt < 256; ++attempt) {
    int a = t.order[pick_node(rng)];
    const auto& cand = inst.candidates[a];
    if (cand.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick_cand(0, cand.size() - 1);
    int c = cand[pick_cand(rng)];
    int i = t.position[a];
    int j = t.position[c];
    if (i > j) std::swap(i, j);
    if (detail::two_edge_pair_valid(i, j, n)) return Move::two_edge_exchange(i, j);
  }
  // Dense adjacency in the tour can defeat rejection sampling; fall back to
  // the enumerated neighborhood.
  std::vector<Move> all;
  enumerate_tour_moves(inst, t, all);
  if (all.empty()) throw std::runtime_error("sample_tour_move: no applicable move");
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

void tour_move_delta(const MTSPInstance& inst, const Tour& t, const Move& m,
                     ObjectiveVector& delta) {
  if (m.kind != Move::Kind::TwoEdgeExchange)
    throw std::invalid_argument("tour_move_delta: tours support 2-edge exchanges only");
  const int n = inst.n;
  if (!(m.i >= 0 && m.i < m.j && m.j < n))
    throw std::invalid_argument("tour_move_delta: bad move payload");
  delta.assign(inst.d, 0.0);
  const int a = t.order[m.i];
  const int b = t.order[m.i + 1];
  const int c = t.order[m.j];
  const int e = t.order[(m.j + 1) % n];
  for (int k = 0; k < inst.d; ++k) {
    double raw = inst.cost(k, a, c) + inst.cost(k, b, e) - inst.cost(k, a, b) - inst.cost(k, c, e);
    delta[k] = -raw;
  }
}

void apply_tour_move(Tour& t, const Move& m) {
  if (m.kind != Move::Kind::TwoEdgeExchange)
    throw std::invalid_argument("apply_tour_move: tours support 2-edge exchanges only");
  const int n = t.size();
  if (!(m.i >= 0 && m.i < m.j && m.j < n))
    throw std::invalid_argument("apply_tour_move: bad move payload");
  std::reverse(t.order.begin() + m.i + 1, t.order.begin() + m.j + 1);
  for (int idx = m.i + 1; idx <= m.j; ++idx) t.position[t.order[idx]] = idx;
}

}  // namespace mopls

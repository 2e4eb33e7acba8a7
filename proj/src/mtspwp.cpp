#include "mopls/mtspwp.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mopls {

void MTSPWPInstance::build_cost_cache() {
  if (n > 512) throw std::invalid_argument("cost cache supported for n <= 512 only");
  cost_cache.assign(static_cast<std::size_t>(d1) * n * n, 0.0);
  for (int k = 0; k < d1; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        cost_cache[static_cast<std::size_t>(k) * n * n + i * n + j] =
            euclid(planes[k][i], planes[k][j]);
}

namespace {

template <typename Inst>
void build_candidate_lists_impl(Inst& inst, int cand_k, int num_planes) {
  if (cand_k < 1) throw std::invalid_argument("candidate list size must be >= 1");
  const int n = inst.n;
  inst.cand_flag.assign(n, std::vector<char>(n, 0));
  std::vector<int> others;
  others.reserve(n - 1);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < num_planes; ++k) {
      others.clear();
      for (int u = 0; u < n; ++u)
        if (u != v) others.push_back(u);
      const int take = std::min<int>(cand_k, static_cast<int>(others.size()));
      std::partial_sort(others.begin(), others.begin() + take, others.end(), [&](int a, int b) {
        double da = euclid(inst.planes[k][v], inst.planes[k][a]);
        double db = euclid(inst.planes[k][v], inst.planes[k][b]);
        if (da != db) return da < db;
        return a < b;
      });
      for (int t = 0; t < take; ++t) inst.cand_flag[v][others[t]] = 1;
    }
  }
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

}  // namespace

void build_candidate_lists(MTSPWPInstance& inst, int cand_k) {
  build_candidate_lists_impl(inst, cand_k, inst.d1);
}

MTSPWPInstance generate_mtspwp(int n, int d1, int d2, std::uint64_t seed, int cand_k) {
  if (n < 5) throw std::invalid_argument("mtspwp: n must be >= 5");
  if (d1 < 1 || d2 < 1) throw std::invalid_argument("mtspwp: d1 and d2 must be >= 1");
  MTSPWPInstance inst;
  inst.n = n;
  inst.d1 = d1;
  inst.d2 = d2;
  inst.planes.assign(d1, std::vector<Point2>(n));
  inst.profits.assign(n, std::vector<double>(d2, 0.0));
  Rng rng(derive_seed(seed, 0x4d545357));  // instance stream
  std::uniform_real_distribution<double> coord(0.0, 1000.0);
  for (int k = 0; k < d1; ++k)
    for (int i = 0; i < n; ++i) {
      inst.planes[k][i].x = coord(rng);
      inst.planes[k][i].y = coord(rng);
    }
  std::uniform_real_distribution<double> profit(0.0, 2000.0);
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < d2; ++l) inst.profits[i][l] = profit(rng);
  build_candidate_lists(inst, cand_k);
  return inst;
}

Route Route::of(std::vector<int> nodes, int n) {
  Route r;
  r.seq = std::move(nodes);
  r.rebuild_positions(n);
  return r;
}

Route Route::random_half(int n, Rng& rng) {
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  int m = std::max(1, n / 2);
  all.resize(m);
  return Route::of(std::move(all), n);
}

void Route::rebuild_positions(int n) {
  position.assign(n, -1);
  for (int idx = 0; idx < static_cast<int>(seq.size()); ++idx) position[seq[idx]] = idx;
}

bool Route::valid(int n) const {
  if (seq.empty() || static_cast<int>(seq.size()) > n) return false;
  if (static_cast<int>(position.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : seq) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int v = 0; v < n; ++v) {
    if (seen[v] != (position[v] >= 0)) return false;
    if (position[v] >= 0 && seq[position[v]] != v) return false;
  }
  return true;
}

ObjectiveVector evaluate_route(const MTSPWPInstance& inst, const Route& r) {
  if (!r.valid(inst.n)) throw std::invalid_argument("evaluate_route: invalid route");
  ObjectiveVector y(inst.d(), 0.0);
  const int m = r.size();
  for (int k = 0; k < inst.d1; ++k) {
    double total = 0.0;
    if (m >= 2) {
      for (int i = 0; i + 1 < m; ++i) total += inst.cost(k, r.seq[i], r.seq[i + 1]);
      total += inst.cost(k, r.seq[m - 1], r.seq[0]);
    }
    y[k] = -total;
  }
  for (int l = 0; l < inst.d2; ++l) {
    double total = 0.0;
    for (int v : r.seq) total += inst.profits[v][l];
    y[inst.d1 + l] = total;
  }
  return y;
}

namespace {

// Shared with mtsp.cpp in spirit; small enough to keep local. See
// enumerate_tour_moves for the two-case candidate scheme.
template <typename Emit>
void for_each_candidate_two_edge(const MTSPWPInstance& inst, const std::vector<int>& seq,
                                 const std::vector<int>& pos, Emit&& emit) {
  const int m = static_cast<int>(seq.size());
  if (m < 4) return;
  for (int i = 0; i < m; ++i) {
    int a = seq[i];
    for (int c : inst.candidates[a]) {
      if (pos[c] < 0) continue;
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
      if (p < q) continue;
      if (inst.is_candidate(seq[i], seq[j])) continue;
      emit(i, j);
    }
  }
}

}  // namespace

void enumerate_route_moves(const MTSPWPInstance& inst, const Route& r, std::vector<Move>& out) {
  out.clear();
  const int m = r.size();
  const int n = inst.n;

  for_each_candidate_two_edge(inst, r.seq, r.position,
                              [&](int i, int j) { out.push_back(Move::two_edge_exchange(i, j)); });

  if (m >= 2)
    for (int p = 0; p < m; ++p) out.push_back(Move::node_delete(p));

  // Insert positions are restricted to slots adjacent to selected
  // candidate-list members of the inserted node.
  std::vector<int> slots;
  for (int u = 0; u < n; ++u) {
    if (r.contains(u)) continue;
    slots.clear();
    for (int v : inst.candidates[u]) {
      if (!r.contains(v)) continue;
      slots.push_back(r.position[v]);
      slots.push_back(r.position[v] + 1);
    }
    std::sort(slots.begin(), slots.end());
    slots.erase(std::unique(slots.begin(), slots.end()), slots.end());
    for (int p : slots) out.push_back(Move::node_insert(u, p));
  }

  if (m < n)
    for (int p = 0; p < m; ++p)
      for (int u = 0; u < n; ++u)
        if (!r.contains(u)) out.push_back(Move::node_exchange(p, u));
}

Move sample_route_move(const MTSPWPInstance& inst, const Route& r, Rng& rng) {
  const int m = r.size();
  const int n = inst.n;
  std::vector<Move::Kind> applicable;
  if (m >= 4) applicable.push_back(Move::Kind::TwoEdgeExchange);
  if (m >= 2) applicable.push_back(Move::Kind::NodeDelete);
  if (m < n) applicable.push_back(Move::Kind::NodeInsert);
  if (m < n) applicable.push_back(Move::Kind::NodeExchange);
  if (applicable.empty()) throw std::runtime_error("sample_route_move: no applicable move type");
  std::uniform_int_distribution<std::size_t> pick_kind(0, applicable.size() - 1);
  Move::Kind kind = applicable[pick_kind(rng)];

  auto pick_unselected = [&]() {
    std::uniform_int_distribution<int> pick_node(0, n - 1);
    for (int attempt = 0; attempt < 256; ++attempt) {
      int u = pick_node(rng);
      if (!r.contains(u)) return u;
    }
    for (int u = 0; u < n; ++u)
      if (!r.contains(u)) return u;
    throw std::runtime_error("sample_route_move: no unselected node");
  };

  switch (kind) {
    case Move::Kind::TwoEdgeExchange: {
      std::uniform_int_distribution<int> pick_pos(0, m - 1);
      for (int attempt = 0; attempt < 256; ++attempt) {
        int i = pick_pos(rng);
        int j = pick_pos(rng);
        if (i > j) std::swap(i, j);
        if (detail::two_edge_pair_valid(i, j, m)) return Move::two_edge_exchange(i, j);
      }
      throw std::runtime_error("sample_route_move: failed to draw a 2-edge exchange");
    }
    case Move::Kind::NodeDelete: {
      std::uniform_int_distribution<int> pick_pos(0, m - 1);
      return Move::node_delete(pick_pos(rng));
    }
    case Move::Kind::NodeInsert: {
      std::uniform_int_distribution<int> pick_pos(0, m);
      return Move::node_insert(pick_unselected(), pick_pos(rng));
    }
    case Move::Kind::NodeExchange: {
      std::uniform_int_distribution<int> pick_pos(0, m - 1);
      return Move::node_exchange(pick_pos(rng), pick_unselected());
    }
  }
  throw std::logic_error("unreachable");
}

void route_move_delta(const MTSPWPInstance& inst, const Route& r, const Move& m,
                      ObjectiveVector& delta) {
  const int sz = r.size();
  delta.assign(inst.d(), 0.0);
  switch (m.kind) {
    case Move::Kind::TwoEdgeExchange: {
      if (!(m.i >= 0 && m.i < m.j && m.j < sz))
        throw std::invalid_argument("route_move_delta: bad 2-edge exchange");
      const int a = r.seq[m.i];
      const int b = r.seq[m.i + 1];
      const int c = r.seq[m.j];
      const int e = r.seq[(m.j + 1) % sz];
      for (int k = 0; k < inst.d1; ++k) {
        double raw =
            inst.cost(k, a, c) + inst.cost(k, b, e) - inst.cost(k, a, b) - inst.cost(k, c, e);
        delta[k] = -raw;
      }
      return;
    }
    case Move::Kind::NodeDelete: {
      if (m.i < 0 || m.i >= sz || sz < 2)
        throw std::invalid_argument("route_move_delta: bad delete");
      const int x = r.seq[m.i];
      const int prev = r.seq[(m.i + sz - 1) % sz];
      const int next = r.seq[(m.i + 1) % sz];
      for (int k = 0; k < inst.d1; ++k) {
        // prev == next at sz == 2; cost(prev, next) is then 0 and the route
        // degenerates to a single node with zero cost.
        double raw = inst.cost(k, prev, next) - inst.cost(k, prev, x) - inst.cost(k, x, next);
        if (sz == 2) raw = -2.0 * inst.cost(k, prev, x);
        delta[k] = -raw;
      }
      for (int l = 0; l < inst.d2; ++l) delta[inst.d1 + l] = -inst.profits[x][l];
      return;
    }
    case Move::Kind::NodeInsert: {
      if (m.node < 0 || m.node >= inst.n || r.contains(m.node) || m.i < 0 || m.i > sz)
        throw std::invalid_argument("route_move_delta: bad insert");
      const int u = m.node;
      const int prev = r.seq[(m.i + sz - 1) % sz];
      const int next = r.seq[m.i % sz];
      for (int k = 0; k < inst.d1; ++k) {
        double raw = inst.cost(k, prev, u) + inst.cost(k, u, next) - inst.cost(k, prev, next);
        if (sz == 1) raw = 2.0 * inst.cost(k, prev, u);
        delta[k] = -raw;
      }
      for (int l = 0; l < inst.d2; ++l) delta[inst.d1 + l] = inst.profits[u][l];
      return;
    }
    case Move::Kind::NodeExchange: {
      if (m.node < 0 || m.node >= inst.n || r.contains(m.node) || m.i < 0 || m.i >= sz)
        throw std::invalid_argument("route_move_delta: bad exchange");
      const int u = m.node;
      const int x = r.seq[m.i];
      const int prev = r.seq[(m.i + sz - 1) % sz];
      const int next = r.seq[(m.i + 1) % sz];
      for (int k = 0; k < inst.d1; ++k) {
        double raw = inst.cost(k, prev, u) + inst.cost(k, u, next) - inst.cost(k, prev, x) -
                     inst.cost(k, x, next);
        if (sz == 1) raw = 0.0;  // single-node route swaps to another single node
        delta[k] = -raw;
      }
      for (int l = 0; l < inst.d2; ++l)
        delta[inst.d1 + l] = inst.profits[u][l] - inst.profits[x][l];
      return;
    }
  }
  throw std::logic_error("unreachable");
}

void apply_route_move(Route& r, const Move& m) {
  const int sz = r.size();
  switch (m.kind) {
    case Move::Kind::TwoEdgeExchange: {
      if (!(m.i >= 0 && m.i < m.j && m.j < sz))
        throw std::invalid_argument("apply_route_move: bad 2-edge exchange");
      std::reverse(r.seq.begin() + m.i + 1, r.seq.begin() + m.j + 1);
      for (int idx = m.i + 1; idx <= m.j; ++idx) r.position[r.seq[idx]] = idx;
      return;
    }
    case Move::Kind::NodeDelete: {
      if (m.i < 0 || m.i >= sz || sz < 2) throw std::invalid_argument("apply_route_move: bad delete");
      r.position[r.seq[m.i]] = -1;
      r.seq.erase(r.seq.begin() + m.i);
      for (int idx = m.i; idx < static_cast<int>(r.seq.size()); ++idx) r.position[r.seq[idx]] = idx;
      return;
    }
    case Move::Kind::NodeInsert: {
      if (m.node < 0 || m.node >= static_cast<int>(r.position.size()) || r.contains(m.node) ||
          m.i < 0 || m.i > sz)
        throw std::invalid_argument("apply_route_move: bad insert");
      r.seq.insert(r.seq.begin() + m.i, m.node);
      for (int idx = m.i; idx < static_cast<int>(r.seq.size()); ++idx) r.position[r.seq[idx]] = idx;
      return;
    }
    case Move::Kind::NodeExchange: {
      if (m.node < 0 || m.node >= static_cast<int>(r.position.size()) || r.contains(m.node) ||
          m.i < 0 || m.i >= sz)
        throw std::invalid_argument("apply_route_move: bad exchange");
      r.position[r.seq[m.i]] = -1;
      r.seq[m.i] = m.node;
      r.position[m.node] = m.i;
      return;
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace mopls

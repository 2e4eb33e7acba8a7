#pragma once

namespace mopls {

// Neighborhood move. TwoEdgeExchange applies to tours and routes; the node
// moves apply to routes only.
struct Move {
  enum class Kind { TwoEdgeExchange, NodeDelete, NodeInsert, NodeExchange };

  Kind kind = Kind::TwoEdgeExchange;
  int i = -1;     // first position (TwoEdgeExchange) or the position payload
  int j = -1;     // second position (TwoEdgeExchange only)
  int node = -1;  // node id (NodeInsert / NodeExchange)

  static Move two_edge_exchange(int i, int j) {
    return Move{Kind::TwoEdgeExchange, i, j, -1};
  }
  static Move node_delete(int position) { return Move{Kind::NodeDelete, position, -1, -1}; }
  static Move node_insert(int node, int position) {
    return Move{Kind::NodeInsert, position, -1, node};
  }
  static Move node_exchange(int position, int node) {
    return Move{Kind::NodeExchange, position, -1, node};
  }

  friend bool operator==(const Move& a, const Move& b) {
    return a.kind == b.kind && a.i == b.i && a.j == b.j && a.node == b.node;
  }
};

namespace detail {

// A 2-edge exchange (i, j) removes edges (seq[i], seq[i+1]) and
// (seq[j], seq[(j+1) mod m]). Adjacent edge pairs reproduce the same cycle,
// so valid moves need j >= i+2 and exclude the wrap-around pair (0, m-1).
inline bool two_edge_pair_valid(int i, int j, int m) {
  return i >= 0 && i < j && j < m && j - i >= 2 && !(i == 0 && j == m - 1);
}

}  // namespace detail

}  // namespace mopls

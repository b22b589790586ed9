#pragma once

#include <vector>

#include "spinz/graph.hpp"

namespace spinz {

/// Rooted tree of vertex bags. Node 0 is not special; `root` names the node
/// with parent == -1 (a single root; extra component roots are re-attached
/// under it).
class TreeDecomposition {
 public:
  struct Node {
    std::vector<int> bag;  // sorted vertex ids
    int parent = -1;
  };

  TreeDecomposition(std::vector<Node> nodes, int root);

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  int width() const { return width_; }
  /// Children lists, index-aligned with nodes().
  const std::vector<std::vector<int>>& children() const { return children_; }

 private:
  std::vector<Node> nodes_;
  int root_;
  int width_;
  std::vector<std::vector<int>> children_;
};

enum class DecompositionStrategy { MinFill, MinDegree, ExactSmall };

/// Builds a decomposition by vertex elimination. MinFill / MinDegree are
/// greedy heuristics (width is an upper bound); ExactSmall searches all
/// elimination orders via subset DP and is optimal, but only accepts
/// n <= 12 (throws ExactTooLarge above that).
TreeDecomposition tree_decomposition(const OrientedGraph& g, DecompositionStrategy strategy);

/// Decomposition induced by a concrete elimination order (one bag per
/// vertex: the vertex plus its neighbours at elimination time).
TreeDecomposition decomposition_from_order(const OrientedGraph& g, const std::vector<int>& order);

/// Checks the three axioms (vertex cover, edge cover, connected subtrees)
/// plus tree-structure sanity.
bool is_valid_decomposition(const OrientedGraph& g, const TreeDecomposition& td);

}  // namespace spinz

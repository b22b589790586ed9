#pragma once

#include <optional>
#include <vector>

#include "spinz/types.hpp"

namespace spinz {

enum class EdgeEnd { Head, Tail };

struct Edge {
  int head = 0;
  int tail = 0;
  bool is_loop() const { return head == tail; }
};

/// One edge-end in a vertex's rotation.
struct RotationEntry {
  int edge = 0;
  EdgeEnd end = EdgeEnd::Head;
  friend bool operator==(const RotationEntry&, const RotationEntry&) = default;
};

using RotationSystem = std::vector<std::vector<RotationEntry>>;

/// Oriented multigraph. Edge ids are dense 0..N-1 (the position in the edge
/// list); self-loops and parallel edges are allowed. An optional rotation
/// system (cyclic order of incident edge-ends per vertex) fixes a surface
/// embedding.
class OrientedGraph {
 public:
  OrientedGraph(int vertex_count, std::vector<Edge> edges);
  OrientedGraph(int vertex_count, std::vector<Edge> edges, RotationSystem rotation);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_embedding() const { return rotation_.has_value(); }
  const RotationSystem& rotation() const;

  /// Same graph with the orientation of one edge flipped. The rotation
  /// system, which is orientation-agnostic at the edge-end level, is kept.
  OrientedGraph with_edge_reversed(int e) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::optional<RotationSystem> rotation_;
};

/// n x N matrix with +1 at the head row and -1 at the tail row of each edge
/// column; self-loop columns are zero.
IntMat incidence_matrix(const OrientedGraph& g);

bool is_connected(const OrientedGraph& g);

/// Vertex sets of the connected components, each sorted, ordered by their
/// smallest vertex.
std::vector<std::vector<int>> connected_components(const OrientedGraph& g);

/// One subgraph per connected component with vertices and edges relabelled
/// densely; the mappings recover original ids.
struct ComponentSubgraph {
  OrientedGraph graph;
  std::vector<int> vertex_ids;  // local vertex -> original vertex
  std::vector<int> edge_ids;    // local edge -> original edge
};
std::vector<ComponentSubgraph> component_subgraphs(const OrientedGraph& g);

/// Edge ids of the deterministic spanning tree (edges scanned in id order,
/// keeping those that join two components). Throws DisconnectedGraph.
std::vector<int> spanning_tree(const OrientedGraph& g);

/// One signed cycle vector per non-tree edge, entries in {-1,0,+1}, each in
/// the integer kernel of the incidence matrix. A self-loop yields the unit
/// vector at its own position. Throws NotASpanningTree.
std::vector<IntVec> fundamental_cycles(const OrientedGraph& g, const std::vector<int>& tree);

bool is_tree(const OrientedGraph& g);

/// True iff the graph is one directed cycle: every vertex has exactly one
/// outgoing and one incoming edge-end and the graph is connected. A single
/// self-loop qualifies.
bool is_coherent_cycle(const OrientedGraph& g);

}  // namespace spinz

#include "spinz/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

#include "spinz/errors.hpp"

namespace spinz {

namespace {

void check_edges(int n, const std::vector<Edge>& edges) {
  if (n <= 0) throw Error("vertex count must be positive");
  for (const Edge& e : edges) {
    if (e.head < 0 || e.head >= n || e.tail < 0 || e.tail >= n)
      throw Error("edge endpoint out of range");
  }
}

void check_rotation(int n, const std::vector<Edge>& edges, const RotationSystem& rot) {
  if (static_cast<int>(rot.size()) != n)
    throw Error("rotation system must list every vertex");
  // Every edge-end must occur exactly once, at the vertex it touches.
  std::vector<int> seen(2 * edges.size(), 0);
  for (int v = 0; v < n; ++v) {
    for (const RotationEntry& r : rot[v]) {
      if (r.edge < 0 || r.edge >= static_cast<int>(edges.size()))
        throw Error("rotation refers to unknown edge");
      const Edge& e = edges[r.edge];
      const int at = r.end == EdgeEnd::Head ? e.head : e.tail;
      if (at != v) throw Error("rotation places an edge-end at the wrong vertex");
      seen[2 * r.edge + (r.end == EdgeEnd::Head ? 0 : 1)]++;
    }
  }
  for (int c : seen)
    if (c != 1) throw Error("every edge-end must appear exactly once in the rotation");
}

// Union-find over vertices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

OrientedGraph::OrientedGraph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  check_edges(n_, edges_);
}

OrientedGraph::OrientedGraph(int vertex_count, std::vector<Edge> edges, RotationSystem rotation)
    : n_(vertex_count), edges_(std::move(edges)), rotation_(std::move(rotation)) {
  check_edges(n_, edges_);
  check_rotation(n_, edges_, *rotation_);
}

const RotationSystem& OrientedGraph::rotation() const {
  if (!rotation_) throw MissingEmbedding();
  return *rotation_;
}

OrientedGraph OrientedGraph::with_edge_reversed(int e) const {
  std::vector<Edge> edges = edges_;
  std::swap(edges[e].head, edges[e].tail);
  if (!rotation_) return OrientedGraph(n_, std::move(edges));
  // Swap the end labels of e so each end stays at its vertex.
  RotationSystem rot = *rotation_;
  for (auto& list : rot)
    for (auto& r : list)
      if (r.edge == e) r.end = r.end == EdgeEnd::Head ? EdgeEnd::Tail : EdgeEnd::Head;
  return OrientedGraph(n_, std::move(edges), std::move(rot));
}

IntMat incidence_matrix(const OrientedGraph& g) {
  IntMat b = IntMat::Zero(g.vertex_count(), g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    if (ed.is_loop()) continue;
    b(ed.head, e) += 1;
    b(ed.tail, e) -= 1;
  }
  return b;
}

std::vector<std::vector<int>> connected_components(const OrientedGraph& g) {
  Dsu dsu(g.vertex_count());
  for (const Edge& e : g.edges()) dsu.unite(e.head, e.tail);
  std::vector<std::vector<int>> by_root(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) by_root[dsu.find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& c : by_root)
    if (!c.empty()) out.push_back(std::move(c));
  return out;
}

bool is_connected(const OrientedGraph& g) { return connected_components(g).size() == 1; }

std::vector<ComponentSubgraph> component_subgraphs(const OrientedGraph& g) {
  const auto comps = connected_components(g);
  std::vector<int> comp_of(g.vertex_count());
  std::vector<int> local_id(g.vertex_count());
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    for (int i = 0; i < static_cast<int>(comps[c].size()); ++i) {
      comp_of[comps[c][i]] = c;
      local_id[comps[c][i]] = i;
    }
  std::vector<ComponentSubgraph> out;
  std::vector<std::vector<Edge>> edges(comps.size());
  std::vector<std::vector<int>> edge_ids(comps.size());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const int c = comp_of[ed.head];
    edges[c].push_back({local_id[ed.head], local_id[ed.tail]});
    edge_ids[c].push_back(e);
  }
  for (int c = 0; c < static_cast<int>(comps.size()); ++c)
    out.push_back({OrientedGraph(static_cast<int>(comps[c].size()), std::move(edges[c])),
                   comps[c], std::move(edge_ids[c])});
  return out;
}

std::vector<int> spanning_tree(const OrientedGraph& g) {
  Dsu dsu(g.vertex_count());
  std::vector<int> tree;
  for (int e = 0; e < g.edge_count(); ++e)
    if (dsu.unite(g.edge(e).head, g.edge(e).tail)) tree.push_back(e);
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) throw DisconnectedGraph();
  return tree;
}

std::vector<IntVec> fundamental_cycles(const OrientedGraph& g, const std::vector<int>& tree) {
  const int n = g.vertex_count();
  if (static_cast<int>(tree.size()) != n - 1) throw NotASpanningTree();
  std::vector<bool> in_tree(g.edge_count(), false);
  for (int e : tree) {
    if (e < 0 || e >= g.edge_count() || in_tree[e]) throw NotASpanningTree();
    in_tree[e] = true;
  }

  // Root the tree at 0, record parent vertex/edge and depth.
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (other endpoint, edge)
  for (int e : tree) {
    adj[g.edge(e).head].push_back({g.edge(e).tail, e});
    adj[g.edge(e).tail].push_back({g.edge(e).head, e});
  }
  std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, -1);
  std::queue<int> bfs;
  bfs.push(0);
  depth[0] = 0;
  int visited = 1;
  while (!bfs.empty()) {
    const int v = bfs.front();
    bfs.pop();
    for (auto [w, e] : adj[v])
      if (depth[w] < 0) {
        depth[w] = depth[v] + 1;
        parent[w] = v;
        parent_edge[w] = e;
        bfs.push(w);
        ++visited;
      }
  }
  if (visited != n) throw NotASpanningTree();

  // Walk from v toward the root, adding +1 per edge traversed tail->head.
  auto step_up = [&](int v, IntVec& vec, int sign) {
    const int e = parent_edge[v];
    vec[e] += g.edge(e).head == parent[v] ? sign : -sign;
    return parent[v];
  };

  std::vector<IntVec> cycles;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (in_tree[e]) continue;
    IntVec vec = IntVec::Zero(g.edge_count());
    vec[e] = 1;
    // Close the walk tail(e) -> head(e) -> ... -> tail(e) through the tree.
    int u = g.edge(e).head, w = g.edge(e).tail;
    while (depth[u] > depth[w]) u = step_up(u, vec, +1);
    while (depth[w] > depth[u]) w = step_up(w, vec, -1);
    while (u != w) {
      u = step_up(u, vec, +1);
      w = step_up(w, vec, -1);
    }
    cycles.push_back(std::move(vec));
  }
  return cycles;
}

bool is_tree(const OrientedGraph& g) {
  return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

bool is_coherent_cycle(const OrientedGraph& g) {
  if (g.edge_count() != g.vertex_count()) return false;
  std::vector<int> out_deg(g.vertex_count(), 0), in_deg(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    out_deg[e.tail]++;
    in_deg[e.head]++;
  }
  for (int v = 0; v < g.vertex_count(); ++v)
    if (out_deg[v] != 1 || in_deg[v] != 1) return false;
  return is_connected(g);
}

}  // namespace spinz

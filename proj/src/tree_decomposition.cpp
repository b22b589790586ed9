#include "spinz/tree_decomposition.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>

#include "spinz/errors.hpp"

namespace spinz {

namespace {

// Underlying simple adjacency: loops dropped, parallels collapsed.
std::vector<std::set<int>> simple_adjacency(const OrientedGraph& g) {
  std::vector<std::set<int>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.is_loop()) continue;
    adj[e.head].insert(e.tail);
    adj[e.tail].insert(e.head);
  }
  return adj;
}

void eliminate_vertex(std::vector<std::set<int>>& adj, int v) {
  for (int a : adj[v]) {
    adj[a].erase(v);
    for (int b : adj[v])
      if (a < b) {
        adj[a].insert(b);
        adj[b].insert(a);
      }
  }
  adj[v].clear();
}

std::vector<int> greedy_order(const OrientedGraph& g, DecompositionStrategy strategy) {
  auto adj = simple_adjacency(g);
  const int n = g.vertex_count();
  std::vector<bool> done(n, false);
  std::vector<int> order;
  order.reserve(n);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    long long best_score = std::numeric_limits<long long>::max();
    for (int v = 0; v < n; ++v) {
      if (done[v]) continue;
      long long score;
      if (strategy == DecompositionStrategy::MinDegree) {
        score = static_cast<long long>(adj[v].size());
      } else {
        score = 0;
        for (auto a = adj[v].begin(); a != adj[v].end(); ++a)
          for (auto b = std::next(a); b != adj[v].end(); ++b)
            if (!adj[*a].count(*b)) ++score;
      }
      if (score < best_score) {
        best_score = score;
        best = v;
      }
    }
    done[best] = true;
    order.push_back(best);
    eliminate_vertex(adj, best);
  }
  return order;
}

// Exact treewidth by subset DP over elimination orders: f(S) is the best
// width eliminating exactly S first; the vertex chosen at S is eliminated
// last within S, with degree = vertices outside S reachable through S.
std::vector<int> exact_order(const OrientedGraph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw ExactTooLarge();
  auto adj = simple_adjacency(g);

  auto reach_degree = [&](unsigned through, int v) {
    unsigned visited = 1u << v, frontier = 1u << v;
    int count = 0;
    while (frontier) {
      const int u = std::countr_zero(frontier);
      frontier &= frontier - 1;
      for (int w : adj[u]) {
        if (visited & (1u << w)) continue;
        visited |= 1u << w;
        if (through & (1u << w))
          frontier |= 1u << w;
        else
          ++count;
      }
    }
    return count;
  };

  const unsigned full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int> f(full + 1, 0), choice(full + 1, -1);
  for (unsigned mask = 1; mask <= full; ++mask) {
    int best = std::numeric_limits<int>::max();
    for (unsigned bits = mask; bits; bits &= bits - 1) {
      const int v = std::countr_zero(bits);
      const unsigned rest = mask & ~(1u << v);
      const int cand = std::max(f[rest], reach_degree(rest, v));
      if (cand < best) {
        best = cand;
        choice[mask] = v;
      }
    }
    f[mask] = best;
  }

  std::vector<int> order;
  for (unsigned mask = full; mask;) {
    const int v = choice[mask];
    order.push_back(v);
    mask &= ~(1u << v);
  }
  std::reverse(order.begin(), order.end());
  return order;
}

}  // namespace

TreeDecomposition::TreeDecomposition(std::vector<Node> nodes, int root)
    : nodes_(std::move(nodes)), root_(root) {
  width_ = 0;
  children_.resize(nodes_.size());
  for (int i = 0; i < static_cast<int>(nodes_.size()); ++i) {
    width_ = std::max(width_, static_cast<int>(nodes_[i].bag.size()) - 1);
    if (nodes_[i].parent >= 0) children_[nodes_[i].parent].push_back(i);
  }
}

TreeDecomposition decomposition_from_order(const OrientedGraph& g, const std::vector<int>& order) {
  const int n = g.vertex_count();
  if (static_cast<int>(order.size()) != n) throw Error("elimination order must cover every vertex");
  auto adj = simple_adjacency(g);
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    if (order[i] < 0 || order[i] >= n || pos[order[i]] >= 0)
      throw Error("elimination order must be a permutation of the vertices");
    pos[order[i]] = i;
  }

  std::vector<TreeDecomposition::Node> nodes(n);
  std::vector<int> parent_vertex(n, -1);
  for (int v : order) {
    auto& bag = nodes[pos[v]].bag;
    bag.push_back(v);
    int first_after = -1;
    for (int w : adj[v]) {
      bag.push_back(w);
      if (first_after < 0 || pos[w] < pos[first_after]) first_after = w;
    }
    std::sort(bag.begin(), bag.end());
    parent_vertex[pos[v]] = first_after;
    eliminate_vertex(adj, v);
  }
  // The bag of the earliest-eliminated neighbour is the parent; bags with no
  // remainder (one per component) hang off the final bag.
  const int root = n - 1;
  for (int i = 0; i < n; ++i) {
    if (parent_vertex[i] >= 0)
      nodes[i].parent = pos[parent_vertex[i]];
    else
      nodes[i].parent = i == root ? -1 : root;
  }
  return TreeDecomposition(std::move(nodes), root);
}

TreeDecomposition tree_decomposition(const OrientedGraph& g, DecompositionStrategy strategy) {
  const std::vector<int> order = strategy == DecompositionStrategy::ExactSmall
                                     ? exact_order(g)
                                     : greedy_order(g, strategy);
  return decomposition_from_order(g, order);
}

bool is_valid_decomposition(const OrientedGraph& g, const TreeDecomposition& td) {
  const auto& nodes = td.nodes();
  const int k = static_cast<int>(nodes.size());
  if (k == 0 || td.root() < 0 || td.root() >= k) return false;

  // Parent pointers must form a tree rooted at root().
  int roots = 0;
  for (const auto& nd : nodes) {
    if (nd.parent == -1)
      ++roots;
    else if (nd.parent < 0 || nd.parent >= k)
      return false;
  }
  if (roots != 1 || nodes[td.root()].parent != -1) return false;
  for (int i = 0; i < k; ++i) {
    int v = i, steps = 0;
    while (nodes[v].parent != -1 && ++steps <= k) v = nodes[v].parent;
    if (v != td.root()) return false;
  }

  const int n = g.vertex_count();
  std::vector<std::vector<int>> holding(n);  // nodes whose bag contains v
  for (int i = 0; i < k; ++i)
    for (int v : nodes[i].bag) {
      if (v < 0 || v >= n) return false;
      holding[v].push_back(i);
    }
  for (int v = 0; v < n; ++v)
    if (holding[v].empty()) return false;

  for (const Edge& e : g.edges()) {
    bool covered = false;
    for (int i : holding[e.head]) {
      if (std::binary_search(nodes[i].bag.begin(), nodes[i].bag.end(), e.tail)) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }

  // Connectivity axiom: the nodes holding v induce one subtree.
  for (int v = 0; v < n; ++v) {
    std::vector<bool> holds(k, false);
    for (int i : holding[v]) holds[i] = true;
    int links = 0;
    for (int i : holding[v])
      if (nodes[i].parent >= 0 && holds[nodes[i].parent]) ++links;
    if (links != static_cast<int>(holding[v].size()) - 1) return false;
  }
  return true;
}

}  // namespace spinz

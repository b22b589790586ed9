#include "spinz/engines.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "spinz/errors.hpp"

namespace spinz {

namespace {

void check_table(const OrientedGraph& g, const WeightTable& w) {
  if (w.edge_count() != g.edge_count())
    throw DimensionMismatch("weight table rows must match the edge count");
  if (w.modulus < 2) throw Error("modulus must be at least 2");
  if (w.weights.cols() != w.modulus) throw DimensionMismatch("weight rows must have q entries");
}

// Rows rescaled by exact powers of two so every entry has magnitude < 1;
// the pulled-out exponents accumulate into the final ScaledValue.
struct NormalizedWeights {
  ComplexMat rows;
  std::int64_t exponent = 0;
  bool real = true;
};

NormalizedWeights normalize(const WeightTable& w) {
  NormalizedWeights nw;
  nw.rows = w.weights;
  for (int e = 0; e < nw.rows.rows(); ++e) {
    double mx = 0.0;
    for (int j = 0; j < nw.rows.cols(); ++j) mx = std::max(mx, std::abs(nw.rows(e, j)));
    if (mx == 0.0) continue;
    int k = 0;
    std::frexp(mx, &k);
    const double scale = std::ldexp(1.0, -k);
    for (int j = 0; j < nw.rows.cols(); ++j) nw.rows(e, j) *= scale;
    nw.exponent += k;
  }
  for (int e = 0; e < nw.rows.rows() && nw.real; ++e)
    for (int j = 0; j < nw.rows.cols(); ++j)
      if (nw.rows(e, j).imag() != 0.0 || nw.rows(e, j).real() < 0.0) {
        nw.real = false;
        break;
      }
  return nw;
}

std::uint64_t integer_power(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

// Digit odometer over q^|weights| assignments, little-endian (digit 0
// fastest). Calls fn(flat_index, weighted_sum) with weighted_sum =
// sum_p digit[p] * weights[p], maintained incrementally.
template <class F>
void for_each_assignment(int q, const std::vector<std::int64_t>& weights, F&& fn) {
  const int m = static_cast<int>(weights.size());
  std::vector<int> digit(m, 0);
  std::int64_t widx = 0, flat = 0;
  while (true) {
    fn(flat, widx);
    int p = 0;
    while (p < m && digit[p] == q - 1) {
      widx -= static_cast<std::int64_t>(q - 1) * weights[p];
      digit[p] = 0;
      ++p;
    }
    if (p == m) return;
    digit[p] += 1;
    widx += weights[p];
    ++flat;
  }
}

}  // namespace

EvalReport brute_force_partition(const OrientedGraph& g, const WeightTable& w,
                                 const EngineOptions& opts) {
  check_table(g, w);
  const int q = w.modulus;
  const int n = g.vertex_count();
  if (n * std::log2(static_cast<double>(q)) > opts.brute_force_log2_budget)
    throw TooLarge("brute force budget exceeded: q^n too large");
  const NormalizedWeights nw = normalize(w);
  const std::uint64_t configs = integer_power(q, n);

  std::vector<int> head(g.edge_count()), tail(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    head[e] = g.edge(e).head;
    tail[e] = g.edge(e).tail;
  }

  std::vector<int> s(n, 0);
  Complex sum = 0.0;
  if (nw.real) {
    const RealMat rows = nw.rows.real();
    double rsum = 0.0;
    std::uint64_t left = configs;
    while (true) {
      double prod = 1.0;
      for (int e = 0; e < g.edge_count(); ++e) prod *= rows(e, mod_q(s[head[e]] - s[tail[e]], q));
      rsum += prod;
      if (--left == 0) break;
      int p = 0;
      while (s[p] == q - 1) s[p++] = 0;
      s[p] += 1;
    }
    sum = rsum;
  } else {
    std::uint64_t left = configs;
    while (true) {
      Complex prod = 1.0;
      for (int e = 0; e < g.edge_count(); ++e)
        prod *= nw.rows(e, mod_q(s[head[e]] - s[tail[e]], q));
      sum += prod;
      if (--left == 0) break;
      int p = 0;
      while (s[p] == q - 1) s[p++] = 0;
      s[p] += 1;
    }
  }
  return {ScaledValue::from_scaled(sum, nw.exponent), "brute", configs, -1};
}

EvalReport brute_force_partition(const OrientedGraph& g, const InteractionTable& m,
                                 const EngineOptions& opts) {
  return brute_force_partition(g, boltzmann_weights(m), opts);
}

EvalReport codeword_overlap_partition(const OrientedGraph& g, const WeightTable& w,
                                      const EngineOptions& opts) {
  check_table(g, w);
  if (!is_connected(g)) throw DisconnectedGraph();
  const int q = w.modulus;
  if ((g.vertex_count() - 1) * std::log2(static_cast<double>(q)) > opts.overlap_log2_budget)
    throw TooLarge("overlap budget exceeded: q^(n-1) too large");
  const NormalizedWeights nw = normalize(w);
  const CodeOverZq cut = cut_code(g, q);

  Complex sum = 0.0;
  std::uint64_t count = 0;
  if (nw.real) {
    const RealMat rows = nw.rows.real();
    double rsum = 0.0;
    enumerate_codewords(cut, [&](const IntVec& v) {
      double prod = 1.0;
      for (int e = 0; e < v.size(); ++e) prod *= rows(e, v[e]);
      rsum += prod;
      ++count;
    });
    sum = rsum;
  } else {
    enumerate_codewords(cut, [&](const IntVec& v) {
      Complex prod = 1.0;
      for (int e = 0; e < v.size(); ++e) prod *= nw.rows(e, v[e]);
      sum += prod;
      ++count;
    });
  }
  ScaledValue z = ScaledValue::from_scaled(sum, nw.exponent);
  z *= Complex(static_cast<double>(q), 0.0);
  return {z, "overlap", count, -1};
}

EvalReport codeword_overlap_partition(const OrientedGraph& g, const InteractionTable& m,
                                      const EngineOptions& opts) {
  return codeword_overlap_partition(g, boltzmann_weights(m), opts);
}

EvalReport treewidth_contract(const OrientedGraph& g, const WeightTable& w,
                              const TreeDecomposition& td, const EngineOptions& opts) {
  check_table(g, w);
  if (!is_valid_decomposition(g, td)) throw InvalidDecomposition();
  const int q = w.modulus;
  const auto& nodes = td.nodes();
  const int k = static_cast<int>(nodes.size());
  const double log2q = std::log2(static_cast<double>(q));
  for (const auto& nd : nodes)
    if (static_cast<double>(nd.bag.size()) * log2q >
        std::log2(static_cast<double>(opts.table_entry_budget)))
      throw WidthTooLarge("bag table would exceed the memory budget");

  const NormalizedWeights nw = normalize(w);

  std::vector<int> depth(k, 0);
  {
    std::vector<int> stack{td.root()};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      for (int c : td.children()[i]) {
        depth[c] = depth[i] + 1;
        stack.push_back(c);
      }
    }
  }

  // Each edge is multiplied in exactly once, at the shallowest bag holding
  // both endpoints (unique by the connectivity axiom).
  std::vector<std::vector<int>> holding(g.vertex_count());
  for (int i = 0; i < k; ++i)
    for (int v : nodes[i].bag) holding[v].push_back(i);
  std::vector<std::vector<int>> edges_at(k);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    int best = -1;
    for (int i : holding[ed.head])
      if (std::binary_search(nodes[i].bag.begin(), nodes[i].bag.end(), ed.tail))
        if (best < 0 || depth[i] < depth[best]) best = i;
    edges_at[best].push_back(e);
  }

  auto position_in = [](const std::vector<int>& bag, int v) {
    return static_cast<int>(std::lower_bound(bag.begin(), bag.end(), v) - bag.begin());
  };

  // Children before parents.
  std::vector<int> order;
  {
    std::vector<int> stack{td.root()};
    while (!stack.empty()) {
      const int i = stack.back();
      stack.pop_back();
      order.push_back(i);
      for (int c : td.children()[i]) stack.push_back(c);
    }
    std::reverse(order.begin(), order.end());
  }

  std::vector<ComplexVec> tables(k);
  std::int64_t scale_exponent = 0;
  std::uint64_t cost = 0;

  for (int i : order) {
    const auto& bag = nodes[i].bag;
    const int m = static_cast<int>(bag.size());
    const std::int64_t size = static_cast<std::int64_t>(integer_power(q, m));
    ComplexVec table = ComplexVec::Ones(size);
    cost += static_cast<std::uint64_t>(size);

    // Edge factors.
    for (int e : edges_at[i]) {
      const Edge& ed = g.edge(e);
      std::vector<std::int64_t> wts(m, 0);
      wts[position_in(bag, ed.head)] += 1;
      wts[position_in(bag, ed.tail)] -= 1;
      for_each_assignment(q, wts, [&](std::int64_t flat, std::int64_t diff) {
        table[flat] *= nw.rows(e, mod_q(diff, q));
      });
      cost += static_cast<std::uint64_t>(size);
    }

    // Child messages: sum out the forgotten vertices, broadcast over the bag.
    for (int c : td.children()[i]) {
      const auto& cbag = nodes[c].bag;
      std::vector<int> sep;
      for (int v : cbag)
        if (std::binary_search(bag.begin(), bag.end(), v)) sep.push_back(v);
      const std::int64_t sep_size = static_cast<std::int64_t>(integer_power(q, sep.size()));

      std::vector<std::int64_t> child_wts(cbag.size(), 0);
      for (int p = 0; p < static_cast<int>(sep.size()); ++p)
        child_wts[position_in(cbag, sep[p])] = integer_power(q, p);
      ComplexVec msg = ComplexVec::Zero(sep_size);
      for_each_assignment(q, child_wts, [&](std::int64_t flat, std::int64_t sep_idx) {
        msg[sep_idx] += tables[c][flat];
      });
      cost += static_cast<std::uint64_t>(tables[c].size());
      tables[c].resize(0);

      std::vector<std::int64_t> own_wts(m, 0);
      for (int p = 0; p < static_cast<int>(sep.size()); ++p)
        own_wts[position_in(bag, sep[p])] = integer_power(q, p);
      for_each_assignment(q, own_wts, [&](std::int64_t flat, std::int64_t sep_idx) {
        table[flat] *= msg[sep_idx];
      });
      cost += static_cast<std::uint64_t>(size);
    }

    // Exact power-of-two rescale to keep magnitudes tame.
    double mx = 0.0;
    for (std::int64_t t = 0; t < size; ++t) mx = std::max(mx, std::abs(table[t]));
    if (mx > 0.0) {
      int ke = 0;
      std::frexp(mx, &ke);
      if (ke != 0) {
        const double scale = std::ldexp(1.0, -ke);
        table *= scale;
        scale_exponent += ke;
      }
    }
    tables[i] = std::move(table);
  }

  const Complex total = tables[td.root()].sum();
  cost += static_cast<std::uint64_t>(tables[td.root()].size());
  return {ScaledValue::from_scaled(total, scale_exponent + nw.exponent), "contract", cost,
          td.width()};
}

EvalReport treewidth_contract(const OrientedGraph& g, const InteractionTable& m,
                              const TreeDecomposition& td, const EngineOptions& opts) {
  return treewidth_contract(g, boltzmann_weights(m), td, opts);
}

ScaledValue tree_closed_form(const OrientedGraph& g, const WeightTable& w) {
  check_table(g, w);
  if (!is_tree(g)) throw NotATree();
  const NormalizedWeights nw = normalize(w);
  ScaledValue z = ScaledValue::from(static_cast<double>(w.modulus));
  for (int e = 0; e < g.edge_count(); ++e) {
    Complex row_sum = 0.0;
    for (int j = 0; j < w.modulus; ++j) row_sum += nw.rows(e, j);
    z *= ScaledValue::from(row_sum);
  }
  z *= ScaledValue::from_scaled(Complex(1.0, 0.0), nw.exponent);
  return z;
}

ScaledValue tree_closed_form(const OrientedGraph& g, const InteractionTable& m) {
  return tree_closed_form(g, boltzmann_weights(m));
}

ScaledValue cycle_closed_form(const OrientedGraph& g, const WeightTable& w) {
  check_table(g, w);
  if (!is_coherent_cycle(g)) throw NotACoherentCycle();
  const int q = w.modulus;
  const NormalizedWeights nw = normalize(w);
  std::vector<Complex> omega(q);
  for (int t = 0; t < q; ++t) {
    const double a = 2.0 * std::numbers::pi * t / q;
    omega[t] = Complex(std::cos(a), std::sin(a));
  }
  ScaledValue z;  // zero
  for (int kk = 0; kk < q; ++kk) {
    ScaledValue prod = ScaledValue::from(1.0);
    for (int e = 0; e < g.edge_count(); ++e) {
      Complex lambda = 0.0;
      for (int j = 0; j < q; ++j) lambda += omega[(kk * j) % q] * nw.rows(e, j);
      prod *= ScaledValue::from(lambda);
    }
    z += prod;
  }
  z *= ScaledValue::from_scaled(Complex(1.0, 0.0), nw.exponent);
  return z;
}

ScaledValue cycle_closed_form(const OrientedGraph& g, const InteractionTable& m) {
  return cycle_closed_form(g, boltzmann_weights(m));
}

ScaledValue weight_enumerator(const CodeOverZq& c, const ComplexVec& x,
                              const EngineOptions& opts) {
  if (x.size() != c.modulus()) throw DimensionMismatch("x must have q entries");
  if (c.log2_cardinality() > opts.overlap_log2_budget)
    throw TooLarge("weight enumerator budget exceeded");
  double mx = 0.0;
  for (int j = 0; j < x.size(); ++j) mx = std::max(mx, std::abs(x[j]));
  int ke = 0;
  if (mx > 0.0) std::frexp(mx, &ke);
  ComplexVec xn = x * std::ldexp(1.0, -ke);

  Complex sum = 0.0;
  enumerate_codewords(c, [&](const IntVec& v) {
    Complex prod = 1.0;
    for (int e = 0; e < v.size(); ++e) prod *= xn[v[e]];
    sum += prod;
  });
  return ScaledValue::from_scaled(sum, static_cast<std::int64_t>(ke) * c.length());
}

namespace {

EvalReport closed_form_report(const OrientedGraph& g, const WeightTable& w) {
  const std::uint64_t n_entries =
      static_cast<std::uint64_t>(g.edge_count()) * static_cast<std::uint64_t>(w.modulus);
  if (is_tree(g)) return {tree_closed_form(g, w), "closed", n_entries, -1};
  if (is_coherent_cycle(g))
    return {cycle_closed_form(g, w), "closed", n_entries * w.modulus, -1};
  throw NotATree("closed form requires a tree or a coherently oriented cycle");
}

EvalReport partition_connected(const OrientedGraph& g, const WeightTable& w, Method method,
                               const EngineOptions& opts) {
  switch (method) {
    case Method::Brute:
      return brute_force_partition(g, w, opts);
    case Method::Overlap:
      return codeword_overlap_partition(g, w, opts);
    case Method::Contract:
      return treewidth_contract(g, w, tree_decomposition(g, DecompositionStrategy::MinFill),
                                opts);
    case Method::Closed:
      return closed_form_report(g, w);
    case Method::Auto: {
      if (is_tree(g) || is_coherent_cycle(g)) return closed_form_report(g, w);
      const TreeDecomposition td = tree_decomposition(g, DecompositionStrategy::MinFill);
      const double log2_tables = (td.width() + 1) * std::log2(static_cast<double>(w.modulus));
      if (log2_tables <= std::log2(static_cast<double>(opts.table_entry_budget)))
        return treewidth_contract(g, w, td, opts);
      return brute_force_partition(g, w, opts);
    }
  }
  throw Error("unreachable");
}

}  // namespace

EvalReport partition(const OrientedGraph& g, const WeightTable& w, Method method,
                     const EngineOptions& opts) {
  check_table(g, w);
  const auto comps = component_subgraphs(g);
  if (comps.size() == 1) return partition_connected(g, w, method, opts);

  EvalReport agg{ScaledValue::from(1.0), "", 0, -1};
  std::string tags;
  for (const auto& comp : comps) {
    ComplexMat rows(comp.edge_ids.size(), w.modulus);
    for (int e = 0; e < static_cast<int>(comp.edge_ids.size()); ++e)
      rows.row(e) = w.weights.row(comp.edge_ids[e]);
    const EvalReport r =
        partition_connected(comp.graph, WeightTable{w.modulus, std::move(rows)}, method, opts);
    agg.value *= r.value;
    agg.cost += r.cost;
    agg.width = std::max(agg.width, r.width);
    tags += tags.empty() ? r.method : "+" + r.method;
  }
  agg.method = tags;
  return agg;
}

EvalReport partition(const OrientedGraph& g, const InteractionTable& m, Method method,
                     const EngineOptions& opts) {
  return partition(g, boltzmann_weights(m), method, opts);
}

}  // namespace spinz

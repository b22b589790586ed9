#pragma once

#include <cstdint>
#include <string>

#include "spinz/graph.hpp"
#include "spinz/model.hpp"
#include "spinz/scaled_value.hpp"
#include "spinz/tree_decomposition.hpp"
#include "spinz/zq_code.hpp"

namespace spinz {

struct EvalReport {
  ScaledValue value;
  std::string method;
  std::uint64_t cost = 0;  // configurations enumerated or table entries touched
  int width = -1;          // decomposition width (contraction only)
};

struct EngineOptions {
  double brute_force_log2_budget = 40.0;    // q^n <= 2^this
  double overlap_log2_budget = 40.0;        // q^(n-1) <= 2^this
  std::uint64_t table_entry_budget = std::uint64_t{1} << 28;  // per contraction bag
};

/// Full q^n configuration sum (Eq. 2 form). The oracle every other engine
/// is checked against. Throws TooLarge past the budget.
EvalReport brute_force_partition(const OrientedGraph& g, const InteractionTable& m,
                                 const EngineOptions& opts = {});
EvalReport brute_force_partition(const OrientedGraph& g, const WeightTable& w,
                                 const EngineOptions& opts = {});

/// Z = q * sum over cut-code words of the per-edge weight product.
/// Connected graphs only; throws DisconnectedGraph / TooLarge.
EvalReport codeword_overlap_partition(const OrientedGraph& g, const InteractionTable& m,
                                      const EngineOptions& opts = {});
EvalReport codeword_overlap_partition(const OrientedGraph& g, const WeightTable& w,
                                      const EngineOptions& opts = {});

/// Junction-tree dynamic program over a rooted tree decomposition: edge
/// factors enter at their highest covering bag, vertices are summed out at
/// their forget points. Exact for any valid decomposition; cost is
/// sum over bags of q^|bag| times local work.
/// Throws InvalidDecomposition / WidthTooLarge.
EvalReport treewidth_contract(const OrientedGraph& g, const InteractionTable& m,
                              const TreeDecomposition& td, const EngineOptions& opts = {});
EvalReport treewidth_contract(const OrientedGraph& g, const WeightTable& w,
                              const TreeDecomposition& td, const EngineOptions& opts = {});

/// Z on a tree: q * prod_e (sum_j w_e(j)). Throws NotATree.
ScaledValue tree_closed_form(const OrientedGraph& g, const InteractionTable& m);
ScaledValue tree_closed_form(const OrientedGraph& g, const WeightTable& w);

/// Z on a coherently oriented cycle: sum_k prod_e lambda_e(k) with
/// lambda_e(k) = sum_j exp(2 pi i k j / q) w_e(j); at q = 2 this is the
/// two-term GHZ formula. Throws NotACoherentCycle.
ScaledValue cycle_closed_form(const OrientedGraph& g, const InteractionTable& m);
ScaledValue cycle_closed_form(const OrientedGraph& g, const WeightTable& w);

/// Complete weight enumerator of the code evaluated at x (one indeterminate
/// value per symbol): sum over codewords of prod_e x[v_e].
ScaledValue weight_enumerator(const CodeOverZq& c, const ComplexVec& x,
                              const EngineOptions& opts = {});

enum class Method { Auto, Brute, Overlap, Contract, Closed };

/// Dispatcher. Auto picks the closed form for trees and coherent cycles,
/// min-fill contraction when the width fits the memory budget, and brute
/// force as a last resort. Disconnected inputs are factorized per component
/// and the per-component values multiplied.
EvalReport partition(const OrientedGraph& g, const InteractionTable& m,
                     Method method = Method::Auto, const EngineOptions& opts = {});
EvalReport partition(const OrientedGraph& g, const WeightTable& w,
                     Method method = Method::Auto, const EngineOptions& opts = {});

}  // namespace spinz

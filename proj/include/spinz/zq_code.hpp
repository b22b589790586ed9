#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "spinz/graph.hpp"
#include "spinz/types.hpp"

namespace spinz {

/// Vector over Z_q with entries reduced to {0..q-1}.
struct ZqVector {
  int modulus = 2;
  IntVec entries;
};

/// Builds a ZqVector, reducing entries mod q.
ZqVector make_zq_vector(int q, IntVec entries);

inline int mod_q(long long x, int q) {
  const int r = static_cast<int>(x % q);
  return r < 0 ? r + q : r;
}

/// Additive code over Z_q together with generators of its annihilator.
/// The enumeration basis is a subset of the generators whose coefficient
/// vectors hit every codeword exactly once (cut code: all incidence rows but
/// the root's; cycle code: the fundamental cycles, each owning its non-tree
/// coordinate).
class CodeOverZq {
 public:
  enum class Kind { Cut, Cycle };

  CodeOverZq(Kind kind, int modulus, IntMat generators, IntMat dual_generators,
             IntMat enumeration_basis);

  Kind kind() const { return kind_; }
  int modulus() const { return q_; }
  int length() const { return static_cast<int>(generators_.cols()); }
  const IntMat& generators() const { return generators_; }
  const IntMat& dual_generators() const { return dual_generators_; }
  const IntMat& enumeration_basis() const { return basis_; }
  /// |code| = q ^ this.
  int log_q_cardinality() const { return static_cast<int>(basis_.rows()); }
  double log2_cardinality() const;

 private:
  Kind kind_;
  int q_;
  IntMat generators_;
  IntMat dual_generators_;
  IntMat basis_;
};

/// Row span of the incidence matrix mod q: the edge-difference vectors of
/// vertex potentials. |C| = q^(n-1). Throws DisconnectedGraph.
CodeOverZq cut_code(const OrientedGraph& g, int q);

/// Annihilator of the cut code, spanned by the fundamental cycles mod q.
/// |C^perp| = q^(N-n+1). Throws DisconnectedGraph.
CodeOverZq cycle_code(const OrientedGraph& g, int q);

/// Membership via orthogonality to every generator of the complementary
/// code (the two codes are exact annihilators, also for composite q).
/// Throws DimensionMismatch.
bool contains(const CodeOverZq& c, const ZqVector& v);

/// Visits each codeword exactly once in the deterministic potential /
/// coefficient order (last coefficient fastest).
void enumerate_codewords(const CodeOverZq& c, const std::function<void(const IntVec&)>& visit);

/// Materialized codeword list; guarded against large codes.
std::vector<IntVec> all_codewords(const CodeOverZq& c);

/// One X(u)Z(v) stabilizer generator of the code state: (row, 0) per
/// incidence row and (0, cycle) per fundamental cycle.
struct StabilizerGenerator {
  ZqVector x_shift;  // element of the cut code
  ZqVector z_phase;  // element of the cycle code
};
std::vector<StabilizerGenerator> stabilizer_generators(const OrientedGraph& g, int q);

}  // namespace spinz

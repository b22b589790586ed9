#pragma once

#include <cstdint>
#include <vector>

#include "spinz/graph.hpp"
#include "spinz/model.hpp"
#include "spinz/scaled_value.hpp"
#include "spinz/zq_code.hpp"

namespace spinz {

/// X(u)Z(v) with u in the cut code and v in the cycle code; stabilizes the
/// code state with eigenvalue exactly 1 (u.v = 0 mod q kills the phase).
struct SymmetryElement {
  ZqVector x_shift;  // u
  ZqVector z_phase;  // v
  Complex eigenvalue{1.0, 0.0};
};

/// Relates partition values across a planar dual pair:
/// Z_dual = q^r * Z_primal with r = N/2 - n + 1, carried as an exact
/// rational since r is a half-integer.
struct DualityCertificate {
  int modulus = 2;
  int primal_vertices = 0;
  int dual_vertices = 0;
  int edge_count = 0;
  std::int64_t r_num = 0;
  std::int64_t r_den = 1;

  double r() const { return static_cast<double>(r_num) / static_cast<double>(r_den); }
  ScaledValue scale() const;
};

/// Per-edge discrete Fourier transform of the weight rows:
/// w'(j) = q^{-1/2} sum_k exp(-2 pi i k j / q) w(k). Applying it four times
/// is the identity.
WeightTable fourier_dual_weights(const WeightTable& w);

struct DualModel {
  OrientedGraph graph;
  WeightTable weights;
  DualityCertificate certificate;
};

/// Planar dual graph plus Fourier-transformed weights and the scalar
/// certificate. Requires an embedding.
DualModel dual_model(const OrientedGraph& g, const WeightTable& w);
DualModel dual_model(const OrientedGraph& g, const InteractionTable& m);

/// Potts high-low temperature coupling map:
/// (e^{beta J'} - 1)(e^{beta J} - 1) = q. Real only for e^{beta J} > 1;
/// throws NonFerromagnetic otherwise.
double potts_dual_coupling(double coupling, int q, double beta);

/// Weight table transported by X(u)Z(v):
/// w'_e(j) = omega^{v_e (j - u_e)} w_e((j - u_e) mod q). Leaves Z invariant
/// for valid symmetry elements.
WeightTable apply_symmetry(const SymmetryElement& s, const WeightTable& w);

/// Deterministic pseudorandom elements of the stabilizer group: random
/// Z_q-combinations of the incidence rows and fundamental cycles.
std::vector<SymmetryElement> symmetry_group_sample(const OrientedGraph& g, int q, int count,
                                                   std::uint64_t seed);

}  // namespace spinz

#pragma once

#include "spinz/types.hpp"

namespace spinz {

/// Per-edge energy tables h_e(j) for j = 0..q-1 (row per edge) plus the
/// inverse temperature. Entries must be finite.
struct InteractionTable {
  int modulus = 2;
  double beta = 1.0;
  RealMat energies;  // N x q

  int edge_count() const { return static_cast<int>(energies.rows()); }
};

/// Per-edge Boltzmann weight rows w_e(j). Straight from an InteractionTable
/// the entries are real and positive; duality and symmetry transforms make
/// them complex.
struct WeightTable {
  int modulus = 2;
  ComplexMat weights;  // N x q

  int edge_count() const { return static_cast<int>(weights.rows()); }
};

/// w_e(j) = exp(-beta * h_e(j)).
WeightTable boltzmann_weights(const InteractionTable& t);

/// Potts: h_e(0) = -J_e, zero elsewhere.
InteractionTable potts_table(int q, const RealVec& coupling, double beta);

/// Ising (q = 2), +-J convention: h_e = (-J_e, +J_e).
InteractionTable ising_table(const RealVec& coupling, double beta);

/// Clock: h_e(j) = -J_e cos(2 pi j / q); coincides with Ising at q = 2.
InteractionTable clock_table(int q, const RealVec& coupling, double beta);

/// Table with explicit energy rows.
InteractionTable interaction_table(int q, RealMat energies, double beta);

}  // namespace spinz

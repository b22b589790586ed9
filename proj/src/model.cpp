#include "spinz/model.hpp"

#include <cmath>
#include <numbers>

#include "spinz/errors.hpp"

namespace spinz {

namespace {

void check(int q, double beta) {
  if (q < 2) throw Error("modulus must be at least 2");
  if (!(beta > 0.0)) throw Error("beta must be positive");
}

}  // namespace

WeightTable boltzmann_weights(const InteractionTable& t) {
  WeightTable w{t.modulus, ComplexMat(t.energies.rows(), t.energies.cols())};
  w.weights = (-t.beta * t.energies.array()).exp().cast<Complex>();
  return w;
}

InteractionTable potts_table(int q, const RealVec& coupling, double beta) {
  check(q, beta);
  RealMat h = RealMat::Zero(coupling.size(), q);
  h.col(0) = -coupling;
  return {q, beta, std::move(h)};
}

InteractionTable ising_table(const RealVec& coupling, double beta) {
  check(2, beta);
  RealMat h(coupling.size(), 2);
  h.col(0) = -coupling;
  h.col(1) = coupling;
  return {2, beta, std::move(h)};
}

InteractionTable clock_table(int q, const RealVec& coupling, double beta) {
  check(q, beta);
  RealMat h(coupling.size(), q);
  for (int j = 0; j < q; ++j)
    h.col(j) = -std::cos(2.0 * std::numbers::pi * j / q) * coupling;
  return {q, beta, std::move(h)};
}

InteractionTable interaction_table(int q, RealMat energies, double beta) {
  check(q, beta);
  if (energies.cols() != q) throw DimensionMismatch("energy rows must have q entries");
  if (!energies.allFinite()) throw Error("energies must be finite");
  return {q, beta, std::move(energies)};
}

}  // namespace spinz

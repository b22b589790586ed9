#include "spinz/transforms.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "spinz/errors.hpp"
#include "spinz/planar.hpp"
#include "spinz/rng.hpp"

namespace spinz {

ScaledValue DualityCertificate::scale() const {
  return ScaledValue::pow(static_cast<double>(modulus), r());
}

WeightTable fourier_dual_weights(const WeightTable& w) {
  const int q = w.modulus;
  ComplexMat f(q, q);
  const double norm = 1.0 / std::sqrt(static_cast<double>(q));
  for (int k = 0; k < q; ++k)
    for (int j = 0; j < q; ++j) {
      const double a = -2.0 * std::numbers::pi * ((k * j) % q) / q;
      f(k, j) = norm * Complex(std::cos(a), std::sin(a));
    }
  return {q, w.weights * f};
}

DualModel dual_model(const OrientedGraph& g, const WeightTable& w) {
  if (w.edge_count() != g.edge_count())
    throw DimensionMismatch("weight table rows must match the edge count");
  OrientedGraph dual = planar_dual(g);
  WeightTable dual_weights = fourier_dual_weights(w);

  DualityCertificate cert;
  cert.modulus = w.modulus;
  cert.primal_vertices = g.vertex_count();
  cert.dual_vertices = dual.vertex_count();
  cert.edge_count = g.edge_count();
  cert.r_num = g.edge_count() - 2 * g.vertex_count() + 2;
  cert.r_den = 2;
  const std::int64_t common = std::gcd(cert.r_num, cert.r_den);
  if (common > 1) {
    cert.r_num /= common;
    cert.r_den /= common;
  }
  return {std::move(dual), std::move(dual_weights), cert};
}

DualModel dual_model(const OrientedGraph& g, const InteractionTable& m) {
  return dual_model(g, boltzmann_weights(m));
}

double potts_dual_coupling(double coupling, int q, double beta) {
  if (q < 2) throw Error("modulus must be at least 2");
  if (!(beta > 0.0)) throw Error("beta must be positive");
  const double em1 = std::expm1(beta * coupling);
  if (!(em1 > 0.0)) throw NonFerromagnetic();
  return std::log1p(static_cast<double>(q) / em1) / beta;
}

WeightTable apply_symmetry(const SymmetryElement& s, const WeightTable& w) {
  const int q = w.modulus;
  const int n_edges = w.edge_count();
  if (s.x_shift.modulus != q || s.z_phase.modulus != q ||
      s.x_shift.entries.size() != n_edges || s.z_phase.entries.size() != n_edges)
    throw DimensionMismatch("symmetry element does not fit the weight table");

  std::vector<Complex> omega(q);
  for (int t = 0; t < q; ++t) {
    const double a = 2.0 * std::numbers::pi * t / q;
    omega[t] = Complex(std::cos(a), std::sin(a));
  }
  WeightTable out{q, ComplexMat(n_edges, q)};
  for (int e = 0; e < n_edges; ++e) {
    const int u = s.x_shift.entries[e];
    const int v = s.z_phase.entries[e];
    for (int j = 0; j < q; ++j) {
      const int shifted = mod_q(j - u, q);
      out.weights(e, j) = omega[mod_q(static_cast<long long>(v) * (j - u), q)] *
                          w.weights(e, shifted);
    }
  }
  return out;
}

std::vector<SymmetryElement> symmetry_group_sample(const OrientedGraph& g, int q, int count,
                                                   std::uint64_t seed) {
  const CodeOverZq cut = cut_code(g, q);
  const CodeOverZq cyc = cycle_code(g, q);
  std::mt19937_64 gen(seed);
  std::vector<SymmetryElement> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    IntVec a(cut.generators().rows());
    for (int j = 0; j < a.size(); ++j) a[j] = uniform_int(gen, 0, q - 1);
    IntVec b(cyc.generators().rows());
    for (int j = 0; j < b.size(); ++j) b[j] = uniform_int(gen, 0, q - 1);
    const IntVec u = cut.generators().transpose() * a;
    const IntVec v = cyc.generators().rows() > 0
                         ? IntVec(cyc.generators().transpose() * b)
                         : IntVec(IntVec::Zero(g.edge_count()));
    out.push_back({make_zq_vector(q, u), make_zq_vector(q, v), Complex(1.0, 0.0)});
  }
  return out;
}

}  // namespace spinz

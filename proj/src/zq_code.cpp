#include "spinz/zq_code.hpp"

#include <cmath>

#include "spinz/errors.hpp"

namespace spinz {

namespace {

IntMat reduce_mod(IntMat m, int q) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m(i, j) = mod_q(m(i, j), q);
  return m;
}

void check_modulus(int q) {
  if (q < 2) throw Error("modulus must be at least 2");
}

}  // namespace

ZqVector make_zq_vector(int q, IntVec entries) {
  check_modulus(q);
  for (int i = 0; i < entries.size(); ++i) entries[i] = mod_q(entries[i], q);
  return {q, std::move(entries)};
}

CodeOverZq::CodeOverZq(Kind kind, int modulus, IntMat generators, IntMat dual_generators,
                       IntMat enumeration_basis)
    : kind_(kind),
      q_(modulus),
      generators_(std::move(generators)),
      dual_generators_(std::move(dual_generators)),
      basis_(std::move(enumeration_basis)) {
  check_modulus(q_);
}

double CodeOverZq::log2_cardinality() const {
  return log_q_cardinality() * std::log2(static_cast<double>(q_));
}

CodeOverZq cut_code(const OrientedGraph& g, int q) {
  check_modulus(q);
  if (!is_connected(g)) throw DisconnectedGraph();
  const IntMat rows = reduce_mod(incidence_matrix(g), q);
  const auto cycles = fundamental_cycles(g, spanning_tree(g));
  IntMat duals(static_cast<int>(cycles.size()), g.edge_count());
  for (int i = 0; i < duals.rows(); ++i) duals.row(i) = cycles[i].transpose();
  duals = reduce_mod(std::move(duals), q);
  // Pinning the potential at vertex 0 makes the remaining rows a free basis.
  const IntMat basis = rows.bottomRows(g.vertex_count() - 1);
  return CodeOverZq(CodeOverZq::Kind::Cut, q, rows, std::move(duals), basis);
}

CodeOverZq cycle_code(const OrientedGraph& g, int q) {
  check_modulus(q);
  if (!is_connected(g)) throw DisconnectedGraph();
  const IntMat rows = reduce_mod(incidence_matrix(g), q);
  const auto cycles = fundamental_cycles(g, spanning_tree(g));
  IntMat gens(static_cast<int>(cycles.size()), g.edge_count());
  for (int i = 0; i < gens.rows(); ++i) gens.row(i) = cycles[i].transpose();
  gens = reduce_mod(std::move(gens), q);
  // Each fundamental cycle owns its non-tree coordinate, so the generators
  // are already an enumeration basis.
  return CodeOverZq(CodeOverZq::Kind::Cycle, q, gens, rows, gens);
}

bool contains(const CodeOverZq& c, const ZqVector& v) {
  if (v.modulus != c.modulus() || v.entries.size() != c.length()) throw DimensionMismatch();
  if (c.dual_generators().rows() == 0) return true;
  const IntVec dots = c.dual_generators() * v.entries;
  for (int i = 0; i < dots.size(); ++i)
    if (mod_q(dots[i], c.modulus()) != 0) return false;
  return true;
}

void enumerate_codewords(const CodeOverZq& c, const std::function<void(const IntVec&)>& visit) {
  const IntMat& basis = c.enumeration_basis();
  const int k = static_cast<int>(basis.rows());
  const int q = c.modulus();
  IntVec coeff = IntVec::Zero(k);
  IntVec word = IntVec::Zero(c.length());
  while (true) {
    visit(word);
    // Odometer: last coefficient fastest.
    int p = k - 1;
    while (p >= 0 && coeff[p] == q - 1) {
      // Roll over: subtract (q-1) * basis[p].
      for (int j = 0; j < word.size(); ++j)
        word[j] = mod_q(word[j] - (q - 1) * basis(p, j), q);
      coeff[p] = 0;
      --p;
    }
    if (p < 0) return;
    coeff[p] += 1;
    for (int j = 0; j < word.size(); ++j) word[j] = mod_q(word[j] + basis(p, j), q);
  }
}

std::vector<IntVec> all_codewords(const CodeOverZq& c) {
  if (c.log2_cardinality() > 24.0) throw TooLarge("refusing to materialize more than 2^24 codewords");
  std::vector<IntVec> out;
  out.reserve(static_cast<size_t>(std::exp2(c.log2_cardinality()) + 0.5));
  enumerate_codewords(c, [&](const IntVec& w) { out.push_back(w); });
  return out;
}

std::vector<StabilizerGenerator> stabilizer_generators(const OrientedGraph& g, int q) {
  const CodeOverZq cut = cut_code(g, q);
  const CodeOverZq cyc = cycle_code(g, q);
  const IntVec zero = IntVec::Zero(g.edge_count());
  std::vector<StabilizerGenerator> gens;
  for (int i = 0; i < cut.generators().rows(); ++i)
    gens.push_back({{q, cut.generators().row(i).transpose()}, {q, zero}});
  for (int i = 0; i < cyc.generators().rows(); ++i)
    gens.push_back({{q, zero}, {q, cyc.generators().row(i).transpose()}});
  return gens;
}

}  // namespace spinz

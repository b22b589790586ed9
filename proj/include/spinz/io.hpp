#pragma once

#include <optional>
#include <string>

#include "spinz/engines.hpp"
#include "spinz/graph.hpp"
#include "spinz/model.hpp"
#include "spinz/transforms.hpp"

namespace spinz {

/// Parse errors carry enough context to blame the input file.
struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(what) {}
};

// Graph JSON:
//   {"n": int, "edges": [{"id": int, "head": int, "tail": int}, ...],
//    "rotation": {"<vertex>": [[edge_id, "head"|"tail"], ...], ...}}
// Edge ids must be dense and unique; rotation is optional.
OrientedGraph graph_from_json(const std::string& text);
std::string graph_to_json(const OrientedGraph& g);

// Model JSON, energy form:
//   {"q": int, "beta": float,
//    "edges": [{"type": "potts"|"ising"|"clock", "J": float} | {"table": [h0, ...]}, ...]}
// or weight form (complex entries as [re, im]):
//   {"q": int, "beta": float, "weights": [[[re, im], ...], ...]}
struct ModelFile {
  int modulus = 2;
  double beta = 1.0;
  std::optional<RealMat> energies;   // N x q
  std::optional<ComplexMat> weights; // N x q
};
ModelFile model_from_json(const std::string& text);
std::string model_to_json(const InteractionTable& t);
std::string weights_to_json(const WeightTable& w, double beta);

std::string certificate_to_json(const DualityCertificate& c);

std::string report_to_json(const EvalReport& r, double beta);
std::string report_csv_header();
std::string report_csv_row(const EvalReport& r, double beta);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace spinz

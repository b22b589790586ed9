#pragma once

#include <stdexcept>
#include <string>

namespace spinz {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedGraph : Error {
  explicit DisconnectedGraph(const std::string& what = "graph is not connected") : Error(what) {}
};

struct NotASpanningTree : Error {
  explicit NotASpanningTree(const std::string& what = "edge set is not a spanning tree") : Error(what) {}
};

struct ExactTooLarge : Error {
  explicit ExactTooLarge(const std::string& what = "exact_small decomposition limited to n <= 12") : Error(what) {}
};

struct MissingEmbedding : Error {
  explicit MissingEmbedding(const std::string& what = "graph carries no rotation system") : Error(what) {}
};

struct EulerViolation : Error {
  explicit EulerViolation(const std::string& what = "embedding violates Euler's formula") : Error(what) {}
};

struct DimensionMismatch : Error {
  explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct TooLarge : Error {
  explicit TooLarge(const std::string& what = "instance exceeds enumeration budget") : Error(what) {}
};

struct WidthTooLarge : Error {
  explicit WidthTooLarge(const std::string& what = "decomposition width exceeds memory budget") : Error(what) {}
};

struct InvalidDecomposition : Error {
  explicit InvalidDecomposition(const std::string& what = "tree decomposition is not valid for the graph") : Error(what) {}
};

struct NotATree : Error {
  explicit NotATree(const std::string& what = "graph is not a tree") : Error(what) {}
};

struct NotACoherentCycle : Error {
  explicit NotACoherentCycle(const std::string& what = "graph is not a coherently oriented cycle") : Error(what) {}
};

struct NonFerromagnetic : Error {
  explicit NonFerromagnetic(const std::string& what = "dual coupling is not real for non-ferromagnetic J") : Error(what) {}
};

}  // namespace spinz

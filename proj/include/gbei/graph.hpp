#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gbei/errors.hpp"

namespace gbei {

/// Vertices carry labels 1..n; bit v-1 of a VertexSet marks vertex v.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

inline constexpr VertexSet vertexBit(int v) { return VertexSet{1} << (v - 1); }
inline constexpr bool containsVertex(VertexSet s, int v) {
  return (s >> (v - 1)) & 1;
}
inline int setSize(VertexSet s) { return std::popcount(s); }
inline int lowestVertex(VertexSet s) { return std::countr_zero(s) + 1; }
inline constexpr VertexSet fullSet(int n) {
  return n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<int> toVertexList(VertexSet s);
VertexSet toVertexSet(const std::vector<int>& vs);

/// Labeled simple undirected graph on 1..n. Immutable after construction;
/// adjacency is kept both as a sorted edge list (canonical output, equality)
/// and as per-vertex bitsets (subset-heavy recognizers and cut enumeration).
class SimpleGraph {
 public:
  SimpleGraph() = default;
  /// Edges may be given in any order/orientation; duplicates and loops are
  /// rejected.
  SimpleGraph(int n, std::vector<std::pair<int, int>> edges);

  int vertexCount() const { return n_; }
  int edgeCount() const { return static_cast<int>(edges_.size()); }
  /// Sorted lexicographically, each pair with u < v.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  bool hasEdge(int u, int v) const { return containsVertex(adj_[u - 1], v); }
  VertexSet neighbors(int v) const { return adj_[v - 1]; }
  int degree(int v) const { return setSize(adj_[v - 1]); }
  VertexSet vertices() const { return fullSet(n_); }

  bool operator==(const SimpleGraph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

  /// Same vertex set, edges extended by `extra` (already-present pairs are
  /// fine).
  SimpleGraph withEdges(const std::vector<std::pair<int, int>>& extra) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> adj_;
};

struct GraphInvariants {
  int componentCount = 0;              // t
  std::vector<int> componentDiameters; // per component, ordered by min vertex
  int isolatedCount = 0;               // i(G)
  int diameterSum = 0;                 // d(G) = i(G) + sum of diameters
  int freeCount = 0;                   // f(G)
  int nonFreeCount = 0;                // iv(G)
  int kappa = 0;                       // vertex connectivity; 0 if disconnected
};

/// Connected components as vertex lists, ordered by minimum vertex.
std::vector<std::vector<int>> components(const SimpleGraph& g);

/// Component structure restricted to `within` (vertices outside are ignored).
std::vector<VertexSet> componentMasksWithin(const SimpleGraph& g,
                                            VertexSet within);
int componentCountWithin(const SimpleGraph& g, VertexSet within);
bool isConnectedWithin(const SimpleGraph& g, VertexSet within);
bool isConnected(const SimpleGraph& g);

/// True iff every pair inside `mask` is adjacent.
bool isCliqueSet(const SimpleGraph& g, VertexSet mask);
bool isComplete(const SimpleGraph& g);

/// Max BFS distance inside one connected component; 0 for a single vertex.
/// Throws NotConnected if `component` is not connected in g.
int diameter(const SimpleGraph& g, VertexSet component);

/// True iff the neighborhood of v induces a complete subgraph (vacuous for
/// degree <= 1).
bool isFreeVertex(const SimpleGraph& g, int v);
int freeVertexCount(const SimpleGraph& g);
/// iv(G) = n - f(G); 0 exactly when every component is complete.
int nonFreeVertexCount(const SimpleGraph& g);
bool isDisjointUnionOfCompletes(const SimpleGraph& g);

/// Full invariant bundle; kappa comes from the connectivity module
/// (convention: 0 for disconnected input).
GraphInvariants invariants(const SimpleGraph& g);

struct InducedSubgraph {
  SimpleGraph graph;
  /// labelMap[new - 1] = original label, new labels are 1..|keep| in
  /// ascending original order.
  std::vector<int> labelMap;
};
InducedSubgraph inducedSubgraph(const SimpleGraph& g, VertexSet keep);
/// Convenience: induced subgraph dropping exactly the vertices in `drop`.
InducedSubgraph minusVertices(const SimpleGraph& g, VertexSet drop);

}  // namespace gbei

#include "gbei/graph.hpp"

#include <algorithm>

namespace gbei {

std::vector<int> toVertexList(VertexSet s) {
  std::vector<int> out;
  for (VertexSet t = s; t; t &= t - 1) out.push_back(lowestVertex(t));
  return out;
}

VertexSet toVertexSet(const std::vector<int>& vs) {
  VertexSet s = 0;
  for (int v : vs) s |= vertexBit(v);
  return s;
}

SimpleGraph::SimpleGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n) {
  if (n < 1) throw InvalidArgument("vertex count must be positive");
  if (n > kMaxVertices)
    throw CapExceeded("vertex count exceeds structural cap of 64");
  adj_.assign(n, 0);
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (containsVertex(adj_[u - 1], v))
      throw InvalidArgument("duplicate edge rejected");
    adj_[u - 1] |= vertexBit(v);
    adj_[v - 1] |= vertexBit(u);
  }
  std::sort(edges.begin(), edges.end());
  edges_ = std::move(edges);
}

SimpleGraph SimpleGraph::withEdges(
    const std::vector<std::pair<int, int>>& extra) const {
  std::vector<std::pair<int, int>> es = edges_;
  for (auto [u, v] : extra) {
    if (u > v) std::swap(u, v);
    if (u == v || hasEdge(u, v)) continue;
    bool dup = false;
    for (auto [a, b] : es)
      if (a == u && b == v) dup = true;
    if (!dup) es.emplace_back(u, v);
  }
  return SimpleGraph(n_, std::move(es));
}

std::vector<VertexSet> componentMasksWithin(const SimpleGraph& g,
                                            VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet todo = within;
  while (todo) {
    VertexSet comp = VertexSet{1} << std::countr_zero(todo);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.neighbors(lowestVertex(f));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back(comp);
    todo &= ~comp;
  }
  return out;
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
  std::vector<std::vector<int>> out;
  for (VertexSet m : componentMasksWithin(g, g.vertices()))
    out.push_back(toVertexList(m));
  return out;
}

int componentCountWithin(const SimpleGraph& g, VertexSet within) {
  int count = 0;
  VertexSet todo = within;
  while (todo) {
    VertexSet comp = VertexSet{1} << std::countr_zero(todo);
    VertexSet frontier = comp;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1)
        next |= g.neighbors(lowestVertex(f));
      next &= within & ~comp;
      comp |= next;
      frontier = next;
    }
    ++count;
    todo &= ~comp;
  }
  return count;
}

bool isConnectedWithin(const SimpleGraph& g, VertexSet within) {
  if (within == 0) return true;
  return componentCountWithin(g, within) == 1;
}

bool isConnected(const SimpleGraph& g) {
  return isConnectedWithin(g, g.vertices());
}

bool isCliqueSet(const SimpleGraph& g, VertexSet mask) {
  for (VertexSet t = mask; t; t &= t - 1) {
    int v = lowestVertex(t);
    // every other mask vertex must be adjacent to v
    if ((mask & ~vertexBit(v) & ~g.neighbors(v)) != 0) return false;
  }
  return true;
}

bool isComplete(const SimpleGraph& g) { return isCliqueSet(g, g.vertices()); }

namespace {

// BFS distances from src restricted to `within`; -1 where unreachable.
std::vector<int> bfsWithin(const SimpleGraph& g, int src, VertexSet within) {
  std::vector<int> dist(g.vertexCount() + 1, -1);
  dist[src] = 0;
  VertexSet seen = vertexBit(src);
  VertexSet frontier = seen;
  int d = 0;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1)
      next |= g.neighbors(lowestVertex(f));
    next &= within & ~seen;
    ++d;
    for (VertexSet f = next; f; f &= f - 1) dist[lowestVertex(f)] = d;
    seen |= next;
    frontier = next;
  }
  return dist;
}

}  // namespace

int diameter(const SimpleGraph& g, VertexSet component) {
  if (component == 0) throw NotConnected("empty vertex set has no diameter");
  if (!isConnectedWithin(g, component))
    throw NotConnected("diameter requires a connected component");
  int best = 0;
  for (VertexSet t = component; t; t &= t - 1) {
    auto dist = bfsWithin(g, lowestVertex(t), component);
    for (VertexSet u = component; u; u &= u - 1)
      best = std::max(best, dist[lowestVertex(u)]);
  }
  return best;
}

bool isFreeVertex(const SimpleGraph& g, int v) {
  return isCliqueSet(g, g.neighbors(v));
}

int freeVertexCount(const SimpleGraph& g) {
  int f = 0;
  for (int v = 1; v <= g.vertexCount(); ++v)
    if (isFreeVertex(g, v)) ++f;
  return f;
}

int nonFreeVertexCount(const SimpleGraph& g) {
  return g.vertexCount() - freeVertexCount(g);
}

bool isDisjointUnionOfCompletes(const SimpleGraph& g) {
  return nonFreeVertexCount(g) == 0;
}

InducedSubgraph inducedSubgraph(const SimpleGraph& g, VertexSet keep) {
  std::vector<int> labels = toVertexList(keep);
  std::vector<int> newLabel(g.vertexCount() + 1, 0);
  for (int i = 0; i < static_cast<int>(labels.size()); ++i)
    newLabel[labels[i]] = i + 1;
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges())
    if (containsVertex(keep, u) && containsVertex(keep, v))
      es.emplace_back(newLabel[u], newLabel[v]);
  if (labels.empty())
    throw InvalidArgument("induced subgraph on the empty set is not a graph");
  return {SimpleGraph(static_cast<int>(labels.size()), std::move(es)),
          std::move(labels)};
}

InducedSubgraph minusVertices(const SimpleGraph& g, VertexSet drop) {
  return inducedSubgraph(g, g.vertices() & ~drop);
}

}  // namespace gbei

#include "gbei/connectivity.hpp"

#include <algorithm>
#include <queue>

namespace gbei {

namespace {

// Max number of internally vertex-disjoint u-v paths for non-adjacent u, v.
// Vertex v of g splits into nodes 2v (in) and 2v+1 (out); the in->out arc
// has capacity 1 except at the endpoints.
int disjointPaths(const SimpleGraph& g, int u, int v) {
  int n = g.vertexCount();
  int nodes = 2 * (n + 1);
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  auto in = [](int w) { return 2 * w; };
  auto out = [](int w) { return 2 * w + 1; };
  for (int w = 1; w <= n; ++w) cap[in(w)][out(w)] = (w == u || w == v) ? n : 1;
  for (auto [a, b] : g.edges()) {
    cap[out(a)][in(b)] = n;
    cap[out(b)][in(a)] = n;
  }
  int source = out(u), sink = in(v);
  int flow = 0;
  while (true) {
    std::vector<int> prev(nodes, -1);
    prev[source] = source;
    std::queue<int> q;
    q.push(source);
    while (!q.empty() && prev[sink] < 0) {
      int x = q.front();
      q.pop();
      for (int y = 0; y < nodes; ++y)
        if (cap[x][y] > 0 && prev[y] < 0) {
          prev[y] = x;
          q.push(y);
        }
    }
    if (prev[sink] < 0) break;
    for (int y = sink; y != source; y = prev[y]) {
      cap[prev[y]][y] -= 1;
      cap[y][prev[y]] += 1;
    }
    ++flow;
  }
  return flow;
}

int kappaConnected(const SimpleGraph& g) {
  int n = g.vertexCount();
  if (isComplete(g)) return n - 1;
  int best = n;
  for (int u = 1; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v)
      if (!g.hasEdge(u, v)) best = std::min(best, disjointPaths(g, u, v));
  return best;
}

// True iff some separator of g of size exactly `target` contains all of
// `chosen`. Requires |chosen| <= target and g connected.
bool extendsToSeparator(const SimpleGraph& g, VertexSet chosen, int target) {
  int picked = setSize(chosen);
  VertexSet rest = g.vertices() & ~chosen;
  if (picked == target) return componentCountWithin(g, rest) > 1;
  if (componentCountWithin(g, rest) > 1)
    return false;  // would contradict minimality of target
  auto [h, labels] = inducedSubgraph(g, rest);
  (void)labels;
  if (isComplete(h)) return false;  // nothing inside `rest` disconnects it
  return kappaConnected(h) == target - picked;
}

}  // namespace

ConnectivityResult vertexConnectivity(const SimpleGraph& g) {
  if (!isConnected(g)) throw DisconnectedInput("vertex connectivity needs a connected graph");
  int n = g.vertexCount();
  if (isComplete(g)) return {n - 1, std::nullopt};
  int kappa = kappaConnected(g);
  // Lexicographically smallest witness, grown one vertex at a time; a
  // prefix is kept iff it still extends to some kappa-separator.
  std::vector<int> witness;
  VertexSet chosen = 0;
  int from = 1;
  while (static_cast<int>(witness.size()) < kappa) {
    bool found = false;
    for (int v = from; v <= n; ++v) {
      if (containsVertex(chosen, v)) continue;
      if (extendsToSeparator(g, chosen | vertexBit(v), kappa)) {
        chosen |= vertexBit(v);
        witness.push_back(v);
        from = v + 1;
        found = true;
        break;
      }
    }
    if (!found)
      throw InvariantViolation("separator witness search failed to extend");
  }
  return {kappa, witness};
}

ConnectivityResult bruteForceConnectivity(const SimpleGraph& g,
                                          const Caps& caps) {
  if (!isConnected(g)) throw DisconnectedInput("vertex connectivity needs a connected graph");
  int n = g.vertexCount();
  if (n > caps.bruteConnectivityMaxN)
    throw CapExceeded("brute-force connectivity capped at n <= " +
                      std::to_string(caps.bruteConnectivityMaxN));
  if (isComplete(g)) return {n - 1, std::nullopt};
  for (int size = 1; size <= n - 2; ++size) {
    // subsets of given size in lexicographic order of their vertex lists
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i + 1;
    while (true) {
      VertexSet s = toVertexSet(pick);
      if (componentCountWithin(g, g.vertices() & ~s) > 1) return {size, pick};
      int i = size - 1;
      while (i >= 0 && pick[i] == n - (size - 1 - i)) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  throw InvariantViolation("non-complete connected graph had no separator");
}

GraphInvariants invariants(const SimpleGraph& g) {
  GraphInvariants inv;
  auto comps = componentMasksWithin(g, g.vertices());
  inv.componentCount = static_cast<int>(comps.size());
  for (VertexSet c : comps) {
    int diam = diameter(g, c);
    inv.componentDiameters.push_back(diam);
    if (setSize(c) == 1) ++inv.isolatedCount;
    inv.diameterSum += diam;
  }
  inv.diameterSum += inv.isolatedCount;
  inv.freeCount = freeVertexCount(g);
  inv.nonFreeCount = g.vertexCount() - inv.freeCount;
  inv.kappa = inv.componentCount == 1 ? vertexConnectivity(g).kappa : 0;
  return inv;
}

}  // namespace gbei

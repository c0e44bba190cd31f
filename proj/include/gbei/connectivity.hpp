#pragma once

#include <optional>
#include <vector>

#include "gbei/caps.hpp"
#include "gbei/graph.hpp"

namespace gbei {

struct ConnectivityResult {
  int kappa = 0;
  /// Lexicographically smallest minimum separator; absent for complete
  /// graphs (convention kappa(K_n) = n-1 has no witness).
  std::optional<std::vector<int>> witnessSeparator;
};

/// Exact vertex connectivity of a connected graph, Menger style: the
/// minimum over non-adjacent pairs (u,v) of the max number of internally
/// vertex-disjoint u-v paths (unit vertex capacities via vertex splitting).
/// Throws DisconnectedInput.
ConnectivityResult vertexConnectivity(const SimpleGraph& g);

/// Test oracle: scans vertex subsets in ascending (size, lex) order for the
/// first whose removal disconnects g; n-1 for complete graphs.
/// Throws DisconnectedInput, CapExceeded.
ConnectivityResult bruteForceConnectivity(const SimpleGraph& g,
                                          const Caps& caps = Caps::global());

}  // namespace gbei

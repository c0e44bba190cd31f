#pragma once

#include <vector>

#include "gbei/caps.hpp"
#include "gbei/graph.hpp"

namespace gbei {

struct Cutset {
  std::vector<int> vertices;  // ascending; empty for T = {}
  int componentCountAfterRemoval = 0;
};

/// The family C(G) of all sets with the cut point property, each with
/// c_G(T). The empty set is always a member (it holds vacuously and the
/// minimal-prime decomposition needs P_empty).
struct CutsetFamily {
  SimpleGraph graph;
  std::vector<Cutset> cutsets;  // (size, lex) order; front() is T = {}
};

/// True iff every v in T is a cut vertex of G - (T \ {v}); vacuously true
/// for T = {}.
bool hasCutPointProperty(const SimpleGraph& g, VertexSet T);

/// All cutsets by subset scan (early exit per failing vertex). Throws
/// CapExceeded beyond caps.cutsetEnumMaxN.
CutsetFamily enumerateCutsets(const SimpleGraph& g,
                              const Caps& caps = Caps::global());

/// c_G(T) = |T| + c for every cutset T, where c counts components of G.
bool isUnmixed(const SimpleGraph& g, const Caps& caps = Caps::global());

/// Unmixed and every non-empty cutset T has some v with T \ {v} again a
/// cutset.
bool isAccessible(const SimpleGraph& g, const Caps& caps = Caps::global());

/// Components of G - T in original labels, ordered by minimum vertex.
/// Throws NotACutset if T lacks the cut point property.
std::vector<std::vector<int>> primeComponentSupport(const SimpleGraph& g,
                                                    VertexSet T);

}  // namespace gbei

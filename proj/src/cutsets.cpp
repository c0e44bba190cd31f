#include "gbei/cutsets.hpp"

#include <algorithm>
#include <unordered_set>

namespace gbei {

bool hasCutPointProperty(const SimpleGraph& g, VertexSet T) {
  VertexSet rest = g.vertices() & ~T;
  int componentsWithoutT = componentCountWithin(g, rest);
  for (VertexSet t = T; t; t &= t - 1) {
    int v = lowestVertex(t);
    // v is a cut vertex of G-(T\{v}) iff deleting v increases the count
    if (componentCountWithin(g, rest | vertexBit(v)) >= componentsWithoutT)
      return false;
  }
  return true;
}

CutsetFamily enumerateCutsets(const SimpleGraph& g, const Caps& caps) {
  int n = g.vertexCount();
  if (n > caps.cutsetEnumMaxN)
    throw CapExceeded("cutset enumeration capped at n <= " +
                      std::to_string(caps.cutsetEnumMaxN));
  std::vector<std::vector<VertexSet>> bySize(n + 1);
  for (VertexSet T = 0; T < (VertexSet{1} << n); ++T)
    if (hasCutPointProperty(g, T)) bySize[setSize(T)].push_back(T);
  CutsetFamily fam{g, {}};
  for (int size = 0; size <= n; ++size) {
    // numeric mask order is not lex order of vertex lists; sort explicitly
    std::vector<std::vector<int>> lists;
    for (VertexSet T : bySize[size]) lists.push_back(toVertexList(T));
    std::sort(lists.begin(), lists.end());
    for (auto& list : lists) {
      VertexSet T = toVertexSet(list);
      fam.cutsets.push_back(
          {std::move(list), componentCountWithin(g, g.vertices() & ~T)});
    }
  }
  return fam;
}

bool isUnmixed(const SimpleGraph& g, const Caps& caps) {
  int c = componentCountWithin(g, g.vertices());
  for (const Cutset& cs : enumerateCutsets(g, caps).cutsets)
    if (cs.componentCountAfterRemoval !=
        static_cast<int>(cs.vertices.size()) + c)
      return false;
  return true;
}

bool isAccessible(const SimpleGraph& g, const Caps& caps) {
  if (!isUnmixed(g, caps)) return false;
  CutsetFamily fam = enumerateCutsets(g, caps);
  std::unordered_set<VertexSet> masks;
  for (const Cutset& cs : fam.cutsets) masks.insert(toVertexSet(cs.vertices));
  for (const Cutset& cs : fam.cutsets) {
    if (cs.vertices.empty()) continue;
    VertexSet T = toVertexSet(cs.vertices);
    bool shrinkable = false;
    for (int v : cs.vertices)
      if (masks.count(T & ~vertexBit(v))) {
        shrinkable = true;
        break;
      }
    if (!shrinkable) return false;
  }
  return true;
}

std::vector<std::vector<int>> primeComponentSupport(const SimpleGraph& g,
                                                    VertexSet T) {
  if (!hasCutPointProperty(g, T))
    throw NotACutset("vertex set lacks the cut point property");
  std::vector<std::vector<int>> out;
  for (VertexSet m : componentMasksWithin(g, g.vertices() & ~T))
    out.push_back(toVertexList(m));
  return out;
}

}  // namespace gbei

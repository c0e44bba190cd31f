#pragma once

#include <optional>
#include <vector>

#include "gbei/caps.hpp"
#include "gbei/graph.hpp"

namespace gbei {

/// G_v: the neighborhood of v becomes a clique; vertex set unchanged.
SimpleGraph completeAt(const SimpleGraph& g, int v);

/// Trace of an iterated completion G_W. The result never depends on the
/// application order; `applied` records the (ascending) order actually used.
struct CompletionTrace {
  SimpleGraph base;
  std::vector<int> applied;
  SimpleGraph result;
};

CompletionTrace completeAtSet(const SimpleGraph& g, VertexSet W);

/// W is a completion set iff G_W is a disjoint union of complete graphs.
bool isCompletionSet(const SimpleGraph& g, VertexSet W);

/// Witness that g is a cycle or a completion of one: a Hamiltonian cycle H
/// (listed from vertex 1) and W with H completed at W equal to g.
struct H2Witness {
  std::vector<int> cycle;
  std::vector<int> completionSet;
};

/// Recognizes cycles directly (no cap); otherwise searches Hamiltonian
/// cycles in lex order and completion sets in (size, lex) order, returning
/// the first witness. Throws CapExceeded if the search part would run past
/// caps.h2RecognizerMaxN.
std::optional<H2Witness> isInH2(const SimpleGraph& g,
                                const Caps& caps = Caps::global());

}  // namespace gbei

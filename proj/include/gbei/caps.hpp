#pragma once

#include <string>

namespace gbei {

/// Desk-scale resource caps. Every exponential or potentially heavy routine
/// takes a Caps and refuses (CapExceeded / TimeoutError) beyond its limit.
/// Defaults can be overridden through the GBEI_CAPS environment variable,
/// a comma-separated key=value list, e.g.
///   GBEI_CAPS="oracle=14,gb_timeout=120,cutsets=18"
struct Caps {
  int cutsetEnumMaxN = 16;        // key: cutsets
  int bruteConnectivityMaxN = 12; // key: brute_connectivity
  int h2RecognizerMaxN = 10;      // key: h2
  int stronglyUnmixedMaxN = 12;   // key: strongly_unmixed
  int maxCliqueMaxN = 32;         // key: cliques
  int gbMaxGenerators = 60;       // key: gb_gens
  int gbMaxVariables = 16;        // key: gb_vars
  int gbTimeoutSeconds = 60;      // key: gb_timeout
  int oracleGroundCap = 15;       // key: oracle

  // Parses GBEI_CAPS on top of the defaults; throws InvalidArgument on a
  // malformed entry or unknown key.
  static Caps fromEnv();

  // Process-wide caps, initialized once from the environment.
  static const Caps& global();
};

}  // namespace gbei

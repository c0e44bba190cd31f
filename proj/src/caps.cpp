#include "gbei/caps.hpp"

#include <cstdlib>
#include <sstream>

#include "gbei/errors.hpp"

namespace gbei {

Caps Caps::fromEnv() {
  Caps caps;
  const char* env = std::getenv("GBEI_CAPS");
  if (env == nullptr || *env == '\0') return caps;
  std::istringstream in(env);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument("GBEI_CAPS entries must look like key=value: " +
                            item);
    std::string key = item.substr(0, eq);
    int value;
    try {
      value = std::stoi(item.substr(eq + 1));
    } catch (...) {
      throw InvalidArgument("GBEI_CAPS value is not an integer: " + item);
    }
    if (value < 1) throw InvalidArgument("GBEI_CAPS values must be >= 1");
    if (key == "cutsets")
      caps.cutsetEnumMaxN = value;
    else if (key == "brute_connectivity")
      caps.bruteConnectivityMaxN = value;
    else if (key == "h2")
      caps.h2RecognizerMaxN = value;
    else if (key == "strongly_unmixed")
      caps.stronglyUnmixedMaxN = value;
    else if (key == "cliques")
      caps.maxCliqueMaxN = value;
    else if (key == "gb_gens")
      caps.gbMaxGenerators = value;
    else if (key == "gb_vars")
      caps.gbMaxVariables = value;
    else if (key == "gb_timeout")
      caps.gbTimeoutSeconds = value;
    else if (key == "oracle")
      caps.oracleGroundCap = value;
    else
      throw InvalidArgument("GBEI_CAPS has an unknown key: " + key);
  }
  return caps;
}

const Caps& Caps::global() {
  static const Caps caps = Caps::fromEnv();
  return caps;
}

}  // namespace gbei

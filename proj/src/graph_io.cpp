#include "gbei/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace gbei {

SimpleGraph graphFromJson(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("bad graph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer())
    throw InvalidArgument("graph JSON needs an integer field \"n\"");
  int n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    if (!j["edges"].is_array())
      throw InvalidArgument("graph JSON field \"edges\" must be an array");
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw InvalidArgument("each edge must be a pair of integers");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph graphFromText(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (n < 0) {
      try {
        n = std::stoi(first);
      } catch (...) {
        throw InvalidArgument("first data line must be the vertex count");
      }
      continue;
    }
    int v;
    if (!(ls >> v)) throw InvalidArgument("edge line needs two endpoints");
    edges.emplace_back(std::stoi(first), v);
  }
  if (n < 0) throw InvalidArgument("empty graph file");
  return SimpleGraph(n, std::move(edges));
}

SimpleGraph graphFromString(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? graphFromJson(text) : graphFromText(text);
  }
  throw InvalidArgument("empty graph input");
}

SimpleGraph graphFromFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return graphFromString(buf.str());
}

std::string graphToCanonicalJson(const SimpleGraph& g) {
  std::string out = "{\"n\":" + std::to_string(g.vertexCount()) +
                    ",\"edges\":[";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(u) + ',' + std::to_string(v) + ']';
  }
  out += "]}";
  return out;
}

std::string graphToDot(const SimpleGraph& g) {
  std::string out = "graph G {\n";
  for (int v = 1; v <= g.vertexCount(); ++v)
    out += "  " + std::to_string(v) + ";\n";
  for (auto [u, v] : g.edges())
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace gbei

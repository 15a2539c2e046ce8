#pragma once

#include "arith/bigint.hpp"
#include "arith/counting.hpp"
#include "arith/error.hpp"
#include "arith/graph.hpp"
#include "arith/structure.hpp"

#include <json.hpp>

#include <charconv>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arith::io {

using json = nlohmann::json;

/// Integers that fit in 64 bits are written as JSON numbers, larger ones as decimal strings.
inline json to_json(const BigInt& v) {
  if (v >= 0 && v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  if (v < 0 && v >= std::numeric_limits<std::int64_t>::min()) return v.convert_to<std::int64_t>();
  return v.str();
}

inline BigInt big_from_json(const json& j) {
  if (j.is_number_unsigned()) return BigInt(j.get<std::uint64_t>());
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("-0123456789") != std::string::npos)
      throw FormatError("not an integer: \"" + s + "\"");
    return BigInt(s);
  }
  throw FormatError("expected an integer, got " + j.dump());
}

inline json to_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

inline std::vector<BigInt> vector_from_json(const json& j) {
  if (!j.is_array()) throw FormatError("expected an array of integers");
  std::vector<BigInt> out;
  for (const auto& x : j) out.push_back(big_from_json(x));
  return out;
}

inline std::size_t size_from_json(const json& j, std::string_view key) {
  if (!j.contains(key) || !j.at(std::string(key)).is_number_unsigned())
    throw FormatError("field \"" + std::string(key) + "\" must be a non-negative integer");
  return j.at(std::string(key)).get<std::size_t>();
}

/// {"family":"coconut_tree","p":..,"s":..}, {"family":"path","n":..}, {"family":"cycle","n":..},
/// otherwise {"vertices":n,"edges":[[u,v],...]} with 1-based endpoints.
inline json graph_to_json(const Graph& g) {
  switch (g.family()) {
    case GraphFamily::coconut_tree:
      return {{"family", "coconut_tree"}, {"p", g.coconut()->p}, {"s", g.coconut()->s}};
    case GraphFamily::path:
      return {{"family", "path"}, {"n", g.vertex_count()}};
    case GraphFamily::cycle:
      return {{"family", "cycle"}, {"n", g.vertex_count()}};
    case GraphFamily::custom:
      break;
  }
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u + 1, v + 1});
  return {{"vertices", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("graph must be a JSON object");
  try {
    if (j.contains("family")) {
      const auto family = j.at("family").get<std::string>();
      if (family == "coconut_tree") return build_coconut_tree(size_from_json(j, "p"), size_from_json(j, "s"));
      if (family == "path") return build_path(size_from_json(j, "n"));
      if (family == "cycle") return build_cycle(size_from_json(j, "n"));
      if (family == "star") return build_star(size_from_json(j, "s"));
      throw FormatError("unknown graph family \"" + family + "\"");
    }
    const auto n = size_from_json(j, "vertices");
    if (!j.contains("edges") || !j.at("edges").is_array()) throw FormatError("graph needs an \"edges\" array");
    std::vector<Graph::Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw FormatError("edge must be a pair [u, v]");
      auto u = e[0].get<std::size_t>();
      auto v = e[1].get<std::size_t>();
      if (u == 0 || v == 0) throw FormatError("edge endpoints are 1-based");
      edges.emplace_back(u - 1, v - 1);
    }
    return Graph::from_edges(n, edges);
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed graph: ") + e.what());
  }
}

inline json structure_to_json(const ArithStructure& x) {
  return {{"graph", graph_to_json(x.g())}, {"r", to_json(x.r)}, {"d", to_json(x.d)}};
}

/// Reads {"graph":..., "r":[...], "d":[...]}. When d is absent it is derived from r.
inline ArithStructure structure_from_json(const json& j) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("r"))
    throw FormatError("structure needs \"graph\" and \"r\" fields");
  auto graph = share(graph_from_json(j.at("graph")));
  auto r = vector_from_json(j.at("r"));
  if (!j.contains("d")) return from_r(std::move(graph), std::move(r));
  auto d = vector_from_json(j.at("d"));
  detail::require_length(*graph, r.size(), "r");
  detail::require_length(*graph, d.size(), "d");
  return {std::move(graph), std::move(r), std::move(d)};
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError(path + ": " + e.what());
  }
}

/// Parses ct:p,s | path:n | cycle:n | star:s | file:<path>.
inline Graph parse_graph_descriptor(std::string_view text) {
  auto number = [&](std::string_view part) -> std::size_t {
    std::size_t value = 0;
    auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || end != part.data() + part.size() || part.empty())
      throw FormatError("bad number \"" + std::string(part) + "\" in graph descriptor");
    return value;
  };
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw FormatError("graph descriptor needs a ':' (e.g. ct:3,3)");
  const auto kind = text.substr(0, colon);
  const auto rest = text.substr(colon + 1);
  if (kind == "ct") {
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw FormatError("ct descriptor is ct:p,s");
    return build_coconut_tree(number(rest.substr(0, comma)), number(rest.substr(comma + 1)));
  }
  if (kind == "path") return build_path(number(rest));
  if (kind == "cycle") return build_cycle(number(rest));
  if (kind == "star") return build_star(number(rest));
  if (kind == "file") return graph_from_json(read_json_file(std::string(rest)));
  throw FormatError("unknown graph kind \"" + std::string(kind) + "\"");
}

/// One cache line: {"p":..,"s":..,"max_c":..,"smooth_count":..,"stable":..}.
struct CacheEntry {
  std::size_t p = 0;
  std::size_t s = 0;
  std::uint64_t max_c = 0;
  BigInt smooth_count;
  bool stable = false;
};

inline json cache_entry_to_json(const CacheEntry& e) {
  return {{"p", e.p}, {"s", e.s}, {"max_c", e.max_c}, {"smooth_count", to_json(e.smooth_count)}, {"stable", e.stable}};
}

inline CacheEntry cache_entry_from_json(const json& j) {
  CacheEntry e;
  e.p = size_from_json(j, "p");
  e.s = size_from_json(j, "s");
  e.max_c = size_from_json(j, "max_c");
  if (!j.contains("smooth_count")) throw FormatError("cache entry needs \"smooth_count\"");
  e.smooth_count = big_from_json(j.at("smooth_count"));
  if (!j.contains("stable") || !j.at("stable").is_boolean()) throw FormatError("cache entry needs boolean \"stable\"");
  e.stable = j.at("stable").get<bool>();
  return e;
}

/// Loads a JSON-lines cache; later lines replace earlier ones for the same (p, s).
/// A missing file yields an empty oracle.
inline SmoothCountOracle load_cache(const std::string& path) {
  SmoothCountOracle oracle;
  std::ifstream in(path);
  if (!in) return oracle;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      auto e = cache_entry_from_json(json::parse(line));
      oracle.set(e.p, e.s, {e.smooth_count, e.max_c, e.stable, "cached"});
    } catch (const json::exception& ex) {
      throw FormatError(path + ":" + std::to_string(number) + ": " + ex.what());
    } catch (const FormatError& ex) {
      throw FormatError(path + ":" + std::to_string(number) + ": " + ex.what());
    }
  }
  return oracle;
}

inline void append_cache(const std::string& path, const std::vector<CacheEntry>& entries) {
  std::ofstream out(path, std::ios::app);
  if (!out) throw FormatError("cannot append to " + path);
  for (const auto& e : entries) out << cache_entry_to_json(e).dump() << '\n';
}

}  // namespace arith::io

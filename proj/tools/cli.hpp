#pragma once

#include "arith/arith.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace arith::cli {

using json = nlohmann::json;

enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Bad input that the user can fix by changing the command line.
class UsageError : public std::runtime_error {
 public:
  UsageError(const std::string& flag, const std::string& what) : std::runtime_error(flag + ": " + what) {}
};

struct Options {
  std::string format = "json";
  unsigned jobs = 1;

  std::string graph;
  std::uint64_t max_r = 50;
  std::optional<std::uint64_t> max_c;
  std::string oracle;
  bool smooth_only = false;

  std::string x;
  std::string y;
  std::string center;
  std::string leaves;

  std::string seed_structure;
  std::string vertex;
  std::size_t position = 0;
  std::string b;
  std::size_t target_p = 0;
  bool exhaustive = false;
  std::size_t leaf_count = 0;
  std::string positions;
  std::size_t lattice_n = 0;
  std::string north;

  std::size_t p_max = 3;
  std::size_t s_max = 4;
  std::uint64_t bound = 200;
};

namespace detail {

inline std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  if (text.empty()) return parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) parts.push_back(part);
  return parts;
}

inline BigInt parse_big(const std::string& flag, const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(flag, "\"" + text + "\" is not a non-negative integer");
  return BigInt(text);
}

inline std::vector<BigInt> parse_big_list(const std::string& flag, const std::string& text) {
  std::vector<BigInt> out;
  for (const auto& part : split_csv(text)) out.push_back(parse_big(flag, part));
  return out;
}

inline std::vector<std::size_t> parse_index_list(const std::string& flag, const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : split_csv(text)) {
    auto v = parse_big(flag, part);
    if (v > 1'000'000) throw UsageError(flag, "index " + part + " is too large");
    out.push_back(v.convert_to<std::size_t>());
  }
  return out;
}

inline Graph parse_graph(const std::string& descriptor) {
  try {
    return io::parse_graph_descriptor(descriptor);
  } catch (const Error& e) {
    throw UsageError("--graph", e.what());
  }
}

inline ArithStructure load_structure(const std::string& path) {
  try {
    if (path == "-") return io::structure_from_json(json::parse(std::cin));
    return io::structure_from_json(io::read_json_file(path));
  } catch (const json::exception& e) {
    throw UsageError("--seed-structure", e.what());
  } catch (const FormatError& e) {
    throw UsageError("--seed-structure", e.what());
  }
}

inline CtVertex parse_vertex(const std::string& text, const CoconutShape& shape) {
  if (text.size() >= 2 && (text[0] == 'v' || text[0] == 'l')) {
    auto k = parse_big("--vertex", text.substr(1)).convert_to<std::size_t>();
    return text[0] == 'v' ? CtVertex::path(k) : CtVertex::leaf(k);
  }
  auto index = parse_big("--vertex", text).convert_to<std::size_t>();
  if (index == 0 || index > shape.vertex_count()) throw UsageError("--vertex", "vertex " + text + " out of range");
  return index <= shape.p ? CtVertex::path(index) : CtVertex::leaf(index - shape.p);
}

/// Column labels: v1..vp, l1..ls for coconut trees, 1..n otherwise.
inline std::vector<std::string> vertex_labels(const Graph& g) {
  std::vector<std::string> labels;
  if (const auto& shape = g.coconut()) {
    for (std::size_t k = 1; k <= shape->p; ++k) labels.push_back("v" + std::to_string(k));
    for (std::size_t j = 1; j <= shape->s; ++j) labels.push_back("l" + std::to_string(j));
  } else {
    for (std::size_t v = 1; v <= g.vertex_count(); ++v) labels.push_back(std::to_string(v));
  }
  return labels;
}

inline std::string csv_value(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

/// Structures as CSV: one row per structure, columns r_<label>..., d_<label>...
inline void write_structures_csv(std::ostream& out, const std::vector<ArithStructure>& xs, const Graph& g) {
  const auto labels = vertex_labels(g);
  bool first = true;
  for (const auto& l : labels) out << (first ? "" : ",") << "r_" << l, first = false;
  for (const auto& l : labels) out << ",d_" << l;
  out << '\n';
  for (const auto& x : xs) {
    for (std::size_t v = 0; v < x.r.size(); ++v) out << (v ? "," : "") << x.r[v];
    for (const auto& d : x.d) out << ',' << d;
    out << '\n';
  }
}

/// Flat objects as CSV: header from the first row's keys.
inline void write_rows_csv(std::ostream& out, const std::vector<json>& rows) {
  if (rows.empty()) return;
  std::vector<std::string> keys;
  for (auto it = rows.front().begin(); it != rows.front().end(); ++it) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << keys[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << csv_value(row.value(keys[i], json()));
    out << '\n';
  }
}

inline json structures_json(const std::vector<ArithStructure>& xs) {
  json list = json::array();
  for (const auto& x : xs) list.push_back({{"r", io::to_json(x.r)}, {"d", io::to_json(x.d)}});
  return list;
}

class Dispatcher {
 public:
  Dispatcher(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int chain() {
    const auto x = parse_big("x", o_.x);
    const auto y = parse_big("y", o_.y);
    if (x < 1) throw UsageError("x", "must be at least 1");
    const auto c = arith::chain(x, y);
    if (csv()) {
      out_ << "x1,x2,F,terms\n" << x << ',' << y << ',' << c.length() << ',';
      for (std::size_t i = 0; i < c.terms.size(); ++i) out_ << (i ? ";" : "") << c.terms[i];
      out_ << '\n';
    } else {
      emit({{"x1", io::to_json(x)}, {"x2", io::to_json(y)}, {"terms", io::to_json(c.terms)}, {"F", c.length()}});
    }
    return ok;
  }

  int construct() {
    LeafAssignment la{parse_big("--center", o_.center), parse_big_list("--leaves", o_.leaves)};
    if (la.a.empty()) throw UsageError("--leaves", "needs at least one leaf value");
    return emit_structure(construct_smooth(la));
  }

  int enumerate() {
    auto graph = share(parse_graph(o_.graph));
    EnumerationResult result;
    if (o_.smooth_only) {
      const auto& shape = graph->require_coconut();
      const auto max_c = o_.max_c.value_or(o_.max_r);
      result = enumerate_smooth_ct(shape.p, shape.s, max_c, {o_.jobs, true});
      if (!o_.oracle.empty())
        io::append_cache(o_.oracle, {{shape.p, shape.s, max_c, BigInt(result.count()), *result.stable}});
    } else {
      result = enumerate_all(graph, o_.max_r, {o_.jobs, true});
    }
    if (csv()) {
      write_structures_csv(out_, result.structures, *graph);
    } else {
      emit({{"graph", io::graph_to_json(*graph)},
            {"descriptor", result.graph},
            {"smooth_only", o_.smooth_only},
            {"bound", result.bound},
            {"stable", result.stable ? json(*result.stable) : json()},
            {"count", result.count()},
            {"structures", structures_json(result.structures)}});
    }
    return ok;
  }

  int count() {
    const auto graph = parse_graph(o_.graph);
    json report{{"graph", graph.descriptor()}};
    if (graph.family() == GraphFamily::path) {
      report["count"] = io::to_json(path_count(graph.vertex_count()));
    } else if (graph.family() == GraphFamily::cycle) {
      report["count"] = io::to_json(cycle_count(graph.vertex_count()));
    } else if (const auto& shape = graph.coconut()) {
      report["p"] = shape->p;
      report["s"] = shape->s;
      if (shape->s == 1) {
        report["count"] = io::to_json(path_count(shape->p + 1));
      } else {
        const auto oracle = oracle_for(shape->p, shape->s);
        report["count"] = io::to_json(ct_count(shape->p, shape->s, oracle));
        std::uint64_t weakest = 0;
        bool stable = true;
        for (auto [q, y] : required_oracle_cells(shape->p, shape->s)) {
          const auto& e = oracle.entry(q, y);
          weakest = weakest == 0 ? e.bound : std::min(weakest, e.bound);
          stable = stable && e.stable;
        }
        report["oracle_bound"] = weakest;
        report["oracle_stable"] = stable;
      }
    } else {
      throw DomainError("no closed-form count for " + graph.descriptor() + "; use enumerate");
    }
    if (csv())
      write_rows_csv(out_, {report});
    else
      emit(report);
    return ok;
  }

  int verify() {
    if (o_.p_max == 0 || o_.s_max == 0 || o_.bound == 0)
      throw UsageError("verify", "--p-max, --s-max and --bound must be positive");
    const auto report = verify_counts(o_.p_max, o_.s_max, o_.bound, o_.jobs);
    std::vector<json> rows;
    for (const auto& c : report.cells)
      rows.push_back({{"p", c.p},
                      {"s", c.s},
                      {"brute_force", c.brute_force},
                      {"formula", io::to_json(c.formula)},
                      {"brute_force_stable", c.brute_force_stable},
                      {"oracle_stable", c.oracle_stable},
                      {"stable", c.stable()},
                      {"match", c.match()}});
    if (csv())
      write_rows_csv(out_, rows);
    else
      emit({{"bound", report.bound},
            {"passed", report.passed()},
            {"stable_cells", report.stable_cells()},
            {"cells", rows}});
    return report.passed() ? ok : domain_error;
  }

  int transform_smooth() {
    const auto x = load_structure(o_.seed_structure);
    return emit_structure(smooth_at(x, parse_vertex(o_.vertex, x.shape())));
  }

  int transform_ancestor() { return emit_structure(smooth_ancestor(load_structure(o_.seed_structure))); }

  int transform_subdivide() { return emit_structure(subdivide(load_structure(o_.seed_structure), o_.position)); }

  int transform_sequence() {
    const auto b = parse_index_list("--b", o_.b);
    return emit_structure(apply_subdivision_sequence(load_structure(o_.seed_structure), b));
  }

  int transform_descendants() {
    const auto seed = load_structure(o_.seed_structure);
    const auto xs = o_.exhaustive ? descendants_exhaustive(seed, o_.target_p) : descendants(seed, o_.target_p);
    const auto graph = build_coconut_tree(o_.target_p, seed.shape().s);
    if (csv())
      write_structures_csv(out_, xs, graph);
    else
      emit({{"graph", io::graph_to_json(graph)}, {"count", xs.size()}, {"structures", structures_json(xs)}});
    return ok;
  }

  int transform_expand_leaves() {
    const auto x = load_structure(o_.seed_structure);
    const auto positions = parse_index_list("--positions", o_.positions);
    return emit_structure(expand_leaves(x, o_.leaf_count, positions));
  }

  int transform_lattice() {
    const auto xs = parse_index_list("--north", o_.north);
    const auto seq = sequence_from_lattice_path(LatticePath::make(o_.lattice_n, xs));
    if (csv()) {
      out_ << "base_p,b\n" << seq.base_p << ',';
      for (std::size_t i = 0; i < seq.b.size(); ++i) out_ << (i ? ";" : "") << seq.b[i];
      out_ << '\n';
    } else {
      emit({{"n", o_.lattice_n}, {"k", xs.size()}, {"base_p", seq.base_p}, {"b", seq.b}});
    }
    return ok;
  }

 private:
  bool csv() const { return o_.format == "csv"; }

  void emit(const json& j) { out_ << j.dump(2) << '\n'; }

  int emit_structure(const ArithStructure& x) {
    if (csv()) {
      write_structures_csv(out_, {x}, x.g());
    } else {
      auto j = io::structure_to_json(x);
      if (const auto& shape = x.g().coconut()) {
        j["p"] = shape->p;
        j["s"] = shape->s;
      }
      emit(j);
    }
    return ok;
  }

  /// Cached counts first; missing cells are enumerated when --max-c is given (and then
  /// appended to the cache), otherwise they are an error.
  SmoothCountOracle oracle_for(std::size_t p, std::size_t s) {
    SmoothCountOracle oracle = o_.oracle.empty() ? SmoothCountOracle{} : io::load_cache(o_.oracle);
    std::optional<std::uint64_t> max_c = o_.max_c;
    if (o_.oracle.empty() && !max_c) max_c = 200;
    std::vector<io::CacheEntry> fresh;
    for (auto [q, y] : required_oracle_cells(p, s)) {
      if (oracle.contains(q, y)) continue;
      if (!max_c) throw OracleMissError(q, y);
      const auto count = count_smooth_ct(q, y, *max_c);
      const bool stable = count == count_smooth_ct(q, y, 2 * *max_c);
      oracle.set(q, y, {BigInt(count), *max_c, stable, "enumerated"});
      fresh.push_back({q, y, *max_c, BigInt(count), stable});
    }
    if (!o_.oracle.empty() && !fresh.empty()) io::append_cache(o_.oracle, fresh);
    return oracle;
  }

  const Options& o_;
  std::ostream& out_;
};

}  // namespace detail

/// Parses args (args[0] is the program name), runs the verb, and returns the exit status.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Arithmetical structures on graphs: enumerate, construct, transform, count, verify"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--jobs", o.jobs, "Worker threads for enumeration")->check(CLI::Range(1u, 256u));

  auto* chain = app.add_subcommand("chain", "Euclidean chain from (x, y) and its length F");
  chain->add_option("x", o.x)->required();
  chain->add_option("y", o.y)->required();

  auto* construct = app.add_subcommand("construct", "Unique smooth structure for a center and leaf labels");
  construct->add_option("--center", o.center, "Center label r_p")->required();
  construct->add_option("--leaves", o.leaves, "Leaf labels a1,a2,...")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Bounded brute-force enumeration");
  enumerate->add_option("--graph", o.graph, "ct:p,s | path:n | cycle:n | star:s | file:<path>")->required();
  enumerate->add_option("--max-r", o.max_r, "Largest r-value searched")->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 31));
  enumerate->add_option("--max-c", o.max_c, "Largest center searched with --smooth-only")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 31));
  enumerate->add_flag("--smooth-only", o.smooth_only, "Smooth structures on a coconut tree via leaf assignments");
  enumerate->add_option("--oracle", o.oracle, "Append the smooth count to this cache (with --smooth-only)");

  auto* count = app.add_subcommand("count", "Closed-form count of structures");
  count->add_option("--graph", o.graph, "ct:p,s | path:n | cycle:n | star:s")->required();
  count->add_option("--oracle", o.oracle, "Smooth-count cache (JSON lines)");
  count->add_option("--max-c", o.max_c, "Enumerate missing smooth counts up to this center")
      ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 31));

  auto* verify = app.add_subcommand("verify", "Brute force against the counting formula on CT(p,s)");
  verify->add_option("--p-max", o.p_max)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  verify->add_option("--s-max", o.s_max)->check(CLI::Range(std::size_t{1}, std::size_t{12}));
  verify->add_option("--bound", o.bound)->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 31));

  auto* transform = app.add_subcommand("transform", "Smoothing, subdivision and related transforms");
  transform->require_subcommand(1);
  auto seeded = [&](const std::string& name, const std::string& help) {
    auto* sub = transform->add_subcommand(name, help);
    sub->add_option("--seed-structure", o.seed_structure, "Structure JSON file, or - for stdin")->required();
    return sub;
  };
  auto* t_smooth = seeded("smooth", "Smooth at a vertex with d = 1");
  t_smooth->add_option("--vertex", o.vertex, "v<k>, l<j>, or a 1-based index")->required();
  auto* t_ancestor = seeded("ancestor", "Unique smooth ancestor");
  auto* t_subdivide = seeded("subdivide", "Subdivide at a path position");
  t_subdivide->add_option("--position", o.position)->required();
  auto* t_sequence = seeded("sequence", "Apply a subdivision sequence");
  t_sequence->add_option("--b", o.b, "b1,b2,...")->required();
  auto* t_descendants = seeded("descendants", "All descendants on CT(target-p, s) of a smooth seed");
  t_descendants->add_option("--target-p", o.target_p)->required();
  t_descendants->add_flag("--exhaustive", o.exhaustive, "Apply every valid sequence and deduplicate");
  auto* t_expand = seeded("expand-leaves", "Add leaves labelled r_p");
  t_expand->add_option("--leaves", o.leaf_count, "Leaf count s of the result")->required();
  t_expand->add_option("--positions", o.positions, "1-based slots of the new leaves");
  auto* t_lattice = transform->add_subcommand("lattice", "Subdivision sequence of a lattice path");
  t_lattice->add_option("--n", o.lattice_n)->required();
  t_lattice->add_option("--north", o.north, "x-coordinates of the north steps");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  }

  detail::Dispatcher run(o, out);
  try {
    if (chain->parsed()) return run.chain();
    if (construct->parsed()) return run.construct();
    if (enumerate->parsed()) return run.enumerate();
    if (count->parsed()) return run.count();
    if (verify->parsed()) return run.verify();
    if (t_smooth->parsed()) return run.transform_smooth();
    if (t_ancestor->parsed()) return run.transform_ancestor();
    if (t_subdivide->parsed()) return run.transform_subdivide();
    if (t_sequence->parsed()) return run.transform_sequence();
    if (t_descendants->parsed()) return run.transform_descendants();
    if (t_expand->parsed()) return run.transform_expand_leaves();
    if (t_lattice->parsed()) return run.transform_lattice();
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return domain_error;
  }
  err << "usage error: no command\n";
  return usage_error;
}

}  // namespace arith::cli

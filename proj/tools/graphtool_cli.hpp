#pragma once

// graphtool: command-line front end. run() takes argv-style arguments and
// explicit streams so it can be driven from tests.
//
// Exit status: 0 success, 1 domain error (bad graph, unknown name, ...),
// 2 usage error, 3 consistency violation (cross-check or route disagreement).

#include <chargraph/json_io.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

namespace graphtool {

using namespace chargraph;

/// A catalog lookup that failed; carries the suggestions.
class UnknownName : public std::runtime_error {
public:
  explicit UnknownName(const std::string& name)
      : std::runtime_error(message(name)) {}

private:
  static std::string message(const std::string& name) {
    std::string m = "unknown catalog name '" + name + "'";
    auto near = near_catalog_names(name);
    if (!near.empty()) {
      m += "; did you mean:";
      for (const auto& n : near) m += " " + n;
    }
    return m;
  }
};

struct Input {
  std::string label;  // original text for batch lines
  Graph graph;
};

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r\n") - b + 1);
}

/// Text from stdin or a file: one graph6 per line when every nonblank line is
/// graph6, otherwise a single edge list.
inline std::vector<Input> graphs_from_text(const std::string& text) {
  std::vector<Input> out;
  std::istringstream in(text);
  std::string line;
  bool all_graph6 = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    try {
      out.push_back({line, parse_graph6(line)});
    } catch (const ParseError&) {
      all_graph6 = false;
      break;
    }
  }
  if (all_graph6 && !out.empty()) return out;
  return {{"", parse_edge_list(text)}};
}

inline std::vector<Input> resolve_graphs(const std::string& spec, const std::string& name, std::istream& in) {
  if (!name.empty()) {
    auto g = lookup_graph(name);
    if (!g) throw UnknownName(name);
    return {{name, *g}};
  }
  if (spec.empty()) throw CLI::ValidationError("a graph is required (--graph or --name)");
  if (spec == "-") return graphs_from_text(std::string(std::istreambuf_iterator<char>(in), {}));
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) {
    std::ifstream f(spec);
    return graphs_from_text(std::string(std::istreambuf_iterator<char>(f), {}));
  }
  return {{spec, parse_graph6(spec)}};
}

/// Canonical graph6 when the order allows it, else the plain encoding.
inline std::string input_id(const Graph& g) {
  return g.order() <= kGraph6MaxOrder ? canonical_form(g) : std::string();
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

inline std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

inline std::string factors_text(const InvariantFactors& f) { return f.to_string(); }

struct Options {
  std::string graph, name, matrix = "adjacency";
  std::size_t k = 0;
  bool all = false, pretty = false, emit_all = false;
  std::size_t max_n = 0;
  std::string stat = "phiA";
  std::string g6_action, g6_value;
  std::string catalog_action = "list", catalog_name;
};

inline IntMatrix pick_matrix(const Graph& g, const std::string& which) {
  if (which == "adjacency") return adjacency_matrix(g);
  return laplacian_matrix(g);
}

/// One output line per input graph, in input order; the work runs on the
/// worker pool.
template <typename Fn>
void for_each_input(const std::vector<Input>& inputs, std::ostream& out, Fn&& fn) {
  std::vector<std::string> lines(inputs.size());
  parallel_for(inputs.size(), default_threads(), [&](std::size_t i) { lines[i] = fn(inputs[i].graph); });
  for (const auto& l : lines) out << l << '\n';
}

inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"graphtool: Smith groups, critical groups and characteristic ideals of graphs"};
  app.require_subcommand(1);
  Options o;
  auto add_graph = [&](CLI::App* c) {
    c->add_option("graph,--graph,-g", o.graph, "graph6 string, file (graph6 lines or edge list), or - for stdin");
    c->add_option("--name,-n", o.name, "catalog name such as petersen, C5, K{2,2,2}");
    c->add_flag("--pretty", o.pretty, "human-readable output");
  };
  auto* snf = app.add_subcommand("snf", "Smith normal form diagonal");
  auto* phi = app.add_subcommand("phi", "number of invariant factors equal to 1");
  for (auto* c : {snf, phi}) {
    add_graph(c);
    c->add_option("--matrix,-m", o.matrix, "adjacency or laplacian")->check(CLI::IsMember({"adjacency", "laplacian"}));
  }
  auto* ideal = app.add_subcommand("ideal", "characteristic ideals A_k(G,t)");
  add_graph(ideal);
  auto* k_opt = ideal->add_option("--k,-k", o.k, "ideal index")->check(CLI::PositiveNumber);
  auto* all_opt = ideal->add_flag("--all", o.all, "every k from 1 to n");
  k_opt->excludes(all_opt);
  auto* gamma = app.add_subcommand("gamma", "algebraic co-rank");
  add_graph(gamma);
  auto* classify_cmd = app.add_subcommand("classify", "family memberships with certificates, one JSON line per graph");
  add_graph(classify_cmd);
  auto* mine_cmd = app.add_subcommand("mine", "minimal forbidden graphs, graph6 per line then a JSON summary");
  mine_cmd->add_option("--max-n", o.max_n, "largest order searched")->required();
  mine_cmd->add_option("--stat", o.stat, "phiA, gammaA or phiL")->check(CLI::IsMember({"phiA", "gammaA", "phiL"}));
  mine_cmd->add_option("--k", o.k, "forbidden means statistic >= k+1")->required();
  mine_cmd->add_flag("--emit-all", o.emit_all, "also list non-minimal forbidden graphs");
  auto* g6 = app.add_subcommand("g6", "graph6 conversion: encode <edge list|->, decode <graph6>");
  g6->add_option("action", o.g6_action, "encode or decode")->required()->check(CLI::IsMember({"encode", "decode"}));
  g6->add_option("value", o.g6_value, "edge-list file, graph6 string, or -")->required();
  auto* catalog = app.add_subcommand("catalog", "named graphs: list, show <name>, emit");
  catalog->add_option("action", o.catalog_action, "list, show or emit")->check(CLI::IsMember({"list", "show", "emit"}));
  catalog->add_option("name", o.catalog_name, "name for show");
  auto* cross = app.add_subcommand("crosscheck", "verify the characterization theorems on all small connected graphs");
  cross->add_option("--max-n", o.max_n, "largest order, at most 8")->required();
  for (auto* c : {mine_cmd, cross}) c->add_flag("--pretty", o.pretty, "human-readable output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    const std::string msg = e.what();
    err << "usage error: " << msg << '\n' << "run with --help for usage\n";
    return 2;
  }

  try {
    if (snf->parsed() || phi->parsed()) {
      const bool is_snf = snf->parsed();
      const std::string cmd = is_snf ? "snf" : "phi";
      for_each_input(resolve_graphs(o.graph, o.name, in), out, [&](const Graph& g) -> std::string {
        const auto f = snf_diagonal(pick_matrix(g, o.matrix));
        if (o.pretty)
          return is_snf ? o.matrix + " SNF " + factors_text(f) : "phi(" + o.matrix + ") = " + std::to_string(f.count_ones());
        Json payload = {{"matrix", o.matrix}};
        if (is_snf) payload["invariant_factors"] = to_json(f);
        else payload["phi"] = f.count_ones();
        return envelope(cmd, input_id(g), payload).dump();
      });
      return 0;
    }
    if (ideal->parsed()) {
      if (!o.all && o.k == 0) throw CLI::ValidationError("ideal needs --k K or --all");
      for_each_input(resolve_graphs(o.graph, o.name, in), out, [&](const Graph& g) -> std::string {
        std::size_t lo = o.all ? 1 : o.k, hi = o.all ? g.order() : o.k;
        Json ideals = Json::array();
        std::string text;
        for (std::size_t k = lo; k <= hi; ++k) {
          const IdealZt a = characteristic_ideal(g, k);
          Json j = to_json(a);
          j["k"] = k;
          j["text"] = a.to_string();
          j["trivial"] = a.is_trivial();
          ideals.push_back(j);
          text += (text.empty() ? "" : "\n") + ("A_" + std::to_string(k) + " = " + a.to_string());
        }
        if (o.pretty) return text;
        return envelope("ideal", input_id(g), {{"ideals", ideals}}).dump();
      });
      return 0;
    }
    if (gamma->parsed()) {
      for_each_input(resolve_graphs(o.graph, o.name, in), out, [&](const Graph& g) -> std::string {
        const auto v = algebraic_corank(g);
        if (o.pretty) return "gamma = " + std::to_string(v);
        return envelope("gamma", input_id(g), {{"gamma", v}}).dump();
      });
      return 0;
    }
    if (classify_cmd->parsed()) {
      for_each_input(resolve_graphs(o.graph, o.name, in), out, [&](const Graph& g) -> std::string {
        const auto r = classify(g);
        if (!o.pretty) return envelope("classify", r.graph6, to_json(r)).dump();
        std::string s = r.graph6 + ": phi_A=" + std::to_string(r.phi_A) + " gamma=" + std::to_string(r.gamma);
        if (r.phi_L) s += " phi_L=" + std::to_string(*r.phi_L);
        std::vector<std::string> members;
        for (const auto& [f, v] : r.families)
          if (v.member) members.push_back(f);
        return s + " in {" + join(members, ", ") + "}";
      });
      return 0;
    }
    if (mine_cmd->parsed()) {
      MiningTask task{o.max_n, parse_statistic(o.stat), o.k};
      const auto r = mine(task);
      for (const auto& m : r.minimal_forbidden) out << m.graph6 << '\n';
      if (o.emit_all && o.pretty)
        for (const auto& m : r.all_forbidden) out << "# forbidden " << m.graph6 << " value " << m.value << '\n';
      if (o.pretty) {
        out << "# " << r.minimal_forbidden.size() << " minimal forbidden graphs\n";
      } else {
        emit(out, envelope("mine", "", to_json(r, o.emit_all)));
      }
      return 0;
    }
    if (g6->parsed()) {
      if (o.g6_action == "encode") {
        auto inputs = resolve_graphs(o.g6_value, "", in);
        for (const auto& i : inputs) out << to_graph6(i.graph) << '\n';
      } else {
        auto inputs = o.g6_value == "-" ? graphs_from_text(std::string(std::istreambuf_iterator<char>(in), {}))
                                        : std::vector<Input>{{o.g6_value, parse_graph6(o.g6_value)}};
        for (const auto& i : inputs) out << to_edge_list(i.graph);
      }
      return 0;
    }
    if (catalog->parsed()) {
      if (o.catalog_action == "list") {
        for (const auto& n : catalog_names()) out << n << '\n';
      } else if (o.catalog_action == "emit") {
        for (const auto& n : catalog_names()) out << n << ' ' << to_graph6(*lookup_graph(n)) << '\n';
      } else {
        if (o.catalog_name.empty()) throw CLI::ValidationError("catalog show needs a name");
        auto g = lookup_graph(o.catalog_name);
        if (!g) throw UnknownName(o.catalog_name);
        out << to_graph6(*g) << '\n';
      }
      return 0;
    }
    if (cross->parsed()) {
      const auto r = cross_check(o.max_n);
      if (o.pretty) {
        for (std::size_t n = 0; n < r.graphs_per_order.size(); ++n)
          out << "n=" << n + 1 << ": " << r.graphs_per_order[n] << " connected graphs\n";
        for (const auto& [f, c] : r.family_counts) out << f << ": " << c << '\n';
        for (const auto& v : r.violations) out << "VIOLATION " << v.graph6 << ": " << v.detail << '\n';
      } else {
        emit(out, envelope("crosscheck", "", to_json(r)));
      }
      return r.violations.empty() ? 0 : 3;
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: malformed graph6: " << e.what() << '\n';
    return 1;
  } catch (const InternalError& e) {
    err << "consistency violation: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace graphtool

// cpk: command-line front end for the path-eccentricity toolkit.
//
// Exit codes: 0 success, 1 violation / counterexample / invalid witness,
// 2 usage, parse or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "cpk/cpk.hpp"
#include "cpk/report.hpp"

namespace {

using cpk::Json;

// A graph argument is a file (edge list or one graph6 line), a gen: descriptor
// or a literal graph6 code.
cpk::Graph load_graph(const std::string& arg) {
  std::vector<cpk::Graph> gs;
  if (std::filesystem::is_regular_file(arg))
    gs = cpk::parse_graphs(cpk::read_file(arg));
  else if (arg.rfind("gen:", 0) == 0)
    gs = cpk::load_corpus(arg).graphs;
  else
    gs = {cpk::parse_graph6(arg)};
  if (gs.size() != 1) throw cpk::invalid_input("expected exactly one graph in " + arg + ", found " + std::to_string(gs.size()));
  return gs.front();
}

cpk::Path parse_vertex_list(const std::string& text) {
  cpk::Path p;
  for (auto tok : cpk::detail::split(text, ',')) p.vertices.push_back(cpk::detail::to_int(tok, "path"));
  return p;
}

void print(const Json& j) { std::cout << j.dump() << '\n'; }

Json with_schema(Json body) {
  Json j{{"schema", cpk::kSchemaVersion}};
  for (auto& [key, value] : body.items()) j[key] = value;
  return j;
}

std::vector<cpk::Property> parse_props(const std::vector<std::string>& names) {
  std::vector<cpk::Property> out;
  for (const auto& list : names)
    for (auto name : cpk::detail::split(list, ',')) {
      if (name.empty()) continue;
      if (name == "all") {
        for (const auto& p : cpk::kPropertyNames) out.push_back(p.property);
        continue;
      }
      auto p = cpk::property_from_name(name);
      if (!p) throw cpk::invalid_input("unknown property " + std::string(name));
      out.push_back(*p);
    }
  if (out.empty()) throw cpk::invalid_input("no properties selected");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path eccentricity, k-asteroidal triples and consecutive-ones tools"};
  app.require_subcommand(1);

  std::string graph_arg, path_arg, matrix_arg, corpus_arg, verify_arg, family_arg, format = "graph6";
  int k = 1, size = 1;
  double probability = 0.5;
  std::uint64_t seed = 0;
  bool trace = false, connected = false;
  std::vector<std::string> props{"all"};

  auto* pe = app.add_subcommand("pe", "exact path eccentricity (n <= 12)");
  pe->add_option("graph", graph_arg)->required();
  auto* ecc = app.add_subcommand("ecc", "eccentricity of a given path");
  ecc->add_option("graph", graph_arg)->required();
  ecc->add_option("path", path_arg, "comma-separated vertices")->required();
  auto* kat = app.add_subcommand("kat", "find a k-asteroidal triple");
  kat->add_option("graph", graph_arg)->required();
  kat->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  auto* min_kat = app.add_subcommand("min-kat", "smallest k with no k-AT");
  min_kat->add_option("graph", graph_arg)->required();
  auto* c1p = app.add_subcommand("c1p", "consecutive-ones test on a 0/1 matrix file");
  c1p->add_option("matrix", matrix_arg)->required();
  auto* star = app.add_subcommand("star-c1p", "find or verify a *-C1P witness (n <= 20)");
  star->add_option("graph", graph_arg)->required();
  star->add_option("--verify", verify_arg, "witness JSON file to check instead of searching");
  auto* central = app.add_subcommand("central-path", "path of eccentricity <= k or a k-AT");
  central->add_option("graph", graph_arg)->required();
  central->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  central->add_flag("--trace", trace, "JSON lines per improvement step on stderr");
  auto* gen = app.add_subcommand("gen", "generate a named graph");
  gen->add_option("family", family_arg)->required();
  gen->add_option("size", size, "k, cycle length or vertex count");
  gen->add_option("--p", probability, "edge probability (random_gnp)");
  gen->add_option("--seed", seed);
  gen->add_flag("--connected", connected, "random_gnp: join components");
  gen->add_option("--format", format)->check(CLI::IsMember({"graph6", "edges", "json"}));
  auto* suite = app.add_subcommand("suite", "evaluate properties over a corpus");
  suite->add_option("corpus", corpus_arg, "exhaustive:N, gen:FAMILY:SIZE, or a file")->required();
  suite->add_option("--props", props, "comma-separated property names, or all");
  auto* hunt = app.add_subcommand("hunt", "search a corpus for a *-C1P graph with pe >= 2");
  hunt->add_option("corpus", corpus_arg)->required();
  int min_pe = 2;
  hunt->add_option("--min-pe", min_pe, "report the first *-C1P graph with pe at least this")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*pe) {
      auto g = load_graph(graph_arg);
      print(with_schema(cpk::to_json(cpk::pe_exact(g))));
    } else if (*ecc) {
      auto g = load_graph(graph_arg);
      print(with_schema({{"ecc", cpk::path_eccentricity(g, parse_vertex_list(path_arg))}}));
    } else if (*kat) {
      auto g = load_graph(graph_arg);
      print(with_schema({{"k", k}, {"witness", cpk::to_json(cpk::find_k_at(g, k))}}));
    } else if (*min_kat) {
      auto g = load_graph(graph_arg);
      print(with_schema({{"min_k", cpk::min_k_at_free(g)}}));
    } else if (*c1p) {
      auto m = cpk::parse_matrix(cpk::read_file(matrix_arg));
      auto order = cpk::has_c1p(m);
      print(with_schema({{"c1p", order.has_value()}, {"order", order ? Json(*order) : Json(nullptr)}}));
    } else if (*star) {
      auto g = load_graph(graph_arg);
      if (!verify_arg.empty()) {
        auto w = cpk::witness_from_json(Json::parse(cpk::read_file(verify_arg)));
        bool ok = w.rank.size() == static_cast<std::size_t>(g.order()) && cpk::verify_witness(g, w);
        print(with_schema({{"valid", ok}}));
        return ok ? 0 : 1;
      }
      auto w = cpk::find_star_c1p(g);
      print(with_schema({{"witness", w ? cpk::to_json(*w) : Json(nullptr)}}));
    } else if (*central) {
      auto g = load_graph(graph_arg);
      auto d = cpk::find_k_dominating_path_or_witness(g, k);
      if (trace)
        for (const auto& rec : d.trace) std::cerr << cpk::to_json(rec).dump() << '\n';
      Json j = cpk::to_json(d, k);
      if (d.path) j["eccentricity"] = cpk::path_eccentricity(g, *d.path);
      print(j);
    } else if (*gen) {
      auto fam = cpk::family_from_name(family_arg);
      if (!fam) throw cpk::invalid_input("unknown family " + family_arg);
      cpk::FamilySpec spec{*fam, size, probability, seed, connected};
      for (const auto& g : cpk::generate_corpus(spec)) {
        if (format == "graph6")
          std::cout << cpk::emit_graph6(g) << '\n';
        else if (format == "edges")
          std::cout << cpk::to_edge_list(g);
        else
          print(with_schema({{"n", g.order()}, {"edges", g.edges()}}));
      }
    } else if (*suite) {
      auto corpus = cpk::load_corpus(corpus_arg);
      auto reports = cpk::run_property_suite(corpus, parse_props(props));
      Json rs = Json::array();
      bool pass = true;
      for (const auto& r : reports) {
        rs.push_back(cpk::to_json(r));
        pass = pass && r.pass;
      }
      print(with_schema({{"corpus", corpus.name}, {"graphs", corpus.graphs.size()}, {"pass", pass}, {"reports", rs}}));
      return pass ? 0 : 1;
    } else if (*hunt) {
      auto h = cpk::hunt_conjecture(cpk::load_corpus(corpus_arg), min_pe);
      print(cpk::to_json(h));
      return h.counterexample ? 1 : 0;
    }
  } catch (const cpk::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

// comfteam: command-line front end for the comfortable-team library.
//
// Exit codes: 0 = success / claim holds, 1 = mathematically negative outcome
// (no team, claim violated), 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "comfteam/comfort.hpp"
#include "comfteam/domination.hpp"
#include "comfteam/generators.hpp"
#include "comfteam/graph.hpp"
#include "comfteam/products.hpp"
#include "comfteam/verify.hpp"

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

comfteam::Graph load_graph(const std::string& path) {
  return comfteam::parse_graph(read_file(path));
}

// Graph text goes to --out when given, otherwise to stdout (with the summary
// diverted to stderr so pipes stay clean).
void emit_graph(const std::string& text, const std::string& out_path,
                const std::string& summary) {
  if (out_path.empty()) {
    std::cerr << summary;
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file '" + out_path + "'");
    out << text;
    std::cout << summary;
  }
}

std::string ecc_string(int e) {
  return comfteam::is_finite_distance(e) ? std::to_string(e) : "inf";
}

json member_records(const std::vector<comfteam::MemberEccentricity>& members) {
  json out = json::array();
  for (const auto& m : members) {
    json entry = {{"vertex", m.vertex}, {"ecc_graph", m.graph_ecc}};
    if (comfteam::is_finite_distance(m.team_ecc))
      entry["ecc_team"] = m.team_ecc;
    else
      entry["ecc_team"] = nullptr;
    out.push_back(entry);
  }
  return out;
}

void print_members(const std::vector<comfteam::MemberEccentricity>& members) {
  for (const auto& m : members) {
    const bool strict = comfteam::is_finite_distance(m.team_ecc) &&
                        m.team_ecc < m.graph_ecc;
    std::cout << "member " << m.vertex << " team-ecc " << ecc_string(m.team_ecc)
              << (strict ? " < " : " >= ") << "graph-ecc " << m.graph_ecc
              << '\n';
  }
}

const char* yn(bool b) { return b ? "yes" : "no"; }

int run_ecc(const std::string& file, bool records) {
  const auto g = load_graph(file);
  if (!comfteam::is_connected(g))
    throw std::invalid_argument("graph must be connected");
  const auto profile = comfteam::eccentricity_profile(g);
  if (records) {
    json record = {{"n", g.vertex_count()},     {"m", g.edge_count()},
                   {"ecc", profile.ecc},        {"radius", profile.radius},
                   {"diameter", profile.diameter},
                   {"self_centered", profile.self_centered}};
    std::cout << record.dump() << '\n';
  } else {
    std::cout << "n=" << g.vertex_count() << " m=" << g.edge_count() << '\n';
    std::cout << "ecc";
    for (int e : profile.ecc) std::cout << ' ' << e;
    std::cout << '\n';
    std::cout << "radius " << profile.radius << '\n';
    std::cout << "diameter " << profile.diameter << '\n';
    std::cout << "self-centered " << yn(profile.self_centered) << '\n';
  }
  return 0;
}

int run_team_set(const comfteam::Graph& g, const std::string& set_csv,
                 bool records) {
  const auto team = comfteam::VertexSet::parse_csv(set_csv);
  const auto diag = comfteam::diagnose_team(g, team);
  if (records) {
    json record = {{"set", team.members()},
                   {"dominating", diag.dominating},
                   {"connected", diag.connected},
                   {"less_dispersive", diag.less_dispersive},
                   {"comfortable", diag.comfortable},
                   {"members", member_records(diag.per_member)}};
    std::cout << record.dump() << '\n';
  } else {
    std::cout << "set " << team.to_string() << '\n';
    std::cout << "dominating " << yn(diag.dominating) << '\n';
    std::cout << "connected " << yn(diag.connected) << '\n';
    std::cout << "less-dispersive " << yn(diag.less_dispersive) << '\n';
    std::cout << "comfortable " << yn(diag.comfortable) << '\n';
    print_members(diag.per_member);
  }
  return diag.comfortable ? 0 : 1;
}

int run_team_min(const comfteam::Graph& g, const std::string& mode,
                 bool records) {
  if (mode == "comfortable") {
    const auto verdict = comfteam::min_comfortable_team(g);
    if (!verdict.exists) {
      if (records) {
        json record = {{"exists", false},
                       {"searched_through", verdict.searched_through}};
        std::cout << record.dump() << '\n';
      } else {
        std::cout << "no comfortable team (exhausted n="
                  << verdict.searched_through << ")" << '\n';
      }
      return 1;
    }
    const auto diag = comfteam::diagnose_team(g, verdict.team);
    if (records) {
      json record = {{"exists", true},
                     {"gamma_comf", verdict.size},
                     {"team", verdict.team.members()},
                     {"members", member_records(diag.per_member)}};
      std::cout << record.dump() << '\n';
    } else {
      std::cout << "comfortable team exists" << '\n';
      std::cout << "gamma_comf " << verdict.size << '\n';
      std::cout << "team " << verdict.team.to_string() << '\n';
      print_members(diag.per_member);
    }
    return 0;
  }
  const bool connected = mode == "cds" || mode == "connected";
  const auto witness = connected ? comfteam::min_connected_dominating_set(g)
                                 : comfteam::min_dominating_set(g);
  const char* name = connected ? "gamma_c" : "gamma";
  if (records) {
    json record = {{name, witness.size}, {"witness", witness.witness.members()}};
    std::cout << record.dump() << '\n';
  } else {
    std::cout << name << ' ' << witness.size << '\n';
    std::cout << "witness " << witness.witness.to_string() << '\n';
  }
  return 0;
}

int run_product(const std::string& kind, const std::string& file_g,
                const std::string& file_h, const std::string& out_path,
                bool records) {
  const auto g = load_graph(file_g);
  const auto h = load_graph(file_h);
  const auto result = kind == "strong" ? comfteam::strong_product(g, h)
                                       : comfteam::lex_product(g, h);
  std::ostringstream header;
  header << "product " << kind << " n=" << result.indexing.left_count
         << " m=" << result.indexing.right_count;
  const std::string text = comfteam::serialize_graph(result.graph, header.str());
  std::ostringstream summary;
  if (records) {
    json record = {{"kind", kind},
                   {"n", result.indexing.left_count},
                   {"m", result.indexing.right_count},
                   {"vertices", result.graph.vertex_count()},
                   {"edges", result.graph.edge_count()}};
    summary << record.dump() << '\n';
  } else {
    summary << "product " << kind << " n=" << result.indexing.left_count
            << " m=" << result.indexing.right_count << '\n';
    summary << "vertices " << result.graph.vertex_count() << '\n';
    summary << "edges " << result.graph.edge_count() << '\n';
  }
  emit_graph(text, out_path, summary.str());
  return 0;
}

int run_verify(const std::string& check_name, const comfteam::CorpusSpec& spec,
               bool records) {
  const auto check = comfteam::parse_check_id(check_name);
  if (!check)
    throw std::invalid_argument("unknown check id '" + check_name +
                                "' (expected T1..T5 or P1..P4)");
  const auto report = comfteam::run_check(*check, spec);
  std::cout << (records ? comfteam::render_report_records(report)
                        : comfteam::render_report_text(report));
  return report.passed ? 0 : 1;
}

int run_failures(const comfteam::CorpusSpec& spec, bool records) {
  const auto report = comfteam::find_failure_modes(spec);
  std::cout << (records ? comfteam::render_failures_records(report)
                        : comfteam::render_failures_text(report));
  return 0;
}

int run_gen(const std::string& family, int n, double p, std::uint64_t seed,
            const std::string& out_path, bool records) {
  comfteam::Graph g = [&] {
    if (family == "random") return comfteam::random_connected(n, p, seed);
    if (family == "path") return comfteam::gen_path(n);
    if (family == "cycle") return comfteam::gen_cycle(n);
    if (family == "complete") return comfteam::gen_complete(n);
    return comfteam::gen_star(n);
  }();
  std::ostringstream summary;
  if (records) {
    json record = {{"family", family},
                   {"n", n},
                   {"vertices", g.vertex_count()},
                   {"edges", g.edge_count()}};
    if (family == "random") {
      record["p"] = p;
      record["seed"] = seed;
    }
    summary << record.dump() << '\n';
  } else {
    summary << family << " n=" << n << ": vertices " << g.vertex_count()
            << " edges " << g.edge_count() << '\n';
  }
  emit_graph(comfteam::serialize_graph(g), out_path, summary.str());
  return 0;
}

comfteam::CorpusSpec corpus_from_flags(bool has_exhaustive, int exhaustive_n,
                                       bool has_random, long random_count,
                                       int n_min, int n_max, double p,
                                       std::uint64_t seed) {
  if (has_exhaustive == has_random)
    throw std::invalid_argument(
        "choose exactly one corpus: --exhaustive N or --random COUNT");
  if (has_exhaustive) return comfteam::CorpusSpec::exhaustive(exhaustive_n);
  return comfteam::CorpusSpec::random(random_count, n_min, n_max, p, seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"comfteam: comfortable teams, domination and graph products"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "records"}));

  auto* ecc_cmd = app.add_subcommand("ecc", "eccentricity profile of a graph");
  std::string ecc_file;
  ecc_cmd->add_option("file", ecc_file, "graph file")->required();

  auto* team_cmd = app.add_subcommand("team", "diagnose or search for teams");
  std::string team_file, team_set, team_min;
  team_cmd->add_option("file", team_file, "graph file")->required();
  auto* set_opt =
      team_cmd->add_option("--set", team_set, "diagnose this vertex set, e.g. 1,2,3");
  auto* min_opt =
      team_cmd->add_option("--min", team_min,
                           "find a minimum team: comfortable | cds | dominating")
          ->check(CLI::IsMember({"comfortable", "cds", "connected", "dominating"}));
  set_opt->excludes(min_opt);

  auto* product_cmd = app.add_subcommand("product", "build a graph product");
  std::string product_kind, product_g, product_h, product_out;
  product_cmd->add_option("kind", product_kind, "strong | lex")
      ->required()
      ->check(CLI::IsMember({"strong", "lex"}));
  product_cmd->add_option("fileG", product_g, "left factor")->required();
  product_cmd->add_option("fileH", product_h, "right factor")->required();
  product_cmd->add_option("--out", product_out, "output file (default stdout)");

  auto* verify_cmd =
      app.add_subcommand("verify", "run a product-law check over a corpus");
  std::string verify_check;
  int verify_exhaustive = 0;
  long verify_random = 0;
  int verify_nmin = 4, verify_nmax = 6;
  double verify_p = 0.5;
  std::uint64_t verify_seed = 42;
  verify_cmd->add_option("check", verify_check, "T1..T5 or P1..P4")->required();
  auto* verify_exh_opt = verify_cmd->add_option(
      "--exhaustive", verify_exhaustive, "all connected labeled graphs up to n");
  auto* verify_rand_opt =
      verify_cmd->add_option("--random", verify_random, "number of random pairs");
  verify_cmd->add_option("--nmin", verify_nmin, "random: minimum order");
  verify_cmd->add_option("--nmax", verify_nmax, "random: maximum order");
  verify_cmd->add_option("--p", verify_p, "random: edge probability");
  verify_cmd->add_option("--seed", verify_seed, "random: seed");

  auto* failures_cmd = app.add_subcommand(
      "failures", "survey graphs without a comfortable team");
  int failures_exhaustive = 0;
  long failures_random = 0;
  int failures_nmin = 4, failures_nmax = 6;
  double failures_p = 0.5;
  std::uint64_t failures_seed = 42;
  auto* failures_exh_opt = failures_cmd->add_option(
      "--exhaustive", failures_exhaustive, "all connected labeled graphs up to n");
  auto* failures_rand_opt = failures_cmd->add_option(
      "--random", failures_random, "number of random graphs");
  failures_cmd->add_option("--nmin", failures_nmin, "random: minimum order");
  failures_cmd->add_option("--nmax", failures_nmax, "random: maximum order");
  failures_cmd->add_option("--p", failures_p, "random: edge probability");
  failures_cmd->add_option("--seed", failures_seed, "random: seed");

  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd->require_subcommand(1);
  std::string gen_out;
  gen_cmd->add_option("--out", gen_out, "output file (default stdout)");
  int gen_n = 0;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 42;
  for (const char* family : {"path", "cycle", "complete", "star"}) {
    auto* sub = gen_cmd->add_subcommand(family);
    sub->add_option("--n", gen_n, "order")->required();
  }
  auto* gen_random_cmd = gen_cmd->add_subcommand("random");
  gen_random_cmd->add_option("--n", gen_n, "order")->required();
  gen_random_cmd->add_option("--p", gen_p, "edge probability");
  gen_random_cmd->add_option("--seed", gen_seed, "seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const bool records = format == "records";
  try {
    if (app.got_subcommand(ecc_cmd)) return run_ecc(ecc_file, records);
    if (app.got_subcommand(team_cmd)) {
      const auto g = load_graph(team_file);
      if (static_cast<bool>(*set_opt) == static_cast<bool>(*min_opt))
        throw std::invalid_argument("choose exactly one of --set and --min");
      if (*set_opt) return run_team_set(g, team_set, records);
      return run_team_min(g, team_min, records);
    }
    if (app.got_subcommand(product_cmd))
      return run_product(product_kind, product_g, product_h, product_out,
                         records);
    if (app.got_subcommand(verify_cmd)) {
      const auto spec = corpus_from_flags(
          static_cast<bool>(*verify_exh_opt), verify_exhaustive,
          static_cast<bool>(*verify_rand_opt), verify_random, verify_nmin,
          verify_nmax, verify_p, verify_seed);
      return run_verify(verify_check, spec, records);
    }
    if (app.got_subcommand(failures_cmd)) {
      const auto spec = corpus_from_flags(
          static_cast<bool>(*failures_exh_opt), failures_exhaustive,
          static_cast<bool>(*failures_rand_opt), failures_random,
          failures_nmin, failures_nmax, failures_p, failures_seed);
      return run_failures(spec, records);
    }
    if (app.got_subcommand(gen_cmd)) {
      std::string family;
      for (const char* name : {"path", "cycle", "complete", "star", "random"})
        if (gen_cmd->got_subcommand(name)) family = name;
      return run_gen(family, gen_n, gen_p, gen_seed, gen_out, records);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

// Command-line front end. Subcommands: mutate, graph, variables, autos,
// check-hom, audit. Exit status: 0 success, 1 domain or usage errors,
// 2 audit violations.
#pragma once

#include "clusterkit/audit.hpp"
#include "clusterkit/automorphism.hpp"
#include "clusterkit/exchange_graph.hpp"
#include "clusterkit/io.hpp"
#include "clusterkit/seed.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace clusterkit {

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

/// Comma-separated 1-based indices ("1,2,1") -> 0-based vector.
inline std::vector<int> parse_index_list(const std::string& text, int rank,
                                         const std::string& flag) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    int value = 0;
    try {
      std::size_t used = 0;
      value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": malformed index \"" + item + "\"");
    }
    if (value < 1 || value > rank)
      throw std::invalid_argument(flag + ": index " + std::to_string(value) +
                                  " out of range [1," + std::to_string(rank) + "]");
    out.push_back(value - 1);
  }
  return out;
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact-arithmetic toolkit for skew-symmetrizable cluster algebras"};
  app.require_subcommand(1);

  std::string input_path;
  std::string mutations;
  std::string perm;
  std::string target_path;
  std::string subject;
  std::size_t max_nodes = 10000;
  std::size_t max_depth = 64;
  unsigned jobs = 1;
  bool want_dot = false;
  bool want_json = false;
  bool no_sign_prune = false;

  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path, "matrix JSON document")->required();
  };
  const auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-nodes", max_nodes, "node budget for enumeration");
    cmd->add_option("--max-depth", max_depth, "depth budget for enumeration");
    cmd->add_option("--jobs", jobs, "worker threads (1 = deterministic reference mode)");
  };

  CLI::App* mutate_cmd = app.add_subcommand("mutate", "apply a mutation sequence to the matrix");
  add_input(mutate_cmd);
  mutate_cmd->add_option("-k,--mutations", mutations, "comma list of 1-based directions, applied left to right")
      ->required();

  CLI::App* graph_cmd = app.add_subcommand("graph", "enumerate the exchange graph");
  add_input(graph_cmd);
  add_limits(graph_cmd);
  graph_cmd->add_flag("--dot", want_dot, "emit DOT instead of JSON");
  graph_cmd->add_flag("--json", want_json, "emit JSON (default)");

  CLI::App* variables_cmd = app.add_subcommand("variables", "list all cluster variables");
  add_input(variables_cmd);
  add_limits(variables_cmd);

  CLI::App* autos_cmd = app.add_subcommand("autos", "search the cluster automorphism group");
  add_input(autos_cmd);
  add_limits(autos_cmd);
  autos_cmd->add_flag("--no-sign-prune", no_sign_prune,
                      "accept candidates by one-step verification alone");

  CLI::App* check_cmd = app.add_subcommand("check-hom", "check one candidate homomorphism");
  add_input(check_cmd);
  check_cmd->add_option("--target", target_path,
                        "mutation path (comma list) from the initial seed to the target seed");
  check_cmd->add_option("--perm", perm, "bijection as a comma list of 1-based target positions");

  CLI::App* audit_cmd = app.add_subcommand("audit", "run a brute-force auditor");
  add_input(audit_cmd);
  add_limits(audit_cmd);
  audit_cmd->add_option("--subject", subject, "scalar | positivity | theorem")->required();

  try {
    std::reverse(args.begin(), args.end());  // CLI11's vector overload wants it reversed
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    const ExchangeMatrix matrix = load_matrix_document(detail::read_file(input_path));
    const int n = matrix.rank();
    const ExploreOptions options{max_nodes, max_depth, jobs};

    const auto explore_with_warning = [&](bool required_complete) {
      ExchangeGraph g = explore(Seed::initial(matrix), options);
      if (!g.complete && !required_complete)
        err << "warning: enumeration bound exceeded; result is partial\n";
      return g;
    };

    if (app.got_subcommand(mutate_cmd)) {
      ExchangeMatrix current = matrix;
      const auto sequence = detail::parse_index_list(mutations, n, "--mutations");
      for (int k : sequence) current = mutate_matrix(current, k);
      out << matrix_document(current);
      return 0;
    }

    if (app.got_subcommand(graph_cmd)) {
      if (want_dot && want_json)
        throw std::invalid_argument("--dot and --json are mutually exclusive");
      const ExchangeGraph g = explore_with_warning(false);
      if (want_dot) out << graph_to_dot(g);
      else out << graph_to_json(g).dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(variables_cmd)) {
      const ExchangeGraph g = explore_with_warning(true);
      const auto vars = cluster_variables(g);  // rejects partial graphs
      Json doc;
      doc["rank"] = n;
      doc["count"] = vars.size();
      Json list = Json::array();
      for (const auto& v : vars) list.push_back(v.str());
      doc["variables"] = std::move(list);
      out << doc.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(autos_cmd)) {
      const ExchangeGraph g = explore_with_warning(true);
      const AutomorphismGroup group =
          automorphism_group(g, AutoSearchOptions{!no_sign_prune, jobs});
      Json doc = group_to_json(group);
      doc["rank"] = n;
      out << doc.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(check_cmd)) {
      const Seed initial = Seed::initial(matrix);
      const auto path = detail::parse_index_list(target_path, n, "--target");
      const Seed target = replay_path(initial, path);
      std::vector<int> sigma = detail::parse_index_list(perm, n, "--perm");
      if (sigma.empty()) {
        sigma.resize(n);
        std::iota(sigma.begin(), sigma.end(), 0);
      }
      ClusterHom hom = induce_hom(initial, target, sigma);
      verify_one_step(hom, initial);
      Json doc = hom_to_json(hom);
      Json path_json = Json::array();
      for (int k : path) path_json.push_back(k + 1);
      doc["target_path"] = std::move(path_json);
      out << doc.dump(2) << "\n";
      return 0;
    }

    if (app.got_subcommand(audit_cmd)) {
      AuditReport report;
      if (subject == "scalar") {
        report = scalar_rigidity_audit(matrix, options);
      } else if (subject == "positivity") {
        report = positivity_audit(explore_with_warning(false));
      } else if (subject == "theorem") {
        report = theorem_audit(explore_with_warning(true), jobs);
      } else {
        throw std::invalid_argument("--subject must be one of scalar, positivity, theorem");
      }
      if (report.partial) err << "warning: enumeration bound exceeded; report is partial\n";
      out << audit_to_json(report).dump(2) << "\n";
      err << "audit finished in " << std::chrono::duration_cast<std::chrono::milliseconds>(
                                         report.elapsed)
                                         .count()
          << " ms\n";
      return report.clean() ? 0 : 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace clusterkit

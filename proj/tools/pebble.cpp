// Command-line front door: graph generation, reachability solving, pebbling
// numbers, Class-0 decisions, small-graph classification, proof audits, and
// G(n,p) threshold sweeps.
//
// Exit codes: 0 success / affirmative answer, 1 negative answer
// (unreachable, Class 1), 2 usage error, 3 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pebbling/generators.hpp"
#include "pebbling/graph.hpp"
#include "pebbling/number.hpp"
#include "pebbling/proof.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/threshold.hpp"

using namespace pebbling;

namespace {

constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

std::vector<double> parse_grid(const std::string& text) {
  // "start:stop:step"
  double a, b, s;
  char c1, c2;
  std::istringstream in(text);
  if (!(in >> a >> c1 >> b >> c2 >> s) || c1 != ':' || c2 != ':' || s <= 0)
    throw CLI::ValidationError("--p-grid", "expected start:stop:step");
  std::vector<double> grid;
  for (double p = a; p <= b + 1e-9; p += s) grid.push_back(p);
  return grid;
}

int run(int argc, char** argv) {
  CLI::App app{"exact graph pebbling toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "emit a graph in edge-list format");
  std::string family, gen_out;
  int gen_n = 0;
  std::vector<int> blowup_sizes;
  double gen_p = 0.5;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", family,
                  "complete|path|cycle|g1|g2|blowup|gnp")->required();
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--sizes", blowup_sizes, "blow-up class sizes");
  gen->add_option("--p", gen_p, "edge probability for gnp");
  gen->add_option("--seed", gen_seed, "seed for gnp");
  gen->add_option("--out", gen_out, "output path (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "decide pebbling reachability");
  std::string solve_graph, solve_dist, solve_out;
  int solve_target = 0;
  solve->add_option("--graph", solve_graph)->required();
  solve->add_option("--dist", solve_dist)->required();
  solve->add_option("--target", solve_target)->required();
  solve->add_option("--out", solve_out, "certificate JSON path");

  // number
  auto* number = app.add_subcommand("number", "compute the pebbling number");
  std::string number_graph, number_out;
  number->add_option("--graph", number_graph)->required();
  number->add_option("--out", number_out, "JSON report path");

  // class0
  auto* class0 = app.add_subcommand("class0", "decide Class 0 membership");
  std::string class0_graph, class0_out;
  class0->add_option("--graph", class0_graph)->required();
  class0->add_option("--out", class0_out, "JSON report path");

  // classify-small
  auto* classify = app.add_subcommand(
      "classify-small", "2-connected diameter-2 Class-1 graphs up to n-max");
  int nmax = 6;
  std::string classify_out;
  classify->add_option("--n-max", nmax)->required();
  classify->add_option("--out", classify_out, "JSON report path");

  // audit
  auto* audit = app.add_subcommand(
      "audit", "run the counterexample proof audit on (graph, dist, z0)");
  std::string audit_graph, audit_dist, audit_out;
  int audit_z0 = 0;
  audit->add_option("--graph", audit_graph)->required();
  audit->add_option("--dist", audit_dist)->required();
  audit->add_option("--target", audit_z0)->required();
  audit->add_option("--out", audit_out, "JSON report path");

  // sweep
  auto* sw = app.add_subcommand("sweep", "Monte Carlo property sweep on G(n,p)");
  ExperimentConfig cfg;
  std::string grid_text = "0.1:0.9:0.1", props_text = "connected",
              sweep_out, sweep_format = "csv";
  cfg.threads = static_cast<int>(std::thread::hardware_concurrency());
  if (cfg.threads < 1) cfg.threads = 1;
  sw->add_option("--n", cfg.n)->required();
  sw->add_option("--p-grid", grid_text, "start:stop:step");
  sw->add_option("--trials", cfg.trials)->required();
  sw->add_option("--seed", cfg.seed, "master seed (mandatory)")->required();
  sw->add_option("--properties", props_text,
                 "comma list: connected,diam_le(d),kappa_ge(k),class0");
  sw->add_option("--out", sweep_out);
  sw->add_option("--format", sweep_format, "csv|json");
  sw->add_option("--threads", cfg.threads);

  // scaling
  auto* scaling = app.add_subcommand("scaling", "analytic reference curves");
  int scal_d = 1;
  std::vector<int> scal_n;
  std::string scaling_out;
  scaling->add_option("--d", scal_d)->required();
  scaling->add_option("--n-list", scal_n)->required();
  scaling->add_option("--out", scaling_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*gen) {
      Graph g(0);
      if (family == "complete")
        g = named_graph(NamedKind::Complete, gen_n);
      else if (family == "path")
        g = named_graph(NamedKind::Path, gen_n);
      else if (family == "cycle")
        g = named_graph(NamedKind::Cycle, gen_n);
      else if (family == "g1")
        g = chh_graph(ChhKind::G1);
      else if (family == "g2")
        g = chh_graph(ChhKind::G2);
      else if (family == "blowup")
        g = path_blowup({blowup_sizes});
      else if (family == "gnp")
        g = gnp_sample(gen_n, gen_p, gen_seed);
      else {
        std::cerr << "unknown family: " << family << "\n";
        return kExitUsage;
      }
      std::ostringstream body;
      write_graph(body, g);
      if (gen_out.empty())
        std::cout << body.str();
      else
        write_file(gen_out, body.str());
      return 0;
    }

    if (*solve) {
      Graph g = read_graph_file(solve_graph);
      Distribution d = read_distribution_file(solve_dist, g.order());
      if (solve_target < 0 || solve_target >= g.order())
        throw std::runtime_error("target out of range");
      auto r = can_pebble(g, d, solve_target);
      if (r.reachable) {
        std::string cert = certificate_to_json(r.certificate);
        std::cout << "reachable in " << r.certificate.moves.size()
                  << " moves\n";
        if (!solve_out.empty())
          write_file(solve_out, cert + "\n");
        else
          std::cout << cert << "\n";
        return 0;
      }
      std::cout << "unreachable\n";
      return kExitNegative;
    }

    if (*number) {
      Graph g = read_graph_file(number_graph);
      auto rep = pebbling_number_report(g);
      std::cout << rep.f << "\n";
      if (!number_out.empty())
        write_file(number_out, number_report_to_json(g, rep) + "\n");
      return 0;
    }

    if (*class0) {
      Graph g = read_graph_file(class0_graph);
      auto r = is_class0(g);
      if (!class0_out.empty())
        write_file(class0_out, class_result_to_json(g, r) + "\n");
      if (r.class0) {
        std::cout << "class 0\n";
        return 0;
      }
      std::cout << "class 1";
      if (r.witness) {
        std::cout << " (witness target " << r.witness->target
                  << ", distribution";
        for (int c : r.witness->distribution) std::cout << ' ' << c;
        std::cout << ")";
      }
      std::cout << "\n";
      return kExitNegative;
    }

    if (*classify) {
      auto classes = classify_small(nmax, [](int n, long long done,
                                             long long total) {
        std::cerr << "n=" << n << ": " << done << "/" << total << "\r";
      });
      std::cerr << "\n";
      std::cout << classes.size()
                << " isomorphism classes of 2-connected diameter-2 Class-1 "
                   "graphs on <= "
                << nmax << " vertices\n";
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& c : classes) {
        std::ostringstream es;
        write_graph(es, c.representative);
        std::cout << "class with " << c.labeled_count
                  << " labeled members, representative:\n"
                  << es.str();
        nlohmann::json edges = nlohmann::json::array();
        for (auto [u, v] : c.representative.edges()) edges.push_back({u, v});
        arr.push_back({{"n", c.representative.order()},
                       {"edges", edges},
                       {"labeled_count", c.labeled_count},
                       {"witness_target", c.witness.target},
                       {"witness_distribution", c.witness.distribution}});
      }
      if (!classify_out.empty()) write_file(classify_out, arr.dump(2) + "\n");
      return 0;
    }

    if (*audit) {
      Graph g = read_graph_file(audit_graph);
      Distribution d = read_distribution_file(audit_dist, g.order());
      auto rep = audit_counterexample(g, d, audit_z0);
      std::cout << rep.premise_note << "\n";
      for (const auto& c : rep.claims)
        std::cout << c.claim << ": " << verdict_name(c.verdict) << "\n";
      std::string j = audit_to_json(rep) + "\n";
      if (!audit_out.empty())
        write_file(audit_out, j);
      else
        std::cout << j;
      return rep.premise_ok ? 0 : kExitNegative;
    }

    if (*sw) {
      cfg.p_grid = parse_grid(grid_text);
      std::istringstream ps(props_text);
      std::string tok;
      while (std::getline(ps, tok, ','))
        cfg.properties.push_back(PropertySpec::parse(tok));
      auto rows = sweep(cfg);
      std::ostringstream body;
      if (sweep_format == "csv")
        write_sweep_csv(body, rows);
      else if (sweep_format == "json")
        body << sweep_to_json(rows) << "\n";
      else {
        std::cerr << "unknown format: " << sweep_format << "\n";
        return kExitUsage;
      }
      if (sweep_out.empty())
        std::cout << body.str();
      else
        write_file(sweep_out, body.str());
      return 0;
    }

    if (*scaling) {
      auto rows = scaling_reference(scal_d, scal_n);
      std::ostringstream body;
      write_scaling_csv(body, scal_d, rows);
      if (scaling_out.empty())
        std::cout << body.str();
      else
        write_file(scaling_out, body.str());
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }

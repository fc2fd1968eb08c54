#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "bettimap/version.hpp"

using namespace bettimap;
using cli::json;

namespace {

struct Flags {
  std::string config;
  std::vector<std::string> sections;
  std::string target, disc, out, lambda;
  int threads = 0, grid = 0, samples = 0, iterations = 0, max_degree = 0;
  long prec = 0, tmax = 0, nmax = 0;
  double delta1 = 0, delta2 = 0, q = 0;
  bool oracle = false;
};

void add_options(CLI::App* sub, Flags& f) {
  sub->add_option("--config", f.config, "JSON configuration file");
  sub->add_option("--section,-s", f.sections, "section x(l), optionally EXPR:SIGN; repeatable");
  sub->add_option("--target", f.target, "divseq: section Q (O for the zero section)");
  sub->add_option("--threads", f.threads, "worker threads");
  sub->add_option("--prec", f.prec, "certified precision in bits");
  sub->add_option("--disc", f.disc, "disc RE,IM,RADIUS");
  sub->add_option("--tmax", f.tmax, "largest |a| scanned");
  sub->add_option("--nmax", f.nmax, "largest n for divseq");
  sub->add_option("--out", f.out, "output directory");
  sub->add_option("--grid", f.grid, "seed points per side");
  sub->add_option("--samples", f.samples, "sample points per side for periods/ellog/betti");
  sub->add_option("--lambda", f.lambda, "heights: rational parameter");
  sub->add_option("--iterations", f.iterations, "heights: doublings");
  sub->add_option("--delta1", f.delta1, "audit constant delta1");
  sub->add_option("--delta2", f.delta2, "audit constant delta2");
  sub->add_option("--q", f.q, "audit: Neron-Tate bound q when it cannot be computed");
  sub->add_option("--max-degree", f.max_degree, "audit: largest degree tried for lambda");
  sub->add_flag("--oracle", f.oracle, "scan: attach symbolic oracle roots (one section)");
}

json overrides(CLI::App* sub, const Flags& f) {
  json o = json::object();
  auto given = [&](const char* name) { return sub->count(name) > 0; };
  if (given("--section")) {
    o["sections"] = json::array();
    for (std::size_t i = 0; i < f.sections.size(); ++i)
      o["sections"].push_back(cli::parse_section_arg(f.sections[i], "--section[" + std::to_string(i) + "]").to_json());
  }
  if (given("--target")) o["target"] = cli::parse_section_arg(f.target, "--target").to_json();
  if (given("--disc")) {
    auto d = cli::parse_disc(f.disc, "--disc");
    o["disc"] = json{{"re", d.re}, {"im", d.im}, {"radius", d.radius}};
  }
  if (given("--threads")) o["threads"] = f.threads;
  if (given("--prec")) o["prec"] = f.prec;
  if (given("--tmax")) o["tmax"] = f.tmax;
  if (given("--nmax")) o["nmax"] = f.nmax;
  if (given("--out")) o["out"] = f.out;
  if (given("--grid")) o["grid"] = f.grid;
  if (given("--samples")) o["samples"] = f.samples;
  if (given("--lambda")) o["lambda"] = f.lambda;
  if (given("--iterations")) o["height_iterations"] = f.iterations;
  if (given("--delta1")) o["delta1"] = f.delta1;
  if (given("--delta2")) o["delta2"] = f.delta2;
  if (given("--q")) o["q"] = f.q;
  if (given("--max-degree")) o["max_degree"] = f.max_degree;
  if (given("--oracle")) o["oracle"] = f.oracle;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bettimap: Betti maps and tangential torsion on the Legendre family"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  Flags flags;
  std::vector<CLI::App*> subs;
  for (const auto& name : cli::commands()) {
    auto* sub = app.add_subcommand(name, "run " + name);
    add_options(sub, flags);
    subs.push_back(sub);
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigError;
  }
  CLI::App* sub = nullptr;
  for (auto* s : subs)
    if (s->parsed()) sub = s;

  cli::RunConfig cfg;
  try {
    json file = json::object();
    if (!flags.config.empty()) {
      std::ifstream in(flags.config);
      if (!in) throw cli::ConfigError("--config", "cannot open " + flags.config);
      try {
        file = json::parse(in);
      } catch (const json::parse_error& e) {
        throw cli::ConfigError("--config", std::string("invalid JSON: ") + e.what());
      }
    }
    cfg = cli::make_config(sub->get_name(), file, overrides(sub, flags));
  } catch (const cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return cli::kConfigError;
  }

  auto outcome = cli::run(cfg);
  std::cout << outcome.summary.dump(2) << '\n';
  if (outcome.exit_code != cli::kSuccess) {
    if (outcome.summary.contains("error"))
      std::cerr << "error: " << outcome.summary["error"].get<std::string>() << '\n';
    else
      std::cerr << "partial failure; see " << cfg.out << "/summary.json\n";
  }
  return outcome.exit_code;
}

#include "mqm/error.hpp"
#include "mqm/parallel.hpp"
#include "mqm/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

int main(int argc, char** argv) {
  CLI::App app{"Median quasimorphism scans and verifications"};
  app.require_subcommand(1);

  mqm::RunConfig cfg;
  std::size_t window = 0;
  int workers = 1;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--model", cfg.model_path, "Model JSON file")->required();
    sub->add_option("--segment", cfg.segment, "Segment word, e.g. \"a,b\"");
    sub->add_option("--radius", cfg.radius, "Ball radius (or series length)");
    sub->add_option("--window", window, "Head/tail enumeration window");
    sub->add_option("--out", cfg.out, "Report path (default: stdout)");
    sub->add_option("--workers", workers, "Worker threads (0 = all cores)");
    sub->add_option("--budget", cfg.budget, "Maximum enumerated tuples");
  };

  auto* brooks = app.add_subcommand("brooks", "Brooks quasimorphisms on a free group");
  common(brooks);
  brooks->add_option("--element", cfg.elements, "Element to evaluate (repeatable)");

  auto* defect = app.add_subcommand("defect", "Coboundary scan of f_s");
  common(defect);

  auto* cup = app.add_subcommand("cup", "Cup product vanishing report");
  common(cup);
  cup->add_option("--segment2", cfg.segment2, "Second segment word")->required();
  cup->add_flag("--run-anyway", cfg.run_anyway, "Scan even if the label hypothesis fails");

  auto* witness = app.add_subcommand("witness", "Witness constructions");
  common(witness);
  witness->add_option("--mode", cfg.mode, "separating | nested | distance")->required();
  witness->add_option("--segment2", cfg.segment2, "Second word (distance mode)");
  witness->add_option("--subset", cfg.subset, "Independent set F, e.g. \"a,c\"");
  witness->add_option("--gamma", cfg.gamma, "Group element (nested mode)");
  witness->add_option("--n-max", cfg.n_max, "Largest power checked");

  auto* stair = app.add_subcommand("staircase", "Staircase length search");
  common(stair);
  stair->add_option("--bound", cfg.bound, "Stop once this length is found");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (app.get_subcommands().front()->count("--window") > 0)
      cfg.window = window;
    cfg.workers = mqm::resolve_workers(workers);
    cfg.model_doc = mqm::read_model_file(cfg.model_path);
    const mqm::Report rep = mqm::run_command(cfg);
    const std::string text = mqm::to_json(rep).dump(2) + "\n";
    if (cfg.out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(cfg.out);
      if (!out)
        throw mqm::Error("cannot write " + cfg.out);
      out << text;
    }
    if (!rep.complete) {
      std::cerr << "incomplete: " << rep.error << "\n";
      return 1;
    }
    return rep.verdicts_ok() ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

// Command-line experiment runner: conditioning tables, spectrum dumps for
// plotting, bound-check sweeps, and coefficient dumps.
//
// Exit codes: 0 success, 1 bound or reference-diff failure, 2 invalid config.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dotoep/experiments.hpp"
#include "dotoep/serialize.hpp"

namespace {

int run(int argc, char** argv) {
  using dotoep::ExperimentConfig;

  CLI::App app{"distributed-order Toeplitz spectra experiments"};
  app.require_subcommand(1);

  std::string config_path;
  app.add_option("--config", config_path, "key = value config file; flags override it");

  ExperimentConfig cfg;
  // pre-load the config file so explicit flags win
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      cfg = dotoep::load_config_file(argv[i + 1], cfg);
    }
  }

  std::string engine = dotoep::engine_name(cfg.engine);
  std::string format = cfg.format == ExperimentConfig::Format::kCsv ? "csv" : "json";
  int figure_n = cfg.figure_n;
  double alpha = -1.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n-list", cfg.n_list, "orders to run")->delimiter(',');
    cmd->add_option("--engine", engine, "quadrature | fft")->check(CLI::IsMember({"quadrature", "fft", "fft-sampling"}));
    cmd->add_option("--tol", cfg.tol, "coefficient accuracy target");
    cmd->add_option("--oversample", cfg.oversample, "fft engine oversampling factor");
    cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
    cmd->add_option("--out", cfg.output_dir, "output directory");
    cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--full-sweep", cfg.full_sweep, "include the slow tail n in {512,1024,2048}");
    cmd->add_option("--n", figure_n, "single order (figure1, coeffs)");
  };

  CLI::App* t1 = app.add_subcommand("table1", "conditioning of the aggregate-symbol matrix");
  CLI::App* t2 = app.add_subcommand("table2", "conditioning of the preconditioned pencil");
  CLI::App* fg = app.add_subcommand("figure1", "full spectra for plotting");
  CLI::App* ck = app.add_subcommand("checks", "bound-check sweeps");
  CLI::App* co = app.add_subcommand("coeffs", "dump Fourier coefficients");
  for (CLI::App* cmd : {t1, t2, fg, ck, co}) add_common(cmd);
  co->add_option("--alpha", alpha, "power symbol exponent deficit; aggregate when omitted");

  app.parse(argc, argv);

  cfg.engine = dotoep::engine_from_name(engine);
  cfg.format = format == "json" ? ExperimentConfig::Format::kJson : ExperimentConfig::Format::kCsv;
  cfg.figure_n = figure_n;
  cfg.validate();

  if (t1->parsed()) {
    dotoep::TableResult res = dotoep::run_table1(cfg, std::cout);
    std::cout << "wrote " << res.output_path << "\n";
    return res.all_within_reference ? 0 : 1;
  }
  if (t2->parsed()) {
    dotoep::TableResult res = dotoep::run_table2(cfg, std::cout);
    std::cout << "wrote " << res.output_path << "\n";
    return res.all_within_reference ? 0 : 1;
  }
  if (fg->parsed()) {
    dotoep::FigureResult res = dotoep::run_figure1(cfg, std::cout);
    std::cout << "wrote " << res.plain_path << ", " << res.precond_path << ", "
              << res.script_path << "\n";
    return 0;
  }
  if (ck->parsed()) {
    dotoep::ChecksResult res = dotoep::run_checks(cfg, std::cout);
    return res.hard_failures == 0 ? 0 : 1;
  }
  if (co->parsed()) {
    dotoep::CoeffVector cv = dotoep::run_coeffs(cfg, figure_n, alpha);
    std::filesystem::create_directories(cfg.output_dir);
    const bool json = cfg.format == ExperimentConfig::Format::kJson;
    const std::filesystem::path path =
        std::filesystem::path(cfg.output_dir) / (json ? "coeffs.json" : "coeffs.csv");
    std::ofstream out(path);
    if (json) {
      out << dotoep::to_json(cv).dump(2) << "\n";
    } else {
      out << dotoep::to_csv(cv);
    }
    std::cout << "wrote " << path.string() << "\n";
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const dotoep::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include <cstddef>
#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"

#include "commands.hpp"

int main(int argc, char** argv) {
  using ellspec::cli::RunConfig;
  RunConfig cfg;

  CLI::App app{"elliptical decomposition of N-dimensional vector signals"};
  app.require_subcommand(1);

  CLI::App* sim = app.add_subcommand(
      "simulate",
      "draw random same-frequency sinusoids; write trajectory.csv, "
      "ellipse.svg, params.json");
  sim->add_option("--dims", cfg.dims, "signal dimension N (>= 2)")
      ->check(CLI::Range(std::size_t{2}, std::size_t{4096}))
      ->capture_default_str();
  sim->add_option("--count", cfg.count, "number of sinusoids K (>= 1)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim->add_option("--seed", cfg.seed, "RNG seed; fixes every output byte")
      ->capture_default_str();
  sim->add_option("--samples", cfg.samples, "rows per cycle in trajectory.csv")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sim->add_option("--out", cfg.out, "output directory")
      ->capture_default_str();
  sim->add_option("--tol", cfg.tol, "polarization classification tolerance")
      ->capture_default_str();

  CLI::App* ana = app.add_subcommand(
      "analyze", "read a sampled signal (CSV) and write spectrum.json");
  ana->add_option("input", cfg.input, "CSV file, M rows by N columns")
      ->required();
  ana->add_option("--out", cfg.out, "output directory")
      ->capture_default_str();
  ana->add_flag("--plot", cfg.plot, "also write bin_<u>.svg for dominant bins");
  ana->add_flag("--time-column", cfg.time_column,
                "treat the first column as uniformly spaced time");
  ana->add_option("--tol", cfg.tol, "polarization classification tolerance")
      ->capture_default_str();

  CLI::App* syn = app.add_subcommand(
      "synth", "reconstruct a signal from a spectrum; write signal.csv");
  auto* syn_input =
      syn->add_option("input", cfg.input, "spectrum JSON file");
  auto* syn_bin = syn->add_option(
      "--bin", cfg.bins,
      "inline bin as u:a1,..,aN:b1,..,bN[:psi]; repeatable");
  auto* syn_dc = syn->add_option("--dc", cfg.dc, "inline DC vector a1,..,aN");
  auto* syn_nyq = syn->add_option("--nyquist", cfg.nyquist,
                                  "inline Nyquist vector (even M only)");
  auto* syn_samples =
      syn->add_option("--samples", cfg.samples, "sample count M for inline bins")
          ->check(CLI::PositiveNumber)
          ->capture_default_str();
  syn->add_option("--out", cfg.out, "output directory")
      ->capture_default_str();
  syn->add_flag("--time-column", cfg.time_column,
                "prepend a time column to signal.csv");
  syn_input->excludes(syn_bin)->excludes(syn_dc)->excludes(syn_nyq)->excludes(
      syn_samples);

  CLI::App* dec = app.add_subcommand(
      "decompose", "canonical a/b/psi form of a c/s pair, printed as JSON");
  auto* dec_c = dec->add_option("--c", cfg.c_arg, "c vector, comma separated");
  auto* dec_s = dec->add_option("--s", cfg.s_arg, "s vector, comma separated");
  auto* dec_input = dec->add_option("--input", cfg.input,
                                    "JSON file { \"c\": [...], \"s\": [...] }");
  dec_input->excludes(dec_c)->excludes(dec_s);
  dec->add_option("--tol", cfg.tol, "polarization classification tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);

    if (syn->parsed() && cfg.input.empty() && cfg.bins.empty() &&
        cfg.dc.empty() && cfg.nyquist.empty()) {
      std::cerr << "synth: provide a spectrum JSON file or at least one of "
                   "--bin/--dc/--nyquist\n";
      return 2;
    }
    if (dec->parsed() && cfg.input.empty() &&
        (cfg.c_arg.empty() || cfg.s_arg.empty())) {
      std::cerr << "decompose: provide --c and --s together, or --input\n";
      return 2;
    }

    if (sim->parsed()) ellspec::cli::cmd_simulate(cfg);
    if (ana->parsed()) ellspec::cli::cmd_analyze(cfg);
    if (syn->parsed()) ellspec::cli::cmd_synth(cfg);
    if (dec->parsed()) ellspec::cli::cmd_decompose(cfg);
    return 0;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::logic_error& e) {
    // invalid_argument / domain_error from the library: numeric or domain
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    // ParseError, IoError and other runtime failures: bad input or IO
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}

#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <utility>

#include "ellspec/csv.hpp"
#include "ellspec/ellipse.hpp"
#include "ellspec/format.hpp"
#include "ellspec/rng.hpp"
#include "ellspec/serialize.hpp"
#include "ellspec/spectrum.hpp"
#include "ellspec/svg.hpp"
#include "ellspec/vecops.hpp"

namespace fs = std::filesystem;

namespace ellspec::cli {

namespace {

double parse_double_arg(const std::string& text, const std::string& what) {
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() ||
      !std::isfinite(value))
    throw ParseError(what + ": '" + text + "' is not a finite number");
  return value;
}

Vec parse_vec_arg(const std::string& text, const std::string& what) {
  Vec out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string cell = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    out.push_back(parse_double_arg(cell, what));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::size_t parse_index_arg(const std::string& text, const std::string& what) {
  const double value = parse_double_arg(text, what);
  if (!(value >= 0.0) || value != std::floor(value) ||
      value > 9.007199254740992e15)
    throw ParseError(what + ": '" + text + "' is not a non-negative integer");
  return static_cast<std::size_t>(value);
}

fs::path out_dir(const RunConfig& cfg) {
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec && !fs::is_directory(dir))
    throw IoError("cannot create output directory '" + dir.string() + "': " +
                  ec.message());
  return dir;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string csv_text(const std::vector<std::string>& header, const Mat& rows) {
  std::ostringstream out;
  write_csv(out, header, rows);
  return out.str();
}

// "u:a1,..,aN:b1,..,bN[:psi]" -> one spectrum bin; omega is filled in by the
// caller once the sample count is known.
SpectrumBin parse_bin_arg(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t colon = text.find(':', start);
    if (colon == std::string::npos) {
      parts.push_back(text.substr(start));
      break;
    }
    parts.push_back(text.substr(start, colon - start));
    start = colon + 1;
  }
  if (parts.size() < 3 || parts.size() > 4)
    throw ParseError("--bin '" + text +
                     "': expected u:a1,..,aN:b1,..,bN[:psi]");
  SpectrumBin bin;
  bin.index = parse_index_arg(parts[0], "--bin index");
  bin.component.a = parse_vec_arg(parts[1], "--bin a");
  bin.component.b = parse_vec_arg(parts[2], "--bin b");
  bin.component.psi =
      parts.size() == 4 ? parse_double_arg(parts[3], "--bin psi") : 0.0;
  return bin;
}

}  // namespace

void cmd_simulate(const RunConfig& cfg) {
  const fs::path dir = out_dir(cfg);

  Sampler sampler(cfg.seed);
  std::vector<Sinusoid> terms;
  terms.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i)
    terms.push_back(sampler.sinusoid(cfg.dims, 1.0));

  const EllipseCS cs = cs_from_sinusoids(terms);
  const EllipseAB ab = ab_from_cs(cs);

  // One full cycle of the resultant plus each constituent, omega = 1.
  std::vector<std::string> header;
  header.emplace_back("t");
  for (std::size_t j = 0; j < cfg.dims; ++j)
    header.push_back("f" + format_index(j + 1));
  for (std::size_t i = 0; i < cfg.count; ++i)
    for (std::size_t j = 0; j < cfg.dims; ++j)
      header.push_back("v" + format_index(i + 1) + "_" + format_index(j + 1));

  Mat rows;
  rows.reserve(cfg.samples);
  for (std::size_t k = 0; k < cfg.samples; ++k) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(k) /
                     static_cast<double>(cfg.samples);
    Vec row;
    row.reserve(header.size());
    row.push_back(t);
    const Vec f = eval_superposition(terms, t);
    row.insert(row.end(), f.begin(), f.end());
    for (const Sinusoid& term : terms) {
      const double amp = std::sin(term.omega * t + term.phi);
      for (double coord : term.direction) row.push_back(coord * amp);
    }
    rows.push_back(std::move(row));
  }

  write_file(dir / "trajectory.csv", csv_text(header, rows));

  const std::string title =
      "N=" + format_index(cfg.dims) + " K=" + format_index(cfg.count) +
      " seed=" + format_index(cfg.seed) + ": " +
      to_string(classify_polarization(ab, cfg.tol).kind);
  write_file(dir / "ellipse.svg", ellipse_plot_svg(ab, title));

  write_file(dir / "params.json",
             simulation_to_json(cfg.seed, cfg.samples, terms, cs, ab,
                                cfg.tol));
}

void cmd_analyze(const RunConfig& cfg) {
  const CsvTable table = parse_csv_file(cfg.input);

  VectorSignal sig;
  if (cfg.time_column) {
    if (table.rows.front().size() < 2)
      throw ParseError("'" + cfg.input +
                       "': --time-column needs at least two columns");
    const std::size_t m_count = table.rows.size();
    if (m_count >= 2) {
      const double step = table.rows[1][0] - table.rows[0][0];
      if (!(step > 0.0))
        throw std::invalid_argument(
            "time column must be strictly increasing");
      for (std::size_t m = 0; m + 1 < m_count; ++m) {
        const double gap = table.rows[m + 1][0] - table.rows[m][0];
        if (std::abs(gap - step) > 1e-9 * std::max(1.0, std::abs(step)))
          throw std::invalid_argument(
              "time column is not uniformly spaced (row " +
              std::to_string(m + 2) + ")");
      }
      sig.sample_interval = step;
    }
    for (const Vec& row : table.rows)
      sig.samples.emplace_back(row.begin() + 1, row.end());
  } else {
    sig.samples = table.rows;
  }

  const EllipseSpectrum spec = ellipse_spectrum(sig);
  const fs::path dir = out_dir(cfg);
  write_file(dir / "spectrum.json", spectrum_to_json(spec, cfg.tol));

  if (cfg.plot && !spec.bins.empty()) {
    // Dominant bins: by descending power, at most eight, skipping anything
    // below 1e-6 of the strongest bin.
    std::vector<std::size_t> order(spec.bins.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    const auto power = [&spec](std::size_t i) {
      const EllipseAB& e = spec.bins[i].component;
      return dot(e.a, e.a) + dot(e.b, e.b);
    };
    std::sort(order.begin(), order.end(),
              [&](std::size_t l, std::size_t r) {
                const double pl = power(l), pr = power(r);
                if (pl != pr) return pl > pr;
                return spec.bins[l].index < spec.bins[r].index;
              });
    const double top = power(order.front());
    for (std::size_t rank = 0; rank < order.size() && rank < 8; ++rank) {
      const std::size_t i = order[rank];
      if (!(power(i) > 0.0) || power(i) < 1e-6 * top) break;
      const SpectrumBin& bin = spec.bins[i];
      std::string title = "bin u=" + format_index(bin.index) + ", f=" +
                          format_double(bin_freq_cycles(bin)) +
                          " cycles/record";
      if (const auto hz = bin_freq_hz(spec, bin))
        title += " (" + format_double(*hz) + " Hz)";
      title += ": " +
               std::string(to_string(
                   classify_polarization(bin.component, cfg.tol).kind));
      write_file(dir / ("bin_" + format_index(bin.index) + ".svg"),
                 ellipse_plot_svg(bin.component, title));
    }
  }
}

void cmd_synth(const RunConfig& cfg) {
  EllipseSpectrum spec;
  if (!cfg.input.empty()) {
    spec = spectrum_from_json(read_file(cfg.input));
  } else {
    spec.n_samples = cfg.samples;
    const double m_count = static_cast<double>(cfg.samples);
    for (const std::string& text : cfg.bins) {
      SpectrumBin bin = parse_bin_arg(text);
      bin.component.omega = 2.0 * std::numbers::pi *
                            static_cast<double>(bin.index) / m_count;
      spec.bins.push_back(std::move(bin));
    }
    if (!cfg.nyquist.empty())
      spec.nyquist = parse_vec_arg(cfg.nyquist, "--nyquist");
    if (!cfg.dc.empty()) {
      spec.dc = parse_vec_arg(cfg.dc, "--dc");
    } else if (!spec.bins.empty()) {
      spec.dc = Vec(spec.bins.front().component.a.size(), 0.0);
    } else if (spec.nyquist) {
      spec.dc = Vec(spec.nyquist->size(), 0.0);
    }
    spec.dim = spec.dc.size();
  }

  const VectorSignal sig = synthesize_spectrum(spec);

  std::vector<std::string> header;
  if (cfg.time_column) header.emplace_back("t");
  for (std::size_t j = 0; j < sig.dim(); ++j)
    header.push_back("f" + format_index(j + 1));

  Mat rows;
  rows.reserve(sig.size());
  const double step = sig.sample_interval.value_or(1.0);
  for (std::size_t m = 0; m < sig.size(); ++m) {
    Vec row;
    row.reserve(header.size());
    if (cfg.time_column) row.push_back(static_cast<double>(m) * step);
    row.insert(row.end(), sig.samples[m].begin(), sig.samples[m].end());
    rows.push_back(std::move(row));
  }

  write_file(out_dir(cfg) / "signal.csv", csv_text(header, rows));
}

void cmd_decompose(const RunConfig& cfg) {
  EllipseCS cs;
  if (!cfg.input.empty()) {
    cs = cs_from_json(read_file(cfg.input));
  } else {
    cs.c = parse_vec_arg(cfg.c_arg, "--c");
    cs.s = parse_vec_arg(cfg.s_arg, "--s");
  }
  std::cout << decomposition_to_json(ab_from_cs(cs), cfg.tol);
}

}  // namespace ellspec::cli

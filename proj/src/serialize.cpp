#include "ellspec/serialize.hpp"

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellspec/csv.hpp"
#include "ellspec/format.hpp"
#include "ellspec/vecops.hpp"

namespace ellspec {

namespace {

using nlohmann::json;

std::string json_vec(const Vec& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_double(v[i]);
  }
  out += "]";
  return out;
}

// Emitted per-bin power: squared moduli of both axes, i.e. the bin's share
// of the unitary-DFT energy up to the 2/sqrt(M) pairing factor.
double bin_power(const EllipseAB& e) {
  return dot(e.a, e.a) + dot(e.b, e.b);
}

double require_double(const json& node, const char* field) {
  const auto it = node.find(field);
  if (it == node.end() || !it->is_number())
    throw ParseError(std::string("missing or non-numeric field '") + field +
                     "'");
  return it->get<double>();
}

std::size_t require_size(const json& node, const char* field) {
  const double x = require_double(node, field);
  if (!(x >= 0.0) || x != std::floor(x) || x > 9.007199254740992e15)
    throw ParseError(std::string("field '") + field +
                     "' must be a non-negative integer");
  return static_cast<std::size_t>(x);
}

Vec require_vec(const json& node, const char* field) {
  const auto it = node.find(field);
  if (it == node.end() || !it->is_array())
    throw ParseError(std::string("missing or non-array field '") + field +
                     "'");
  Vec out;
  out.reserve(it->size());
  for (const json& cell : *it) {
    if (!cell.is_number())
      throw ParseError(std::string("non-numeric entry in '") + field + "'");
    out.push_back(cell.get<double>());
  }
  return out;
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ParseError("malformed JSON document");
  if (!doc.is_object()) throw ParseError("top-level JSON value is not an object");
  return doc;
}

}  // namespace

std::string spectrum_to_json(const EllipseSpectrum& spec,
                             double classify_tol_rel) {
  std::string out = "{\n";
  out += "  \"n_samples\": " + format_index(spec.n_samples) + ",\n";
  out += "  \"dim\": " + format_index(spec.dim) + ",\n";
  out += "  \"dc\": " + json_vec(spec.dc) + ",\n";
  if (spec.nyquist)
    out += "  \"nyquist\": " + json_vec(*spec.nyquist) + ",\n";
  out += "  \"bins\": [";
  for (std::size_t i = 0; i < spec.bins.size(); ++i) {
    const SpectrumBin& bin = spec.bins[i];
    out += i ? ",\n" : "\n";
    out += "    {\n";
    out += "      \"u\": " + format_index(bin.index) + ",\n";
    out += "      \"freq_cycles_per_record\": " +
           format_double(bin_freq_cycles(bin)) + ",\n";
    if (const auto hz = bin_freq_hz(spec, bin))
      out += "      \"freq_hz\": " + format_double(*hz) + ",\n";
    out += "      \"a\": " + json_vec(bin.component.a) + ",\n";
    out += "      \"b\": " + json_vec(bin.component.b) + ",\n";
    out += "      \"psi\": " + format_double(bin.component.psi) + ",\n";
    out += std::string("      \"polarization\": \"") +
           to_string(classify_polarization(bin.component, classify_tol_rel)
                         .kind) +
           "\",\n";
    out += "      \"power\": " + format_double(bin_power(bin.component)) +
           "\n";
    out += "    }";
  }
  out += spec.bins.empty() ? "]\n" : "\n  ]\n";
  out += "}\n";
  return out;
}

EllipseSpectrum spectrum_from_json(const std::string& text) {
  const json doc = parse_document(text);

  EllipseSpectrum spec;
  spec.n_samples = require_size(doc, "n_samples");
  if (spec.n_samples == 0) throw ParseError("n_samples must be positive");
  spec.dim = require_size(doc, "dim");
  spec.dc = require_vec(doc, "dc");
  if (doc.contains("nyquist")) spec.nyquist = require_vec(doc, "nyquist");

  const auto bins_it = doc.find("bins");
  if (bins_it == doc.end() || !bins_it->is_array())
    throw ParseError("missing or non-array field 'bins'");

  const double m = static_cast<double>(spec.n_samples);
  for (const json& item : *bins_it) {
    if (!item.is_object()) throw ParseError("bin entry is not an object");
    SpectrumBin bin;
    bin.index = require_size(item, "u");
    bin.component.a = require_vec(item, "a");
    bin.component.b = require_vec(item, "b");
    bin.component.psi = require_double(item, "psi");
    bin.component.omega =
        2.0 * std::numbers::pi * static_cast<double>(bin.index) / m;
    // freq_hz is redundant with u given the sample interval; use the first
    // occurrence to recover the interval, since the schema does not carry
    // the interval itself.
    if (!spec.sample_interval && item.contains("freq_hz")) {
      const double hz = require_double(item, "freq_hz");
      if (!(hz > 0.0)) throw ParseError("freq_hz must be positive");
      spec.sample_interval = static_cast<double>(bin.index) / (m * hz);
    }
    spec.bins.push_back(std::move(bin));
  }
  return spec;
}

std::string simulation_to_json(std::uint64_t seed, std::size_t samples,
                               std::span<const Sinusoid> terms,
                               const EllipseCS& cs, const EllipseAB& ab,
                               double classify_tol_rel) {
  std::string out = "{\n";
  out += "  \"seed\": " + format_index(seed) + ",\n";
  out += "  \"dims\": " + format_index(cs.c.size()) + ",\n";
  out += "  \"count\": " + format_index(terms.size()) + ",\n";
  out += "  \"samples\": " + format_index(samples) + ",\n";
  out += "  \"omega\": " + format_double(cs.omega) + ",\n";
  out += "  \"sinusoids\": [";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    out += i ? ",\n" : "\n";
    out += "    {\n";
    out += "      \"direction\": " + json_vec(terms[i].direction) + ",\n";
    out += "      \"phi\": " + format_double(terms[i].phi) + "\n";
    out += "    }";
  }
  out += terms.empty() ? "],\n" : "\n  ],\n";
  out += "  \"c\": " + json_vec(cs.c) + ",\n";
  out += "  \"s\": " + json_vec(cs.s) + ",\n";
  out += "  \"a\": " + json_vec(ab.a) + ",\n";
  out += "  \"b\": " + json_vec(ab.b) + ",\n";
  out += "  \"psi\": " + format_double(ab.psi) + ",\n";
  out += std::string("  \"polarization\": \"") +
         to_string(classify_polarization(ab, classify_tol_rel).kind) +
         "\",\n";
  out += "  \"norm_a\": " + format_double(modulus(ab.a)) + ",\n";
  out += "  \"norm_b\": " + format_double(modulus(ab.b)) + "\n";
  out += "}\n";
  return out;
}

std::string decomposition_to_json(const EllipseAB& ab,
                                  double classify_tol_rel) {
  std::string out = "{\n";
  out += "  \"a\": " + json_vec(ab.a) + ",\n";
  out += "  \"b\": " + json_vec(ab.b) + ",\n";
  out += "  \"psi\": " + format_double(ab.psi) + ",\n";
  out += std::string("  \"polarization\": \"") +
         to_string(classify_polarization(ab, classify_tol_rel).kind) +
         "\",\n";
  out += "  \"norm_a\": " + format_double(modulus(ab.a)) + ",\n";
  out += "  \"norm_b\": " + format_double(modulus(ab.b)) + "\n";
  out += "}\n";
  return out;
}

EllipseCS cs_from_json(const std::string& text) {
  const json doc = parse_document(text);
  EllipseCS out;
  out.c = require_vec(doc, "c");
  out.s = require_vec(doc, "s");
  out.omega = doc.contains("omega") ? require_double(doc, "omega") : 1.0;
  return out;
}

}  // namespace ellspec

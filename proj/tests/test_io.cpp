#include <cmath>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <string>

#include "doctest.h"

#include "ellspec/csv.hpp"
#include "ellspec/format.hpp"
#include "ellspec/rng.hpp"
#include "ellspec/serialize.hpp"
#include "ellspec/svg.hpp"
#include "test_util.hpp"

using namespace ellspec;
using namespace elltest;

TEST_CASE("format_double: parse round trip is exact") {
  Sampler rng(101);
  for (int i = 0; i < 200; ++i) {
    const double x = std::ldexp(rng.uniform(-1.0, 1.0),
                                static_cast<int>(rng.uniform(-40.0, 40.0)));
    const std::string text = format_double(x);
    CHECK(std::strtod(text.c_str(), nullptr) == x);
  }
  CHECK(format_double(0.0) == "0");
  CHECK(format_double(1.0) == "1");
}

TEST_CASE("parse_csv: header detection and numeric rows") {
  std::istringstream in("t,f1,f2\n0,1.5,2\n1, -3e-2 ,4\n\n2,5,6\n");
  const CsvTable table = parse_csv(in);
  CHECK(table.header == std::vector<std::string>{"t", "f1", "f2"});
  REQUIRE(table.rows.size() == 3);
  CHECK(table.rows[1] == Vec{1.0, -3e-2, 4.0});
}

TEST_CASE("parse_csv: headerless all-numeric first row is data") {
  std::istringstream in("1,2\n3,4\n");
  const CsvTable table = parse_csv(in);
  CHECK(table.header.empty());
  CHECK(table.rows.size() == 2);
}

TEST_CASE("parse_csv: ragged row reported with its line number") {
  std::istringstream in("a,b\n1,2\n3\n");
  try {
    parse_csv(in);
    FAIL("expected ParseError");
  } catch (const ParseError& err) {
    CHECK(err.line() == 3);
    CHECK(std::string(err.what()) == "line 3: expected 2 columns, got 1");
  }
}

TEST_CASE("parse_csv: non-numeric and non-finite cells are rejected") {
  std::istringstream bad_cell("1,2\n1,x\n");
  CHECK_THROWS_WITH_AS(parse_csv(bad_cell), doctest::Contains("line 2"),
                       ParseError);
  std::istringstream inf_cell("1,inf\n");
  CHECK_THROWS_AS(parse_csv(inf_cell), ParseError);
  std::istringstream empty("\n  \n");
  CHECK_THROWS_WITH_AS(parse_csv(empty), doctest::Contains("no data rows"),
                       ParseError);
}

TEST_CASE("parse_csv_file: missing file raises ParseError") {
  CHECK_THROWS_WITH_AS(parse_csv_file("definitely/not/here.csv"),
                       doctest::Contains("cannot open"), ParseError);
}

TEST_CASE("write_csv then parse_csv preserves every bit") {
  Sampler rng(103);
  Mat rows(5, Vec(3));
  for (Vec& row : rows)
    for (double& x : row) x = rng.normal();
  std::ostringstream out;
  write_csv(out, {"a", "b", "c"}, rows);
  std::istringstream in(out.str());
  const CsvTable table = parse_csv(in);
  REQUIRE(table.rows.size() == rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    CHECK(table.rows[r] == rows[r]);
}

TEST_CASE("spectrum JSON: emission order and lossless re-parse") {
  Sampler rng(107);
  Mat samples(8, Vec(2));
  for (Vec& row : samples)
    for (double& x : row) x = rng.uniform(-1.0, 1.0);
  EllipseSpectrum spec = ellipse_spectrum({samples, 0.25});

  const std::string text = spectrum_to_json(spec);
  CHECK(text.find("\"n_samples\"") < text.find("\"dim\""));
  CHECK(text.find("\"dim\"") < text.find("\"dc\""));
  CHECK(text.find("\"dc\"") < text.find("\"nyquist\""));
  CHECK(text.find("\"nyquist\"") < text.find("\"bins\""));
  CHECK(text.find("\"freq_hz\"") != std::string::npos);
  CHECK(text.find("\"power\"") != std::string::npos);

  const EllipseSpectrum back = spectrum_from_json(text);
  CHECK(back.n_samples == spec.n_samples);
  CHECK(back.dim == spec.dim);
  CHECK(back.dc == spec.dc);
  REQUIRE(back.nyquist.has_value());
  CHECK(*back.nyquist == *spec.nyquist);
  REQUIRE(back.bins.size() == spec.bins.size());
  for (std::size_t i = 0; i < spec.bins.size(); ++i) {
    CHECK(back.bins[i].index == spec.bins[i].index);
    CHECK(back.bins[i].component.a == spec.bins[i].component.a);
    CHECK(back.bins[i].component.b == spec.bins[i].component.b);
    CHECK(back.bins[i].component.psi == spec.bins[i].component.psi);
    CHECK(back.bins[i].component.omega ==
          doctest::Approx(spec.bins[i].component.omega).epsilon(1e-15));
  }
  REQUIRE(back.sample_interval.has_value());
  CHECK(*back.sample_interval ==
        doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("spectrum JSON: no sample interval means no freq_hz") {
  EllipseSpectrum spec;
  spec.n_samples = 5;
  spec.dim = 1;
  spec.dc = {1.0};
  spec.bins.push_back({1, EllipseAB{{1.0}, {0.0}, 0.0, 2.0 * std::numbers::pi / 5.0}});
  spec.bins.push_back({2, EllipseAB{{0.5}, {0.0}, 0.0, 4.0 * std::numbers::pi / 5.0}});
  const std::string text = spectrum_to_json(spec);
  CHECK(text.find("freq_hz") == std::string::npos);
  CHECK(text.find("nyquist") == std::string::npos);
  const EllipseSpectrum back = spectrum_from_json(text);
  CHECK(!back.sample_interval.has_value());
  CHECK(!back.nyquist.has_value());
  CHECK(back.bins[1].component.omega ==
        doctest::Approx(4.0 * std::numbers::pi / 5.0).epsilon(1e-15));
}

TEST_CASE("spectrum JSON: malformed documents raise ParseError") {
  CHECK_THROWS_AS(spectrum_from_json("not json at all"), ParseError);
  CHECK_THROWS_AS(spectrum_from_json("[1,2,3]"), ParseError);
  CHECK_THROWS_AS(spectrum_from_json("{\"n_samples\": 4}"), ParseError);
  CHECK_THROWS_AS(
      spectrum_from_json(
          "{\"n_samples\": 0, \"dim\": 1, \"dc\": [0], \"bins\": []}"),
      ParseError);
  CHECK_THROWS_AS(
      spectrum_from_json("{\"n_samples\": 4, \"dim\": 1, \"dc\": [0], "
                         "\"bins\": [{\"u\": -1, \"a\": [1], \"b\": [0], "
                         "\"psi\": 0}]}"),
      ParseError);
  CHECK_THROWS_AS(
      spectrum_from_json("{\"n_samples\": 4, \"dim\": 1, \"dc\": [\"x\"], "
                         "\"bins\": []}"),
      ParseError);
}

TEST_CASE("decomposition JSON carries the classification and moduli") {
  const EllipseAB ab = ab_from_cs({{2.0, 0.0}, {0.0, 1.0}, 1.0});
  const std::string text = decomposition_to_json(ab, kClassifyTolRel);
  CHECK(text.find("\"a\": [2, 0]") != std::string::npos);
  CHECK(text.find("\"b\": [0, 1]") != std::string::npos);
  CHECK(text.find("\"psi\": 0") != std::string::npos);
  CHECK(text.find("\"polarization\": \"elliptical\"") != std::string::npos);
  CHECK(text.find("\"norm_a\": 2") != std::string::npos);
  CHECK(text.find("\"norm_b\": 1") != std::string::npos);
}

TEST_CASE("cs_from_json: defaults and validation") {
  const EllipseCS cs =
      cs_from_json("{\"c\": [1, 2], \"s\": [3, 4], \"omega\": 2.5}");
  CHECK(cs.c == Vec{1.0, 2.0});
  CHECK(cs.s == Vec{3.0, 4.0});
  CHECK(cs.omega == 2.5);
  CHECK(cs_from_json("{\"c\": [1], \"s\": [0]}").omega == 1.0);
  CHECK_THROWS_AS(cs_from_json("{\"c\": [1]}"), ParseError);
}

TEST_CASE("simulation JSON lists draws and both forms in order") {
  Sampler rng(109);
  const SuperpositionCase c = random_case(rng, 3, 2);
  const std::string text =
      simulation_to_json(7, 360, c.terms, c.cs, c.ab, kClassifyTolRel);
  CHECK(text.find("\"seed\": 7") != std::string::npos);
  CHECK(text.find("\"dims\": 3") != std::string::npos);
  CHECK(text.find("\"count\": 2") != std::string::npos);
  CHECK(text.find("\"sinusoids\"") < text.find("\"c\":"));
  CHECK(text.find("\"c\":") < text.find("\"s\":"));
  CHECK(text.find("\"s\":") < text.find("\"a\":"));
  CHECK(text.find("\"psi\"") < text.find("\"polarization\""));

  // params.json doubles as a c/s document for downstream checks.
  const EllipseCS back = cs_from_json(text);
  CHECK(back.c == c.cs.c);
  CHECK(back.s == c.cs.s);
}

TEST_CASE("SVG plot: labeled vectors, closed curve, determinism") {
  const EllipseAB ab = ab_from_cs({{2.0, 0.0}, {0.0, 1.0}, 1.0});
  const std::string svg = ellipse_plot_svg(ab, "case");
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("<polyline") != std::string::npos);
  for (const char* label : {">a</text>", ">b</text>", ">c</text>",
                            ">s</text>"})
    CHECK(svg.find(label) != std::string::npos);
  CHECK(svg.find("case") != std::string::npos);
  CHECK(svg == ellipse_plot_svg(ab, "case"));

  const std::string zero =
      ellipse_plot_svg({{0.0, 0.0}, {0.0, 0.0}, 0.0, 1.0}, "zero");
  CHECK(zero.find("<polyline") == std::string::npos);
  CHECK(zero.find("<circle") != std::string::npos);
}

TEST_CASE("Sampler: seeded determinism and mapped ranges") {
  Sampler a(12345), b(12345);
  for (int i = 0; i < 1000; ++i) {
    const double x = a.uniform01();
    CHECK(x == b.uniform01());
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  const Sinusoid sa = a.sinusoid(4, 1.0);
  const Sinusoid sb = b.sinusoid(4, 1.0);
  CHECK(sa.direction == sb.direction);
  CHECK(sa.phi == sb.phi);
  CHECK(sa.phi >= 0.0);
  CHECK(sa.phi < 2.0 * std::numbers::pi);
  const double amp = modulus(sa.direction);
  CHECK(amp >= 0.5);
  CHECK(amp < 1.5);

  Sampler c(1);
  const Vec unit = c.unit_vector(8);
  CHECK(modulus(unit) == doctest::Approx(1.0).epsilon(1e-12));
  double mean = 0.0, var = 0.0;
  const int draws = 20000;
  for (int i = 0; i < draws; ++i) {
    const double z = c.normal();
    mean += z;
    var += z * z;
  }
  mean /= draws;
  var = var / draws - mean * mean;
  CHECK(std::abs(mean) < 0.05);
  CHECK(std::abs(var - 1.0) < 0.05);
}

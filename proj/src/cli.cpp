#include "cubepack/cli.hpp"

#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "cubepack/chessboard.hpp"
#include "cubepack/cube_system.hpp"
#include "cubepack/errors.hpp"
#include "cubepack/generators.hpp"
#include "cubepack/json_io.hpp"
#include "cubepack/rigidity.hpp"
#include "cubepack/svg.hpp"
#include "cubepack/tiling_theorems.hpp"

namespace cubepack {

namespace {

Box parse_window(const std::string& spec) {
  Point lo, hi;
  std::istringstream in(spec);
  std::string coord;
  while (std::getline(in, coord, ';')) {
    auto comma = coord.find(',');
    if (comma == std::string::npos)
      fail(Errc::usage, "window coordinate needs \"lo,hi\": " + coord);
    lo.push_back(parse_rational(coord.substr(0, comma)));
    hi.push_back(parse_rational(coord.substr(comma + 1)));
  }
  if (lo.empty()) fail(Errc::usage, "empty window spec");
  return Box(lo, hi);
}

std::vector<int> parse_sign(const std::string& spec) {
  std::vector<int> sign;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok == "+" || tok == "+1" || tok == "1")
      sign.push_back(1);
    else if (tok == "-" || tok == "-1")
      sign.push_back(-1);
    else
      fail(Errc::usage, "sign entries must be + or -: \"" + tok + "\"");
  }
  if (sign.empty()) fail(Errc::usage, "empty sign spec");
  return sign;
}

std::vector<Int> parse_int_vector(const std::string& spec) {
  std::vector<Int> out;
  std::istringstream in(spec);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    Rational r = parse_rational(tok);
    if (!is_integer(r)) fail(Errc::usage, "expected integers: \"" + tok + "\"");
    out.push_back(numerator(r));
  }
  if (out.empty()) fail(Errc::usage, "empty integer list");
  return out;
}

std::vector<int> parse_coord_set(const std::string& spec, int dim) {
  std::vector<int> out;
  for (const Int& v : parse_int_vector(spec)) {
    if (v < 1 || v > dim)
      fail(Errc::usage, "coordinate index out of range: " + v.str());
    out.push_back(v.convert_to<int>() - 1);
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_file(out_path, text);
}

Box two_period_window(const CubeSystem& sys) {
  if (!sys.periodic())
    fail(Errc::usage, "no --window given and the instance is not periodic");
  Point lo(sys.dim(), Rational(0)), hi(sys.dim());
  for (int i = 0; i < sys.dim(); ++i) hi[i] = Rational(2 * sys.periods()[i]);
  return Box(lo, hi);
}

std::string flip_set_text(const std::vector<int>& flipped) {
  std::string out = "{";
  for (size_t i = 0; i < flipped.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(flipped[i] + 1);
  }
  return out + "}";
}

int cmd_verify(const std::string& in, const std::string& format) {
  CubeSystem sys = load_instance(in);
  auto violation = validate_packing(sys);
  OrderedJson j;
  std::ostringstream text;
  if (violation) {
    j["packing"] = {{"valid", false},
                    {"t", point_to_json(violation->t)},
                    {"t_prime", point_to_json(violation->t_prime)}};
    text << "packing: overlap (" << point_to_string(violation->t) << " vs "
         << point_to_string(violation->t_prime) << ")\n";
    emit(format == "json" ? dump_json(j) : text.str(), "");
    return 2;
  }
  j["packing"] = {{"valid", true}};
  text << "packing: valid\n";

  if (sys.periodic()) {
    TilingCheck tiling = validate_torus_tiling(sys);
    if (tiling.tiling) {
      j["tiling"] = {{"tiling", true}};
      text << "tiling: yes\n";
    } else {
      j["tiling"] = {{"tiling", false}, {"deficit", tiling.deficit.str()}};
      text << "tiling: no (deficit " << tiling.deficit.str() << ")\n";
    }
  } else {
    j["tiling"] = nullptr;
    text << "tiling: n/a\n";
  }

  ParityCertificate parity = parity_certificate(sys);
  j["parity"] = to_json(parity);
  if (parity.certified)
    text << "parity: certified\n";
  else
    text << "parity: refuted (" << point_to_string(parity.t) << " vs "
         << point_to_string(parity.t_prime) << ", flipped "
         << flip_set_text(parity.flipped) << ")\n";

  emit(format == "json" ? dump_json(j) : text.str(), "");
  return 0;
}

int cmd_decompose(const std::string& in, const std::string& out,
                  const std::string& svg, const std::string& window_spec,
                  int scale, bool double_periods, const std::string& format) {
  CubeSystem sys = load_instance(in);
  if (double_periods && sys.periodic()) sys = sys.doubled_periods();
  Decomposition dec = chessboard_decompose(sys);
  if (format == "json") {
    emit(dump_json(to_json(dec)), out);
  } else {
    std::ostringstream text;
    text << "S0:";
    for (const Point& p : dec.s0) text << ' ' << point_to_string(p);
    text << "\nS1:";
    for (const Point& p : dec.s1) text << ' ' << point_to_string(p);
    text << "\nclasses: " << dec.classes.size() << "\n";
    emit(text.str(), out);
  }
  if (!svg.empty()) {
    Box window = window_spec.empty() ? default_render_window(sys)
                                     : parse_window(window_spec);
    write_file(svg, render_decomposition_svg(sys, dec, window, scale));
  }
  return 0;
}

int cmd_witness_twin(const std::string& in, const std::string& u_spec,
                     const std::string& out, const std::string& format) {
  CubeSystem sys = load_instance(in);
  WitnessPair pair = twin_witness(sys, parse_point(u_spec));
  if (format == "json") {
    emit(dump_json(to_json(pair)), out);
  } else {
    std::ostringstream text;
    text << "t=" << point_to_string(pair.t)
         << " t'=" << point_to_string(pair.t_prime) << " flipped "
         << flip_set_text(pair.flipped) << "\n";
    emit(text.str(), out);
  }
  return 0;
}

int cmd_witness_orthant(const std::string& in, const std::string& base_spec,
                        const std::string& sign_spec, const std::string& out,
                        const std::string& format) {
  CubeSystem sys = load_instance(in);
  OrthantWitness w =
      orthant_witness(sys, parse_point(base_spec), parse_sign(sign_spec));
  if (format == "json") {
    emit(dump_json(to_json(w)), out);
  } else {
    std::ostringstream text;
    text << "J=" << flip_set_text(w.j_set)
         << " target=" << point_to_string(w.target) << "\n";
    emit(text.str(), out);
  }
  return 0;
}

int cmd_erode(const std::string& in, const std::string& window_spec,
              const std::string& out, const std::string& format) {
  CubeSystem sys = load_instance(in);
  if (auto bad = validate_packing(sys))
    fail(Errc::usage, "instance is not a packing: " + point_to_string(bad->t) +
                          " overlaps " + point_to_string(bad->t_prime));
  Box window = window_spec.empty() ? two_period_window(sys)
                                   : parse_window(window_spec);
  FaceSet faces = find_covered_outsiders(sys, window);
  if (format == "json") {
    emit(dump_json(to_json(faces)), out);
  } else {
    std::ostringstream text;
    if (faces.empty()) {
      text << "no covered outsiders (rough within the window)\n";
    } else {
      for (const Face& f : faces.faces) text << face_to_string(f) << "\n";
    }
    emit(text.str(), out);
  }
  return faces.empty() ? 0 : 2;
}

int cmd_census(const std::string& in, const std::string& base_spec,
               const std::string& window_spec, int max_span,
               const std::string& out, const std::string& format) {
  CubeSystem sys = load_instance(in);
  Point base = parse_point(base_spec);
  OrderedJson j;
  j["base"] = point_to_json(base);
  OrderedJson counts = OrderedJson::array();
  std::ostringstream text;
  if (!window_spec.empty()) {
    Box window = parse_window(window_spec);
    Int c = coset_census(sys, base, window);
    counts.push_back({{"window", window_spec}, {"count", c.convert_to<long long>()}});
    text << "count: " << c.str() << "\n";
  } else {
    if (!sys.periodic()) fail(Errc::usage, "nested windows need a periodic instance");
    for (int span = 1; span <= max_span; ++span) {
      Point lo(sys.dim(), Rational(0)), hi(sys.dim());
      for (int i = 0; i < sys.dim(); ++i)
        hi[i] = Rational(span * sys.periods()[i]);
      Int c = coset_census(sys, base, Box(lo, hi));
      counts.push_back({{"span", span}, {"count", c.convert_to<long long>()}});
      text << "span " << span << ": " << c.str() << "\n";
    }
  }
  j["counts"] = std::move(counts);
  emit(format == "json" ? dump_json(j) : text.str(), out);
  return 0;
}

int cmd_certify_subgroup(const std::string& in, const std::string& k_spec,
                         const std::string& l_spec, const std::string& out,
                         const std::string& format) {
  CubeSystem sys = load_instance(in);
  std::vector<Int> k = parse_int_vector(k_spec);
  std::vector<int> l_set = parse_coord_set(l_spec, sys.dim());
  CubeSystem norm = normalize_to_zero(sys);
  SubgroupCheck check = subgroup_check(norm, k, l_set);
  if (!check.valid) {
    if (format == "json") {
      OrderedJson j;
      j["valid"] = false;
      j["violation"] = check.violation;
      emit(dump_json(j), out);
    } else {
      emit("hypothesis violated: " + check.violation + "\n", out);
    }
    return 2;
  }
  BasisCertificate cert = basis_vector_certificate(sys, k, l_set);
  if (format == "json") {
    OrderedJson j = to_json(cert);
    j["valid"] = true;
    emit(dump_json(j), out);
  } else {
    std::ostringstream text;
    text << "e_" << cert.m + 1 << " in G; J=" << flip_set_text(cert.j_set)
         << " n=" << cert.n.str() << " x=" << cert.x.str()
         << " y=" << cert.y.str() << "\n";
    emit(text.str(), out);
  }
  return 0;
}

int cmd_render(const std::string& in, const std::string& svg,
               const std::string& window_spec, int scale) {
  CubeSystem sys = load_instance(in);
  Box window = window_spec.empty() ? default_render_window(sys)
                                   : parse_window(window_spec);
  write_file(svg, render_instance_svg(sys, window, scale));
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact toolkit for unit-cube packings and tilings"};
  app.require_subcommand(1);

  std::string in, out, svg, window_spec, u_spec, base_spec, sign_spec;
  std::string k_spec, l_spec, shift_spec = "1/2", periods_spec = "2,2";
  std::string format = "text";
  int scale = 64, max_span = 4, gen_d = 2, grid = 2;
  uint64_t seed = 0;
  bool double_periods = false;

  auto* verify = app.add_subcommand("verify", "packing / tiling / parity status");
  verify->add_option("--in", in)->required();
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* decompose = app.add_subcommand("decompose", "chessboard split S0 / S1");
  decompose->add_option("--in", in)->required();
  decompose->add_option("--out", out);
  decompose->add_option("--svg", svg);
  decompose->add_option("--window", window_spec);
  decompose->add_option("--scale", scale);
  decompose->add_flag("--double-periods", double_periods);
  std::string dec_format = "json";
  decompose->add_option("--format", dec_format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* witness = app.add_subcommand("witness", "twin or orthant witnesses");
  witness->require_subcommand(1);
  auto* twin = witness->add_subcommand("twin", "odd twin pair at a covered u");
  twin->add_option("--in", in)->required();
  twin->add_option("--u", u_spec)->required();
  twin->add_option("--out", out);
  std::string twin_format = "json";
  twin->add_option("--format", twin_format)
      ->check(CLI::IsMember({"json", "text"}));
  auto* orthant =
      witness->add_subcommand("orthant", "odd signed basis translate");
  orthant->add_option("--in", in)->required();
  orthant->add_option("--base", base_spec)->required();
  orthant->add_option("--sign", sign_spec)->required();
  orthant->add_option("--out", out);
  std::string orthant_format = "json";
  orthant->add_option("--format", orthant_format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* erode = app.add_subcommand("erode", "covered outsiders in a window");
  erode->add_option("--in", in)->required();
  erode->add_option("--window", window_spec);
  erode->add_option("--out", out);
  std::string erode_format = "json";
  erode->add_option("--format", erode_format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* census = app.add_subcommand("census", "coset counts over windows");
  census->add_option("--in", in)->required();
  census->add_option("--base", base_spec)->required();
  census->add_option("--window", window_spec);
  census->add_option("--max-span", max_span)->check(CLI::PositiveNumber);
  census->add_option("--out", out);
  census->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  auto* certify = app.add_subcommand("certify", "hypothesis certificates");
  certify->require_subcommand(1);
  auto* subgroup = certify->add_subcommand(
      "subgroup", "basis-vector certificate from the subgroup hypotheses");
  subgroup->add_option("--in", in)->required();
  subgroup->add_option("--k", k_spec)->required();
  subgroup->add_option("--L", l_spec)->required();
  subgroup->add_option("--out", out);
  std::string cert_format = "json";
  subgroup->add_option("--format", cert_format)
      ->check(CLI::IsMember({"json", "text"}));

  auto* generate = app.add_subcommand("generate", "write instance files");
  generate->require_subcommand(1);
  auto* gen_lattice = generate->add_subcommand("lattice", "integer tiling");
  gen_lattice->add_option("--d", gen_d)->required();
  gen_lattice->add_option("--out", out);
  auto* gen_columns =
      generate->add_subcommand("columns", "shifted-column tiling");
  gen_columns->add_option("--d", gen_d)->required();
  gen_columns->add_option("--shift", shift_spec);
  gen_columns->add_option("--out", out);
  auto* gen_random = generate->add_subcommand("random", "seeded random tiling");
  gen_random->add_option("--d", gen_d)->required();
  gen_random->add_option("--periods", periods_spec);
  gen_random->add_option("--grid", grid);
  gen_random->add_option("--seed", seed);
  gen_random->add_option("--out", out);

  auto* render = app.add_subcommand("render", "SVG of a d=2 instance");
  render->add_option("--in", in)->required();
  render->add_option("--svg", svg)->required();
  render->add_option("--window", window_spec);
  render->add_option("--scale", scale);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (verify->parsed()) return cmd_verify(in, format);
    if (decompose->parsed())
      return cmd_decompose(in, out, svg, window_spec, scale, double_periods,
                           dec_format);
    if (twin->parsed()) return cmd_witness_twin(in, u_spec, out, twin_format);
    if (orthant->parsed())
      return cmd_witness_orthant(in, base_spec, sign_spec, out, orthant_format);
    if (erode->parsed()) return cmd_erode(in, window_spec, out, erode_format);
    if (census->parsed())
      return cmd_census(in, base_spec, window_spec, max_span, out, format);
    if (subgroup->parsed())
      return cmd_certify_subgroup(in, k_spec, l_spec, out, cert_format);
    if (gen_lattice->parsed()) {
      emit(serialize_instance(lattice_tiling(gen_d)), out);
      return 0;
    }
    if (gen_columns->parsed()) {
      emit(serialize_instance(
               shifted_column_tiling(gen_d, parse_rational(shift_spec))),
           out);
      return 0;
    }
    if (gen_random->parsed()) {
      emit(serialize_instance(random_torus_tiling(
               gen_d, parse_int_vector(periods_spec), grid, seed)),
           out);
      return 0;
    }
    if (render->parsed()) return cmd_render(in, svg, window_spec, scale);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    switch (e.code()) {
      case Errc::usage:
      case Errc::parse:
        return 1;
      default:
        return 2;
    }
  }
  return 1;
}

}  // namespace cubepack

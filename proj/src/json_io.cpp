#include "cubepack/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cubepack/errors.hpp"

namespace cubepack {

namespace {

Rational parse_rational_field(const OrderedJson& j, const std::string& where) {
  if (!j.is_string())
    fail(Errc::parse, where + ": expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(Errc::parse, where + ": " + e.what());
  }
}

}  // namespace

CubeSystem parse_instance(const std::string& text) {
  OrderedJson j;
  try {
    j = OrderedJson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::parse, e.what());
  }
  if (!j.is_object()) fail(Errc::parse, "instance must be a JSON object");
  for (const auto& [key, value] : j.items())
    if (key != "dim" && key != "periods" && key != "origins")
      fail(Errc::parse, "unknown field \"" + key + "\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    fail(Errc::parse, "dim: expected an integer");
  int dim = j["dim"].get<int>();
  if (dim < 1) fail(Errc::parse, "dim: must be >= 1");

  std::optional<std::vector<Int>> periods;
  if (!j.contains("periods")) fail(Errc::parse, "periods: missing (use null)");
  if (!j["periods"].is_null()) {
    if (!j["periods"].is_array())
      fail(Errc::parse, "periods: expected an array or null");
    std::vector<Int> p;
    for (size_t i = 0; i < j["periods"].size(); ++i) {
      const auto& entry = j["periods"][i];
      if (!entry.is_number_integer())
        fail(Errc::parse, "periods[" + std::to_string(i) + "]: expected an integer");
      p.emplace_back(entry.get<long long>());
    }
    periods = std::move(p);
  }

  if (!j.contains("origins") || !j["origins"].is_array())
    fail(Errc::parse, "origins: expected an array");
  std::vector<Point> origins;
  for (size_t i = 0; i < j["origins"].size(); ++i) {
    const auto& row = j["origins"][i];
    const std::string where = "origins[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(Errc::parse, where + ": expected an array");
    Point p;
    for (size_t c = 0; c < row.size(); ++c)
      p.push_back(
          parse_rational_field(row[c], where + "[" + std::to_string(c) + "]"));
    origins.push_back(std::move(p));
  }

  try {
    return CubeSystem(dim, std::move(origins), std::move(periods));
  } catch (const Error& e) {
    fail(Errc::parse, e.what());
  }
}

CubeSystem load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse, "cannot open \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance(buf.str());
  } catch (const Error& e) {
    fail(Errc::parse, path + ": " + e.what());
  }
}

std::string serialize_instance(const CubeSystem& sys) {
  OrderedJson j;
  j["dim"] = sys.dim();
  if (sys.periodic()) {
    OrderedJson p = OrderedJson::array();
    for (const Int& v : sys.periods()) p.push_back(v.convert_to<long long>());
    j["periods"] = std::move(p);
  } else {
    j["periods"] = nullptr;
  }
  OrderedJson origins = OrderedJson::array();
  for (const Point& s : sys.origins()) origins.push_back(point_to_json(s));
  j["origins"] = std::move(origins);
  return dump_json(j);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(Errc::usage, "cannot write \"" + path + "\"");
  out << contents;
}

OrderedJson point_to_json(const Point& p) {
  OrderedJson arr = OrderedJson::array();
  for (const Rational& c : p) arr.push_back(c.str());
  return arr;
}

namespace {

OrderedJson coords_one_based(const std::vector<int>& v) {
  OrderedJson arr = OrderedJson::array();
  for (int i : v) arr.push_back(i + 1);
  return arr;
}

}  // namespace

OrderedJson to_json(const ParityCertificate& cert) {
  OrderedJson j;
  j["certified"] = cert.certified;
  if (cert.certified) {
    j["counterexample"] = nullptr;
  } else {
    OrderedJson c;
    c["t"] = point_to_json(cert.t);
    c["t_prime"] = point_to_json(cert.t_prime);
    c["flipped"] = coords_one_based(cert.flipped);
    j["counterexample"] = std::move(c);
  }
  return j;
}

OrderedJson to_json(const WitnessPair& pair) {
  OrderedJson j;
  j["t"] = point_to_json(pair.t);
  j["t_prime"] = point_to_json(pair.t_prime);
  j["flipped"] = coords_one_based(pair.flipped);
  return j;
}

OrderedJson to_json(const OrthantWitness& witness) {
  OrderedJson j;
  j["base"] = point_to_json(witness.base);
  j["sign"] = witness.sign;
  j["J"] = coords_one_based(witness.j_set);
  j["target"] = point_to_json(witness.target);
  return j;
}

OrderedJson to_json(const BasisCertificate& cert) {
  OrderedJson j;
  j["J"] = coords_one_based(cert.j_set);
  j["m"] = cert.m + 1;
  j["n"] = cert.n.str();
  j["x"] = cert.x.str();
  j["y"] = cert.y.str();
  OrderedJson k = OrderedJson::array();
  for (const Int& v : cert.k) k.push_back(v.str());
  j["k"] = std::move(k);
  j["modulo_periods"] = true;
  return j;
}

OrderedJson to_json(const Decomposition& dec) {
  OrderedJson j;
  OrderedJson s0 = OrderedJson::array(), s1 = OrderedJson::array();
  for (const Point& p : dec.s0) s0.push_back(point_to_json(p));
  for (const Point& p : dec.s1) s1.push_back(point_to_json(p));
  j["S0"] = std::move(s0);
  j["S1"] = std::move(s1);
  OrderedJson classes = OrderedJson::array();
  for (const TranslationClass& cls : dec.classes) {
    OrderedJson c;
    c["representative"] = point_to_json(cls.representative);
    OrderedJson members = OrderedJson::array();
    for (const Point& m : cls.members) members.push_back(point_to_json(m));
    c["members"] = std::move(members);
    c["colors"] = cls.colors;
    c["splits"] = cls.splits;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

OrderedJson to_json(const FaceSet& faces) {
  OrderedJson j;
  j["dim"] = faces.dim;
  OrderedJson arr = OrderedJson::array();
  for (const Face& f : faces.faces) {
    OrderedJson face = OrderedJson::array();
    for (const FaceInterval& fac : f.factors) {
      OrderedJson factor;
      if (fac.is_point()) {
        factor["type"] = "point";
        factor["at"] = fac.a.str();
      } else {
        factor["type"] = fac.open ? "open" : "closed";
        factor["lo"] = fac.a.str();
        factor["hi"] = fac.b.str();
      }
      face.push_back(std::move(factor));
    }
    arr.push_back(std::move(face));
  }
  j["faces"] = std::move(arr);
  return j;
}

OrderedJson to_json(const IndexDiagnostics& diag) {
  OrderedJson j;
  j["projection_dims"] = diag.projection_dims;
  j["support"] = coords_one_based(diag.support_coords);
  j["anchor"] = point_to_json(diag.anchor);
  j["center"] = point_to_json(diag.center);
  j["halfwidth"] = diag.halfwidth.str();
  OrderedJson entries = OrderedJson::array();
  for (const IndexEntry& e : diag.entries) {
    OrderedJson entry;
    entry["source"] = point_to_json(e.source);
    entry["z"] = point_to_json(e.z);
    entry["index"] = e.index;
    entries.push_back(std::move(entry));
  }
  j["entries"] = std::move(entries);
  j["index_sum"] = diag.index_sum;
  return j;
}

OrderedJson to_json(const PairingReport& report) {
  OrderedJson j;
  auto offsets = [](const std::vector<std::vector<Rational>>& sets) {
    OrderedJson arr = OrderedJson::array();
    for (const auto& per_coord : sets) {
      OrderedJson inner = OrderedJson::array();
      for (const Rational& v : per_coord) inner.push_back(v.str());
      arr.push_back(std::move(inner));
    }
    return arr;
  };
  j["A"] = offsets(report.a_pos);
  j["B"] = offsets(report.b_neg);
  OrderedJson missing = OrderedJson::array();
  for (const auto& [coord, b] : report.missing) {
    OrderedJson entry;
    entry["i"] = coord + 1;
    entry["b"] = b.str();
    missing.push_back(std::move(entry));
  }
  j["missing"] = std::move(missing);
  return j;
}

std::string dump_json(const OrderedJson& j) { return j.dump(2) + "\n"; }

}  // namespace cubepack

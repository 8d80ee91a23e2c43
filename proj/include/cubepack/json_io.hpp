#pragma once

#include <string>

#include <json.hpp>

#include "cubepack/chessboard.hpp"
#include "cubepack/cube_system.hpp"
#include "cubepack/erosion.hpp"
#include "cubepack/rigidity.hpp"
#include "cubepack/tiling_theorems.hpp"

namespace cubepack {

using OrderedJson = nlohmann::ordered_json;

/// Parses the instance format {"dim": d, "periods": [...]|null, "origins":
/// [["0","1/2"],...]}. Errors carry line/field diagnostics.
CubeSystem parse_instance(const std::string& text);

CubeSystem load_instance(const std::string& path);

/// Canonical byte-stable serialization; parse -> serialize round-trips
/// canonical files identically.
std::string serialize_instance(const CubeSystem& sys);

void write_file(const std::string& path, const std::string& contents);

OrderedJson point_to_json(const Point& p);
OrderedJson to_json(const ParityCertificate& cert);
OrderedJson to_json(const WitnessPair& pair);
OrderedJson to_json(const OrthantWitness& witness);
OrderedJson to_json(const BasisCertificate& cert);
OrderedJson to_json(const Decomposition& dec);
OrderedJson to_json(const FaceSet& faces);
OrderedJson to_json(const IndexDiagnostics& diag);
OrderedJson to_json(const PairingReport& report);

/// dump(2) plus trailing newline; the one formatting used everywhere.
std::string dump_json(const OrderedJson& j);

}  // namespace cubepack

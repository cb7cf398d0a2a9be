#pragma once

// JSON input / output: arrangement description parsing with strict schema
// validation, and deterministic serialization of analysis results.

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyparr/arrangement.hpp"
#include "hyparr/integrals.hpp"
#include "hyparr/stokes.hpp"
#include "hyparr/verify.hpp"

namespace hyparr {

/// Input schema (all rationals accepted as JSON numbers or strings such as
/// "3", "-1/2", "0.25"):
/// {
///   "k": 2,
///   "forms": [{"linear": [1, 0], "constant": 0}, ...],
///   "weights": [0.3, 0.4, 0.5],
///   "f0": [2, 1]
/// }
/// Throws SchemaError with a field-specific message on any violation.
ArrangementInput parse_arrangement(const nlohmann::json& j);

/// Reads and parses a file (SchemaError on unreadable file / invalid JSON).
ArrangementInput load_arrangement(const std::string& path);

nlohmann::json rational_json(const Rat& r);           // string "p/q" or "p"
nlohmann::json complex_json(std::complex<double> z);  // [re, im]

/// Combinatorial analysis: vertices, edges, chambers, bounded-below order.
nlohmann::json arrangement_json(const Arrangement& arr);

/// Both connection matrices as dense [re,im] grids plus the vanishing-pair
/// lists and the ODE data.
nlohmann::json stokes_json(const Arrangement& arr, const StokesMatrices& sm);

nlohmann::json quad_json(const QuadResult& r);

nlohmann::json reports_json(const std::vector<CheckReport>& reports);

/// Key-sorted, 2-space-indented dump with a trailing newline (byte-stable
/// across runs for equal inputs).
std::string dump_deterministic(const nlohmann::json& j);

}  // namespace hyparr

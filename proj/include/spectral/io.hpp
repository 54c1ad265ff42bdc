#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "spectral/affine.hpp"
#include "spectral/boolean_function.hpp"
#include "spectral/pdt.hpp"
#include "spectral/spectrum.hpp"

namespace spectral {

// Serialization conventions:
//   - truth tables: hex string of 2^n bits, big-endian by point index
//     (point 0 at the top bit of the first digit);
//   - linear forms: lowercase hex with explicit n nearby;
//   - everything JSON uses LF newlines and alphabetical keys, so equal
//     inputs serialize byte-identically.

std::string table_to_hex(const BooleanFunction& f);

// n = nullopt infers n from the digit count (requires n >= 2).
BooleanFunction table_from_hex(const std::string& hex, std::optional<int> n);

// Accepts an optional leading "n=<int>" line before the hex line.
BooleanFunction table_from_file_text(const std::string& text);

std::string form_to_hex(LinearForm f);
LinearForm form_from_hex(const std::string& s);
std::string form_to_string(int n, LinearForm f);  // "n=3, mask=0x5"

nlohmann::json spectrum_to_json(const Spectrum& sp);
Spectrum spectrum_from_json(const nlohmann::json& j);

nlohmann::json subspace_to_json(const AffineSubspace& v);
AffineSubspace subspace_from_json(const nlohmann::json& j);

nlohmann::json rational_to_json(const Rational& r);

nlohmann::json certificate_to_json(const NadtCertificate& cert);

std::string trace_to_csv(const ProcedureTrace& trace);
nlohmann::json trace_to_json(const ProcedureTrace& trace);

// ANF over 0/1 logic: '+'-separated monomials, each a '*'-joined list of
// x1..xn tokens or the constant "1"; result mapped 0 -> +1, 1 -> -1.
// n is the largest variable index seen. Throws std::invalid_argument.
BooleanFunction parse_anf(const std::string& text);

std::uint64_t fnv1a64(std::string_view data);
std::string fnv1a64_hex(std::string_view data);

}  // namespace spectral

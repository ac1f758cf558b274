#pragma once

#include <string>

#include "slicebergman/quadrature.hpp"
#include "slicebergman/quaternion.hpp"
#include "slicebergman/slicefun.hpp"
#include "slicebergman/transform.hpp"

namespace slicebergman {

/// File could not be opened or read.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed text or JSON content.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Text format used everywhere (CLI, JSON): `w,x,y,z` as four decimal floats.
/// A single float is accepted as a real quaternion.
Quaternion parse_quaternion(const std::string& text);
std::string format_quaternion(const Quaternion& q);

// JSON schemas:
//   SeriesFunction        {"radius": R, "coeffs": [[w,x,y,z], ...]}
//   LaguerreCoefficients  {"alpha": a, "coeffs": [[w,x,y,z], ...]}
//   HalfLineRule          {"alpha": a, "nodes": [...], "weights": [...]}
//   DiskRule              {"alpha": a, "R": R, "unit": [x,y,z],
//                          "radial_nodes": [...], "radial_weights": [...],
//                          "angular_count": N}
std::string to_json(const SeriesFunction& f);
std::string to_json(const LaguerreCoefficients& phi);
std::string to_json(const HalfLineRule& rule);
std::string to_json(const DiskRule& rule);

SeriesFunction series_function_from_json(const std::string& text);
LaguerreCoefficients laguerre_coefficients_from_json(const std::string& text);
HalfLineRule halfline_rule_from_json(const std::string& text);
DiskRule disk_rule_from_json(const std::string& text);

/// Whole-file read; FileError if the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace slicebergman

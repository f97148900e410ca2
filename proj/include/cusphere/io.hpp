#pragma once

/// Text, CSV and JSON rendering plus the angle-expression parser used by the
/// CLI. CSV numbers carry 17 significant digits so parsing an emitted file
/// reproduces every double bit-for-bit.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "cusphere/dynamics.hpp"
#include "cusphere/group.hpp"
#include "cusphere/types.hpp"

namespace cusphere {

/// Radians given either as a decimal ("0.25", "-1e-3") or as a pi fraction
/// ("pi", "-pi/30000", "2pi/3", "1.5pi"). Throws std::invalid_argument.
double parse_angle_expr(const std::string& text);

/// Shortest representation that round-trips the double exactly (%.17g).
std::string format_full(double v);

// --- trajectories -----------------------------------------------------------

/// Header: step,c1_re,c1_im,...,c6_re,c6_im. One row per recorded state.
std::string trajectory_csv(const Trajectory& trajectory);

/// Parses the states back out of trajectory_csv output.
std::vector<SixVector<Complex>> parse_trajectory_csv(std::istream& in);

// --- matrices ---------------------------------------------------------------

std::string matrix_text(const RealMat6& m);
std::string matrix_text(const ComplexMat6& m);
std::string matrix_text(const ComplexMat3& m);

/// Flattened row-major values on one line; complex entries interleave re,im.
std::string matrix_csv(const RealMat6& m);
std::string matrix_csv(const ComplexMat6& m);
std::string matrix_csv(const ComplexMat3& m);

/// {"rows": [[[re, im], ...], ...], "complex": bool, "meta": {...}}.
nlohmann::json matrix_json(const RealMat6& m, nlohmann::json meta = {});
nlohmann::json matrix_json(const ComplexMat6& m, nlohmann::json meta = {});
nlohmann::json matrix_json(const ComplexMat3& m, nlohmann::json meta = {});

nlohmann::json angles_meta(const Angles& angles, const ScaleParams& scales);

// --- finite group -----------------------------------------------------------

/// Aligned grid of signed tokens with a label header row/column.
std::string cayley_text(const CayleyTable& table);
nlohmann::json cayley_json(const CayleyTable& table);

std::string audit_text(const std::vector<RelationCheck>& report);

std::string quarter_turn_text(const QuarterTurnTable& table);
std::string orbit_text(OrientedPlane plane, const std::array<AxisMap, 6>& orbit);
nlohmann::json orbit_json(OrientedPlane plane, const std::array<AxisMap, 6>& orbit);

}  // namespace cusphere

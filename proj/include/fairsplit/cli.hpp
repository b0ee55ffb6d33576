#pragma once

#include "fairsplit/geometry.hpp"
#include "fairsplit/scalar.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace fairsplit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolName = "fairsplit";
inline constexpr const char* kToolVersion = "0.1.0";

/// "<y>x<x>", e.g. "3x2" or "3/2x1/4".
Rect parse_rect(std::string_view text);
std::string format_rect(const Rect& rect);

/// "r,r,..." with at least two entries.
std::vector<Scalar> parse_scalar_list(std::string_view text);
std::string format_scalar_list(const std::vector<Scalar>& values);

/// "u1,v1:u2,v2"
Chord parse_chord(const Rect& rect, std::string_view text);

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code: 0 feasible / pass /
/// hits found / written, 1 infeasible / fail / no hits, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fairsplit::cli

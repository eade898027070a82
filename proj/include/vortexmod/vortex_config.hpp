#pragma once

// Key-value problem files for the vortex solver. One "key = value" per line, '#' starts a
// comment. Keys: periods L1 L2; grid N1 N2; zero x y [m] (repeatable); e2; tau; tol;
// reg_width; max_iter. periods and grid are required.

#include "vortexmod/taubes_solver.hpp"

#include <filesystem>
#include <string_view>

namespace vortexmod {

taubes::VortexProblem parse_vortex_config(std::string_view text);

/// Relative paths that do not exist are looked up under $VORTEXMOD_CONFIG_DIR.
std::filesystem::path resolve_config_path(const std::filesystem::path& path);
taubes::VortexProblem load_vortex_config(const std::filesystem::path& path);

}  // namespace vortexmod

#pragma once

#include <string>

#include "cubepack/box.hpp"
#include "cubepack/chessboard.hpp"
#include "cubepack/cube_system.hpp"

namespace cubepack {

/// d=2 only. White cubes for S0, black for S1, unit grid lines in light
/// gray; positions are exact rationals scaled by an integer pixel factor.
std::string render_decomposition_svg(const CubeSystem& sys,
                                     const Decomposition& dec,
                                     const Box& window, int scale);

/// All cubes drawn white; same grid and scaling conventions.
std::string render_instance_svg(const CubeSystem& sys, const Box& window,
                                int scale);

/// Default drawing window: two periods per coordinate for periodic
/// instances, the integral bounding box of the cubes otherwise.
Box default_render_window(const CubeSystem& sys);

}  // namespace cubepack

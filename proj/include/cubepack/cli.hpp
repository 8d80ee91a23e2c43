#pragma once

#include <string>
#include <vector>

namespace cubepack {

/// Batch front end. Exit codes: 0 success, 1 usage or parse failure,
/// 2 semantic refutation (overlap, uncovered point, violated hypothesis...).
int run_cli(const std::vector<std::string>& args);

}  // namespace cubepack

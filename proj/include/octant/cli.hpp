#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace octant {

/// Entry point behind the octant binary. Exit codes: 0 success,
/// 2 configuration or validation error, 3 numerical integration failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace octant

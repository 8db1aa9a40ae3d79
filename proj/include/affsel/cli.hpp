#pragma once

#include <iostream>
#include <string>
#include <vector>

namespace affsel {

/// Command-line driver. `args` excludes the program name. Exit codes:
/// 0 = computed (found and none_exists alike), 1 = input error,
/// 2 = domain / not-interior error.
int run_cli(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace affsel

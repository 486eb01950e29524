#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace setlink::cli {

/// Full command-line surface; main() forwards here. Exit codes: 0 success or
/// claims upheld, 1 claim refuted, 2 bad usage or parse error, 3 unsatisfied
/// hypothesis, 4 capacity exceeded.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace setlink::cli

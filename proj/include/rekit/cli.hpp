#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rekit::cli {

/// Exit codes: 0 success, 1 model-level infeasibility, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Instance path lookup: the path itself, then $REKIT_EXAMPLES and the
/// bundled instance directory (a leading "examples/" is dropped there).
std::string resolve_instance(const std::string& path);

}  // namespace rekit::cli

#pragma once

#include <iosfwd>

namespace fzzt::cli {

/// Exit codes: 0 success, 1 computation or io failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// CSV grid for figure id in 1..8 (header row, LF endings, 17 digits).
void write_figure(int id, std::ostream& out);

}  // namespace fzzt::cli

#pragma once

#include <iosfwd>

namespace paratask::cli {

// Exit codes: 0 success, 1 usage error (help text on err), 2 data or runtime
// error (one diagnostic line on err).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace paratask::cli

#pragma once

namespace harper::cli {

// Parses and dispatches a full command line. Returns the process exit status:
// 0 on success, 1 on a validation/usage error, 2 on a numerical failure.
int run(int argc, const char* const* argv);

} // namespace harper::cli

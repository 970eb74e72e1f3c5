#pragma once

#include <string>

namespace harper {

// Shortest decimal string that round-trips to the same double (at most 17
// significant digits), locale-independent.
std::string format_double(double v);

} // namespace harper

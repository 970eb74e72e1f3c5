#pragma once

#include <functional>

namespace harper {

// Adaptive Simpson integration to an absolute tolerance. The integrand must be
// finite on [a, b]; integrable endpoint singularities are expected to have been
// removed by substitution before calling this.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol, int max_depth = 48);

} // namespace harper

#pragma once

namespace nilfocus {

/// Gamma(x) for x > 0, Lanczos approximation (g=7, 9 terms), long double internally.
/// Relative accuracy ~1e-15 over the arguments used here.
double gamma_fn(double x);

/// log Gamma(x) for x > 0.
double lgamma_fn(double x);

/// Gamma(a) * Gamma(b) / Gamma(c), evaluated through log-gamma in extended
/// precision so that the ratio keeps >= 12 significant digits even when the
/// individual factors are large.
double gamma_ratio(double a, double b, double c);

}  // namespace nilfocus

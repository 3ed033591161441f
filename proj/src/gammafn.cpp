#include "nilfocus/gammafn.hpp"

#include <cmath>
#include <stdexcept>

namespace nilfocus {

namespace {

// Lanczos, g = 7, 9 coefficients (Godfrey's set).
constexpr long double kLanczos[9] = {
    0.99999999999980993227684700473478L,
    676.520368121885098567009190444019L,
    -1259.13921672240287047156078755283L,
    771.3234287776530788486528258894L,
    -176.61502916214059906584551354L,
    12.507343278686904814458936853L,
    -0.13857109526572011689554707L,
    9.984369578019570859563e-6L,
    1.50563273514931155834e-7L};

long double lanczos_sum(long double x) {
    long double s = kLanczos[0];
    for (int i = 1; i < 9; ++i) s += kLanczos[i] / (x + i - 1);
    return s;
}

long double lgamma_ld(long double x) {
    if (x <= 0) throw std::domain_error("lgamma_fn: requires x > 0");
    if (x < 0.5L) {
        // reflection, only hit for the small base arguments like 1/(2l)
        constexpr long double pi = 3.14159265358979323846264338327950288L;
        return std::log(pi / std::sin(pi * x)) - lgamma_ld(1.0L - x);
    }
    constexpr long double half_log_two_pi = 0.91893853320467274178032973640561764L;
    long double z = x - 1.0L;
    long double t = z + 7.5L;
    return half_log_two_pi + (z + 0.5L) * std::log(t) - t + std::log(lanczos_sum(z + 1.0L));
}

}  // namespace

double gamma_fn(double x) {
    if (x <= 0) throw std::domain_error("gamma_fn: requires x > 0");
    return static_cast<double>(std::exp(lgamma_ld(static_cast<long double>(x))));
}

double lgamma_fn(double x) { return static_cast<double>(lgamma_ld(static_cast<long double>(x))); }

double gamma_ratio(double a, double b, double c) {
    long double s = lgamma_ld(static_cast<long double>(a)) + lgamma_ld(static_cast<long double>(b)) -
                    lgamma_ld(static_cast<long double>(c));
    return static_cast<double>(std::exp(s));
}

}  // namespace nilfocus

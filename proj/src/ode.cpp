#include "nilfocus/ode.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace nilfocus {

namespace {

// Dormand-Prince 5(4) tableau.
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                 a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b5th - b4th (error weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                 e6 = 22.0 / 525, e7 = -1.0 / 40;
// dense output weights (Hairer DOPRI5 rcont5)
constexpr double d1 = -12715105075.0 / 11282082432.0, d3 = 87487479700.0 / 32700410799.0,
                 d4 = -10690763975.0 / 1880347072.0, d5 = 701980252875.0 / 199316789632.0,
                 d6 = -1453857185.0 / 822651844.0, d7 = 69997945.0 / 29380423.0;

}  // namespace

size_t OdeSolution::segment_index(double t) const {
    // dense steps are contiguous and sorted by t0
    size_t lo = 0, hi = dense.size();
    while (hi - lo > 1) {
        size_t mid = (lo + hi) / 2;
        if (dense[mid].t0 <= t)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

double OdeSolution::eval(double t, int comp) const {
    const DenseStep& s = dense[segment_index(t)];
    double th = (t - s.t0) / s.h, th1 = 1.0 - th;
    return s.rcont1[comp] +
           th * (s.rcont2[comp] +
                 th1 * (s.rcont3[comp] + th * (s.rcont4[comp] + th1 * s.rcont5[comp])));
}

void OdeSolution::eval_all(double t, std::vector<double>& y) const {
    const DenseStep& s = dense[segment_index(t)];
    double th = (t - s.t0) / s.h, th1 = 1.0 - th;
    y.resize(s.rcont1.size());
    for (size_t c = 0; c < y.size(); ++c)
        y[c] = s.rcont1[c] +
               th * (s.rcont2[c] + th1 * (s.rcont3[c] + th * (s.rcont4[c] + th1 * s.rcont5[c])));
}

bool OdeSolution::find_upcrossing(double t_from, int comp, double* t_root) const {
    for (const DenseStep& s : dense) {
        double ta = std::max(s.t0, t_from), tb = s.t0 + s.h;
        if (tb <= t_from) continue;
        double fa = eval(ta, comp), fb = eval(tb, comp);
        // scan the step on a fine grid: crossings can sit inside one step
        const int kGrid = 16;
        double prev_t = ta, prev_f = fa;
        for (int g = 1; g <= kGrid; ++g) {
            double tg = ta + (tb - ta) * g / kGrid;
            double fg = (g == kGrid) ? fb : eval(tg, comp);
            if (prev_f < 0.0 && fg >= 0.0) {
                double lo = prev_t, hi = tg;
                for (int it = 0; it < 80; ++it) {
                    double mid = 0.5 * (lo + hi);
                    if (eval(mid, comp) < 0.0)
                        lo = mid;
                    else
                        hi = mid;
                }
                *t_root = 0.5 * (lo + hi);
                return true;
            }
            prev_t = tg;
            prev_f = fg;
        }
    }
    return false;
}

OdeSolution integrate_dense(const OdeRhs& f, std::vector<double> y, double t0, double t1,
                            const OdeOptions& opts) {
    OdeSolution sol;
    sol.t_begin = t0;
    const size_t n = y.size();
    std::vector<double> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), ytmp(n), ynew(n);

    double t = t0;
    f(t, y, k1);
    double h = opts.h_init;
    if (h <= 0) {
        double ynorm = 0, fnorm = 0;
        for (size_t i = 0; i < n; ++i) {
            ynorm = std::max(ynorm, std::fabs(y[i]));
            fnorm = std::max(fnorm, std::fabs(k1[i]));
        }
        h = (fnorm > 1e-12) ? 0.01 * std::max(ynorm, 1.0) / fnorm : 1e-3;
        h = std::min(h, t1 - t0);
    }

    while (t < t1) {
        if (sol.steps++ > opts.max_steps) {
            sol.error = "max step count exceeded at t=" + std::to_string(t);
            return sol;
        }
        if (h < 1e-14 * std::max(1.0, std::fabs(t))) {
            sol.error = "step size underflow at t=" + std::to_string(t);
            return sol;
        }
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }

        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * a21 * k1[i];
        f(t + c2 * h, ytmp, k2);
        for (size_t i = 0; i < n; ++i) ytmp[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        f(t + c3 * h, ytmp, k3);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        f(t + c4 * h, ytmp, k4);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
        f(t + c5 * h, ytmp, k5);
        for (size_t i = 0; i < n; ++i)
            ytmp[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] +
                                  a65 * k5[i]);
        f(t + h, ytmp, k6);
        for (size_t i = 0; i < n; ++i)
            ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
        f(t + h, ynew, k7);

        double err = 0;
        for (size_t i = 0; i < n; ++i) {
            double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] +
                             e7 * k7[i]);
            double sc = opts.abs_tol +
                        opts.rel_tol * std::max(std::fabs(y[i]), std::fabs(ynew[i]));
            err += (ei / sc) * (ei / sc);
        }
        err = std::sqrt(err / n);

        if (err <= 1.0) {
            DenseStep ds;
            ds.t0 = t;
            ds.h = h;
            ds.rcont1.resize(n);
            ds.rcont2.resize(n);
            ds.rcont3.resize(n);
            ds.rcont4.resize(n);
            ds.rcont5.resize(n);
            for (size_t i = 0; i < n; ++i) {
                double ydiff = ynew[i] - y[i];
                double bspl = h * k1[i] - ydiff;
                ds.rcont1[i] = y[i];
                ds.rcont2[i] = ydiff;
                ds.rcont3[i] = bspl;
                ds.rcont4[i] = ydiff - h * k7[i] - bspl;
                ds.rcont5[i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                    d6 * k6[i] + d7 * k7[i]);
            }
            sol.dense.push_back(std::move(ds));
            t += h;
            y.swap(ynew);
            k1.swap(k7);  // FSAL
            if (opts.on_step && !opts.on_step(t, y)) {
                sol.error = "aborted by observer at t=" + std::to_string(t);
                sol.t_end = t;
                sol.y_final = y;
                return sol;
            }
            if (last) break;
        }
        double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.2);
        h *= std::clamp(fac, 0.2, 5.0);
    }
    sol.ok = true;
    sol.t_end = t1;
    sol.y_final = y;
    return sol;
}

}  // namespace nilfocus

#pragma once

#include <array>
#include <string>
#include <vector>

#include "nilfocus/lyapunov.hpp"
#include "nilfocus/ode.hpp"

namespace nilfocus {

/// One pass of the Poincare return map on the section {x = 0, y > 0}
/// (theta = 0 in generalized polar coordinates x = r^l Sn, y = r Cs).
struct ReturnMapResult {
    bool ok = false;
    std::string error;
    double rho = 0;       // initial radius
    double p_rho = 0;     // radius after one period of theta
    double delta = 0;     // p_rho - rho
    long steps = 0;
    double min_denominator = 1;  // min of the orbit-equation denominator
    double err_est = 0;          // step-doubling error estimate
};

/// Integrates the polar orbit equation dr/dtheta over [0, Omega]. The
/// denominator 1 - l m r^{2s-l+1} Sn Cs^{2s+1} - r^{(2k-1)l+1} Sn^{2k+1} Cs
/// must stay >= 1/2 along the pass; otherwise rho is too large and an error
/// names the constraint. Relative accuracy is ~10*tol, estimated by comparing
/// passes at tol and tol/10.
ReturnMapResult return_map(const Params& p, double rho, double tol);

struct Trajectory {
    bool ok = false;
    std::string error;
    std::vector<std::array<double, 3>> samples;  // (t, x, y)
    OdeSolution solution;                        // dense output for event detection

    /// CSV with header "t,x,y", one sample per line.
    std::string to_csv() const;
};

/// Integrates xdot = y^{2l-1} - x^{2k+1}, ydot = -x + m y^{2s+1} from (x0, y0)
/// over [0, t_end], with blow-up detection (|x|, |y| capped at 1e3).
Trajectory integrate_cartesian(const Params& p, double x0, double y0, double t_end, double tol);

/// y-values of successive crossings of {x = 0, y > 0} with x increasing,
/// located by dense-output root finding.
std::vector<double> section_crossings(const Trajectory& traj);

enum class ProbeResult { Attractor, Repeller, Inconclusive };
std::string to_string(ProbeResult r);

struct ProbeReport {
    ProbeResult result = ProbeResult::Inconclusive;
    std::vector<double> rho;
    std::vector<double> delta;
    std::vector<double> err_est;
    std::string note;
};

/// Empirical classification: the sign of delta must be consistent over the
/// grid and each |delta| must exceed 10x the estimated integration error;
/// otherwise Inconclusive (with a note, never an invented verdict).
ProbeReport stability_probe(const Params& p, const std::vector<double>& rho_grid, double tol);

}  // namespace nilfocus

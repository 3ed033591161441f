#pragma once

#include <functional>
#include <string>
#include <vector>

namespace nilfocus {

// Adaptive Dormand-Prince 5(4) with the classical order-4 continuous extension.
// Small fixed problems only (dimension <= 4), so states are plain vectors.

using OdeRhs = std::function<void(double t, const std::vector<double>& y, std::vector<double>& dydt)>;

struct OdeOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-10;
    double h_init = 0.0;  // 0 -> automatic
    long max_steps = 2000000;
    // Called after each accepted step; return false to abort the integration.
    std::function<bool(double t, const std::vector<double>& y)> on_step;
};

struct DenseStep {
    double t0 = 0, h = 0;
    // rcont[c][i], c = 0..4, one set per component
    std::vector<double> rcont1, rcont2, rcont3, rcont4, rcont5;
};

class OdeSolution {
  public:
    bool ok = false;
    std::string error;
    long steps = 0;
    double t_begin = 0, t_end = 0;
    std::vector<DenseStep> dense;
    std::vector<double> y_final;

    /// Dense-output evaluation of component `comp` at time t in [t_begin, t_end].
    double eval(double t, int comp) const;
    void eval_all(double t, std::vector<double>& y) const;

    /// Finds the smallest t in (t_from, t_end] where component comp crosses zero
    /// going from negative to positive. Returns false if there is none.
    bool find_upcrossing(double t_from, int comp, double* t_root) const;

  private:
    size_t segment_index(double t) const;
};

/// Integrates y' = f(t, y) from t0 to t1 (t1 > t0), storing dense output.
OdeSolution integrate_dense(const OdeRhs& f, std::vector<double> y0, double t0, double t1,
                            const OdeOptions& opts);

}  // namespace nilfocus

#pragma once

#include <memory>

#include "nilfocus/ode.hpp"

namespace nilfocus {

// Lyapunov's generalized trigonometric pair (Cs, Sn): the solution of
//   dx/dtheta = -y^(2p-1),  dy/dtheta = x^(2q-1),  x(0) = (1/p)^(1/(2q)), y(0) = 0,
// with p = 1, q = l throughout except for the general-period helper.
// Conservation law for p = 1: Cs^(2l) + l*Sn^2 = 1.

struct TrigState {
    double theta = 0;
    double cs = 1;
    double sn = 0;
};

/// Period Omega of (Cs, Sn) for general (p, q), via the Gamma closed form.
double period(int p, int q);

/// Cs/Sn at a single theta (theta reduced modulo Omega first).
TrigState gtrig_eval(int l, double theta, double tol = 1e-12);

/// One full period of (Cs, Sn) with dense output, for repeated evaluation
/// (quadrature, return maps). Immutable after construction.
class GtrigTable {
  public:
    explicit GtrigTable(int l, double tol = 1e-12);

    int l() const { return l_; }
    double omega() const { return omega_; }
    double cs(double theta) const;
    double sn(double theta) const;
    TrigState eval(double theta) const;
    /// Worst conservation-law residual seen on the accepted grid.
    double max_residual() const { return max_residual_; }

  private:
    double reduce(double theta) const;
    int l_;
    double omega_;
    double max_residual_ = 0;
    OdeSolution sol_;
};

}  // namespace nilfocus

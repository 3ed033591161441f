#include "nilfocus/gtrig.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nilfocus/gammafn.hpp"

namespace nilfocus {

namespace {

double ipow(double x, int n) {
    double r = 1;
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

OdeRhs gtrig_rhs(int l) {
    return [l](double, const std::vector<double>& y, std::vector<double>& dydt) {
        dydt[0] = -y[1];               // Cs' = -Sn
        dydt[1] = ipow(y[0], 2 * l - 1);  // Sn' = Cs^(2l-1)
    };
}

double conservation_residual(int l, double cs, double sn) {
    return std::fabs(ipow(cs, 2 * l) + l * sn * sn - 1.0);
}

OdeSolution integrate_period(int l, double theta_end, double tol, double* max_res) {
    OdeOptions opts;
    opts.rel_tol = tol;
    opts.abs_tol = tol;
    double worst = 0;
    opts.on_step = [l, &worst](double, const std::vector<double>& y) {
        worst = std::max(worst, conservation_residual(l, y[0], y[1]));
        return true;
    };
    OdeSolution sol = integrate_dense(gtrig_rhs(l), {1.0, 0.0}, 0.0, theta_end, opts);
    if (max_res) *max_res = worst;
    return sol;
}

}  // namespace

double period(int p, int q) {
    if (p <= 0 || q <= 0) throw std::domain_error("period: p and q must be positive");
    double ip = 1.0 / (2.0 * p), iq = 1.0 / (2.0 * q);
    return 2.0 * std::pow(double(p), -iq) * std::pow(double(q), -ip) * gamma_ratio(ip, iq, ip + iq);
}

TrigState gtrig_eval(int l, double theta, double tol) {
    if (l < 1) throw std::domain_error("gtrig_eval: l >= 1 required");
    if (tol <= 0) throw std::domain_error("gtrig_eval: tol > 0 required");
    double om = period(1, l);
    double th = std::fmod(theta, om);
    if (th < 0) th += om;

    TrigState st;
    st.theta = theta;
    if (th == 0) return st;

    for (int attempt = 0; attempt < 2; ++attempt) {
        double cur_tol = (attempt == 0) ? tol : tol / 10;
        double worst = 0;
        OdeSolution sol = integrate_period(l, th, cur_tol, &worst);
        if (!sol.ok) throw std::runtime_error("gtrig_eval: integrator failure: " + sol.error);
        if (worst <= 10 * tol || attempt == 1) {
            if (worst > 10 * tol)
                throw std::runtime_error("gtrig_eval: conservation residual " +
                                         std::to_string(worst) + " exceeds budget after retry");
            st.cs = sol.y_final[0];
            st.sn = sol.y_final[1];
            return st;
        }
    }
    return st;  // unreachable
}

GtrigTable::GtrigTable(int l, double tol) : l_(l) {
    if (l < 1) throw std::domain_error("GtrigTable: l >= 1 required");
    omega_ = period(1, l);
    sol_ = integrate_period(l, omega_, tol, &max_residual_);
    if (!sol_.ok) throw std::runtime_error("GtrigTable: integrator failure: " + sol_.error);
}

double GtrigTable::reduce(double theta) const {
    double th = std::fmod(theta, omega_);
    if (th < 0) th += omega_;
    return th;
}

double GtrigTable::cs(double theta) const { return sol_.eval(reduce(theta), 0); }
double GtrigTable::sn(double theta) const { return sol_.eval(reduce(theta), 1); }

TrigState GtrigTable::eval(double theta) const {
    double th = reduce(theta);
    TrigState st;
    st.theta = theta;
    st.cs = sol_.eval(th, 0);
    st.sn = sol_.eval(th, 1);
    return st;
}

}  // namespace nilfocus

#include "nilfocus/simulate.hpp"

#include <cmath>
#include <sstream>

#include "nilfocus/gtrig.hpp"

namespace nilfocus {

namespace {

double ipow(double b, int e) {
    double r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

struct PolarPass {
    bool ok = false;
    std::string error;
    double r_end = 0;
    long steps = 0;
    double min_den = 1;
};

/// One integration of the orbit equation with the trig pair carried as extra
/// state (r, cs, sn), so no interpolation error enters the right-hand side.
PolarPass polar_pass(const Params& p, double rho, double tol) {
    const int l = p.l, k = p.k, s = p.s;
    const double m = p.m.as_double();
    const double omega = period(1, l);

    auto denominator = [&](double r, double cs, double sn) {
        return 1.0 - l * m * ipow(r, 2 * s - l + 1) * sn * ipow(cs, 2 * s + 1) -
               ipow(r, (2 * k - 1) * l + 1) * ipow(sn, 2 * k + 1) * cs;
    };
    OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dy) {
        const double r = y[0], cs = y[1], sn = y[2];
        const double num =
            m * ipow(r, 2 * s - l + 2) * ipow(cs, 2 * s + 2 * l) -
            ipow(r, (2 * k - 1) * l + 2) * ipow(sn, 2 * k + 2);
        dy[0] = num / denominator(r, cs, sn);
        dy[1] = -sn;
        dy[2] = ipow(cs, 2 * l - 1);
    };

    PolarPass pass;
    OdeOptions opts;
    opts.rel_tol = opts.abs_tol = tol;
    opts.on_step = [&](double, const std::vector<double>& y) {
        double den = denominator(y[0], y[1], y[2]);
        if (den < pass.min_den) pass.min_den = den;
        return den >= 0.5;
    };
    OdeSolution sol = integrate_dense(rhs, {rho, 1.0, 0.0}, 0.0, omega, opts);
    pass.steps = sol.steps;
    if (pass.min_den < 0.5) {
        pass.error =
            "orbit-equation denominator dipped below 1/2: rho too large, reduce rho "
            "(rho_max depends on (l,k,s,m))";
        return pass;
    }
    if (!sol.ok) {
        pass.error = sol.error;
        return pass;
    }
    pass.ok = true;
    pass.r_end = sol.y_final[0];
    return pass;
}

}  // namespace

ReturnMapResult return_map(const Params& p, double rho, double tol) {
    if (!p.valid()) throw std::invalid_argument("return_map: invalid parameters");
    if (rho < 0 || tol <= 0) throw std::invalid_argument("return_map: rho >= 0, tol > 0 required");
    ReturnMapResult res;
    res.rho = rho;
    if (rho == 0) {  // r = 0 is the equilibrium
        res.ok = true;
        return res;
    }
    PolarPass coarse = polar_pass(p, rho, tol);
    if (!coarse.ok) {
        res.error = coarse.error;
        res.min_denominator = coarse.min_den;
        return res;
    }
    PolarPass fine = polar_pass(p, rho, tol / 10);
    if (!fine.ok) {
        res.error = fine.error;
        res.min_denominator = fine.min_den;
        return res;
    }
    res.ok = true;
    res.p_rho = fine.r_end;
    res.delta = fine.r_end - rho;
    res.steps = coarse.steps + fine.steps;
    res.min_denominator = std::min(coarse.min_den, fine.min_den);
    res.err_est = std::fabs(fine.r_end - coarse.r_end);
    return res;
}

std::string Trajectory::to_csv() const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(15);
    os << "t,x,y\n";
    for (const auto& s : samples) os << s[0] << "," << s[1] << "," << s[2] << "\n";
    return os.str();
}

Trajectory integrate_cartesian(const Params& p, double x0, double y0, double t_end, double tol) {
    if (!p.valid()) throw std::invalid_argument("integrate_cartesian: invalid parameters");
    const int l = p.l, k = p.k, s = p.s;
    const double m = p.m.as_double();
    constexpr double kBlowUp = 1e3;

    OdeRhs rhs = [&](double, const std::vector<double>& y, std::vector<double>& dy) {
        dy[0] = ipow(y[1], 2 * l - 1) - ipow(y[0], 2 * k + 1);
        dy[1] = -y[0] + m * ipow(y[1], 2 * s + 1);
    };
    Trajectory traj;
    OdeOptions opts;
    opts.rel_tol = opts.abs_tol = tol;
    bool blew_up = false;
    opts.on_step = [&](double, const std::vector<double>& y) {
        if (std::fabs(y[0]) > kBlowUp || std::fabs(y[1]) > kBlowUp) {
            blew_up = true;
            return false;
        }
        return true;
    };
    traj.solution = integrate_dense(rhs, {x0, y0}, 0.0, t_end, opts);
    if (blew_up) {
        traj.error = "trajectory norm exceeded the blow-up bound 1e3";
        return traj;
    }
    if (!traj.solution.ok) {
        traj.error = traj.solution.error;
        return traj;
    }
    traj.ok = true;
    const int n_samples = 2000;
    std::vector<double> y(2);
    for (int i = 0; i <= n_samples; ++i) {
        double t = t_end * i / n_samples;
        traj.solution.eval_all(t, y);
        traj.samples.push_back({t, y[0], y[1]});
    }
    return traj;
}

std::vector<double> section_crossings(const Trajectory& traj) {
    std::vector<double> ys;
    if (traj.solution.dense.empty()) return ys;
    double t = traj.solution.t_begin;
    double t_root;
    while (traj.solution.find_upcrossing(t, 0, &t_root)) {
        double y = traj.solution.eval(t_root, 1);
        if (y > 0) ys.push_back(y);
        t = t_root + 1e-9;
    }
    return ys;
}

std::string to_string(ProbeResult r) {
    switch (r) {
        case ProbeResult::Attractor: return "attractor";
        case ProbeResult::Repeller: return "repeller";
        case ProbeResult::Inconclusive: return "inconclusive";
    }
    return "?";
}

ProbeReport stability_probe(const Params& p, const std::vector<double>& rho_grid, double tol) {
    ProbeReport rep;
    int sign_seen = 0;
    bool consistent = true, above_floor = true;
    for (double rho : rho_grid) {
        ReturnMapResult r = return_map(p, rho, tol);
        if (!r.ok) {
            rep.note = "return map failed at rho=" + std::to_string(rho) + ": " + r.error;
            rep.result = ProbeResult::Inconclusive;
            return rep;
        }
        rep.rho.push_back(rho);
        rep.delta.push_back(r.delta);
        rep.err_est.push_back(r.err_est);
        if (std::fabs(r.delta) <= 10 * r.err_est) above_floor = false;
        int s = r.delta > 0 ? 1 : (r.delta < 0 ? -1 : 0);
        if (sign_seen == 0)
            sign_seen = s;
        else if (s != 0 && s != sign_seen)
            consistent = false;
    }
    if (!consistent || sign_seen == 0 || !above_floor) {
        rep.result = ProbeResult::Inconclusive;
        rep.note = !consistent ? "delta sign inconsistent across the rho grid"
                               : "delta below the 10x integration-error floor; "
                                 "use exact rational m or larger rho";
        return rep;
    }
    rep.result = sign_seen > 0 ? ProbeResult::Repeller : ProbeResult::Attractor;
    return rep;
}

}  // namespace nilfocus

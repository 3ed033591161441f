#include "nilfocus/lyapunov.hpp"

#include <cmath>
#include <stdexcept>

#include "nilfocus/quadrature.hpp"

namespace nilfocus {

std::string to_string(Stability s) {
    return s == Stability::Attractor ? "attractor" : "repeller";
}

std::string to_string(Regime r) {
    switch (r) {
        case Regime::SLessKL: return "s<kl";
        case Regime::SGreaterKL: return "s>kl";
        case Regime::CriticalOffStar: return "s=kl m!=m*";
        case Regime::CriticalAtStar: return "s=kl m=m*";
    }
    return "?";
}

Rational m_star(int l, int k) {
    if (l < 2 || k < 1) throw std::domain_error("m_star: l >= 2 and k >= 1 required");
    return gen_factorial(2 * k + 1, 2) / gen_factorial(2 * k * l + 1, 2 * l);
}

TrigPolynomial v_poly(int l, int k, const Rational& m) {
    TrigPolynomial v = TrigPolynomial::monomial(m, 0, 2 * (k + 1) * l);
    v.add_term(-1, 2 * k + 2, 0);
    return v;
}

TrigPolynomial w_poly(int l, int k, const Rational& m) {
    TrigPolynomial w = TrigPolynomial::monomial(l * m, 1, 2 * k * l + 1);
    w.add_term(1, 2 * k + 1, 1);
    return w;
}

LyapunovReport u_first_nonzero_generic(const Params& p) {
    const int l = p.l, k = p.k, s = p.s;
    const bool m_is_zero = p.m.exact ? (p.m.rat == 0) : (p.m.approx == 0.0);
    LyapunovReport rep;
    if (s > k * l || m_is_zero) {
        rep.regime = (s > k * l) ? Regime::SGreaterKL
                                 : (s < k * l ? Regime::SLessKL : Regime::CriticalOffStar);
        rep.first_index = (2 * k - 1) * l + 2;
        ExactMoment v = moment_exact(l, 2 * k + 2, 0);
        v.coeff = -v.coeff;
        rep.exact_value = v;
        rep.float_value = v.value();
        rep.stability = Stability::Attractor;
        return rep;
    }
    if (s < k * l) {
        rep.regime = Regime::SLessKL;
        rep.first_index = 2 * s - l + 2;
        ExactMoment base_m = moment_exact(l, 0, 2 * s + 2 * l);
        if (p.m.exact) {
            ExactMoment v = p.m.rat * base_m;
            rep.exact_value = v;
            rep.float_value = v.value();
            rep.stability = v.sign() > 0 ? Stability::Repeller : Stability::Attractor;
        } else {
            rep.float_value = p.m.approx * base_m.value();
            rep.stability = rep.float_value > 0 ? Stability::Repeller : Stability::Attractor;
        }
        return rep;
    }
    throw std::invalid_argument("u_first_nonzero_generic: regime requires s != kl or m = 0");
}

ExactMoment u_K1(int l, int k, const Rational& m) {
    // both moments canonicalize to base B(0,0)
    return m * moment_exact(l, 0, 2 * (k + 1) * l) - moment_exact(l, 2 * k + 2, 0);
}

Certificate u_2K1_is_zero(int l, int k) {
    Rational m = m_star(l, k);
    Certificate cert;
    cert.claim = "u_2K1_zero";
    cert.l = l;
    cert.k = k;

    ExactMoment uk1 = u_K1(l, k, m);
    cert.add("u_K1_coeff", uk1.coeff);
    cert.require("eq", "u_K1_coeff", "0");

    TrigPolynomial vw = v_poly(l, k, m) * w_poly(l, k, m);
    int idx = 0;
    for (const auto& [key, c] : vw.terms()) {
        auto [si, cj] = key;
        std::string tag = "vw_term_" + std::to_string(idx++);
        cert.add(tag + "_coeff", c);
        cert.add(tag + "_sn_exp", si);
        cert.add(tag + "_cs_exp", cj);
        cert.add(tag + "_odd_parity", (si % 2) + (cj % 2));
        cert.require("ge", tag + "_odd_parity", "1");
    }
    cert.settle();
    cert.float_hint = 0.0;
    return cert;
}

U3K1Result u_3K1(int l, int k) {
    const Rational m = m_star(l, k);
    const TrigPolynomial v = v_poly(l, k, m);
    const TrigPolynomial vw = v * w_poly(l, k, m);

    // G(theta) = int_0^theta v w: expand each (odd-in-Sn) monomial via the
    // reduction recurrence, then fix the integration constant at theta = 0.
    TrigPolynomial G;
    for (const auto& [key, c] : vw.terms()) {
        auto [si, cj] = key;
        G = G + antiderivative_odd_i(l, si, cj).scaled(c);
    }
    Rational g0 = 0;  // G's antiderivative part at (Sn,Cs) = (0,1)
    for (const auto& [key, c] : G.terms())
        if (key.first == 0) g0 += c;

    U3K1Result r;
    r.V = (v * G).integrate_period(l);
    r.V.coeff = -r.V.coeff;
    // the dropped constant contributes g0 * int v = g0 * u_{K+1}(Omega) = 0
    ExactMoment uk1 = u_K1(l, k, m);
    if (!uk1.is_zero()) throw std::logic_error("u_3K1: u_K1(m*) must vanish");

    r.W = (vw * w_poly(l, k, m)).integrate_period(l);
    r.total = Rational(index_step(l, k)) * r.V + r.W;
    return r;
}

double u3K1_numeric(int l, int k, double tol, double* V_out, double* W_out) {
    if (tol <= 0) throw std::domain_error("u3K1_numeric: tol > 0 required");
    const double m = to_double(m_star(l, k));
    GtrigTable trig(l, 1e-13);
    const double om = trig.omega();

    auto v = [&](double th) {
        TrigState st = trig.eval(th);
        return m * std::pow(st.cs, 2 * (k + 1) * l) - std::pow(st.sn, 2 * k + 2);
    };
    auto w = [&](double th) {
        TrigState st = trig.eval(th);
        return l * m * st.sn * std::pow(st.cs, 2 * k * l + 1) +
               std::pow(st.sn, 2 * k + 1) * st.cs;
    };
    auto vw = [&](double th) { return v(th) * w(th); };

    const double inner_tol = tol / 50;
    auto G = [&](double th) { return adaptive_quad(vw, 0.0, th, inner_tol); };
    double V = -adaptive_quad([&](double th) { return v(th) * G(th); }, 0.0, om, tol);
    double W = adaptive_quad([&](double th) { return vw(th) * w(th); }, 0.0, om, tol);
    if (V_out) *V_out = V;
    if (W_out) *W_out = W;
    return index_step(l, k) * V + W;
}

double u3K1_numeric(int l, int k, double tol) { return u3K1_numeric(l, k, tol, nullptr, nullptr); }

LyapunovReport classify(const Params& p) {
    if (!p.valid())
        throw std::invalid_argument("classify: require l,k,s >= 1 and 2 <= l <= 2s");
    const int l = p.l, k = p.k, s = p.s;
    const bool m_is_zero = p.m.exact ? (p.m.rat == 0) : (p.m.approx == 0.0);

    if (s != k * l || m_is_zero) return u_first_nonzero_generic(p);

    const Rational ms = m_star(l, k);
    LyapunovReport rep;
    if (p.m.exact && p.m.rat == ms) {
        rep.regime = Regime::CriticalAtStar;
        rep.first_index = 3 * index_step(l, k) + 1;
        U3K1Result u = u_3K1(l, k);
        rep.exact_value = u.total;
        rep.float_value = u.total.value();
        rep.stability = Stability::Repeller;  // total > 0 always; asserted below
        if (u.total.sign() <= 0) throw std::logic_error("classify: u_3K1 total not positive");
        rep.certificate = u_2K1_is_zero(l, k);
        return rep;
    }

    rep.regime = Regime::CriticalOffStar;
    rep.first_index = index_step(l, k) + 1;
    if (p.m.exact) {
        ExactMoment v = u_K1(l, k, p.m.rat);
        rep.exact_value = v;
        rep.float_value = v.value();
        rep.stability = v.sign() > 0 ? Stability::Repeller : Stability::Attractor;
    } else {
        double ms_f = to_double(ms);
        if (std::fabs(p.m.approx - ms_f) <= 1e-12)
            rep.warning = "near-critical: supply m as exact rational";
        ExactMoment base1 = moment_exact(l, 0, 2 * (k + 1) * l);
        ExactMoment base2 = moment_exact(l, 2 * k + 2, 0);
        rep.float_value = p.m.approx * base1.value() - base2.value();
        rep.stability = rep.float_value > 0 ? Stability::Repeller : Stability::Attractor;
    }
    return rep;
}

}  // namespace nilfocus

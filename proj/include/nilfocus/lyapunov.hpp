#pragma once

#include <optional>
#include <string>

#include "nilfocus/certificate.hpp"
#include "nilfocus/moments.hpp"

namespace nilfocus {

/// The bifurcation parameter m, carried with an exactness flag: the critical
/// branch (s = kl, m = m*) only fires on exact rational equality.
struct MValue {
    bool exact = true;
    Rational rat = 0;
    double approx = 0;

    static MValue from_rational(const Rational& r) { return {true, r, to_double(r)}; }
    static MValue from_double(double d) { return {false, 0, d}; }
    double as_double() const { return exact ? to_double(rat) : approx; }
};

struct Params {
    int l = 2, k = 1, s = 2;
    MValue m;

    /// Monodromy condition 2 <= l <= 2s plus l,k,s >= 1.
    bool valid() const { return l >= 2 && k >= 1 && s >= 1 && l <= 2 * s; }
};

enum class Stability { Attractor, Repeller };
enum class Regime { SLessKL, SGreaterKL, CriticalOffStar, CriticalAtStar };

std::string to_string(Stability s);
std::string to_string(Regime r);

struct LyapunovReport {
    int first_index = 0;  // i of the first non-vanishing u_i(Omega)
    Stability stability = Stability::Attractor;
    Regime regime = Regime::SGreaterKL;
    std::optional<ExactMoment> exact_value;  // when m was exact
    double float_value = 0;
    std::string warning;  // e.g. near-critical float m
    std::optional<Certificate> certificate;  // u_2K+1 vanishing chain in the critical case
};

/// K = (2k-1)l + 1: the only indices nK+1 can carry non-vanishing constants
/// in the critical regime.
inline int index_step(int l, int k) { return (2 * k - 1) * l + 1; }

/// m* = (2k+1)!! / (2kl+1)!_(2l), where u_{K+1}(Omega) changes sign.
Rational m_star(int l, int k);

/// v = m Cs^(2(k+1)l) - Sn^(2k+2) and w = l m Sn Cs^(2kl+1) + Sn^(2k+1) Cs.
TrigPolynomial v_poly(int l, int k, const Rational& m);
TrigPolynomial w_poly(int l, int k, const Rational& m);

/// First non-vanishing constant outside the critical regime (s != kl, or m = 0).
LyapunovReport u_first_nonzero_generic(const Params& p);

/// u_{K+1}(Omega) = m I(0, 2(k+1)l) - I(2k+2, 0), exact.
ExactMoment u_K1(int l, int k, const Rational& m);

/// Certificate that u_{2K+1}(Omega) = 0 at m = m*: the (int v)^2 part vanishes
/// because u_{K+1}(Omega) = 0, and every monomial of v*w has an odd exponent.
Certificate u_2K1_is_zero(int l, int k);

struct U3K1Result {
    ExactMoment V;      // -int v (int v w)
    ExactMoment W;      // int v w^2
    ExactMoment total;  // K*V + W = u_{3K+1}(Omega)
};

/// Exact u_{3K+1}(Omega) at m = m*, via the antiderivative expansion of the
/// inner integral (V) and direct moment evaluation (W).
U3K1Result u_3K1(int l, int k);

/// Independent numeric oracle: nested adaptive quadrature for V, single
/// quadrature for W; returns K*V + W.
double u3K1_numeric(int l, int k, double tol);
double u3K1_numeric(int l, int k, double tol, double* V_out, double* W_out);

/// Full classification per the four regimes.
LyapunovReport classify(const Params& p);

}  // namespace nilfocus

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "nilfocus/gtrig.hpp"
#include "nilfocus/rational.hpp"

namespace nilfocus {

/// Generalized multifactorial a!_(n) = a * (a-n)!_(n) for a > 0, and 1 for a <= 0.
/// (2k+1)!! and (2kl+1)!_(2l) are the instances used downstream.
Rational gen_factorial(const Rational& a, unsigned n);

/// The canonical positive transcendental carried by every moment:
///   B = (2 / l^((i0+1)/2)) * Gamma((i0+1)/2) * Gamma((j0+1)/(2l))
///       / Gamma((i0+1)/2 + (j0+1)/(2l)),
/// with i0 in {0,1} and j0 in {0,...,2l-1}. All Gamma arguments are positive,
/// so B > 0 structurally: the sign of a moment is the sign of its rational
/// coefficient.
struct MomentBase {
    int l = 0;
    int i0 = 0;
    int j0 = 0;
    bool operator==(const MomentBase&) const = default;
    double value() const;
};

/// A definite integral int_0^Omega Sn^i Cs^j dtheta as coeff * B(base).
/// Two moments with even i and equal (i mod 2, j mod 2l) share a base, which
/// keeps every sum in the stability analysis single-base and exactly signed.
struct ExactMoment {
    Rational coeff;
    MomentBase base;

    double value() const { return to_double(coeff) * base.value(); }
    int sign() const { return coeff.sign(); }
    bool is_zero() const { return coeff == 0; }

    ExactMoment& operator+=(const ExactMoment& o);
    ExactMoment& operator-=(const ExactMoment& o);
    friend ExactMoment operator+(ExactMoment a, const ExactMoment& b) { return a += b; }
    friend ExactMoment operator-(ExactMoment a, const ExactMoment& b) { return a -= b; }
    friend ExactMoment operator*(const Rational& s, ExactMoment m) {
        m.coeff *= s;
        return m;
    }
};

/// Exact I(i,j) = int_0^Omega Sn^i Cs^j for even i, j (Gamma closed form,
/// reduced to the canonical base through Gamma(z+1) = z*Gamma(z)).
ExactMoment moment_exact(int l, int i, int j);

/// The exact zero moment when i or j is odd.
ExactMoment moment_zero(int l, int i, int j);

/// I(i,j) for any parity: dispatches between the two above.
ExactMoment moment_any(int l, int i, int j);

/// Numeric oracle: adaptive quadrature of Sn^i Cs^j over one period.
double moment_quad(const GtrigTable& trig, int i, int j, double tol);

/// Polynomial in (Sn, Cs) with exact rational coefficients, canonical form
/// (equal exponent pairs merged, zero terms dropped).
class TrigPolynomial {
  public:
    using Key = std::pair<int, int>;  // (sn exponent, cs exponent)

    TrigPolynomial() = default;
    static TrigPolynomial monomial(const Rational& c, int sn_exp, int cs_exp);

    void add_term(const Rational& c, int sn_exp, int cs_exp);
    TrigPolynomial operator*(const TrigPolynomial& o) const;
    TrigPolynomial operator+(const TrigPolynomial& o) const;
    TrigPolynomial operator-() const;
    TrigPolynomial scaled(const Rational& s) const;

    /// d/dtheta using Sn' = Cs^(2l-1), Cs' = -Sn.
    TrigPolynomial derivative(int l) const;

    /// int_0^Omega of this polynomial; every even-even term must share one base.
    ExactMoment integrate_period(int l) const;

    double eval(double sn, double cs) const;
    bool operator==(const TrigPolynomial&) const = default;
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

  private:
    std::map<Key, Rational> terms_;
};

/// Fully expanded antiderivative of Sn^i Cs^j for odd i, by the reduction
///   int Sn^i Cs^j = -Sn^(i-1) Cs^(j+1) / ((i-1)l + j + 1)
///                   + (i-1)/((i-1)l + j + 1) * int Sn^(i-2) Cs^j,
/// terminating at int Sn Cs^j = -Cs^(j+1)/(j+1).
TrigPolynomial antiderivative_odd_i(int l, int i, int j);

}  // namespace nilfocus

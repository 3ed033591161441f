#include "nilfocus/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "nilfocus/gammafn.hpp"
#include "nilfocus/quadrature.hpp"

namespace nilfocus {

Rational gen_factorial(const Rational& a, unsigned n) {
    if (n == 0) throw std::domain_error("gen_factorial: n >= 1 required");
    Rational r = 1, x = a;
    while (x > 0) {
        r *= x;
        x -= int(n);
    }
    return r;
}

double MomentBase::value() const {
    double a0 = (i0 + 1) / 2.0;
    double b0 = (j0 + 1) / (2.0 * l);
    return 2.0 * std::pow(double(l), -a0) * gamma_ratio(a0, b0, a0 + b0);
}

namespace {

// x (x+1) ... (x+n-1)
Rational rising(const Rational& x, int n) {
    Rational r = 1;
    for (int t = 0; t < n; ++t) r *= x + t;
    return r;
}

}  // namespace

ExactMoment& ExactMoment::operator+=(const ExactMoment& o) {
    if (!(base == o.base) && !is_zero() && !o.is_zero())
        throw std::invalid_argument("ExactMoment: base mismatch in addition");
    if (is_zero()) base = o.base;
    coeff += o.coeff;
    return *this;
}

ExactMoment& ExactMoment::operator-=(const ExactMoment& o) {
    if (!(base == o.base) && !is_zero() && !o.is_zero())
        throw std::invalid_argument("ExactMoment: base mismatch in subtraction");
    if (is_zero()) base = o.base;
    coeff -= o.coeff;
    return *this;
}

ExactMoment moment_exact(int l, int i, int j) {
    if (l < 1) throw std::domain_error("moment_exact: l >= 1 required");
    if (i < 0 || j < 0 || i % 2 != 0 || j % 2 != 0)
        throw std::domain_error("moment_exact: i and j must be non-negative and even");
    const int i0 = 0, j0 = j % (2 * l);
    const int da = i / 2, db = (j - j0) / (2 * l);
    const Rational a0(1, 2), b0(j0 + 1, 2 * l);
    ExactMoment m;
    m.base = MomentBase{l, i0, j0};
    m.coeff = rising(a0, da) * rising(b0, db) /
              (rising(a0 + b0, da + db) * rational_pow(Rational(l), da));
    return m;
}

ExactMoment moment_zero(int l, int i, int j) {
    if (i % 2 == 0 && j % 2 == 0)
        throw std::domain_error("moment_zero: requires i or j odd");
    ExactMoment m;
    m.base = MomentBase{l, i % 2, ((j % (2 * l)) + 2 * l) % (2 * l)};
    m.coeff = 0;
    return m;
}

ExactMoment moment_any(int l, int i, int j) {
    if (i % 2 == 0 && j % 2 == 0) return moment_exact(l, i, j);
    return moment_zero(l, i, j);
}

double moment_quad(const GtrigTable& trig, int i, int j, double tol) {
    if (tol <= 0) throw std::domain_error("moment_quad: tol > 0 required");
    auto f = [&trig, i, j](double th) {
        TrigState st = trig.eval(th);
        return std::pow(st.sn, i) * std::pow(st.cs, j);
    };
    return adaptive_quad(f, 0.0, trig.omega(), tol);
}

TrigPolynomial TrigPolynomial::monomial(const Rational& c, int sn_exp, int cs_exp) {
    TrigPolynomial p;
    p.add_term(c, sn_exp, cs_exp);
    return p;
}

void TrigPolynomial::add_term(const Rational& c, int sn_exp, int cs_exp) {
    if (c == 0) return;
    Key k{sn_exp, cs_exp};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TrigPolynomial TrigPolynomial::operator*(const TrigPolynomial& o) const {
    TrigPolynomial r;
    for (const auto& [ka, ca] : terms_)
        for (const auto& [kb, cb] : o.terms_)
            r.add_term(ca * cb, ka.first + kb.first, ka.second + kb.second);
    return r;
}

TrigPolynomial TrigPolynomial::operator+(const TrigPolynomial& o) const {
    TrigPolynomial r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(c, k.first, k.second);
    return r;
}

TrigPolynomial TrigPolynomial::operator-() const {
    TrigPolynomial r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

TrigPolynomial TrigPolynomial::scaled(const Rational& s) const {
    TrigPolynomial r;
    if (s == 0) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

TrigPolynomial TrigPolynomial::derivative(int l) const {
    TrigPolynomial r;
    for (const auto& [k, c] : terms_) {
        auto [si, cj] = k;
        // d/dtheta Sn^si Cs^cj = si Sn^(si-1) Cs^(cj+2l-1) - cj Sn^(si+1) Cs^(cj-1)
        if (si > 0) r.add_term(c * si, si - 1, cj + 2 * l - 1);
        if (cj > 0) r.add_term(-c * cj, si + 1, cj - 1);
    }
    return r;
}

ExactMoment TrigPolynomial::integrate_period(int l) const {
    ExactMoment total;
    total.coeff = 0;
    total.base = MomentBase{l, 0, 0};
    bool base_set = false;
    for (const auto& [k, c] : terms_) {
        auto [si, cj] = k;
        if (si % 2 != 0 || cj % 2 != 0) continue;  // odd moments vanish over a period
        ExactMoment m = moment_exact(l, si, cj);
        if (!base_set) {
            total.base = m.base;
            base_set = true;
        }
        total += c * m;
    }
    return total;
}

double TrigPolynomial::eval(double sn, double cs) const {
    double r = 0;
    for (const auto& [k, c] : terms_)
        r += to_double(c) * std::pow(sn, k.first) * std::pow(cs, k.second);
    return r;
}

TrigPolynomial antiderivative_odd_i(int l, int i, int j) {
    if (i < 1 || i % 2 == 0)
        throw std::domain_error("antiderivative_odd_i: i must be odd and >= 1");
    if (i == 1) return TrigPolynomial::monomial(Rational(-1, j + 1), 0, j + 1);
    const Rational d(1, (i - 1) * l + j + 1);
    TrigPolynomial r = TrigPolynomial::monomial(-d, i - 1, j + 1);
    return r + antiderivative_odd_i(l, i - 2, j).scaled(d * (i - 1));
}

}  // namespace nilfocus

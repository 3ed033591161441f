#include "nilfocus/certify.hpp"

#include <cmath>
#include <stdexcept>

#include "nilfocus/quadrature.hpp"

namespace nilfocus {

namespace {

Rational factorial(int n) { return gen_factorial(n, 1); }

Integer pow10(int d) {
    Integer p = 1;
    for (int i = 0; i < d; ++i) p *= 10;
    return p;
}

// Outward rounding to a fixed number of decimal digits keeps Newton iterates
// (and the Riemann-sum terms built from them) at bounded size while preserving
// the bracket direction. Positive arguments only.
Rational round_up_digits(const Rational& x, int d) {
    Integer s = pow10(d);
    Integer q = (numerator(x) * s + denominator(x) - 1) / denominator(x);
    return Rational(q, s);
}

Rational round_down_digits(const Rational& x, int d) {
    Integer s = pow10(d);
    return Rational(numerator(x) * s / denominator(x), s);
}

constexpr int kRootDigits = 60;

ExactMoment scaled_moment(const Rational& c, int l, int i, int j) {
    ExactMoment m = moment_exact(l, i, j);
    m.coeff *= c;
    return m;
}

Rational ratio(const ExactMoment& a, const ExactMoment& b) {
    if (!(a.base == b.base)) throw std::logic_error("ratio: base mismatch");
    if (b.coeff == 0) throw std::logic_error("ratio: zero denominator");
    return a.coeff / b.coeff;
}

// ---- small rational-polynomial toolkit (ascending coefficients) ----

Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), Rational(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return r;
}

Poly poly_scale(const Poly& a, const Rational& s) {
    Poly r = a;
    for (Rational& c : r) c *= s;
    return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Rational poly_eval(const Poly& p, const Rational& x) {
    Rational r = 0;
    for (size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// p(t + c) by repeated synthetic multiplication with (t + c)
Poly poly_shift(const Poly& p, const Rational& c) {
    Poly r{Rational(0)};
    for (size_t i = p.size(); i-- > 0;) {
        Poly next(r.size() + 1, Rational(0));
        for (size_t j = 0; j < r.size(); ++j) {
            next[j + 1] += r[j];
            next[j] += c * r[j];
        }
        next[0] += p[i];
        r = std::move(next);
        while (r.size() > 1 && r.back() == 0) r.pop_back();
    }
    return r;
}

/// R(n) >= 0 for all integer n > N, proven by finding a shift point N0 >= N+1
/// where every coefficient of R(N0 + t) is non-negative, plus explicit
/// evaluation at the finitely many points in between.
bool poly_nonneg_beyond(const Poly& R, int N, int* shift_at = nullptr, Poly* shifted = nullptr) {
    for (int N0 = N + 1; N0 <= N + 60; ++N0) {
        Poly s = poly_shift(R, N0);
        bool all = true;
        for (const Rational& c : s)
            if (c < 0) { all = false; break; }
        if (!all) continue;
        for (int n = N + 1; n < N0; ++n)
            if (poly_eval(R, n) < 0) return false;
        if (shift_at) *shift_at = N0;
        if (shifted) *shifted = std::move(s);
        return true;
    }
    return false;
}

/// One tail sequence a_n = P(n)/Q(n) used by the infinite-product estimates.
struct TailSeq {
    const char* name;
    Poly P, Q;
    Rational c;  // a_bar + epsilon
    bool upper;  // direction of the product bound
};

Rational seq_at(const TailSeq& s, int n) { return poly_eval(s.P, n) / poly_eval(s.Q, n); }

/// prod_{j=1}^{N} (1 +/- a_j), exact; throws if a factor leaves (0, ...).
Rational partial_product(const TailSeq& s, int N) {
    Rational p = 1;
    for (int j = 1; j <= N; ++j) {
        Rational a = seq_at(s, j);
        Rational f = s.upper ? Rational(1 + a) : Rational(1 - a);
        if (f <= 0) throw std::logic_error("partial_product: non-positive factor");
        p *= f;
    }
    return p;
}

/// Adds the symbolic tail-validity evidence for one sequence to a certificate.
bool certify_tail(Certificate& cert, const TailSeq& s, int N) {
    TailBound tb{s.c, 0, N, s.upper};  // epsilon already folded into c
    Poly shifted;
    bool ok = verify_tail_bound(tb, s.P, s.Q, &shifted);
    std::string base = std::string("tail_") + s.name;
    cert.add(base + "_ok", ok ? 1 : 0);
    cert.require("ge", base + "_ok", "1");
    for (size_t i = 0; i < shifted.size(); ++i) {
        cert.add(base + "_shift_c" + std::to_string(i), shifted[i]);
        cert.require("ge", base + "_shift_c" + std::to_string(i), "0");
    }
    return ok;
}

const TailSeq kSeqQuarter{"quarter", {1}, {0, 0, 4}, Rational(1, 3), false};
const TailSeq kSeq36{"over36", {3}, {-1, 0, 36}, Rational(3, 32), false};
const TailSeq kSeqLam1{"lam1", {1}, {0, 2, 8}, Rational(1, 8), false};
const TailSeq kSeqLam2{"lam2",
                       {240, 1728, 2304},
                       poly_mul({27, 72, 48}, {5, 72, 144}),
                       Rational(1, 3),
                       false};
const TailSeq kSeqMu{"mu", {-1, 3}, {0, 0, 0, 4}, Rational(1), false};
const TailSeq kSeqW2W1{"w2w1",
                       {-2, 1, 18},
                       poly_mul(poly_mul({1, 2}, {1, 2}), poly_mul({-1, 3}, {-2, 3})),
                       Rational(1),
                       true};

constexpr int kRiemannTerms = 128;

/// Lower Riemann sum for int_{1/2}^{2} x^{-1/2} (1+x)^{-3/4} dx on M right
/// endpoints (the integrand is decreasing), each root replaced by a rational
/// bound from the safe side.
Rational integral_lower_bound(int M, int root_iters) {
    Rational sum = 0;
    for (int i = 1; i <= M; ++i) {
        Rational x = Rational(1, 2) + Rational(3 * i, 2 * M);
        Rational sq_hi = sqrt_bounds(x, root_iters).second;       // >= sqrt(x)
        Rational f_hi = fourth_root_bounds(rational_pow(1 + x, 3), root_iters).second;
        sum += Rational(1) / (sq_hi * f_hi);
    }
    return sum * Rational(3, 2 * M);
}

double integral_float() {
    return adaptive_quad(
        [](double x) { return std::pow(x, -0.5) * std::pow(1 + x, -0.75); }, 0.5, 2.0, 1e-12);
}

}  // namespace

// ---------------------------------------------------------------------------
// TermTable
// ---------------------------------------------------------------------------

ExactMoment TermTable::V() const {
    ExactMoment v = b1_0 - c1_0;
    for (size_t i = 0; i < b2.size(); ++i) v = v - b2[i] + c2[i];
    for (size_t i = 0; i < b3.size(); ++i) v = v + b3[i] - c3[i];
    for (size_t i = 0; i < b4.size(); ++i) v = v - b4[i] + c4[i];
    return v;
}

ExactMoment TermTable::W_sum() const {
    return W[0] - W[1] + W[2] - W[3] + W[4] - W[5];
}

TermTable build_term_table(int l, int k) {
    if (l < 2 || k < 1) throw std::domain_error("build_term_table: l >= 2, k >= 1 required");
    TermTable t;
    t.l = l;
    t.k = k;
    t.m = m_star(l, k);
    const Rational m = t.m;
    const Rational D = 2 * (2 * k + 1) * l + 2;
    const Rational gfl_2kl1 = gen_factorial(2 * k * l + 1, l);

    t.b1_0 = scaled_moment(l * m * m * m / D, l, 0, 2 * (3 * k + 2) * l + 2);
    t.c1_0 = scaled_moment(l * m * m / D, l, 2 * k + 2, 2 * (2 * k + 1) * l + 2);

    auto f2 = [&](int i) {
        return factorial(2 * k + 1) / gfl_2kl1 * gen_factorial((i - 1) * l + 1, l) / factorial(i);
    };
    for (int i = 0; i <= 2 * k + 1; ++i) {
        t.b2.push_back(scaled_moment(m / D * f2(i), l, 2 * i, 2 * (k + 1) * l + 2));
        t.c2.push_back(scaled_moment(f2(i) / D, l, 2 * (k + i + 1), 2));
    }
    auto f3 = [&](int i) {
        return factorial(k) / gfl_2kl1 * gen_factorial((k + i) * l + 1, l) / factorial(i);
    };
    for (int i = 0; i <= k; ++i) {
        t.b3.push_back(scaled_moment(m * m / D * f3(i), l, 2 * i, 4 * (k + 1) * l + 2));
        t.c3.push_back(scaled_moment(m / D * f3(i), l, 2 * (k + i + 1), 2 * (k + 1) * l + 2));
    }
    auto f4 = [&](int i) {
        return factorial(k + 1) / gfl_2kl1 * gen_factorial((k + i - 1) * l + 1, l) / factorial(i);
    };
    for (int i = 0; i <= k + 1; ++i) {
        t.b4.push_back(scaled_moment(l * m * m / D * f4(i), l, 2 * i, 2 * (2 * k + 1) * l + 2));
        t.c4.push_back(scaled_moment(l * m / D * f4(i), l, 2 * (k + i + 1), 2 * k * l + 2));
    }

    t.W.push_back(scaled_moment(l * l * m * m * m, l, 2, 2 * (3 * k + 1) * l + 2));
    t.W.push_back(scaled_moment(1, l, 6 * k + 4, 2));
    t.W.push_back(scaled_moment(2 * l * m * m, l, 2 * k + 2, 2 * (2 * k + 1) * l + 2));
    t.W.push_back(scaled_moment(l * l * m * m, l, 2 * k + 4, 4 * k * l + 2));
    t.W.push_back(scaled_moment(m, l, 4 * k + 2, 2 * (k + 1) * l + 2));
    t.W.push_back(scaled_moment(2 * l * m, l, 4 * k + 4, 2 * k * l + 2));
    return t;
}

// ---------------------------------------------------------------------------
// Grouped-term certificates
// ---------------------------------------------------------------------------

Certificate check_prop_infinitesimal(int l, int k) {
    TermTable t = build_term_table(l, k);
    Certificate cert;
    cert.claim = "prop_infinitesimal";
    cert.l = l;
    cert.k = k;

    // (i) b4^{i+1}/b3^i = (i+1/2)(k+1) / ((i+1)(2k+1+3/(2l))) < 1
    for (int i = 0; i <= k; ++i) {
        Rational r = ratio(t.b4[i + 1], t.b3[i]);
        Rational formula =
            Rational(2 * i + 1, 2) * (k + 1) / ((i + 1) * (Rational(2 * k + 1) + Rational(3, 2 * l)));
        std::string name = "b4_over_b3_" + std::to_string(i);
        cert.add(name, r);
        cert.require("eq", name, rational_str(formula));
        cert.require("lt", name, "1");
    }
    // (ii) c4^{i+1}/c3^i = (k+i+3/2)(k+1) / ((i+1)(k+3/(2l))) > 1
    for (int i = 0; i <= k; ++i) {
        Rational r = ratio(t.c4[i + 1], t.c3[i]);
        Rational formula = (Rational(k + i) + Rational(3, 2)) * (k + 1) /
                           ((i + 1) * (Rational(k) + Rational(3, 2 * l)));
        std::string name = "c4_over_c3_" + std::to_string(i);
        cert.add(name, r);
        cert.require("eq", name, rational_str(formula));
        cert.require("gt", name, "1");
    }
    // (iii) bound chain endpoints and the direct sum
    Rational c1_bound = Rational(3, 5) * rational_pow(Rational(2, 3), 2 * k);
    cert.add("c1_over_c2", ratio(t.c1_0, t.c2[0]));
    cert.require("lt", "c1_over_c2", rational_str(c1_bound));
    Rational geo = 0;
    for (int i = 1; i <= 2 * k + 1; ++i) {
        Rational bound_i = Rational(21, 65) * rational_pow(Rational(2, 3), i - 1);
        std::string name = "b2_over_c2_" + std::to_string(i);
        cert.add(name, ratio(t.b2[i], t.c2[0]));
        cert.require("le", name, rational_str(bound_i));
        geo += rational_pow(Rational(2, 3), i - 1);
    }
    Rational residual = 1 - c1_bound - Rational(21, 65) * geo;
    Rational residual_closed = Rational(2, 65) + Rational(9, 130) * rational_pow(Rational(2, 3), 2 * k + 1);
    cert.add("iii_residual", residual);
    cert.require("eq", "iii_residual", rational_str(residual_closed));
    cert.require("gt", "iii_residual", "0");
    Rational direct = t.c2[0].coeff - t.c1_0.coeff;
    for (int i = 1; i <= 2 * k + 1; ++i) direct -= t.b2[i].coeff;
    cert.add("iii_direct_sum", direct);
    cert.require("gt", "iii_direct_sum", "0");

    cert.settle();
    cert.float_hint = to_double(direct) * t.c2[0].base.value();
    return cert;
}

Certificate check_main_terms(int l, int k) {
    TermTable t = build_term_table(l, k);
    Certificate cert;
    cert.claim = "main_terms";
    cert.l = l;
    cert.k = k;

    Rational combo = t.b1_0.coeff - t.b2[0].coeff - t.b4[0].coeff;
    for (int i = 1; i <= 2 * k + 1; ++i) combo += t.c2[i].coeff;
    combo /= t.b2[0].coeff;
    cert.add("combination", combo);
    cert.require("gt", "combination", "0");

    if (l >= 3) {
        Rational lemma = (t.b1_0.coeff - t.b2[0].coeff - t.b4[0].coeff) / t.b2[0].coeff;
        cert.add("no_c2_combination", lemma);
        cert.require("gt", "no_c2_combination", "0");
    }
    cert.settle();
    cert.float_hint = to_double(combo);
    return cert;
}

// ---------------------------------------------------------------------------
// Rational bounds for exp, roots, nu_k
// ---------------------------------------------------------------------------

Rational exp_lower(const Rational& x, int M) {
    if (x < 0) throw std::domain_error("exp_lower: x >= 0 required");
    if (x >= 2 * M + 3) throw std::domain_error("exp_lower: increase M (need x < 2M+3)");
    Rational s = 0, power = 1;  // x^0
    for (int i = 0; i <= M; ++i) {
        s += power / factorial(2 * i);
        power *= x;
        s -= power / factorial(2 * i + 1);
        power *= x;
    }
    return s;
}

Rational exp_upper(const Rational& x, int M) {
    return exp_lower(x, M) + rational_pow(x, 2 * M + 2) / factorial(2 * M + 2);
}

std::pair<Rational, Rational> sqrt_bounds(const Rational& x, int iters) {
    if (x <= 0) throw std::domain_error("sqrt_bounds: x > 0 required");
    Integer pn = numerator(x), qn = denominator(x);
    Integer sp = sqrt(pn), sq = sqrt(qn);
    if (sp * sp == pn && sq * sq == qn) {
        Rational exact(sp, sq);
        return {exact, exact};
    }
    Rational hi = (x + 1) / 2;  // AM-GM: always >= sqrt(x)
    for (int i = 0; i < iters; ++i) hi = round_up_digits((hi + x / hi) / 2, kRootDigits);
    return {round_down_digits(x / hi, kRootDigits), hi};
}

std::pair<Rational, Rational> fourth_root_bounds(const Rational& x, int iters) {
    auto [slo, shi] = sqrt_bounds(x, iters);
    Rational lo = slo <= 0 ? Rational(0) : sqrt_bounds(slo, iters).first;
    Rational hi = sqrt_bounds(shi, iters).second;
    return {lo, hi};
}

Rational nu_k(int k) {
    if (k < 1) throw std::domain_error("nu_k: k >= 1 required");
    Rational prod = 1;
    for (int j = 1; j <= k; ++j)
        prod *= 1 - Rational(64 * j * j * j + 84 * j * j + 20 * j,
                             (2 * j + 1) * (2 * j + 1) * (8 * j + 3) * (8 * j - 1));
    return -Rational(2 * k + 3, 8 * k) - Rational(3 * k + 3, 4 * k + 3) * prod;
}

// ---------------------------------------------------------------------------
// Tail machinery
// ---------------------------------------------------------------------------

bool verify_tail_bound(const TailBound& tb, const Poly& P, const Poly& Q, Poly* shifted) {
    const Rational c = tb.a_bar + tb.epsilon;
    Poly nsq{0, 0, 1};
    Poly R;
    if (tb.upper) {
        // a_n <= c/n^2  <=>  c Q - n^2 P >= 0 (with Q > 0)
        if (!poly_nonneg_beyond(Q, tb.N)) return false;
        R = poly_add(poly_scale(Q, c), poly_scale(poly_mul(nsq, P), -1));
    } else {
        // a_n/(1-a_n) <= c/n^2  <=>  c (Q-P) - n^2 P >= 0 (with Q - P > 0)
        Poly QmP = poly_add(Q, poly_scale(P, -1));
        if (!poly_nonneg_beyond(QmP, tb.N)) return false;
        R = poly_add(poly_scale(QmP, c), poly_scale(poly_mul(nsq, P), -1));
    }
    return poly_nonneg_beyond(R, tb.N, nullptr, shifted);
}

Certificate check_general_tail(TailLemma id, int N, int M) {
    Certificate cert;
    cert.l = 0;
    cert.k = 0;
    if (N < 1 || M < 1) throw std::domain_error("check_general_tail: N, M >= 1 required");

    switch (id) {
        case TailLemma::Approx1: {
            cert.claim = "approx1";
            bool tails_ok = certify_tail(cert, kSeqQuarter, N) && certify_tail(cert, kSeq36, N);
            Rational prod = partial_product(kSeqQuarter, N) * partial_product(kSeq36, N);
            Rational x = (kSeqQuarter.c + kSeq36.c) / N;
            Rational elb = exp_lower(x, M);
            Rational inner = Rational(2, 3) * elb * prod - Rational(5, 21 * 8);
            cert.add("product", prod);
            cert.add("exp_lower", elb);
            cert.add("inner", inner);
            cert.add("bound", 3 * inner);
            cert.require("gt", "bound", "1");
            cert.settle();
            if (!cert.verdict) cert.status = "inconclusive, increase N/M";
            if (!tails_ok) cert.status = "inconclusive, increase N/M";
            cert.float_hint =
                2.0 / 3 * std::exp(-to_double(x)) * to_double(prod) - 5.0 / (21 * 8);
            return cert;
        }
        case TailLemma::Approx2: {
            cert.claim = "approx2";
            bool tails_ok = certify_tail(cert, kSeqLam1, N) && certify_tail(cert, kSeqLam2, N) &&
                            certify_tail(cert, kSeqMu, N);
            Rational p1 = partial_product(kSeqLam1, N), p2 = partial_product(kSeqLam2, N);
            Rational lam = exp_lower(kSeqLam1.c / N, M) * exp_lower(kSeqLam2.c / N, M) * p1 * p2;
            Rational p3 = partial_product(kSeqMu, N);
            Rational mu = exp_lower(Rational(1, 2 * N), M) * sqrt_bounds(p3, 6).first;
            Rational sqrt2_lo = sqrt_bounds(2, 6).first;
            Rational integ = integral_lower_bound(kRiemannTerms, 6);
            Rational bound =
                Rational(14, 9) * lam + Rational(5, 21) * sqrt2_lo * mu * integ - Rational(11, 130) - 1;
            cert.add("lambda_lower", lam);
            cert.add("mu_lower", mu);
            cert.add("sqrt2_lower", sqrt2_lo);
            cert.add("integral_lower", integ);
            cert.add("bound", bound);
            cert.require("gt", "bound", "0");
            cert.settle();
            if (!cert.verdict || !tails_ok) cert.status = "inconclusive, increase N/M";
            double lam_f = std::exp(-to_double(kSeqLam1.c + kSeqLam2.c) / N) * to_double(p1 * p2);
            double mu_f = std::exp(-0.5 / N) * std::sqrt(to_double(p3));
            cert.float_hint = 14.0 / 9 * lam_f +
                              5 * std::sqrt(2.0) / 21 * mu_f * integral_float() - 11.0 / 130 - 1;
            return cert;
        }
        case TailLemma::W2W1: {
            cert.claim = "W2W1";
            bool tails_ok = certify_tail(cert, kSeqW2W1, N);
            Rational prod = partial_product(kSeqW2W1, N);
            Rational exp_ub = Rational(1) / exp_lower(Rational(1, N), M);
            Rational bound = Rational(1, 4) * prod * exp_ub;
            cert.add("product", prod);
            cert.add("exp_upper", exp_ub);
            cert.add("bound", bound);
            cert.require("lt", "bound", "1");
            cert.settle();
            if (!cert.verdict || !tails_ok) cert.status = "inconclusive, increase N/M";
            cert.float_hint = 0.25 * to_double(prod) * std::exp(1.0 / N);
            return cert;
        }
        case TailLemma::NuK: {
            cert.claim = "nu_k";
            cert.add("one_plus_nu2", 1 + nu_k(2));
            cert.require("eq", "one_plus_nu2", "333/16720");
            cert.require("gt", "one_plus_nu2", "0");
            int kmax = std::max(N, 20);
            Rational prev = nu_k(1);
            bool increasing = true;
            for (int k = 2; k <= kmax; ++k) {
                Rational cur = nu_k(k);
                if (cur <= prev) increasing = false;
                prev = cur;
            }
            cert.add("monotone_to_" + std::to_string(kmax), increasing ? 1 : 0);
            cert.require("ge", "monotone_to_" + std::to_string(kmax), "1");
            cert.settle();
            cert.float_hint = to_double(1 + nu_k(2));
            return cert;
        }
    }
    throw std::logic_error("check_general_tail: unknown lemma id");
}

Certificate check_k1_W(int l) {
    if (l < 2) throw std::domain_error("check_k1_W: l >= 2 required");
    TermTable t = build_term_table(l, 1);
    Certificate cert;
    cert.claim = "k1_W_positive";
    cert.l = l;
    cert.k = 1;

    // the j = 1 factor of the W2/W1 product bound: (1/4)(1/2)(1)(35/9) = 35/72
    cert.add("w2w1_k1_bound", Rational(35, 72));
    cert.require("eq", "w2w1_k1_bound", "35/72");
    Rational w2w1 = ratio(t.W[1], t.W[0]);
    cert.add("w2_over_w1", w2w1);
    cert.require("lt", "w2_over_w1", "w2w1_k1_bound");

    Rational w1w3 = ratio(t.W[0], t.W[2]);
    cert.add("w1_over_w3", w1w3);
    cert.require("eq", "w1_over_w3", rational_str(Rational(3 * l, 2)));

    Rational rest = (-t.W[3].coeff + t.W[4].coeff - t.W[5].coeff) / t.W[2].coeff;
    Rational nu1 = nu_k(1);
    cert.add("rest_over_w3", rest);
    cert.add("nu1", nu1);
    cert.add("one_plus_nu1", 1 + nu1);
    cert.add("nu1_gap", Rational(169, 616));
    cert.require("eq", "one_plus_nu1", "-169/616");
    cert.require("eq", "nu1_gap", "169/616");
    cert.require("gt", "rest_over_w3", "nu1");

    Rational lower = Rational(3 * l, 2) * (1 - Rational(35, 72)) + 1 + nu1;
    cert.add("chain_lower", lower);
    cert.require("gt", "chain_lower", "0");

    Rational w_over_w3 = t.W_sum().coeff / t.W[2].coeff;
    cert.add("w_over_w3", w_over_w3);
    cert.require("gt", "w_over_w3", "chain_lower");

    cert.settle();
    cert.float_hint = to_double(w_over_w3);
    return cert;
}

Certificate certify_instance(int l, int k) {
    TermTable t = build_term_table(l, k);
    Certificate cert;
    cert.claim = "instance_positive";
    cert.l = l;
    cert.k = k;

    std::vector<std::pair<int, std::string>> v_terms, w_terms;
    auto add_entry = [&](const std::string& name, const ExactMoment& m, int sgn,
                         std::vector<std::pair<int, std::string>>& terms) {
        cert.add(name, m.coeff);
        cert.require("gt", name, "0");
        terms.emplace_back(sgn, name);
    };
    add_entry("b1_0", t.b1_0, +1, v_terms);
    add_entry("c1_0", t.c1_0, -1, v_terms);
    for (size_t i = 0; i < t.b2.size(); ++i) {
        add_entry("b2_" + std::to_string(i), t.b2[i], -1, v_terms);
        add_entry("c2_" + std::to_string(i), t.c2[i], +1, v_terms);
    }
    for (size_t i = 0; i < t.b3.size(); ++i) {
        add_entry("b3_" + std::to_string(i), t.b3[i], +1, v_terms);
        add_entry("c3_" + std::to_string(i), t.c3[i], -1, v_terms);
    }
    for (size_t i = 0; i < t.b4.size(); ++i) {
        add_entry("b4_" + std::to_string(i), t.b4[i], -1, v_terms);
        add_entry("c4_" + std::to_string(i), t.c4[i], +1, v_terms);
    }
    for (int i = 0; i < 6; ++i)
        add_entry("W" + std::to_string(i + 1), t.W[i], i % 2 == 0 ? +1 : -1, w_terms);

    ExactMoment V = t.V(), W = t.W_sum();
    Rational total = Rational(index_step(l, k)) * V.coeff + W.coeff;
    cert.add("V", V.coeff);
    cert.add("W", W.coeff);
    cert.add("total", total);
    cert.require_sum("V", v_terms);
    cert.require_sum("W", w_terms);
    cert.require_sum("total", {{index_step(l, k), "V"}, {1, "W"}});
    cert.require("gt", "V", "0");
    cert.require("gt", "W", "0");
    cert.require("gt", "total", "0");

    cert.settle();
    cert.float_hint = to_double(total) * V.base.value();
    return cert;
}

}  // namespace nilfocus

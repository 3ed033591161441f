// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Each criterion is exact where the library is exact; runtime caps
// guard against pathological slowdowns in the rational arithmetic.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "nilfocus/certify.hpp"
#include "nilfocus/gtrig.hpp"
#include "nilfocus/lyapunov.hpp"
#include "nilfocus/moments.hpp"
#include "nilfocus/simulate.hpp"

using namespace nilfocus;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int idx, const std::string& label, bool ok, double elapsed) {
    std::printf("criterion %2d: %s  [%s] (%.3fs)\n", idx, ok ? "PASS" : "FAIL", label.c_str(),
                elapsed);
    if (!ok) ++failures;
}

}  // namespace

int main() {
    // 1. closed-form critical parameter values, essentially instant
    {
        auto t0 = Clock::now();
        bool ok = m_star(2, 1) == Rational(3, 5) && m_star(2, 2) == Rational(1, 3) &&
                  m_star(3, 1) == Rational(3, 7);
        double dt = seconds_since(t0);
        report(1, "critical parameter m*(2,1)=3/5, m*(2,2)=1/3, m*(3,1)=3/7", ok && dt < 0.001, dt);
    }

    // 2. first candidate constant vanishes exactly at m* and flips sign around it
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int l = 2; l <= 6 && ok; ++l)
            for (int k = 1; k <= 6 && ok; ++k) {
                Rational ms = m_star(l, k);
                ok = u_K1(l, k, ms).is_zero() &&
                     u_K1(l, k, ms - Rational(1, 100)).sign() == -1 &&
                     u_K1(l, k, ms + Rational(1, 100)).sign() == 1;
            }
        double dt = seconds_since(t0);
        report(2, "u_{K+1} zero at m*, sign flip at m* -/+ 1/100, grid l<=6, k<=6",
               ok && dt < 1.0, dt);
    }

    // 3. second candidate constant vanishes: parity + zero-mean certificates
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int l = 2; l <= 6 && ok; ++l)
            for (int k = 1; k <= 6 && ok; ++k) {
                Certificate c = u_2K1_is_zero(l, k);
                ok = c.verdict && c.reverify();
            }
        report(3, "u_{2K+1} vanishing certificates, grid l<=6, k<=6", ok, seconds_since(t0));
    }

    // 4. exact rational checkpoints, no tolerance
    {
        auto t0 = Clock::now();
        bool ok = *check_main_terms(2, 1).find("combination") == Rational(1531, 23205) &&
                  *check_main_terms(2, 2).find("combination") == Rational(203341, 759220) &&
                  1 + nu_k(2) == Rational(333, 16720);
        report(4, "exact rationals 1531/23205, 203341/759220, 1+nu_2 = 333/16720", ok,
               seconds_since(t0));
    }

    // 5. tail estimates: rational verdicts plus float sanity targets (M = 8)
    {
        auto t0 = Clock::now();
        Certificate w = check_general_tail(TailLemma::W2W1, 2, 8);
        Certificate a1 = check_general_tail(TailLemma::Approx1, 10, 8);
        Certificate a2 = check_general_tail(TailLemma::Approx2, 5, 8);
        bool ok = w.verdict && std::fabs(w.float_hint - 0.9169) <= 5e-4 &&
                  a1.verdict && std::fabs(a1.float_hint - 0.3338) <= 1e-3 &&
                  a2.verdict && std::fabs(a2.float_hint - 0.0147) <= 1e-3;
        report(5, "tail bounds: W2/W1 0.9169, series-1 0.3338, series-2 0.0147", ok,
               seconds_since(t0));
    }

    // 6. V > 0 and W > 0 certificates over the full exact grid
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int l = 2; l <= 6 && ok; ++l)
            for (int k = 1; k <= 6 && ok; ++k) {
                Certificate c = certify_instance(l, k);
                ok = c.verdict && *c.find("V") > 0 && *c.find("W") > 0;
            }
        double dt = seconds_since(t0);
        report(6, "V>0, W>0 instance certificates, grid l<=6, k<=6", ok && dt < 30.0, dt);
    }

    // 7. exact moments vs adaptive quadrature, plus both exact reduction rules
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int l : {2, 3, 4}) {
            GtrigTable trig(l, 1e-13);
            for (int i = 0; i <= 12 && ok; i += 2)
                for (int j = 0; j <= 12 && ok; j += 2) {
                    double diff =
                        std::fabs(moment_exact(l, i, j).value() - moment_quad(trig, i, j, 1e-11));
                    ok = diff <= 1e-8;
                }
            for (int i = 2; i <= 10 && ok; i += 2)
                for (int j = 0; j <= 12 && ok; j += 2) {
                    ok = moment_exact(l, i, j).coeff ==
                         Rational(i - 1, (i - 1) * l + j + 1) * moment_exact(l, i - 2, j).coeff;
                    if (ok && j >= 2 * l)
                        ok = moment_exact(l, i, j).coeff ==
                             Rational(j - 2 * l + 1, (i - 1) * l + j + 1) *
                                 moment_exact(l, i, j - 2 * l).coeff;
                }
        }
        report(7, "moment quadrature agreement <=1e-8 and exact reduction identities", ok,
               seconds_since(t0));
    }

    // 8. conservation law residual along the dense tables
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int l = 2; l <= 6 && ok; ++l) {
            GtrigTable table(l);
            ok = table.max_residual() <= 1e-9;
        }
        report(8, "Cs^2l + l Sn^2 = 1 residual <= 1e-9, l <= 6", ok, seconds_since(t0));
    }

    // 9. exact classification vs numerical stability probe on the regime grid
    {
        auto t0 = Clock::now();
        struct Case {
            int l, k, s;
            Rational m;
            bool must_conclude;
        };
        std::vector<Case> grid{
            {2, 1, 2, Rational(3, 5), true},   // critical, at m*
            {2, 1, 1, Rational(0), false},     // m = 0
            {2, 1, 3, Rational(1), false},     // s > kl
            {2, 1, 2, Rational(1, 2), false},  // critical regime, m < m*
            {2, 1, 1, Rational(1, 2), false},  // s < kl, m > 0
            {2, 2, 4, Rational(1, 2), false},  // critical regime, m > m*
            {2, 2, 5, Rational(1), false},     // s > kl
            {3, 1, 3, Rational(1, 4), false},  // critical regime, m < m*
            {3, 1, 4, Rational(1), false},     // s > kl
            {3, 2, 6, Rational(1, 2), false},  // critical regime, m > m*
        };
        bool ok = true;
        for (const Case& c : grid) {
            Params p{c.l, c.k, c.s, MValue::from_rational(c.m)};
            LyapunovReport rep = classify(p);
            ProbeReport probe = stability_probe(p, {0.25, 0.35, 0.45}, 1e-12);
            if (probe.result == ProbeResult::Inconclusive) {
                if (c.must_conclude) ok = false;
                continue;
            }
            bool repeller = probe.result == ProbeResult::Repeller;
            if (repeller != (rep.stability == Stability::Repeller)) ok = false;
        }
        double dt = seconds_since(t0);
        report(9, "probe agrees with exact classification on the 10-case regime grid",
               ok && dt < 60.0, dt);
    }

    // 10. exact vs independently-integrated third-stage constant
    {
        auto t0 = Clock::now();
        bool ok = true;
        for (int l = 2; l <= 4 && ok; ++l)
            for (int k = 1; k <= 3 && ok; ++k) {
                double exact = u_3K1(l, k).total.value();
                double numeric = u3K1_numeric(l, k, 1e-10);
                ok = (exact > 0) == (numeric > 0) &&
                     std::fabs(exact - numeric) <= 1e-6 * std::fabs(exact);
            }
        report(10, "exact u_{3K+1} matches nested quadrature to 1e-6 relative", ok,
               seconds_since(t0));
    }

    std::printf("%s: %d of 10 criteria passed\n", failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL",
                10 - failures);
    return failures == 0 ? 0 : 1;
}

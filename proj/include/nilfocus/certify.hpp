#pragma once

#include <utility>
#include <vector>

#include "nilfocus/certificate.hpp"
#include "nilfocus/lyapunov.hpp"
#include "nilfocus/moments.hpp"

namespace nilfocus {

/// The b/c decomposition of V and the six W integrals, all exact on the
/// shared base B(0,2). Every entry is strictly positive.
struct TermTable {
    int l = 0, k = 0;
    Rational m;  // m*(l,k)
    ExactMoment b1_0, c1_0;
    std::vector<ExactMoment> b2, c2;  // i = 0..2k+1
    std::vector<ExactMoment> b3, c3;  // i = 0..k
    std::vector<ExactMoment> b4, c4;  // i = 0..k+1
    std::vector<ExactMoment> W;       // W1..W6

    /// V = b1_0 - c1_0 - sum(b2-c2) + sum(b3-c3) - sum(b4-c4)
    ExactMoment V() const;
    /// W1 - W2 + W3 - W4 + W5 - W6
    ExactMoment W_sum() const;
};

TermTable build_term_table(int l, int k);

/// The grouped infinitesimal-term inequalities:
///   (i)  b3^i - b4^(i+1) > 0,  (ii) -c3^i + c4^(i+1) > 0,
///   (iii) -c1^0 - sum_{i>=1} b2^i + c2^0 > 0,
/// with the closed-form ratio identities and the (iii) bound chain.
Certificate check_prop_infinitesimal(int l, int k);

/// Main-terms positivity b1^0 - b2^0 + sum_{i>=1} c2^i - b4^0 > 0 (plus the
/// l >= 3 variant without the c2 sum). The normalized combination reproduces
/// 1531/23205 at (2,1) and 203341/759220 at (2,2).
Certificate check_main_terms(int l, int k);

/// Rational lower bound on exp(-x) for x >= 0: the alternating series cut
/// after the (2M+1)-st (negative) term. exp_upper adds the next positive term.
Rational exp_lower(const Rational& x, int M);
Rational exp_upper(const Rational& x, int M);

/// lo^2 <= x <= hi^2 with the gap shrinking quadratically (Newton on rationals).
std::pair<Rational, Rational> sqrt_bounds(const Rational& x, int iters);
/// Fourth roots by composing two square roots.
std::pair<Rational, Rational> fourth_root_bounds(const Rational& x, int iters);

/// nu_k = -(2k+3)/(8k) - (3k+3)/(4k+3) * prod_{j=1}^{k} (1 - (64j^3+84j^2+20j)
///        / ((2j+1)^2 (8j+3)(8j-1))); 1 + nu_2 = 333/16720.
Rational nu_k(int k);

/// Rational polynomial in ascending coefficient order.
using Poly = std::vector<Rational>;

/// The infinite-product tail certificate data: a_n < (a_bar+eps)/n^2 for all
/// n > N (or a_n/(1-a_n) < ... for the lower direction).
struct TailBound {
    Rational a_bar;
    Rational epsilon;
    int N = 1;
    bool upper = true;  // true: bounds prod(1+a_n) above; false: prod(1-a_n) below
};

/// Verifies the tail condition for a_n = P(n)/Q(n) symbolically: the required
/// polynomial inequality, shifted to n = N+1+t, must have all coefficients
/// non-negative. Returns the shifted coefficients through *shifted if wanted.
bool verify_tail_bound(const TailBound& tb, const Poly& P, const Poly& Q,
                       Poly* shifted = nullptr);

enum class TailLemma { Approx1, Approx2, W2W1, NuK };

/// Fully rational re-verification of the general tail estimates:
///   Approx1: 3 * [(2/3) e^{-41/(96N)} prod_N - 5/(21*2^3)] > 1   (l,k >= 3)
///   Approx2: (14/9) lambda_N + (5 sqrt2/21) mu_N * I_low - 11/130 - 1 > 0 (k >= 3)
///   W2W1:    (1/4) prod_N (1+a_j) e^{1/N} < 1
///   NuK:     1 + nu_2 = 333/16720 and nu_k nondecreasing up to N
/// M is the exp-series truncation order. A bound too loose at the given (N, M)
/// yields status "inconclusive", never a false verdict.
Certificate check_general_tail(TailLemma id, int N, int M);

/// The k = 1 chain for W > 0: W/W3 > (3l/2)(1 - 35/72) + 1 + nu_1, exact.
Certificate check_k1_W(int l);

/// Direct exact check V > 0, W > 0, K*V + W > 0 by summing the full table;
/// independent of the proposition route.
Certificate certify_instance(int l, int k);

}  // namespace nilfocus

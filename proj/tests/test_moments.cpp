#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nilfocus/moments.hpp"

using namespace nilfocus;

TEST_CASE("generalized multifactorial") {
    CHECK(gen_factorial(3, 2) == Rational(3));       // 3!! = 3*1
    CHECK(gen_factorial(5, 2) == Rational(15));      // 5!! = 5*3*1
    CHECK(gen_factorial(5, 4) == Rational(5));       // 5!_(4) = 5*1
    CHECK(gen_factorial(9, 4) == Rational(45));      // 9*5*1
    CHECK(gen_factorial(6, 1) == Rational(720));     // plain factorial
    CHECK(gen_factorial(0, 3) == Rational(1));       // empty product convention
    CHECK(gen_factorial(-2, 3) == Rational(1));
}

TEST_CASE("frozen moment reference I(2,2) at l=2") {
    ExactMoment m = moment_exact(2, 2, 2);
    CHECK(m.value() == doctest::Approx(0.67777046783518326929).epsilon(1e-13));
    CHECK(m.sign() == 1);
}

TEST_CASE("odd moments vanish exactly") {
    for (auto [i, j] : {std::pair{1, 2}, {2, 3}, {5, 5}, {3, 0}, {0, 7}}) {
        ExactMoment m = moment_any(2, i, j);
        CHECK(m.is_zero());
    }
}

TEST_CASE("exact moments match adaptive quadrature") {
    for (int l : {2, 3, 4}) {
        GtrigTable trig(l, 1e-13);
        for (int i = 0; i <= 12; i += 2)
            for (int j = 0; j <= 12; j += 2) {
                double exact = moment_exact(l, i, j).value();
                double quad = moment_quad(trig, i, j, 1e-11);
                CHECK(std::fabs(exact - quad) <= 1e-8);
            }
    }
}

TEST_CASE("definite reduction in the first exponent is exact") {
    // I(i,j) = (i-1)/((i-1)l+j+1) * I(i-2,j) for even i >= 2
    for (int l : {2, 3, 5}) {
        for (int i = 2; i <= 10; i += 2)
            for (int j = 0; j <= 4 * l; j += 2) {
                ExactMoment lhs = moment_exact(l, i, j);
                ExactMoment rhs = moment_exact(l, i - 2, j);
                Rational factor = Rational(i - 1, (i - 1) * l + j + 1);
                CHECK(lhs.base == rhs.base);
                CHECK(lhs.coeff == factor * rhs.coeff);
            }
    }
}

TEST_CASE("definite reduction in the second exponent is exact") {
    // I(i,j) = (j-2l+1)/((i-1)l+j+1) * I(i,j-2l) for even j >= 2l
    for (int l : {2, 3, 5}) {
        for (int i = 0; i <= 8; i += 2)
            for (int j = 2 * l; j <= 6 * l; j += 2) {
                ExactMoment lhs = moment_exact(l, i, j);
                ExactMoment rhs = moment_exact(l, i, j - 2 * l);
                Rational factor = Rational(j - 2 * l + 1, (i - 1) * l + j + 1);
                CHECK(lhs.base == rhs.base);
                CHECK(lhs.coeff == factor * rhs.coeff);
            }
    }
}

TEST_CASE("moments with equal residues share a base; sums require it") {
    ExactMoment a = moment_exact(2, 0, 2);
    ExactMoment b = moment_exact(2, 2, 6);
    CHECK(a.base == b.base);
    CHECK_NOTHROW(a + b);
    ExactMoment c = moment_exact(2, 0, 0);
    CHECK_FALSE(a.base == c.base);
    CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("trig polynomial algebra") {
    TrigPolynomial p = TrigPolynomial::monomial(2, 1, 3);
    TrigPolynomial q = TrigPolynomial::monomial(Rational(1, 2), 2, 0);
    TrigPolynomial pq = p * q;
    REQUIRE(pq.terms().size() == 1);
    CHECK(pq.terms().begin()->first == std::pair{3, 3});
    CHECK(pq.terms().begin()->second == Rational(1));

    // cancellation removes terms
    TrigPolynomial z = p + (-p);
    CHECK(z.empty());
}

TEST_CASE("derivative undoes the odd antiderivative") {
    // equality holds modulo Cs^2l + l Sn^2 = 1, so compare on the level curve
    for (int l : {2, 3}) {
        for (auto [i, j] : {std::pair{1, 2}, {3, 1}, {5, 4}, {7, 0}, {3, 2 * l + 1}}) {
            TrigPolynomial anti = antiderivative_odd_i(l, i, j);
            TrigPolynomial back = anti.derivative(l);
            for (double theta : {0.0, 0.4, 1.3, 2.9, 5.2}) {
                TrigState st = gtrig_eval(l, theta);
                double expect = std::pow(st.sn, i) * std::pow(st.cs, j);
                CHECK(back.eval(st.sn, st.cs) == doctest::Approx(expect).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("period integration of a polynomial uses parity and a single base") {
    TrigPolynomial p = TrigPolynomial::monomial(1, 2, 2);
    p.add_term(Rational(1, 3), 0, 6);  // same base at l = 2: j mod 4 = 2
    ExactMoment total = p.integrate_period(2);
    ExactMoment expect = moment_exact(2, 2, 2);
    ExactMoment second = moment_exact(2, 0, 6);
    CHECK(total.coeff == expect.coeff + Rational(1, 3) * second.coeff);

    TrigPolynomial odd = TrigPolynomial::monomial(5, 1, 2);
    ExactMoment zero = odd.integrate_period(2);
    CHECK(zero.is_zero());
}

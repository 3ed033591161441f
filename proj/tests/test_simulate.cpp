#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nilfocus/lyapunov.hpp"
#include "nilfocus/simulate.hpp"

using namespace nilfocus;

namespace {
Params repeller_case() { return {2, 1, 2, MValue::from_rational(Rational(3, 5))}; }
}  // namespace

TEST_CASE("return map signs match the classification") {
    ReturnMapResult r = return_map(repeller_case(), 0.4, 1e-12);
    REQUIRE(r.ok);
    CHECK(r.delta > 0);
    CHECK(r.min_denominator >= 0.5);

    Params att{2, 1, 2, MValue::from_rational(Rational(1, 2))};
    ReturnMapResult r2 = return_map(att, 0.2, 1e-12);
    REQUIRE(r2.ok);
    CHECK(r2.delta < 0);
}

TEST_CASE("the equilibrium maps to itself") {
    ReturnMapResult r = return_map(repeller_case(), 0.0, 1e-10);
    CHECK(r.ok);
    CHECK(r.p_rho == 0);
    CHECK(r.delta == 0);
}

TEST_CASE("too-large rho is rejected with denominator guidance") {
    ReturnMapResult r = return_map(repeller_case(), 1.6, 1e-10);
    CHECK_FALSE(r.ok);
    CHECK(r.error.find("rho") != std::string::npos);
}

TEST_CASE("cartesian crossings move outward for the repeller and inward for attractors") {
    Trajectory out = integrate_cartesian(repeller_case(), 0.0, 0.4, 60.0, 1e-12);
    REQUIRE(out.ok);
    std::vector<double> up = section_crossings(out);
    REQUIRE(up.size() >= 2);
    for (size_t i = 1; i < up.size(); ++i) CHECK(up[i] > up[i - 1]);

    for (Params att : {Params{2, 1, 3, MValue::from_rational(1)},
                       Params{2, 1, 1, MValue::from_rational(0)}}) {
        Trajectory in = integrate_cartesian(att, 0.0, 0.3, 60.0, 1e-12);
        REQUIRE(in.ok);
        std::vector<double> down = section_crossings(in);
        REQUIRE(down.size() >= 2);
        for (size_t i = 1; i < down.size(); ++i) CHECK(down[i] < down[i - 1]);
    }
}

TEST_CASE("polar and cartesian return maps agree") {
    for (double rho : {0.1, 0.25, 0.4}) {
        ReturnMapResult rm = return_map(repeller_case(), rho, 1e-12);
        REQUIRE(rm.ok);
        Trajectory traj = integrate_cartesian(repeller_case(), 0.0, rho, 200.0, 1e-12);
        REQUIRE(traj.ok);
        std::vector<double> cross = section_crossings(traj);
        REQUIRE(!cross.empty());
        CHECK(std::fabs(cross[0] - rm.p_rho) <= 1e-6 * rm.p_rho);
    }
}

TEST_CASE("leading-order scaling of delta in the critical regime") {
    const int power = 3 * index_step(2, 1) + 1;  // 10
    double lo = 1e300, hi = 0;
    for (double rho : {0.25, 0.35, 0.45}) {
        ReturnMapResult r = return_map(repeller_case(), rho, 1e-12);
        REQUIRE(r.ok);
        double scaled = r.delta / std::pow(rho, power);
        CHECK(scaled > 0);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    CHECK(hi / lo < 3.0);
}

TEST_CASE("the return map is monotone in rho") {
    double prev = 0;
    for (double rho : {0.1, 0.2, 0.3, 0.4, 0.5}) {
        ReturnMapResult r = return_map(repeller_case(), rho, 1e-12);
        REQUIRE(r.ok);
        CHECK(r.p_rho > prev);
        prev = r.p_rho;
    }
}

TEST_CASE("stability probe classification and inconclusive floor") {
    ProbeReport rep = stability_probe(repeller_case(), {0.3, 0.4, 0.5}, 1e-12);
    CHECK(rep.result == ProbeResult::Repeller);

    Params att{2, 1, 2, MValue::from_double(0.59)};
    CHECK(stability_probe(att, {0.2, 0.3}, 1e-12).result == ProbeResult::Attractor);

    // float m at the critical value with tiny rho: the signal is O(rho^10),
    // far below the integration error floor -> must refuse to guess
    Params tiny{2, 1, 2, MValue::from_double(0.6)};
    ProbeReport floor = stability_probe(tiny, {0.05}, 1e-10);
    CHECK(floor.result == ProbeResult::Inconclusive);
    CHECK(!floor.note.empty());
}

TEST_CASE("trajectory CSV format") {
    Trajectory traj = integrate_cartesian(repeller_case(), 0.0, 0.3, 5.0, 1e-10);
    REQUIRE(traj.ok);
    std::string csv = traj.to_csv();
    CHECK(csv.rfind("t,x,y\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 2002);  // header + 2001 samples
    CHECK(csv.find(',') != std::string::npos);
    CHECK(csv.find(';') == std::string::npos);
}

TEST_CASE("blow-up detection reports an error") {
    // far outside the basin: the cubic damping in x cannot contain m y^3 growth
    Params p{2, 1, 1, MValue::from_rational(5)};
    Trajectory traj = integrate_cartesian(p, 0.0, 3.0, 50.0, 1e-10);
    CHECK_FALSE(traj.ok);
    CHECK(!traj.error.empty());
}

#include <doctest.h>

#include "spinsync/observables.hpp"
#include "spinsync/operator_algebra.hpp"
#include "spinsync/oracles.hpp"
#include "spinsync/steady.hpp"
#include "test_helpers.hpp"

using namespace spinsync;
using namespace spinsync::testing;

namespace {

OracleParams case_i_params(double phi_diff = 0.0) {
    OracleParams p;
    p.omega_c = mhz_to_angular(9.5);
    p.phi_diff = phi_diff;
    return p;
}

OracleParams case_ii_params() {
    OracleParams p;
    p.omega_c = mhz_to_angular(9.5);
    p.omega_prime = mhz_to_angular(3.0);
    return p;
}

OracleParams case_iii_params() {
    OracleParams p;
    p.omega_prime = mhz_to_angular(3.0);
    p.delta_b = mhz_to_angular(0.4);
    p.delta_b_prime = default_delta_b_prime(p.delta_b, PhysicalConstants{});
    return p;
}

} // namespace

TEST_CASE("case (i): no limit cycle") {
    const OracleParams p = case_i_params(0.0);
    CHECK(angular_to_mhz(p.gamma_eff_dprime()) == doctest::Approx(9.920).epsilon(1e-4));

    // |2><2| is a fixed point
    for (double t : {0.0, 0.05, 1.0}) {
        CHECK(max_abs(case_i_solution(projector(2, 3), t, p) - projector(2, 3)) < 1e-15);
    }

    // long-time state from |1><1| depends on the initial state
    const Operator late = case_i_solution(projector(1, 3), 3.0, p);
    CHECK(late(0, 0).real() == doctest::Approx(3.0 / 8).epsilon(1e-12));
    CHECK(late(1, 1).real() == doctest::Approx(1.0 / 4).epsilon(1e-12));
    CHECK(late(2, 2).real() == doctest::Approx(3.0 / 8).epsilon(1e-12));
    CHECK(std::abs(late(0, 2) - Complex(-3.0 / 8, 0)) < 1e-12);

    const Operator from_2 = case_i_solution(projector(2, 3), 3.0, p);
    CHECK(std::abs(late(0, 0) - from_2(0, 0)) >= 0.1);

    CHECK_THROWS_AS(case_i_solution(projector(1, 3), -0.1, p), std::invalid_argument);
}

TEST_CASE("case (i) matches the numeric integrator") {
    const OracleParams p = case_i_params(0.7);
    DriveConfig d;
    d.omega_plus1 = d.omega_minus1 = p.omega_c;
    d.phi_plus1 = 0.2;
    d.phi_minus1 = 0.2 + p.phi_diff;
    const EffectiveModel model = build_effective_model(d, PhysicalConstants{});
    const SuperOperator l = liouvillian(model.h_eff, model.lindblad);

    std::mt19937 rng(51);
    const Operator rho0 = random_density(rng, 3);
    const std::vector<double> grid = {0.0, 0.01, 0.1, 0.5};
    const auto numeric = evolve(l, rho0, grid);
    for (size_t k = 0; k < grid.size(); ++k) {
        CHECK(max_abs(numeric[k] - case_i_solution(rho0, grid[k], p)) < 1e-8);
    }
}

TEST_CASE("case (ii): limit cycle |2><2|") {
    const OracleParams p = case_ii_params();
    const double g2 = p.gamma_eff_dprime();
    const double g1 = p.gamma_eff_prime_b0();
    CHECK(angular_to_mhz(g1) == doctest::Approx(0.783).epsilon(1e-3));
    CHECK(p.gamma_1() ==
          doctest::Approx(std::sqrt(4 * g2 * g2 + 2 * g2 * g1 + g1 * g1)).epsilon(1e-14));

    // fixed point
    for (double t : {0.0, 0.2, 5.0}) {
        const CaseIiElements e = case_ii_solution(projector(2, 3), t, p);
        CHECK(e.rho22 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(std::abs(e.rho13) < 1e-14);
    }

    // every initial state funnels into the cycle
    std::mt19937 rng(52);
    for (int rep = 0; rep < 3; ++rep) {
        const CaseIiElements e = case_ii_solution(random_density(rng, 3), 10.0, p);
        CHECK(e.rho22 == doctest::Approx(1.0).epsilon(1e-8));
        CHECK(std::abs(e.rho13) < 1e-8);
    }

    // numeric cross-check at a short time
    DriveConfig d;
    d.omega_plus1 = d.omega_minus1 = p.omega_c;
    d.omega_prime = p.omega_prime;
    const EffectiveModel model = build_effective_model(d, PhysicalConstants{});
    const SuperOperator l = liouvillian(model.h_eff, model.lindblad);
    const Operator rho0 = random_density(rng, 3);
    const auto numeric = evolve(l, rho0, {0.0, 0.05});
    const CaseIiElements e = case_ii_solution(rho0, 0.05, p);
    CHECK(std::abs(numeric.back()(1, 1).real() - e.rho22) < 1e-8);
    CHECK(std::abs(numeric.back()(0, 2) - e.rho13) < 1e-8);

    CHECK_THROWS_AS(case_ii_solution(projector(2, 3), -1.0, p), std::invalid_argument);
}

TEST_CASE("case (iii): decoupled exponentials") {
    const OracleParams p = case_iii_params();

    std::mt19937 rng(53);
    const Operator rho0 = random_density(rng, 3);

    // every element relaxes onto |2><2|
    CHECK(max_abs(case_iii_solution(rho0, 50.0, p) - projector(2, 3)) < 1e-8);

    // the corner coherence decays exactly twice as fast as the edges
    const double t = 0.07;
    const Operator rt = case_iii_solution(rho0, t, p);
    const Complex pole(p.gamma_eff_prime(), p.delta_eff_prime());
    CHECK(std::abs(rt(0, 2) - rho0(0, 2) * std::exp(-2.0 * pole * t)) < 1e-14);
    const Complex edge_ratio = rt(0, 1) / rho0(0, 1);
    const Complex corner_ratio = rt(0, 2) / rho0(0, 2);
    CHECK(std::abs(corner_ratio - edge_ratio * edge_ratio) < 1e-12);

    // zero-field reduction of the rates
    OracleParams b0 = p;
    b0.delta_b = 0.0;
    b0.delta_b_prime = 0.0;
    CHECK(b0.gamma_eff_prime() == doctest::Approx(b0.gamma_eff_prime_b0()).epsilon(1e-14));
    CHECK(b0.delta_eff_prime() == 0.0);

    // numeric cross-check over a time grid
    DriveConfig d;
    d.omega_prime = p.omega_prime;
    d.delta_b = p.delta_b;
    d.delta_b_prime = p.delta_b_prime;
    const EffectiveModel model = build_effective_model(d, PhysicalConstants{});
    const SuperOperator l = liouvillian(model.h_eff, model.lindblad);
    const std::vector<double> grid = {0.0, 0.3, 0.9, 2.0};
    const auto numeric = evolve(l, rho0, grid);
    for (size_t k = 0; k < grid.size(); ++k) {
        CHECK(max_abs(numeric[k] - case_iii_solution(rho0, grid[k], p)) < 1e-8);
    }

    CHECK_THROWS_AS(case_iii_solution(rho0, -0.5, p), std::invalid_argument);
}

TEST_CASE("analytic solutions preserve the trace exactly") {
    std::mt19937 rng(54);
    for (int rep = 0; rep < 5; ++rep) {
        const Operator rho0 = random_density(rng, 3);
        for (double t : {0.0, 0.03, 0.4, 2.0}) {
            CHECK(std::abs(case_i_solution(rho0, t, case_i_params(0.3)).trace() -
                           Complex(1, 0)) < 1e-12);
            CHECK(std::abs(case_iii_solution(rho0, t, case_iii_params()).trace() -
                           Complex(1, 0)) < 1e-12);
        }
    }
}

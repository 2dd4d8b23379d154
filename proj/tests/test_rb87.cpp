#include <doctest.h>

#include "spinsync/observables.hpp"
#include "spinsync/operator_algebra.hpp"
#include "spinsync/rb87.hpp"
#include "spinsync/steady.hpp"
#include "test_helpers.hpp"

using namespace spinsync;
using namespace spinsync::testing;

namespace {

DriveConfig fig2_drive(double delta_b_mhz, const PhysicalConstants& constants = {}) {
    DriveConfig d;
    d.omega_plus1 = d.omega_minus1 = mhz_to_angular(9.5);
    d.omega_0 = mhz_to_angular(1.0);
    d.omega_prime = mhz_to_angular(3.0);
    d.delta_b = mhz_to_angular(delta_b_mhz);
    d.delta_b_prime = default_delta_b_prime(d.delta_b, constants);
    return d;
}

} // namespace

TEST_CASE("zeeman shifts") {
    const PhysicalConstants constants;
    CHECK(zeeman_shifts(0.0, constants) == std::pair{0.0, 0.0});

    const auto [db1, dbp1] = zeeman_shifts(1.0, constants);
    CHECK(db1 == doctest::Approx(mhz_to_angular(0.70)).epsilon(1e-14));
    CHECK(dbp1 == doctest::Approx(mhz_to_angular(0.23)).epsilon(1e-14));

    const auto [db, dbp] = zeeman_shifts(0.5714, constants);
    CHECK(angular_to_mhz(db) == doctest::Approx(0.4).epsilon(1e-4));
    CHECK(angular_to_mhz(dbp) == doctest::Approx(0.1314).epsilon(1e-3));
}

TEST_CASE("rotating-frame energies") {
    DriveConfig d;
    d.delta_b = mhz_to_angular(0.4);
    d.delta_b_prime = mhz_to_angular(0.1314);
    auto eps = rotating_frame_energies(d);
    CHECK(eps[0] == doctest::Approx(-mhz_to_angular(0.4)));
    CHECK(eps[1] == 0.0);
    CHECK(eps[2] == doctest::Approx(mhz_to_angular(0.4)));
    CHECK(eps[3] == 0.0);
    CHECK(eps[4] == doctest::Approx(-mhz_to_angular(0.1314)));
    CHECK(eps[5] == doctest::Approx(mhz_to_angular(0.1314)));

    DriveConfig zero;
    for (double e : rotating_frame_energies(zero)) CHECK(e == 0.0);

    DriveConfig detuned;
    detuned.delta_pi_dprime = mhz_to_angular(1.0);
    detuned.delta_sigma_dprime = mhz_to_angular(0.5);
    detuned.delta_pi_prime = mhz_to_angular(0.2);
    eps = rotating_frame_energies(detuned);
    const double expected[6] = {0.5, 0.0, 0.5, 1.0, 0.7, 0.7};
    for (int j = 0; j < 6; ++j) {
        CHECK(angular_to_mhz(eps[j]) == doctest::Approx(expected[j]).epsilon(1e-12));
    }
}

TEST_CASE("full Hamiltonian matches a literal transcription") {
    DriveConfig d = fig2_drive(0.4);
    d.phi_plus1 = 0.3;
    d.phi_0 = -0.2;
    d.phi_minus1 = 0.15;
    d.phi_prime = 0.8;
    const Operator h = build_full_hamiltonian(d);

    CHECK(h(0, 3) == -0.5 * d.omega_plus1 * std::exp(Complex(0, -d.phi_plus1)));
    CHECK(h(3, 0) == std::conj(h(0, 3)));
    CHECK(max_abs(h - h.adjoint()) == 0.0);

    // independent entry-by-entry construction
    Operator ref = Operator::Zero(6, 6);
    ref(0, 0) = -d.delta_b;
    ref(2, 2) = d.delta_b;
    ref(4, 4) = -d.delta_b_prime;
    ref(5, 5) = d.delta_b_prime;
    ref(0, 3) = -0.5 * d.omega_plus1 * std::exp(Complex(0, -d.phi_plus1));
    ref(1, 3) = -0.5 * d.omega_0 * std::exp(Complex(0, -d.phi_0));
    ref(2, 3) = -0.5 * d.omega_minus1 * std::exp(Complex(0, -d.phi_minus1));
    ref(0, 4) = -0.5 * d.omega_prime * std::exp(Complex(0, -d.phi_prime));
    ref(2, 5) = -0.5 * d.omega_prime * std::exp(Complex(0, -d.phi_prime));
    ref = Operator(ref.selfadjointView<Eigen::Upper>());
    CHECK(max_abs(h - ref) < 1e-14);

    CHECK(max_abs(build_full_hamiltonian(DriveConfig{})) == 0.0);
}

TEST_CASE("seven bare decay terms") {
    const PhysicalConstants constants;
    const auto terms = full_lindblad_terms(constants);
    REQUIRE(terms.size() == 7);

    double sum4 = 0.0, sum5 = 0.0, sum6 = 0.0;
    for (const auto& term : terms) {
        CHECK(term.op.cwiseAbs().sum() == 1.0); // one matrix element per path
        if (term.path.mediator == 4) sum4 += term.rate;
        if (term.path.mediator == 5) sum5 += term.rate;
        if (term.path.mediator == 6) sum6 += term.rate;
        // absent branches
        CHECK(!(term.path.mediator == 5 && term.path.to == 3));
        CHECK(!(term.path.mediator == 6 && term.path.to == 1));
    }
    CHECK(sum4 == doctest::Approx(constants.gamma_aux_dprime).epsilon(1e-14));
    CHECK(sum5 == doctest::Approx(constants.gamma_aux_prime).epsilon(1e-14));
    CHECK(sum6 == doctest::Approx(constants.gamma_aux_prime).epsilon(1e-14));
    CHECK(angular_to_mhz(terms[0].rate) == doctest::Approx(2.0217).epsilon(1e-4));
}

TEST_CASE("undriven full model settles into |2><2|") {
    const PhysicalConstants constants;
    DriveConfig d = fig2_drive(0.4);
    d.omega_0 = 0.0;
    const auto ss =
        steady_state(liouvillian(build_full_hamiltonian(d), full_lindblad_terms(constants)));
    CHECK(ss.unique);
    CHECK(ss.rho(1, 1).real() >= 1.0 - 1e-8);
    for (int j : {0, 2}) CHECK(std::abs(ss.rho(j, j)) <= 1e-8);
}

TEST_CASE("excited population stays small at the working parameters") {
    const PhysicalConstants constants;
    const auto ss = steady_state(
        liouvillian(build_full_hamiltonian(fig2_drive(0.4)), full_lindblad_terms(constants)));
    double excited = 0.0;
    for (int j = 3; j < 6; ++j) excited += ss.rho(j, j).real();
    CHECK(excited < 0.05);
}

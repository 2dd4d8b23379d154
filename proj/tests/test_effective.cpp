#include <doctest.h>

#include "spinsync/effective.hpp"
#include "spinsync/observables.hpp"
#include "spinsync/operator_algebra.hpp"
#include "spinsync/steady.hpp"
#include "test_helpers.hpp"

using namespace spinsync;
using namespace spinsync::testing;

namespace {

DriveConfig fig2_drive(double delta_b_mhz, double phi_plus1 = 0.0, double phi_minus1 = 0.0,
                       const PhysicalConstants& constants = {}) {
    DriveConfig d;
    d.omega_plus1 = d.omega_minus1 = mhz_to_angular(9.5);
    d.omega_0 = mhz_to_angular(1.0);
    d.omega_prime = mhz_to_angular(3.0);
    d.phi_plus1 = phi_plus1;
    d.phi_minus1 = phi_minus1;
    d.delta_b = mhz_to_angular(delta_b_mhz);
    d.delta_b_prime = default_delta_b_prime(d.delta_b, constants);
    return d;
}

double first_order_sq(const DriveConfig& drive, const PhysicalConstants& constants = {}) {
    const auto [reference, perturbation] = split_effective_model(drive, constants);
    return sync_measure(perturbative_steady_effective(reference, perturbation, 1).readout());
}

} // namespace

TEST_CASE("partition splits and reassembles exactly") {
    CHECK(max_abs(partition(Operator::Zero(6, 6)).v_plus) == 0.0);

    const auto parts = partition(build_full_hamiltonian(fig2_drive(0.4)));
    // the excitation block carries exactly the five drive entries of the
    // balanced scheme (omega_{+1}, omega_0, omega_{-1} into |4>, omega' twice)
    CHECK(parts.v_plus(0, 0) == Complex(-0.5 * mhz_to_angular(9.5), 0));
    CHECK(parts.v_plus(0, 1) == Complex(-0.5 * mhz_to_angular(1.0), 0));
    CHECK(parts.v_plus(0, 2) == Complex(-0.5 * mhz_to_angular(9.5), 0));
    CHECK(parts.v_plus(1, 0) == Complex(-0.5 * mhz_to_angular(3.0), 0));
    CHECK(parts.v_plus(2, 2) == Complex(-0.5 * mhz_to_angular(3.0), 0));
    CHECK(parts.v_plus(1, 1) == Complex(0, 0));
    CHECK(parts.v_plus(1, 2) == Complex(0, 0));
    CHECK(parts.v_plus(2, 0) == Complex(0, 0));
    CHECK(parts.v_plus(2, 1) == Complex(0, 0));
    CHECK(max_abs(parts.v_minus - parts.v_plus.adjoint()) == 0.0);

    std::mt19937 rng(21);
    for (int rep = 0; rep < 10; ++rep) {
        const Operator h = random_hermitian(rng, 6);
        CHECK(max_abs(reassemble(partition(h)) - h) < 1e-15);
    }

    Operator skewed = Operator::Zero(6, 6);
    skewed(0, 5) = 1.0;
    CHECK_THROWS_AS(partition(skewed), std::invalid_argument);
}

TEST_CASE("non-Hermitian Hamiltonian on the excited block") {
    const PhysicalConstants constants;

    PartitionedOperators parts;
    parts.h_g = Operator::Zero(3, 3);
    parts.h_e = Operator::Zero(3, 3);
    parts.v_plus = Operator::Zero(3, 3);
    parts.v_minus = Operator::Zero(3, 3);
    Operator h_nh = nonhermitian_hamiltonian(parts, constants);
    CHECK(h_nh(0, 0) == Complex(0, -0.5 * constants.gamma_aux_dprime));
    CHECK(h_nh(1, 1) == Complex(0, -0.5 * constants.gamma_aux_prime));
    CHECK(h_nh(2, 2) == Complex(0, -0.5 * constants.gamma_aux_prime));

    DriveConfig d;
    d.delta_b_prime = mhz_to_angular(0.1314);
    h_nh = nonhermitian_hamiltonian(partition(build_full_hamiltonian(d)), constants);
    CHECK(h_nh(0, 0) == Complex(0, -0.5 * constants.gamma_aux_dprime));
    CHECK(h_nh(1, 1) ==
          Complex(-d.delta_b_prime, -0.5 * constants.gamma_aux_prime));
    CHECK(h_nh(2, 2) == Complex(d.delta_b_prime, -0.5 * constants.gamma_aux_prime));

    // anti-Hermitian part has eigenvalues {-gamma''/2, -gamma'/2, -gamma'/2}
    const Operator anti = (h_nh - h_nh.adjoint()) / Complex(0, 2);
    Eigen::SelfAdjointEigenSolver<Operator> es(anti);
    CHECK(es.eigenvalues()(0) ==
          doctest::Approx(-0.5 * constants.gamma_aux_dprime).epsilon(1e-12));
    CHECK(es.eigenvalues()(1) ==
          doctest::Approx(-0.5 * constants.gamma_aux_prime).epsilon(1e-12));
    CHECK(es.eigenvalues()(2) ==
          doctest::Approx(-0.5 * constants.gamma_aux_prime).epsilon(1e-12));
}

TEST_CASE("effective Hamiltonian reproduces the reference parameter set") {
    const PhysicalConstants constants;

    const Operator h04 = effective_hamiltonian(
        partition(build_full_hamiltonian(fig2_drive(0.4))), constants);
    CHECK(angular_to_mhz(std::abs(h04(1, 2))) == doctest::Approx(0.051).epsilon(0.02));
    CHECK(angular_to_mhz(std::abs(h04(0, 0))) == doctest::Approx(1.437).epsilon(1e-3));
    CHECK(is_hermitian(h04));
    CHECK(std::abs(h04(0, 2)) < 1e-12); // no 1-3 coupling under the balanced drive

    // drive-free limit is the pure Zeeman diagonal
    DriveConfig zeeman;
    zeeman.delta_b = mhz_to_angular(0.4);
    zeeman.delta_b_prime = default_delta_b_prime(zeeman.delta_b, constants);
    const Operator hz =
        effective_hamiltonian(partition(build_full_hamiltonian(zeeman)), constants);
    Operator expected = Operator::Zero(3, 3);
    expected(0, 0) = -zeeman.delta_b;
    expected(2, 2) = zeeman.delta_b;
    CHECK(max_abs(hz - expected) < 1e-12);

    // scalar detuning formula as an independent oracle at delta_b = 0.2
    const DriveConfig d02 = fig2_drive(0.2);
    const Operator h02 =
        effective_hamiltonian(partition(build_full_hamiltonian(d02)), constants);
    const double g2 = constants.gamma_aux_dprime;
    const double g1 = constants.gamma_aux_prime;
    const double dd = d02.delta_b - d02.delta_b_prime;
    const double delta_eff =
        -d02.delta_b -
        d02.delta_b * d02.omega_plus1 * d02.omega_plus1 /
            (g2 * g2 + 4 * d02.delta_b * d02.delta_b) -
        dd * d02.omega_prime * d02.omega_prime / (g1 * g1 + 4 * dd * dd);
    CHECK(h02(0, 0).real() == doctest::Approx(delta_eff).epsilon(1e-10));
    CHECK(angular_to_mhz(std::abs(delta_eff)) == doctest::Approx(0.725).epsilon(1e-3));
}

TEST_CASE("effective jump operators carry the reference rates") {
    const PhysicalConstants constants;

    const auto terms0 = effective_lindblad_terms(
        partition(build_full_hamiltonian(fig2_drive(0.0))), constants);
    REQUIRE(terms0.size() == 7);
    // gamma_probe = |c^(4)_{k,2}|^2, gamma_control = |c^(4)_{k,1}|^2,
    // gamma_decay = |c^(5)_{1,1}|^2
    const double probe = std::norm(terms0[0].op(0, 1));
    const double control = std::norm(terms0[0].op(0, 0));
    const double decay = std::norm(terms0[3].op(0, 0));
    CHECK(angular_to_mhz(probe) == doctest::Approx(0.055).epsilon(1e-2));
    CHECK(angular_to_mhz(control) == doctest::Approx(4.961).epsilon(1e-3));
    CHECK(angular_to_mhz(decay) == doctest::Approx(0.783).epsilon(1e-3));

    // |c^(4)_{k,j}|^2 is independent of the destination k
    for (int k = 1; k < 3; ++k) {
        CHECK(std::norm(terms0[size_t(k)].op(k, 0)) == doctest::Approx(control));
        CHECK(std::norm(terms0[size_t(k)].op(k, 1)) == doctest::Approx(probe));
    }

    // every decay-beam mediated term vanishes without the decay beam
    DriveConfig no_decay = fig2_drive(0.0);
    no_decay.omega_prime = 0.0;
    const auto terms_nd = effective_lindblad_terms(
        partition(build_full_hamiltonian(no_decay)), constants);
    for (size_t i = 3; i < 7; ++i) CHECK(max_abs(terms_nd[i].op) == 0.0);

    // finite-field control rate
    const auto terms04 = effective_lindblad_terms(
        partition(build_full_hamiltonian(fig2_drive(0.4))), constants);
    CHECK(angular_to_mhz(std::norm(terms04[0].op(0, 0))) ==
          doctest::Approx(4.875).epsilon(1e-3));
}

TEST_CASE("closed-form parameters against the reference table") {
    const PhysicalConstants constants;

    const EffectiveParameters p = effective_parameters(fig2_drive(0.4), constants);
    CHECK(angular_to_mhz(std::abs(p.delta_eff)) == doctest::Approx(1.437).epsilon(1e-3));
    CHECK(angular_to_mhz(p.h23_magnitude()) == doctest::Approx(0.051).epsilon(2e-2));
    CHECK(angular_to_mhz(p.gamma_control) == doctest::Approx(4.875).epsilon(1e-3));
    CHECK(angular_to_mhz(p.gamma_probe) == doctest::Approx(0.055).epsilon(1e-2));
    CHECK(angular_to_mhz(p.gamma_decay) == doctest::Approx(0.776).epsilon(1e-3));
    CHECK(angular_to_mhz(std::sqrt(p.gamma_control * p.gamma_probe)) ==
          doctest::Approx(0.518).epsilon(1e-3));

    const EffectiveParameters p0 = effective_parameters(fig2_drive(0.0), constants);
    CHECK(p0.delta_eff == 0.0);
    CHECK(p0.omega_eff == 0.0);

    // both Fig. 3 phase settings share alpha = 0
    CHECK(effective_parameters(fig2_drive(0.4, 0.0, 0.0), constants).alpha == 0.0);
    CHECK(effective_parameters(fig2_drive(0.4, M_PI / 2, -M_PI / 2), constants).alpha ==
          0.0);

    DriveConfig unbalanced = fig2_drive(0.4);
    unbalanced.omega_minus1 *= 0.5;
    CHECK_THROWS_AS(effective_parameters(unbalanced, constants), std::invalid_argument);
}

TEST_CASE("matrix construction is consistent with the closed forms") {
    const PhysicalConstants constants;
    for (double delta_b_mhz : {0.1, 0.2, 0.4}) {
        for (double phi : {0.0, 0.4}) {
            const DriveConfig d = fig2_drive(delta_b_mhz, phi, -0.2);
            const Operator direct =
                effective_hamiltonian(partition(build_full_hamiltonian(d)), constants);
            const Operator from_params = effective_hamiltonian_from_parameters(
                effective_parameters(d, constants));
            CHECK(max_abs(direct - from_params) <= 1e-10 * std::max(1.0, max_abs(direct)));
        }
    }
}

TEST_CASE("opposite control-phase shifts leave alpha and first-order sq unchanged") {
    const PhysicalConstants constants;
    const DriveConfig base = fig2_drive(0.4, 0.25, -0.25);
    const double sq_base = first_order_sq(base, constants);
    for (double delta : {0.3, 1.1}) {
        DriveConfig shifted = base;
        shifted.phi_plus1 += delta;
        shifted.phi_minus1 -= delta;
        CHECK(effective_parameters(shifted, constants).alpha ==
              doctest::Approx(effective_parameters(base, constants).alpha).epsilon(1e-14));
        CHECK(first_order_sq(shifted, constants) ==
              doctest::Approx(sq_base).epsilon(1e-12));
    }
}

TEST_CASE("beta scaling endpoints") {
    const PhysicalConstants constants;
    const EffectiveModel model = build_effective_model(fig2_drive(0.4), constants);

    const EffectiveModel same = beta_scaled_model(model, 1.0, 1);
    for (size_t i = 0; i < 7; ++i) {
        CHECK(max_abs(same.lindblad[i].op - model.lindblad[i].op) == 0.0);
    }

    // approach 1 at beta = 0 keeps only the plain gain/damping paths
    const EffectiveModel a1 = beta_scaled_model(model, 0.0, 1);
    for (int i : {0, 1, 2}) CHECK(max_abs(a1.lindblad[size_t(i)].op) == 0.0);
    CHECK(max_abs(a1.lindblad[3].op) == 0.0);           // c^(5)_{1,1} scaled away
    CHECK(std::abs(a1.lindblad[4].op(1, 0)) > 0.0);     // c^(5)_{2,1} survives
    CHECK(std::abs(a1.lindblad[5].op(1, 2)) > 0.0);     // c^(6)_{2,3} survives
    CHECK(max_abs(a1.lindblad[6].op) == 0.0);           // c^(6)_{3,3} scaled away
    // surviving rates realize gamma_g = gamma_d = gamma_decay
    const double gamma_decay = effective_parameters(fig2_drive(0.4), constants).gamma_decay;
    CHECK(std::norm(a1.lindblad[4].op(1, 0)) == doctest::Approx(gamma_decay).epsilon(1e-12));
    CHECK(std::norm(a1.lindblad[5].op(1, 2)) == doctest::Approx(gamma_decay).epsilon(1e-12));

    // approach 2 at beta = 0 keeps the interfering |2><1| + |2><3| sum
    const EffectiveModel a2 = beta_scaled_model(model, 0.0, 2);
    CHECK(std::abs(a2.lindblad[1].op(1, 0)) > 0.0);
    CHECK(std::abs(a2.lindblad[1].op(1, 2)) > 0.0);
    CHECK(a2.lindblad[1].op(1, 1) == Complex(0, 0));
    CHECK(max_abs(a2.lindblad[0].op) == 0.0);
    CHECK(max_abs(a2.lindblad[2].op) == 0.0);

    CHECK_THROWS_AS(beta_scaled_model(model, 1.5, 1), std::invalid_argument);
    CHECK_THROWS_AS(beta_scaled_model(model, -0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(beta_scaled_model(model, 0.5, 3), std::invalid_argument);
}

TEST_CASE("ideal spin-1 model") {
    IdealSpinModel m;
    m.omega = mhz_to_angular(0.1);
    m.gamma_g = m.gamma_d = mhz_to_angular(0.2);

    auto [h_plain, terms] = ideal_spin_model(m);
    CHECK(h_plain(0, 1) == Complex(0, -1) * m.omega / std::sqrt(2.0));
    CHECK(h_plain(1, 2) == Complex(0, -1) * m.omega / std::sqrt(2.0));

    m.expanded = true;
    auto [h_exp, terms_exp] = ideal_spin_model(m);
    CHECK(max_abs(h_exp - h_exp.adjoint()) == 0.0);
    CHECK(std::abs(h_exp(0, 1) - Complex(0, 1) * m.omega / std::sqrt(2.0)) < 1e-15);
    CHECK(h_exp(1, 2) == Complex(0, -1) * m.omega / std::sqrt(2.0));

    // undriven system relaxes to |0><0| from anywhere
    m.omega = 0.0;
    m.expanded = false;
    auto [h0, terms0] = ideal_spin_model(m);
    const auto ss = steady_state(liouvillian(h0, terms0));
    CHECK(ss.unique);
    CHECK(max_abs(ss.rho - projector(2, 3)) < 1e-10);
}

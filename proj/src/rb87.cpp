#include "spinsync/rb87.hpp"

namespace spinsync {

bool DriveConfig::ideal_mapping() const {
    return omega_plus1 == omega_minus1 && delta_pi_dprime == 0.0 &&
           delta_sigma_dprime == 0.0 && delta_pi_prime == 0.0;
}

std::pair<double, double> zeeman_shifts(double b_gauss, const PhysicalConstants& constants) {
    return {constants.zeeman_ground * b_gauss, constants.zeeman_excited * b_gauss};
}

double default_delta_b_prime(double delta_b, const PhysicalConstants& constants) {
    return delta_b * constants.zeeman_excited / constants.zeeman_ground;
}

std::array<double, 6> rotating_frame_energies(const DriveConfig& c) {
    return {
        -c.delta_b + c.delta_pi_dprime - c.delta_sigma_dprime,
        0.0,
        c.delta_b + c.delta_pi_dprime - c.delta_sigma_dprime,
        c.delta_pi_dprime,
        -c.delta_b_prime - c.delta_sigma_dprime + c.delta_pi_dprime + c.delta_pi_prime,
        c.delta_b_prime - c.delta_sigma_dprime + c.delta_pi_dprime + c.delta_pi_prime,
    };
}

Operator build_full_hamiltonian(const DriveConfig& c) {
    const auto eps = rotating_frame_energies(c);
    Operator h = Operator::Zero(6, 6);
    for (int j = 0; j < 6; ++j) h(j, j) = eps[j];

    auto drive = [](double mag, double phi) {
        return -0.5 * mag * std::exp(Complex(0, -phi));
    };
    h(0, 3) = drive(c.omega_plus1, c.phi_plus1);
    h(1, 3) = drive(c.omega_0, c.phi_0);
    h(2, 3) = drive(c.omega_minus1, c.phi_minus1);
    h(0, 4) = drive(c.omega_prime, c.phi_prime);
    h(2, 5) = drive(c.omega_prime, c.phi_prime);
    // mirror the upper triangle so the result is exactly Hermitian
    h(3, 0) = std::conj(h(0, 3));
    h(3, 1) = std::conj(h(1, 3));
    h(3, 2) = std::conj(h(2, 3));
    h(4, 0) = std::conj(h(0, 4));
    h(5, 2) = std::conj(h(2, 5));
    return h;
}

std::vector<LindbladTerm> full_lindblad_terms(const PhysicalConstants& constants) {
    auto jump = [](int to, int from) {
        Operator op = Operator::Zero(6, 6);
        op(to - 1, from - 1) = 1.0;
        return op;
    };
    std::vector<LindbladTerm> terms;
    terms.reserve(7);
    for (int k = 1; k <= 3; ++k) {
        terms.push_back(LindbladTerm::with_rate(jump(k, 4), constants.gamma_aux_dprime / 3.0,
                                                DecayPath{4, k, 4}));
    }
    for (int k : {1, 2}) {
        terms.push_back(LindbladTerm::with_rate(jump(k, 5), constants.gamma_aux_prime / 2.0,
                                                DecayPath{5, k, 5}));
    }
    for (int k : {2, 3}) {
        terms.push_back(LindbladTerm::with_rate(jump(k, 6), constants.gamma_aux_prime / 2.0,
                                                DecayPath{6, k, 6}));
    }
    return terms;
}

} // namespace spinsync

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "spinsync/types.hpp"

namespace spinsync {

// Rb-87 D1/D2 numbers; configuration, not hard-coded, so other level schemes
// can reuse the machinery.
struct PhysicalConstants {
    double gamma_aux_dprime = mhz_to_angular(6.065); // F''=0 decay rate
    double gamma_aux_prime = mhz_to_angular(5.746);  // F'=1 decay rate
    double zeeman_ground = mhz_to_angular(0.70);     // rad/us per gauss, F=1
    double zeeman_excited = mhz_to_angular(0.23);    // rad/us per gauss, F'=1
};

// All laser magnitudes/phases/detunings and the magnetic field, in rad/us
// and rad. State ordering throughout:
//   |1> = (F=1, M=+1), |2> = (F=1, M=0), |3> = (F=1, M=-1),
//   |4> = (F''=0, M=0), |5> = (F'=1, M=+1), |6> = (F'=1, M=-1).
struct DriveConfig {
    double omega_plus1 = 0.0;
    double omega_0 = 0.0;
    double omega_minus1 = 0.0;
    double omega_prime = 0.0;
    double phi_plus1 = 0.0;
    double phi_0 = 0.0;
    double phi_minus1 = 0.0;
    double phi_prime = 0.0;
    double delta_b = 0.0;
    double delta_b_prime = 0.0;
    double delta_pi_dprime = 0.0;
    double delta_sigma_dprime = 0.0;
    double delta_pi_prime = 0.0;

    // Balanced control beams and vanishing detunings; the regime in which the
    // closed-form effective parameters hold.
    bool ideal_mapping() const;
};

// (delta_b, delta_b_prime) for a field of b gauss.
std::pair<double, double> zeeman_shifts(double b_gauss, const PhysicalConstants& constants);

// Fixed-ratio default for the excited-state shift when only delta_b is given.
double default_delta_b_prime(double delta_b, const PhysicalConstants& constants);

// Rotating-frame energies epsilon_1..epsilon_6.
std::array<double, 6> rotating_frame_energies(const DriveConfig& config);

// 6x6 rotating-frame Hamiltonian; Hermitian by construction.
Operator build_full_hamiltonian(const DriveConfig& config);

// The seven bare decay terms: |k><4| at gamma''/3 (k=1..3), |k><5| at
// gamma'/2 (k=1,2), |k><6| at gamma'/2 (k=2,3).
std::vector<LindbladTerm> full_lindblad_terms(const PhysicalConstants& constants);

} // namespace spinsync

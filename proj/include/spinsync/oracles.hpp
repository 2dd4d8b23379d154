#pragma once

#include "spinsync/rb87.hpp"
#include "spinsync/types.hpp"

namespace spinsync {

// Closed-form time-dependent solutions of the drive-free (omega_0 = 0)
// effective model, used as ground truth for the numeric solvers.
//
// Case (i):   delta_b = 0, omega_prime = 0, control phases arbitrary
//             (no limit cycle; the steady state remembers the initial state).
// Case (ii):  delta_b = 0, control phases 0, omega_prime > 0
//             (limit cycle |2><2|; only rho_22 and rho_13 are in closed form).
// Case (iii): omega_c = 0, omega_prime > 0, delta_b arbitrary
//             (limit cycle |2><2|; every element decouples).
struct OracleParams {
    double omega_c = 0.0;     // common |omega_{+-1}| magnitude, rad/us
    double omega_prime = 0.0; // rad/us
    double phi_diff = 0.0;    // phi_{-1} - phi_{+1}, rad
    double gamma_aux_dprime = PhysicalConstants{}.gamma_aux_dprime;
    double gamma_aux_prime = PhysicalConstants{}.gamma_aux_prime;
    double delta_b = 0.0;
    double delta_b_prime = 0.0;

    // control-beam mediated effective decay rate
    double gamma_eff_dprime() const {
        return 2.0 * omega_c * omega_c / (3.0 * gamma_aux_dprime);
    }
    // decay-beam mediated rate at zero field (cases i/ii)
    double gamma_eff_prime_b0() const {
        return omega_prime * omega_prime / (2.0 * gamma_aux_prime);
    }
    // decay-beam mediated rate and shift at finite field (case iii)
    double gamma_eff_prime() const {
        const double dd = delta_b - delta_b_prime;
        const double half = 0.5 * gamma_aux_prime;
        return half * (0.25 * omega_prime * omega_prime) / (dd * dd + half * half);
    }
    double delta_eff_prime() const {
        const double dd = delta_b - delta_b_prime;
        return -delta_b - dd * omega_prime * omega_prime /
                              (gamma_aux_prime * gamma_aux_prime + 4.0 * dd * dd);
    }
    // case (ii) composite rates
    double gamma_1() const {
        const double g2 = gamma_eff_dprime();
        const double g1 = gamma_eff_prime_b0();
        return std::sqrt(4 * g2 * g2 + 2 * g2 * g1 + g1 * g1);
    }
    double gamma_2(int sign) const {
        const double g2 = gamma_eff_dprime();
        const double g1 = gamma_eff_prime_b0();
        const double s = sign >= 0 ? 1.0 : -1.0;
        return std::sqrt(4 * g2 * g2 + g1 * (g1 + s * gamma_1()) +
                         g2 * (2 * g1 + s * gamma_1()));
    }
};

Operator case_i_solution(const Operator& rho0, double t, const OracleParams& p);

struct CaseIiElements {
    double rho22 = 0.0;
    Complex rho13 = 0.0;
};
CaseIiElements case_ii_solution(const Operator& rho0, double t, const OracleParams& p);

Operator case_iii_solution(const Operator& rho0, double t, const OracleParams& p);

} // namespace spinsync

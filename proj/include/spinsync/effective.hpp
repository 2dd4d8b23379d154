#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "spinsync/rb87.hpp"
#include "spinsync/types.hpp"

namespace spinsync {

// Ground/excited block decomposition of the 6x6 Hamiltonian:
// h = h_g + h_e + v_plus + v_minus with v_minus = v_plus^dag.
struct PartitionedOperators {
    Operator h_g;     // 3x3 ground block (diagonal in the working basis)
    Operator h_e;     // 3x3 excited block
    Operator v_plus;  // excited rows x ground cols
    Operator v_minus; // ground rows x excited cols
};

PartitionedOperators partition(const Operator& h_full);
Operator reassemble(const PartitionedOperators& parts);

// h_e - (i/2) diag(gamma'', gamma', gamma') on the excited block.
Operator nonhermitian_hamiltonian(const PartitionedOperators& parts,
                                  const PhysicalConstants& constants);

// h_g - 1/2 sum_k [ v_minus (h_nh - eps_k)^-1 v_plus P_k + h.c. ]
Operator effective_hamiltonian(const PartitionedOperators& parts,
                               const PhysicalConstants& constants);

// The seven effective jump operators as rate-absorbed amplitudes, in the
// fixed mediator order (k,l) = (1,4),(2,4),(3,4),(1,5),(2,5),(2,6),(3,6).
std::vector<LindbladTerm> effective_lindblad_terms(const PartitionedOperators& parts,
                                                   const PhysicalConstants& constants);

// Closed-form scalar parameters of the effective 3-level system. Valid only
// under the ideal-mapping conditions. Angular frequencies in rad/us.
struct EffectiveParameters {
    double delta_eff = 0.0;
    double omega_eff = 0.0;
    double phi_eff = 0.0;
    double alpha = 0.0;
    double gamma_control = 0.0;
    double gamma_probe = 0.0;
    double gamma_decay = 0.0;

    double h23_magnitude() const { return omega_eff / std::sqrt(2.0); }
};

EffectiveParameters effective_parameters(const DriveConfig& config,
                                         const PhysicalConstants& constants);

// Reconstructs the ideal-mapping effective Hamiltonian from the scalar
// parameters (diagonal (delta_eff, 0, -delta_eff), couplings via omega_eff,
// phi_eff, alpha).
Operator effective_hamiltonian_from_parameters(const EffectiveParameters& p);

struct EffectiveModel {
    Operator h_eff;                          // 3x3, Hermitian
    std::vector<LindbladTerm> lindblad;      // 7 rate-absorbed terms, fixed order
    std::optional<EffectiveParameters> params;
};

EffectiveModel build_effective_model(const DriveConfig& config,
                                     const PhysicalConstants& constants);

// Ad hoc beta scaling of selected effective coefficients.
// Approach 1 scales c^(5)_{1,1}, c^(6)_{3,3} and every c^(4)_{k,j}.
// Approach 2 scales c^(5)_{1,1}, c^(6)_{3,3}, c^(4)_{k,2} (k=1..3) and
// c^(4)_{k,1}, c^(4)_{k,3} for k=1,3.
EffectiveModel beta_scaled_model(const EffectiveModel& model, double beta, int approach);

// The paradigmatic driven spin-1 reference system.
struct IdealSpinModel {
    double delta = 0.0;   // rad/us
    double omega = 0.0;   // rad/us
    double phi_s = 0.0;   // rad
    double gamma_g = 0.0; // rad/us
    double gamma_d = 0.0; // rad/us
    bool expanded = false; // extra pi phase on the 12-coupling
};

std::pair<Operator, std::vector<LindbladTerm>> ideal_spin_model(const IdealSpinModel& model);

} // namespace spinsync

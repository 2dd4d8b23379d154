#pragma once

#include <utility>
#include <vector>

#include "spinsync/effective.hpp"
#include "spinsync/types.hpp"

namespace spinsync {

struct SteadyStateResult {
    Operator rho;          // Hermitized, trace-normalized null vector
    double residual = 0.0; // ||L vec(rho)||_2
    int null_multiplicity = 0;
    bool unique = false;
};

// Smallest-singular-direction steady state of a trace-preserving generator.
// Degeneracy is reported via null_multiplicity / unique, not as an error.
SteadyStateResult steady_state(const SuperOperator& l);

// Classical fixed-step RK4 with automatic step halving until successive
// refinements agree to tolerances().evolve_refine per element. t_grid must
// ascend from 0; times in us.
std::vector<Operator> evolve(const SuperOperator& l, const Operator& rho0,
                             const std::vector<double>& t_grid);

struct PerturbativeSolution {
    std::vector<Operator> orders; // rho^(0) .. rho^(K)

    // lambda = 1 readout; unit trace by the trace structure of the orders.
    Operator readout() const;
};

// Appendix-style recursion for drive-independent dissipators:
// L_ref rho^(k) = -L_pert rho^(k-1), solved in the trace-zero subspace.
PerturbativeSolution perturbative_steady_full(const SuperOperator& l_ref,
                                              const SuperOperator& l_pert, int order);

// Recursion for the effective master equation, whose jump operators depend on
// the drive: first-order cross terms and a second-order pure-perturbation
// dissipator enter alongside the commutator.
PerturbativeSolution perturbative_steady_effective(const EffectiveModel& reference,
                                                   const EffectiveModel& perturbation,
                                                   int order);

// Reference (omega_0 -> 0) and perturbation parts of the effective model for
// the given drive.
std::pair<EffectiveModel, EffectiveModel> split_effective_model(
    const DriveConfig& config, const PhysicalConstants& constants);

// First-order steady-state synchronization closed forms.
enum class SqVariant { Eq20, Eq22, Eq23, Eq24, Eq25, Eq26, Eq27 };

double closed_form_sq(const EffectiveParameters& params, SqVariant variant,
                      double beta = 1.0);

} // namespace spinsync

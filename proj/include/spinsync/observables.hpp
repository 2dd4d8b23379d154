#pragma once

#include <vector>

#include "spinsync/types.hpp"

namespace spinsync {

// |sum_M rho_{M,M+1}| over the +S..-S basis ordering; for S = 1 this is
// |rho_12 + rho_23|.
double sync_measure(const Operator& rho, int spin = 1);

// exp(-i phi Sz) exp(-i theta Sy) |M=+1>, spin 1.
StateVector spin_coherent_state(double theta, double phi);

// Q(theta, phi) over a uniform grid; theta spans [0, pi] inclusive, phi spans
// [-pi, pi) with periodic spacing 2 pi / n_phi.
struct HusimiField {
    std::vector<double> theta_grid;
    std::vector<double> phi_grid;
    Eigen::MatrixXd values; // n_theta x n_phi
    int spin = 1;

    // integral of Q sin(theta) dtheta dphi; 1 for a unit-trace state
    double normalization() const;
};

HusimiField husimi_q(const Operator& rho, int n_theta = 181, int n_phi = 360);

// integral of Q d(cos theta) for each phi column
std::vector<double> integrate_over_cos_theta(const HusimiField& field);

struct HusimiMax {
    bool phase_preference = false;
    double theta = 0.0;
    double phi = 0.0; // reported in (-pi, pi]; maxima at the seam report +pi
};

// Grid argmax refined by a local quadratic fit in each coordinate. Fields
// that are phi-uniform to tolerances().phi_uniform report no phase
// preference instead of a location.
HusimiMax husimi_max(const HusimiField& field);

// Top-left 3x3 block of a 6x6 state; optionally trace-renormalized.
Operator ground_block(const Operator& rho6, bool renormalize = false);

} // namespace spinsync

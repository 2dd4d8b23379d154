#include "spinsync/observables.hpp"

#include <cmath>

#include "spinsync/operator_algebra.hpp"
#include "spinsync/spin.hpp"

namespace spinsync {

namespace {

// Composite Simpson for a uniform grid when the interval count is even
// (the default 181-node grid), trapezoid otherwise. Plain trapezoid at 181
// nodes misses the 1e-6 normalization target by two orders of magnitude.
double integrate_uniform(const Eigen::VectorXd& f, double h) {
    const Eigen::Index n = f.size();
    if (n < 2) return 0.0;
    if ((n - 1) % 2 == 0) {
        double sum = f(0) + f(n - 1);
        for (Eigen::Index i = 1; i < n - 1; ++i) {
            sum += (i % 2 == 1 ? 4.0 : 2.0) * f(i);
        }
        return sum * h / 3.0;
    }
    double sum = 0.5 * (f(0) + f(n - 1));
    for (Eigen::Index i = 1; i < n - 1; ++i) sum += f(i);
    return sum * h;
}

double wrap_phi(double phi) {
    double w = std::remainder(phi, 2 * M_PI); // (-pi, pi]
    if (w <= -M_PI) w = M_PI;
    return w;
}

} // namespace

double sync_measure(const Operator& rho, int spin) {
    const Eigen::Index dim = 2 * spin + 1;
    if (spin < 1 || rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument(
            "sync_measure: state dimension must equal 2S+1 (extract the ground "
            "block of a full-model state first)");
    }
    Complex sum = 0.0;
    for (Eigen::Index i = 0; i + 1 < dim; ++i) {
        sum += rho(i, i + 1);
    }
    return std::abs(sum);
}

StateVector spin_coherent_state(double theta, double phi) {
    StateVector pole = StateVector::Zero(3);
    pole(0) = 1.0;
    return unitary_exp(phi * spin1_z()) * (unitary_exp(theta * spin1_y()) * pole);
}

double HusimiField::normalization() const {
    if (theta_grid.size() < 2 || phi_grid.empty()) return 0.0;
    const double h_theta = theta_grid[1] - theta_grid[0];
    const double h_phi = 2 * M_PI / double(phi_grid.size());
    Eigen::VectorXd marginal(values.rows());
    for (Eigen::Index i = 0; i < values.rows(); ++i) {
        marginal(i) = values.row(i).sum() * h_phi * std::sin(theta_grid[i]);
    }
    return integrate_uniform(marginal, h_theta);
}

HusimiField husimi_q(const Operator& rho, int n_theta, int n_phi) {
    if (rho.rows() != 3 || rho.cols() != 3) {
        throw std::invalid_argument("husimi_q: expected a 3x3 state");
    }
    if (n_theta < 3 || n_phi < 4) {
        throw std::invalid_argument("husimi_q: grid too coarse");
    }
    HusimiField field;
    field.spin = 1;
    field.theta_grid.resize(n_theta);
    field.phi_grid.resize(n_phi);
    field.values.resize(n_theta, n_phi);

    for (int i = 0; i < n_theta; ++i) {
        field.theta_grid[i] = M_PI * double(i) / double(n_theta - 1);
    }
    for (int j = 0; j < n_phi; ++j) {
        field.phi_grid[j] = -M_PI + 2 * M_PI * double(j) / double(n_phi);
    }

    const double prefactor = 3.0 / (4.0 * M_PI);
    StateVector pole = StateVector::Zero(3);
    pole(0) = 1.0;
    const Operator sy = spin1_y();
    for (int i = 0; i < n_theta; ++i) {
        const StateVector base = unitary_exp(field.theta_grid[i] * sy) * pole;
        // <v|rho|v> with v_m = exp(-i phi m) base_m, m = +1, 0, -1
        for (int j = 0; j < n_phi; ++j) {
            const Complex e = std::exp(Complex(0, field.phi_grid[j]));
            StateVector v(3);
            v(0) = std::conj(e) * base(0);
            v(1) = base(1);
            v(2) = e * base(2);
            const Complex q = (v.adjoint() * rho * v)(0);
            field.values(i, j) = prefactor * q.real();
        }
    }
    return field;
}

std::vector<double> integrate_over_cos_theta(const HusimiField& field) {
    const double h_theta = field.theta_grid[1] - field.theta_grid[0];
    std::vector<double> out(field.phi_grid.size());
    Eigen::VectorXd column(field.values.rows());
    for (Eigen::Index j = 0; j < field.values.cols(); ++j) {
        for (Eigen::Index i = 0; i < field.values.rows(); ++i) {
            column(i) = field.values(i, j) * std::sin(field.theta_grid[i]);
        }
        out[size_t(j)] = integrate_uniform(column, h_theta);
    }
    return out;
}

HusimiMax husimi_max(const HusimiField& field) {
    const Eigen::Index n_theta = field.values.rows();
    const Eigen::Index n_phi = field.values.cols();

    double variation = 0.0;
    for (Eigen::Index i = 0; i < n_theta; ++i) {
        variation = std::max(variation, field.values.row(i).maxCoeff() -
                                            field.values.row(i).minCoeff());
    }
    HusimiMax result;
    if (variation <= tolerances().phi_uniform) {
        result.phase_preference = false;
        return result;
    }
    result.phase_preference = true;

    Eigen::Index i_max = 0, j_max = 0;
    field.values.maxCoeff(&i_max, &j_max);

    const double h_theta = field.theta_grid[1] - field.theta_grid[0];
    const double h_phi = 2 * M_PI / double(n_phi);

    auto parabola_offset = [](double lo, double mid, double hi) {
        const double denom = lo - 2 * mid + hi;
        if (denom >= 0.0) return 0.0; // not a local max in this coordinate
        double delta = 0.5 * (lo - hi) / denom;
        return std::clamp(delta, -0.5, 0.5);
    };

    double theta = field.theta_grid[size_t(i_max)];
    if (i_max > 0 && i_max < n_theta - 1) {
        theta += h_theta * parabola_offset(field.values(i_max - 1, j_max),
                                           field.values(i_max, j_max),
                                           field.values(i_max + 1, j_max));
    }
    const Eigen::Index j_lo = (j_max + n_phi - 1) % n_phi;
    const Eigen::Index j_hi = (j_max + 1) % n_phi;
    double phi = field.phi_grid[size_t(j_max)] +
                 h_phi * parabola_offset(field.values(i_max, j_lo),
                                         field.values(i_max, j_max),
                                         field.values(i_max, j_hi));
    phi = wrap_phi(phi);
    // maxima within one grid cell of the seam report +pi
    if (M_PI - std::abs(phi) <= h_phi) phi = M_PI;

    result.theta = theta;
    result.phi = phi;
    return result;
}

Operator ground_block(const Operator& rho6, bool renormalize) {
    if (rho6.rows() != 6 || rho6.cols() != 6) {
        throw std::invalid_argument("ground_block: expected a 6x6 state");
    }
    Operator block = rho6.topLeftCorner(3, 3);
    if (renormalize) {
        const Complex tr = block.trace();
        if (std::abs(tr) < 1e-12) {
            throw std::invalid_argument("ground_block: ground-block trace is zero");
        }
        block /= tr;
    }
    return block;
}

} // namespace spinsync

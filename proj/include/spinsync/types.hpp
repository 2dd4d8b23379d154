#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace spinsync {

using Complex = std::complex<double>;

// Dense square complex matrix. Generator entries are angular frequencies in
// rad/us; density matrices and pure states are dimensionless.
using Operator = Eigen::MatrixXcd;

// D^2 x D^2 matrix acting on column-vectorized density matrices (rad/us).
using SuperOperator = Eigen::MatrixXcd;

using StateVector = Eigen::VectorXcd;

inline constexpr double two_pi = 6.283185307179586476925286766559;

// User-facing frequencies are plain MHz; internally everything is rad/us.
inline constexpr double mhz_to_angular(double mhz) { return two_pi * mhz; }
inline constexpr double angular_to_mhz(double w) { return w / two_pi; }

class SingularOperatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double achieved)
        : std::runtime_error(what), achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_;
};

// Every tolerance used by the library and its acceptance suite, in one place.
struct Tolerances {
    double hermitian = 1e-12;          // max|A - A^dag| <= tol * max(1, max|A|)
    double trace = 1e-10;              // |tr(rho) - 1|
    double psd = 1e-10;                // min eigenvalue >= -psd
    double trace_preserving = 1e-10;   // |vec(I)^dag L| relative to max|L|
    double unitary = 1e-12;            // |U U^dag - I|
    double null_space = 1e-8;          // singular values below tol * sigma_max
    double steady_residual = 1e-9;     // ||L vec(rho)|| relative to ||L||
    double evolve_refine = 1e-10;      // per-element successive-refinement target
    double evolve_drift = 1e-9;        // trace / hermiticity drift along trajectories
    double pert_trace = 1e-12;         // tr(rho^(k>=1)) bound
    double husimi_norm = 1e-6;         // quadrature normalization defect
    double phi_uniform = 1e-9;         // no-phase-preference detection threshold
    double params_consistency = 1e-10; // closed forms vs matrix construction
};

inline const Tolerances& tolerances() {
    static const Tolerances tol{};
    return tol;
}

// (from, to, mediator) annotation of a decay path, 1-based state labels;
// 0 means "not a single path" (e.g. a summed effective jump operator).
struct DecayPath {
    int from = 0;
    int to = 0;
    int mediator = 0;
};

// A jump operator either carries an explicit rate (dimensionless operator,
// rate in rad/us) or absorbs it (amplitude in sqrt(rad/us), rate == 1).
enum class RateConvention { ExplicitRate, AbsorbedAmplitude };

struct LindbladTerm {
    Operator op;
    double rate = 1.0;
    RateConvention convention = RateConvention::ExplicitRate;
    DecayPath path{};

    static LindbladTerm with_rate(Operator op, double rate, DecayPath path = {}) {
        return LindbladTerm{std::move(op), rate, RateConvention::ExplicitRate, path};
    }
    static LindbladTerm absorbed(Operator op, DecayPath path = {}) {
        return LindbladTerm{std::move(op), 1.0, RateConvention::AbsorbedAmplitude, path};
    }
};

} // namespace spinsync

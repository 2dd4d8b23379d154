#include "spinsync/steady.hpp"

#include <cmath>

#include "spinsync/operator_algebra.hpp"

namespace spinsync {

namespace {

// Least-squares solve of l x = rhs with an appended trace row; the plain
// system is rank-deficient along the steady-state direction.
StateVector solve_with_trace_constraint(const SuperOperator& l, const StateVector& rhs,
                                        double target_trace) {
    const Eigen::Index n = l.rows();
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(n))));
    const double weight = std::max(1.0, l.cwiseAbs().maxCoeff());

    Eigen::MatrixXcd a(n + 1, n);
    a.topRows(n) = l;
    a.row(n) = weight * vectorize(Operator::Identity(d, d)).adjoint();
    StateVector b(n + 1);
    b.head(n) = rhs;
    b(n) = weight * target_trace;
    return a.colPivHouseholderQr().solve(b);
}

} // namespace

SteadyStateResult steady_state(const SuperOperator& l) {
    if (l.rows() != l.cols()) {
        throw std::invalid_argument("steady_state: superoperator must be square");
    }
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(l.rows()))));
    if (d * d != l.rows()) {
        throw std::invalid_argument("steady_state: dimension is not a perfect square");
    }

    Eigen::JacobiSVD<SuperOperator> svd(l, Eigen::ComputeFullV);
    const Eigen::VectorXd& sigma = svd.singularValues();
    const double sigma_max = sigma.size() > 0 ? sigma(0) : 0.0;
    const double threshold = tolerances().null_space * sigma_max;

    int multiplicity = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
        if (sigma(i) <= threshold) ++multiplicity;
    }

    SteadyStateResult result;
    result.null_multiplicity = multiplicity;
    result.unique = (multiplicity == 1);

    Operator rho = devectorize(svd.matrixV().col(l.rows() - 1));
    rho = hermitize(rho);
    const Complex tr = rho.trace();
    if (std::abs(tr) > 1e-10) {
        rho /= tr;
    }
    result.rho = rho;
    result.residual = (l * vectorize(rho)).norm();
    return result;
}

std::vector<Operator> evolve(const SuperOperator& l, const Operator& rho0,
                             const std::vector<double>& t_grid) {
    if (rho0.rows() != rho0.cols()) {
        throw std::invalid_argument("evolve: state must be square");
    }
    if (l.rows() != rho0.size()) {
        throw std::invalid_argument("evolve: superoperator/state dimension mismatch");
    }
    if (t_grid.empty() || std::abs(t_grid.front()) > 1e-15) {
        throw std::invalid_argument("evolve: time grid must start at 0");
    }
    for (size_t i = 1; i < t_grid.size(); ++i) {
        if (!(t_grid[i] > t_grid[i - 1])) {
            throw std::invalid_argument("evolve: time grid must be strictly ascending");
        }
    }

    const double scale = std::max(l.cwiseAbs().maxCoeff(), 1e-12);
    const double t_end = t_grid.back();

    auto integrate = [&](double dt_target) {
        std::vector<Operator> samples;
        samples.reserve(t_grid.size());
        StateVector v = vectorize(rho0);
        samples.push_back(rho0);
        double t = 0.0;
        for (size_t i = 1; i < t_grid.size(); ++i) {
            const double gap = t_grid[i] - t;
            const auto steps = std::max<long>(1, std::lround(std::ceil(gap / dt_target)));
            const double dt = gap / double(steps);
            for (long s = 0; s < steps; ++s) {
                const StateVector k1 = l * v;
                const StateVector k2 = l * (v + 0.5 * dt * k1);
                const StateVector k3 = l * (v + 0.5 * dt * k2);
                const StateVector k4 = l * (v + dt * k3);
                v += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
            t = t_grid[i];
            samples.push_back(devectorize(v));
        }
        return samples;
    };

    double dt = std::min(0.25 / scale, t_end > 0 ? t_end : 1.0);
    std::vector<Operator> coarse = integrate(dt);
    double achieved = std::numeric_limits<double>::infinity();
    for (int halving = 0; halving < 24; ++halving) {
        dt *= 0.5;
        std::vector<Operator> fine = integrate(dt);
        achieved = 0.0;
        for (size_t i = 0; i < fine.size(); ++i) {
            achieved = std::max(achieved, (fine[i] - coarse[i]).cwiseAbs().maxCoeff());
        }
        coarse = std::move(fine);
        if (achieved <= tolerances().evolve_refine) {
            for (const Operator& rho : coarse) {
                const double trace_drift = std::abs(rho.trace() - rho0.trace());
                const double herm_drift =
                    (rho - rho.adjoint()).cwiseAbs().maxCoeff() -
                    (rho0 - rho0.adjoint()).cwiseAbs().maxCoeff();
                if (trace_drift > tolerances().evolve_drift ||
                    herm_drift > tolerances().evolve_drift) {
                    throw IntegrationError("evolve: trace/hermiticity drift exceeds bound",
                                           std::max(trace_drift, herm_drift));
                }
            }
            return coarse;
        }
    }
    throw IntegrationError("evolve: step refinement failed to reach tolerance", achieved);
}

Operator PerturbativeSolution::readout() const {
    if (orders.empty()) {
        throw std::invalid_argument("PerturbativeSolution: no orders computed");
    }
    Operator sum = orders.front();
    for (size_t k = 1; k < orders.size(); ++k) sum += orders[k];
    return sum;
}

PerturbativeSolution perturbative_steady_full(const SuperOperator& l_ref,
                                              const SuperOperator& l_pert, int order) {
    if (order < 0) {
        throw std::invalid_argument("perturbative_steady_full: order must be >= 0");
    }
    const SteadyStateResult base = steady_state(l_ref);
    if (!base.unique) {
        throw std::invalid_argument(
            "perturbative_steady_full: reference generator has a degenerate steady "
            "state; perturbation around a degenerate manifold is unsupported");
    }
    PerturbativeSolution solution;
    solution.orders.push_back(base.rho);
    StateVector prev = vectorize(base.rho);
    for (int k = 1; k <= order; ++k) {
        const StateVector rhs = -(l_pert * prev);
        const StateVector x = solve_with_trace_constraint(l_ref, rhs, 0.0);
        solution.orders.push_back(devectorize(x));
        prev = x;
    }
    return solution;
}

PerturbativeSolution perturbative_steady_effective(const EffectiveModel& reference,
                                                   const EffectiveModel& perturbation,
                                                   int order) {
    if (order < 0) {
        throw std::invalid_argument("perturbative_steady_effective: order must be >= 0");
    }
    if (reference.lindblad.size() != perturbation.lindblad.size()) {
        throw std::invalid_argument(
            "perturbative_steady_effective: reference/perturbation term mismatch");
    }
    const SuperOperator l_ref = liouvillian(reference.h_eff, reference.lindblad);
    const SteadyStateResult base = steady_state(l_ref);
    if (!base.unique) {
        throw std::invalid_argument(
            "perturbative_steady_effective: reference model has a degenerate steady "
            "state; perturbation around a degenerate manifold is unsupported");
    }

    SuperOperator l_pert1 = commutator_superop(perturbation.h_eff);
    for (size_t j = 0; j < reference.lindblad.size(); ++j) {
        const auto& lr = reference.lindblad[j];
        const auto& lp = perturbation.lindblad[j];
        l_pert1 += std::sqrt(lr.rate * lp.rate) * cross_dissipator_superop(lr.op, lp.op);
    }
    SuperOperator l_pert2 = SuperOperator::Zero(l_ref.rows(), l_ref.cols());
    for (const auto& lp : perturbation.lindblad) {
        l_pert2 += dissipator_superop(lp);
    }

    PerturbativeSolution solution;
    solution.orders.push_back(base.rho);
    StateVector prev = vectorize(base.rho);
    StateVector prev2;
    for (int k = 1; k <= order; ++k) {
        StateVector rhs = -(l_pert1 * prev);
        if (k >= 2) rhs -= l_pert2 * prev2;
        const StateVector x = solve_with_trace_constraint(l_ref, rhs, 0.0);
        solution.orders.push_back(devectorize(x));
        prev2 = prev;
        prev = x;
    }
    return solution;
}

std::pair<EffectiveModel, EffectiveModel> split_effective_model(
    const DriveConfig& config, const PhysicalConstants& constants) {
    DriveConfig undriven = config;
    undriven.omega_0 = 0.0;
    EffectiveModel reference = build_effective_model(undriven, constants);
    const EffectiveModel total = build_effective_model(config, constants);

    EffectiveModel perturbation;
    perturbation.h_eff = total.h_eff - reference.h_eff;
    perturbation.lindblad.reserve(total.lindblad.size());
    for (size_t j = 0; j < total.lindblad.size(); ++j) {
        perturbation.lindblad.push_back(LindbladTerm::absorbed(
            total.lindblad[j].op - reference.lindblad[j].op, total.lindblad[j].path));
    }
    return {std::move(reference), std::move(perturbation)};
}

double closed_form_sq(const EffectiveParameters& p, SqVariant variant, double beta) {
    const double h23 = p.h23_magnitude();
    const double ad = std::abs(p.delta_eff);
    const double gc = p.gamma_control;
    const double gp = p.gamma_probe;
    const double gd = p.gamma_decay;
    const double cosfac = std::abs(std::cos(p.alpha / 2));
    const Complex lorentz(ad, -gd);

    switch (variant) {
    case SqVariant::Eq20: {
        const Complex num = 2.0 * h23 * lorentz +
                            Complex(0, 3) * std::sqrt(gc * gp) * lorentz -
                            Complex(0, 6) * h23 * gc;
        const double den = p.delta_eff * p.delta_eff + 3 * gd * gc + gd * gd;
        return cosfac * std::abs(num) / den;
    }
    case SqVariant::Eq22: {
        const double f = 0.5 * (1 + beta * beta);
        const Complex lf(ad, -f * gd);
        const Complex num = 2.0 * h23 * lf +
                            Complex(0, 3) * beta * beta * std::sqrt(gc * gp) * lf -
                            Complex(0, 6) * beta * beta * h23 * gc;
        const double den =
            p.delta_eff * p.delta_eff + 3 * beta * beta * f * gd * gc + f * f * gd * gd;
        return cosfac * std::abs(num) / den;
    }
    case SqVariant::Eq23: {
        const Complex num = 2.0 * h23 * Complex(ad, -0.5 * gd);
        const double den = p.delta_eff * p.delta_eff + 0.25 * gd * gd;
        return cosfac * std::abs(num) / den;
    }
    case SqVariant::Eq24: {
        const double f = 0.5 * (1 + beta * beta);
        const Complex lf(ad, -f * gd);
        const Complex num = 2.0 * h23 * lf +
                            Complex(0, beta + 2 * beta * beta) * std::sqrt(gc * gp) * lf -
                            Complex(0, 2 * (1 + 2 * beta * beta)) * h23 * gc;
        const double den = p.delta_eff * p.delta_eff +
                           (1 + 2 * beta * beta) * f * gd * gc + f * f * gd * gd;
        return cosfac * std::abs(num) / den;
    }
    case SqVariant::Eq25: {
        const Complex num =
            2.0 * h23 * Complex(ad, -0.5 * gd) - Complex(0, 2) * h23 * gc;
        const double den =
            p.delta_eff * p.delta_eff + 0.5 * gc * gd + 0.25 * gd * gd;
        return cosfac * std::abs(num) / den;
    }
    case SqVariant::Eq26:
        return 3.0 * cosfac * std::sqrt(gc * gp) / (gd + 3 * gc);
    case SqVariant::Eq27:
        return cosfac * std::sqrt(gp / gc);
    }
    throw std::invalid_argument("closed_form_sq: unknown variant");
}

} // namespace spinsync

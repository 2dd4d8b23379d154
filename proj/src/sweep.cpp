#include "spinsync/sweep.hpp"

#include <atomic>
#include <cstdio>
#include <functional>
#include <ostream>
#include <thread>

#include "spinsync/observables.hpp"
#include "spinsync/operator_algebra.hpp"

namespace spinsync {

namespace {

struct BuiltModel {
    Operator h;
    std::vector<LindbladTerm> terms;
};

BuiltModel build_model(const RunConfig& config) {
    switch (config.model) {
    case ModelKind::Full:
        return {build_full_hamiltonian(config.drive), full_lindblad_terms(config.constants)};
    case ModelKind::Effective: {
        EffectiveModel model = build_effective_model(config.drive, config.constants);
        if (config.beta != 1.0) {
            model = beta_scaled_model(model, config.beta, config.approach);
        }
        return {model.h_eff, model.lindblad};
    }
    case ModelKind::Ideal:
    case ModelKind::ExpandedIdeal: {
        IdealSpinModel ideal = config.ideal;
        ideal.expanded = (config.model == ModelKind::ExpandedIdeal);
        auto [h, terms] = ideal_spin_model(ideal);
        return {std::move(h), std::move(terms)};
    }
    }
    throw ConfigError("field 'model': unsupported model");
}

std::vector<double> linspace(double start, double stop, int points) {
    std::vector<double> out(static_cast<size_t>(points), 0.0);
    for (int i = 0; i < points; ++i) {
        out[size_t(i)] = start + (stop - start) * double(i) / double(points - 1);
    }
    return out;
}

DriveConfig drive_at_alpha(DriveConfig drive, double alpha) {
    drive.phi_plus1 = alpha / 2;
    drive.phi_minus1 = alpha / 2;
    return drive;
}

DriveConfig drive_at_delta_b(DriveConfig drive, double delta_b_mhz,
                             const PhysicalConstants& constants) {
    drive.delta_b = mhz_to_angular(delta_b_mhz);
    drive.delta_b_prime = default_delta_b_prime(drive.delta_b, constants);
    return drive;
}

// one sweep point evaluated with the three solver families
struct PointResult {
    bool unique = true;
    double sq_full = 0.0;
    double sq_eff = 0.0;
    double sq_pert = 0.0;
    double sq_closed = 0.0;
    std::optional<double> phi_max_full;
    std::optional<double> phi_max_eff;
    std::optional<double> phi_max_pert;
};

PointResult evaluate_point(const DriveConfig& drive, const RunConfig& config,
                           bool with_husimi) {
    PointResult r;

    const SuperOperator l_full =
        liouvillian(build_full_hamiltonian(drive), full_lindblad_terms(config.constants));
    const SteadyStateResult full = steady_state(l_full);

    const EffectiveModel model = build_effective_model(drive, config.constants);
    const SteadyStateResult eff = steady_state(liouvillian(model.h_eff, model.lindblad));

    if (!full.unique || !eff.unique) {
        r.unique = false;
        return r;
    }

    const auto [reference, perturbation] = split_effective_model(drive, config.constants);
    const Operator pert_rho =
        perturbative_steady_effective(reference, perturbation, config.solver.order).readout();

    r.sq_full = sync_measure(ground_block(full.rho));
    r.sq_eff = sync_measure(eff.rho);
    r.sq_pert = sync_measure(pert_rho);
    if (model.params) {
        r.sq_closed = closed_form_sq(*model.params, config.solver.variant, config.beta);
    } else {
        r.sq_closed = std::numeric_limits<double>::quiet_NaN();
    }

    if (with_husimi) {
        auto locate = [&](const Operator& rho) -> std::optional<double> {
            const HusimiMax peak =
                husimi_max(husimi_q(rho, config.husimi.n_theta, config.husimi.n_phi));
            if (!peak.phase_preference) return std::nullopt;
            return peak.phi;
        };
        r.phi_max_full = locate(ground_block(full.rho, /*renormalize=*/true));
        r.phi_max_eff = locate(eff.rho);
        r.phi_max_pert = locate(pert_rho);
    }
    return r;
}

void parallel_for(int jobs, int count, const std::function<void(int)>& work) {
    if (jobs <= 1 || count <= 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    const int n_threads = std::min(jobs, count);
    pool.reserve(size_t(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
                work(i);
            }
        });
    }
    for (auto& thread : pool) thread.join();
}

std::string optional_value(const std::optional<double>& v) {
    return v ? format_value(*v) : std::string{};
}

} // namespace

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void run_sweep(const RunConfig& config, std::ostream& out) {
    if (!config.sweep) {
        throw ConfigError("field 'sweep': required for the sweep command");
    }
    const SweepSpec& sweep = *config.sweep;
    const std::vector<double> grid = linspace(sweep.start, sweep.stop, sweep.points);

    switch (sweep.variable) {
    case SweepSpec::Variable::Alpha: {
        out << "alpha,sq_full,sq_eff,sq_pert,sq_closed\n";
        std::vector<PointResult> rows(grid.size());
        parallel_for(config.jobs, int(grid.size()), [&](int i) {
            rows[size_t(i)] = evaluate_point(drive_at_alpha(config.drive, grid[size_t(i)]),
                                             config, /*with_husimi=*/false);
        });
        for (size_t i = 0; i < grid.size(); ++i) {
            const PointResult& r = rows[i];
            out << format_value(grid[i]) << ',';
            if (r.unique) {
                out << format_value(r.sq_full) << ',' << format_value(r.sq_eff) << ','
                    << format_value(r.sq_pert) << ',' << format_value(r.sq_closed) << '\n';
            } else {
                out << ",,,,unique=false\n";
            }
        }
        break;
    }
    case SweepSpec::Variable::DeltaB: {
        out << "delta_b_mhz,sq_full,sq_eff,sq_pert,phi_max_full,phi_max_eff,phi_max_pert\n";
        std::vector<PointResult> rows(grid.size());
        parallel_for(config.jobs, int(grid.size()), [&](int i) {
            rows[size_t(i)] = evaluate_point(
                drive_at_delta_b(config.drive, grid[size_t(i)], config.constants), config,
                /*with_husimi=*/true);
        });
        for (size_t i = 0; i < grid.size(); ++i) {
            const PointResult& r = rows[i];
            out << format_value(grid[i]) << ',';
            if (r.unique) {
                out << format_value(r.sq_full) << ',' << format_value(r.sq_eff) << ','
                    << format_value(r.sq_pert) << ',' << optional_value(r.phi_max_full) << ','
                    << optional_value(r.phi_max_eff) << ',' << optional_value(r.phi_max_pert)
                    << '\n';
            } else {
                out << ",,,,,,unique=false\n";
            }
        }
        break;
    }
    case SweepSpec::Variable::Beta: {
        out << "beta,approach,sq_eff,sq_closed\n";
        const EffectiveModel model = build_effective_model(config.drive, config.constants);
        const SqVariant variant =
            config.approach == 1 ? SqVariant::Eq22 : SqVariant::Eq24;
        struct BetaRow {
            bool unique = true;
            double sq_eff = 0.0;
            double sq_closed = 0.0;
        };
        std::vector<BetaRow> rows(grid.size());
        parallel_for(config.jobs, int(grid.size()), [&](int i) {
            const double beta = grid[size_t(i)];
            const EffectiveModel scaled = beta_scaled_model(model, beta, config.approach);
            const SteadyStateResult ss =
                steady_state(liouvillian(scaled.h_eff, scaled.lindblad));
            BetaRow row;
            row.unique = ss.unique;
            if (ss.unique) row.sq_eff = sync_measure(ss.rho);
            if (model.params) {
                row.sq_closed = closed_form_sq(*model.params, variant, beta);
            } else {
                row.sq_closed = std::numeric_limits<double>::quiet_NaN();
            }
            rows[size_t(i)] = row;
        });
        for (size_t i = 0; i < grid.size(); ++i) {
            out << format_value(grid[i]) << ',' << config.approach << ',';
            if (rows[i].unique) {
                out << format_value(rows[i].sq_eff) << ',' << format_value(rows[i].sq_closed)
                    << '\n';
            } else {
                out << ",,unique=false\n";
            }
        }
        break;
    }
    }
}

void run_husimi(const RunConfig& config, std::ostream& out) {
    Operator rho;
    if (config.solver.kind == SolverSpec::Kind::ClosedForm) {
        throw ConfigError("field 'solver.kind': closed-form has no state to plot");
    }
    if (config.solver.kind == SolverSpec::Kind::Perturbative) {
        if (config.model != ModelKind::Effective) {
            throw ConfigError(
                "field 'solver.kind': perturbative Husimi fields are supported for the "
                "effective model only");
        }
        const auto [reference, perturbation] =
            split_effective_model(config.drive, config.constants);
        rho = perturbative_steady_effective(reference, perturbation, config.solver.order)
                  .readout();
    } else {
        const BuiltModel model = build_model(config);
        const SteadyStateResult ss = steady_state(liouvillian(model.h, model.terms));
        if (!ss.unique) {
            throw ConfigError("steady state is not unique; no stationary field to plot");
        }
        rho = config.model == ModelKind::Full ? ground_block(ss.rho, /*renormalize=*/true)
                                              : ss.rho;
    }
    const HusimiField field = husimi_q(rho, config.husimi.n_theta, config.husimi.n_phi);
    out << "# normalization = " << format_value(field.normalization()) << '\n';
    out << "theta,phi,q\n";
    for (size_t i = 0; i < field.theta_grid.size(); ++i) {
        for (size_t j = 0; j < field.phi_grid.size(); ++j) {
            out << format_value(field.theta_grid[i]) << ',' << format_value(field.phi_grid[j])
                << ',' << format_value(field.values(Eigen::Index(i), Eigen::Index(j)))
                << '\n';
        }
    }
}

void run_steady(const RunConfig& config, std::ostream& out) {
    const BuiltModel model = build_model(config);
    const SuperOperator l = liouvillian(model.h, model.terms);
    const SteadyStateResult ss = steady_state(l);
    out << "# residual = " << format_value(ss.residual)
        << ", multiplicity = " << ss.null_multiplicity
        << ", unique = " << (ss.unique ? "true" : "false") << '\n';
    out << "row,col,re,im\n";
    for (Eigen::Index i = 0; i < ss.rho.rows(); ++i) {
        for (Eigen::Index j = 0; j < ss.rho.cols(); ++j) {
            out << (i + 1) << ',' << (j + 1) << ',' << format_value(ss.rho(i, j).real())
                << ',' << format_value(ss.rho(i, j).imag()) << '\n';
        }
    }
}

void run_evolve(const RunConfig& config, std::ostream& out) {
    const BuiltModel model = build_model(config);
    const Eigen::Index dim = model.h.rows();

    Operator rho0;
    if (config.evolve.initial == "mixed") {
        rho0 = Operator::Identity(dim, dim) / double(dim);
    } else if (config.evolve.initial.rfind("state", 0) == 0) {
        const int index = std::atoi(config.evolve.initial.c_str() + 5);
        if (index < 1 || index > dim) {
            throw ConfigError("field 'evolve.initial': state index out of range for model");
        }
        rho0 = Operator::Zero(dim, dim);
        rho0(index - 1, index - 1) = 1.0;
    } else {
        throw ConfigError("field 'evolve.initial': expected stateN or mixed");
    }

    std::vector<double> t_grid = linspace(0.0, config.evolve.t_max, config.evolve.points);
    const std::vector<Operator> trajectory =
        evolve(liouvillian(model.h, model.terms), rho0, t_grid);

    out << "t,row,col,re,im\n";
    for (size_t k = 0; k < trajectory.size(); ++k) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            for (Eigen::Index j = 0; j < dim; ++j) {
                out << format_value(t_grid[k]) << ',' << (i + 1) << ',' << (j + 1) << ','
                    << format_value(trajectory[k](i, j).real()) << ','
                    << format_value(trajectory[k](i, j).imag()) << '\n';
            }
        }
    }
}

} // namespace spinsync

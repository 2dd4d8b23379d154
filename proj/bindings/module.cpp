#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spinsync/acceptance.hpp"
#include "spinsync/observables.hpp"
#include "spinsync/operator_algebra.hpp"
#include "spinsync/oracles.hpp"
#include "spinsync/steady.hpp"

namespace py = pybind11;
using namespace spinsync;

namespace {

SqVariant variant_from_string(const std::string& name) {
    if (name == "eq20") return SqVariant::Eq20;
    if (name == "eq22") return SqVariant::Eq22;
    if (name == "eq23") return SqVariant::Eq23;
    if (name == "eq24") return SqVariant::Eq24;
    if (name == "eq25") return SqVariant::Eq25;
    if (name == "eq26") return SqVariant::Eq26;
    if (name == "eq27") return SqVariant::Eq27;
    throw std::invalid_argument("unknown closed-form variant: " + name);
}

} // namespace

PYBIND11_MODULE(_spinsync, m) {
    m.doc() = "Effective spin-1 synchronization models built from a (3+3)-level "
              "Lindblad master equation";

    py::register_exception<SingularOperatorError>(m, "SingularOperatorError");
    py::register_exception<IntegrationError>(m, "IntegrationError");

    py::class_<DecayPath>(m, "DecayPath")
        .def(py::init<>())
        .def_readwrite("from_state", &DecayPath::from)
        .def_readwrite("to_state", &DecayPath::to)
        .def_readwrite("mediator", &DecayPath::mediator);

    py::class_<LindbladTerm>(m, "LindbladTerm")
        .def_static("with_rate", &LindbladTerm::with_rate, py::arg("op"), py::arg("rate"),
                    py::arg("path") = DecayPath{})
        .def_static("absorbed", &LindbladTerm::absorbed, py::arg("op"),
                    py::arg("path") = DecayPath{})
        .def_readwrite("op", &LindbladTerm::op)
        .def_readwrite("rate", &LindbladTerm::rate)
        .def_readwrite("path", &LindbladTerm::path);

    py::class_<PhysicalConstants>(m, "PhysicalConstants")
        .def(py::init<>())
        .def_readwrite("gamma_aux_dprime", &PhysicalConstants::gamma_aux_dprime)
        .def_readwrite("gamma_aux_prime", &PhysicalConstants::gamma_aux_prime)
        .def_readwrite("zeeman_ground", &PhysicalConstants::zeeman_ground)
        .def_readwrite("zeeman_excited", &PhysicalConstants::zeeman_excited);

    py::class_<DriveConfig>(m, "DriveConfig")
        .def(py::init<>())
        .def_readwrite("omega_plus1", &DriveConfig::omega_plus1)
        .def_readwrite("omega_0", &DriveConfig::omega_0)
        .def_readwrite("omega_minus1", &DriveConfig::omega_minus1)
        .def_readwrite("omega_prime", &DriveConfig::omega_prime)
        .def_readwrite("phi_plus1", &DriveConfig::phi_plus1)
        .def_readwrite("phi_0", &DriveConfig::phi_0)
        .def_readwrite("phi_minus1", &DriveConfig::phi_minus1)
        .def_readwrite("phi_prime", &DriveConfig::phi_prime)
        .def_readwrite("delta_b", &DriveConfig::delta_b)
        .def_readwrite("delta_b_prime", &DriveConfig::delta_b_prime)
        .def_readwrite("delta_pi_dprime", &DriveConfig::delta_pi_dprime)
        .def_readwrite("delta_sigma_dprime", &DriveConfig::delta_sigma_dprime)
        .def_readwrite("delta_pi_prime", &DriveConfig::delta_pi_prime)
        .def("ideal_mapping", &DriveConfig::ideal_mapping);

    py::class_<EffectiveParameters>(m, "EffectiveParameters")
        .def_readonly("delta_eff", &EffectiveParameters::delta_eff)
        .def_readonly("omega_eff", &EffectiveParameters::omega_eff)
        .def_readonly("phi_eff", &EffectiveParameters::phi_eff)
        .def_readonly("alpha", &EffectiveParameters::alpha)
        .def_readonly("gamma_control", &EffectiveParameters::gamma_control)
        .def_readonly("gamma_probe", &EffectiveParameters::gamma_probe)
        .def_readonly("gamma_decay", &EffectiveParameters::gamma_decay)
        .def("h23_magnitude", &EffectiveParameters::h23_magnitude);

    py::class_<EffectiveModel>(m, "EffectiveModel")
        .def_readonly("h_eff", &EffectiveModel::h_eff)
        .def_readonly("lindblad", &EffectiveModel::lindblad)
        .def_readonly("params", &EffectiveModel::params);

    py::class_<IdealSpinModel>(m, "IdealSpinModel")
        .def(py::init<>())
        .def_readwrite("delta", &IdealSpinModel::delta)
        .def_readwrite("omega", &IdealSpinModel::omega)
        .def_readwrite("phi_s", &IdealSpinModel::phi_s)
        .def_readwrite("gamma_g", &IdealSpinModel::gamma_g)
        .def_readwrite("gamma_d", &IdealSpinModel::gamma_d)
        .def_readwrite("expanded", &IdealSpinModel::expanded);

    py::class_<SteadyStateResult>(m, "SteadyStateResult")
        .def_readonly("rho", &SteadyStateResult::rho)
        .def_readonly("residual", &SteadyStateResult::residual)
        .def_readonly("null_multiplicity", &SteadyStateResult::null_multiplicity)
        .def_readonly("unique", &SteadyStateResult::unique);

    py::class_<PerturbativeSolution>(m, "PerturbativeSolution")
        .def_readonly("orders", &PerturbativeSolution::orders)
        .def("readout", &PerturbativeSolution::readout);

    py::class_<HusimiField>(m, "HusimiField")
        .def_readonly("theta_grid", &HusimiField::theta_grid)
        .def_readonly("phi_grid", &HusimiField::phi_grid)
        .def_readonly("values", &HusimiField::values)
        .def("normalization", &HusimiField::normalization);

    py::class_<HusimiMax>(m, "HusimiMax")
        .def_readonly("phase_preference", &HusimiMax::phase_preference)
        .def_readonly("theta", &HusimiMax::theta)
        .def_readonly("phi", &HusimiMax::phi);

    py::class_<OracleParams>(m, "OracleParams")
        .def(py::init<>())
        .def_readwrite("omega_c", &OracleParams::omega_c)
        .def_readwrite("omega_prime", &OracleParams::omega_prime)
        .def_readwrite("phi_diff", &OracleParams::phi_diff)
        .def_readwrite("gamma_aux_dprime", &OracleParams::gamma_aux_dprime)
        .def_readwrite("gamma_aux_prime", &OracleParams::gamma_aux_prime)
        .def_readwrite("delta_b", &OracleParams::delta_b)
        .def_readwrite("delta_b_prime", &OracleParams::delta_b_prime)
        .def("gamma_eff_dprime", &OracleParams::gamma_eff_dprime)
        .def("gamma_eff_prime", &OracleParams::gamma_eff_prime)
        .def("delta_eff_prime", &OracleParams::delta_eff_prime);

    py::class_<CaseIiElements>(m, "CaseIiElements")
        .def_readonly("rho22", &CaseIiElements::rho22)
        .def_readonly("rho13", &CaseIiElements::rho13);

    m.attr("TWO_PI") = two_pi;

    m.def("vectorize", &vectorize, py::arg("rho"));
    m.def("devectorize", &devectorize, py::arg("v"));
    m.def("dissipator_apply", &dissipator_apply, py::arg("term"), py::arg("rho"));
    m.def("liouvillian", &liouvillian, py::arg("h"), py::arg("terms"));
    m.def("unitary_exp", &unitary_exp, py::arg("a"));

    m.def("zeeman_shifts", &zeeman_shifts, py::arg("b_gauss"),
          py::arg("constants") = PhysicalConstants{});
    m.def("default_delta_b_prime", &default_delta_b_prime, py::arg("delta_b"),
          py::arg("constants") = PhysicalConstants{});
    m.def("rotating_frame_energies", &rotating_frame_energies, py::arg("config"));
    m.def("build_full_hamiltonian", &build_full_hamiltonian, py::arg("config"));
    m.def("full_lindblad_terms", &full_lindblad_terms,
          py::arg("constants") = PhysicalConstants{});

    m.def("effective_parameters", &effective_parameters, py::arg("config"),
          py::arg("constants") = PhysicalConstants{});
    m.def("build_effective_model", &build_effective_model, py::arg("config"),
          py::arg("constants") = PhysicalConstants{});
    m.def("beta_scaled_model", &beta_scaled_model, py::arg("model"), py::arg("beta"),
          py::arg("approach"));
    m.def("ideal_spin_model", &ideal_spin_model, py::arg("model"));

    m.def("steady_state", &steady_state, py::arg("l"));
    m.def("evolve", &evolve, py::arg("l"), py::arg("rho0"), py::arg("t_grid"));
    m.def("perturbative_steady_full", &perturbative_steady_full, py::arg("l_ref"),
          py::arg("l_pert"), py::arg("order") = 1);
    m.def("perturbative_steady_effective", &perturbative_steady_effective,
          py::arg("reference"), py::arg("perturbation"), py::arg("order") = 1);
    m.def("split_effective_model", &split_effective_model, py::arg("config"),
          py::arg("constants") = PhysicalConstants{});
    m.def(
        "closed_form_sq",
        [](const EffectiveParameters& p, const std::string& variant, double beta) {
            return closed_form_sq(p, variant_from_string(variant), beta);
        },
        py::arg("params"), py::arg("variant") = "eq20", py::arg("beta") = 1.0);

    m.def("sync_measure", &sync_measure, py::arg("rho"), py::arg("spin") = 1);
    m.def("spin_coherent_state", &spin_coherent_state, py::arg("theta"), py::arg("phi"));
    m.def("husimi_q", &husimi_q, py::arg("rho"), py::arg("n_theta") = 181,
          py::arg("n_phi") = 360);
    m.def("husimi_max", &husimi_max, py::arg("field"));
    m.def("ground_block", &ground_block, py::arg("rho6"), py::arg("renormalize") = false);

    m.def("case_i_solution", &case_i_solution, py::arg("rho0"), py::arg("t"), py::arg("params"));
    m.def("case_ii_solution", &case_ii_solution, py::arg("rho0"), py::arg("t"), py::arg("params"));
    m.def("case_iii_solution", &case_iii_solution, py::arg("rho0"), py::arg("t"), py::arg("params"));

    m.def(
        "run_acceptance",
        [](const PhysicalConstants& constants) {
            std::vector<std::tuple<int, std::string, bool, std::string>> rows;
            for (const CriterionResult& r : run_acceptance_criteria(constants)) {
                rows.emplace_back(r.id, r.name, r.pass, r.detail);
            }
            return rows;
        },
        py::arg("constants") = PhysicalConstants{});
}

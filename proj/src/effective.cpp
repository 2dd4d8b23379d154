#include "spinsync/effective.hpp"

#include <cmath>

#include "spinsync/operator_algebra.hpp"
#include "spinsync/spin.hpp"

namespace spinsync {

namespace {

// Fixed (destination k, mediator l) order of the seven effective terms,
// 1-based labels.
constexpr std::array<std::pair<int, int>, 7> kTermOrder = {{
    {1, 4}, {2, 4}, {3, 4}, {1, 5}, {2, 5}, {2, 6}, {3, 6},
}};

double branch_rate(int k, int l, const PhysicalConstants& constants) {
    if (l == 4) return constants.gamma_aux_dprime / 3.0;
    if (l == 5 && (k == 1 || k == 2)) return constants.gamma_aux_prime / 2.0;
    if (l == 6 && (k == 2 || k == 3)) return constants.gamma_aux_prime / 2.0;
    return 0.0;
}

double total_rate(int l, const PhysicalConstants& constants) {
    return l == 4 ? constants.gamma_aux_dprime : constants.gamma_aux_prime;
}

Operator projected_inverse(const Operator& h_nh, double eps_k, int k) {
    Operator shifted = h_nh;
    shifted.diagonal().array() -= eps_k;
    Eigen::FullPivLU<Operator> lu(shifted);
    if (!lu.isInvertible()) {
        throw SingularOperatorError(
            "projected non-Hermitian Hamiltonian is singular for ground state k=" +
            std::to_string(k));
    }
    return lu.inverse();
}

double sign_or_zero(double x) { return x > 0 ? 1.0 : (x < 0 ? -1.0 : 0.0); }

} // namespace

PartitionedOperators partition(const Operator& h_full) {
    if (h_full.rows() != 6 || h_full.cols() != 6) {
        throw std::invalid_argument("partition: expected a 6x6 Hamiltonian");
    }
    if (!is_hermitian(h_full)) {
        throw std::invalid_argument("partition: Hamiltonian must be Hermitian");
    }
    PartitionedOperators parts;
    parts.h_g = h_full.topLeftCorner(3, 3);
    parts.h_e = h_full.bottomRightCorner(3, 3);
    parts.v_plus = h_full.bottomLeftCorner(3, 3);
    parts.v_minus = h_full.topRightCorner(3, 3);
    return parts;
}

Operator reassemble(const PartitionedOperators& parts) {
    Operator h = Operator::Zero(6, 6);
    h.topLeftCorner(3, 3) = parts.h_g;
    h.bottomRightCorner(3, 3) = parts.h_e;
    h.bottomLeftCorner(3, 3) = parts.v_plus;
    h.topRightCorner(3, 3) = parts.v_minus;
    return h;
}

Operator nonhermitian_hamiltonian(const PartitionedOperators& parts,
                                  const PhysicalConstants& constants) {
    Operator h_nh = parts.h_e;
    h_nh(0, 0) -= Complex(0, 0.5) * constants.gamma_aux_dprime;
    h_nh(1, 1) -= Complex(0, 0.5) * constants.gamma_aux_prime;
    h_nh(2, 2) -= Complex(0, 0.5) * constants.gamma_aux_prime;
    return h_nh;
}

Operator effective_hamiltonian(const PartitionedOperators& parts,
                               const PhysicalConstants& constants) {
    const Operator h_nh = nonhermitian_hamiltonian(parts, constants);
    Operator h_eff = parts.h_g;
    for (int k = 0; k < 3; ++k) {
        const Operator inv = projected_inverse(h_nh, parts.h_g(k, k).real(), k + 1);
        Operator v_k = Operator::Zero(3, 3);
        v_k.col(k) = parts.v_plus.col(k);
        const Operator term = parts.v_minus * inv * v_k;
        h_eff -= 0.5 * (term + term.adjoint());
    }
    return h_eff;
}

std::vector<LindbladTerm> effective_lindblad_terms(const PartitionedOperators& parts,
                                                   const PhysicalConstants& constants) {
    const Operator h_nh = nonhermitian_hamiltonian(parts, constants);

    // inverses are shared across mediators; one per ground state j
    std::array<Operator, 3> inv_v;
    for (int j = 0; j < 3; ++j) {
        inv_v[j] = projected_inverse(h_nh, parts.h_g(j, j).real(), j + 1) * parts.v_plus;
    }

    std::vector<LindbladTerm> terms;
    terms.reserve(kTermOrder.size());
    for (const auto& [k, l] : kTermOrder) {
        const int e = l - 4;
        const double gamma_l = total_rate(l, constants);
        Operator op = Operator::Zero(3, 3);
        for (int j = 0; j < 3; ++j) {
            const Complex denom =
                parts.h_e(e, e) - parts.h_g(j, j) - Complex(0, 0.5) * gamma_l;
            if (denom == Complex(0, 0)) {
                throw std::invalid_argument(
                    "effective_lindblad_terms: vanishing denominator for mediator l=" +
                    std::to_string(l) + ", ground state j=" + std::to_string(j + 1));
            }
            op(k - 1, j) = std::sqrt(branch_rate(k, l, constants)) * inv_v[j](e, j);
        }
        terms.push_back(LindbladTerm::absorbed(op, DecayPath{0, k, l}));
    }
    return terms;
}

EffectiveParameters effective_parameters(const DriveConfig& c,
                                         const PhysicalConstants& constants) {
    if (!c.ideal_mapping()) {
        throw std::invalid_argument(
            "effective_parameters: closed forms require the ideal-mapping "
            "conditions (|omega_plus1| == |omega_minus1|, zero detunings)");
    }
    const double g2 = constants.gamma_aux_dprime;
    const double g1 = constants.gamma_aux_prime;
    const double db = c.delta_b;
    const double dd = c.delta_b - c.delta_b_prime;

    EffectiveParameters p;
    p.delta_eff = -db - db * c.omega_plus1 * c.omega_plus1 / (g2 * g2 + 4 * db * db) -
                  dd * c.omega_prime * c.omega_prime / (g1 * g1 + 4 * dd * dd);
    p.omega_eff = (std::sqrt(2.0) / 8.0) * std::abs(db) * c.omega_0 * c.omega_plus1 /
                  (g2 * g2 / 4 + db * db) * std::sqrt(1 + (2 * db / g2) * (2 * db / g2));
    p.phi_eff = c.phi_minus1 - c.phi_0 + std::atan(2 * db / g2) + M_PI -
                (M_PI / 2) * sign_or_zero(db);
    p.alpha = (c.phi_plus1 - c.phi_0) + (c.phi_minus1 - c.phi_0);
    p.gamma_control =
        (g2 / 3) * (c.omega_plus1 * c.omega_plus1 / 4) / (db * db + g2 * g2 / 4);
    p.gamma_probe = (g2 / 3) * (c.omega_0 * c.omega_0 / 4) / (g2 * g2 / 4);
    p.gamma_decay =
        (g1 / 2) * (c.omega_prime * c.omega_prime / 4) / (dd * dd + g1 * g1 / 4);
    return p;
}

Operator effective_hamiltonian_from_parameters(const EffectiveParameters& p) {
    const Complex coupling23 =
        Complex(0, -1) * (p.omega_eff / std::sqrt(2.0)) * std::exp(Complex(0, p.phi_eff));
    const Complex coupling12 = Complex(0, -1) * (p.omega_eff / std::sqrt(2.0)) *
                               std::exp(Complex(0, p.phi_eff + M_PI - p.alpha));
    Operator h = Operator::Zero(3, 3);
    h(0, 0) = p.delta_eff;
    h(2, 2) = -p.delta_eff;
    h(0, 1) = coupling12;
    h(1, 0) = std::conj(coupling12);
    h(1, 2) = coupling23;
    h(2, 1) = std::conj(coupling23);
    return h;
}

EffectiveModel build_effective_model(const DriveConfig& config,
                                     const PhysicalConstants& constants) {
    const auto parts = partition(build_full_hamiltonian(config));
    EffectiveModel model;
    model.h_eff = effective_hamiltonian(parts, constants);
    model.lindblad = effective_lindblad_terms(parts, constants);
    if (config.ideal_mapping()) {
        model.params = effective_parameters(config, constants);
    }
    return model;
}

EffectiveModel beta_scaled_model(const EffectiveModel& model, double beta, int approach) {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw std::invalid_argument("beta_scaled_model: beta must lie in [0, 1]");
    }
    if (approach != 1 && approach != 2) {
        throw std::invalid_argument("beta_scaled_model: approach must be 1 or 2");
    }
    EffectiveModel scaled = model;
    if (beta == 1.0) return scaled;
    auto& t = scaled.lindblad;
    if (t.size() != kTermOrder.size()) {
        throw std::invalid_argument("beta_scaled_model: expected the seven-term layout");
    }
    if (approach == 1) {
        for (int i : {0, 1, 2}) t[i].op *= beta; // every c^(4)_{k,j}
        t[3].op(0, 0) *= beta;                   // c^(5)_{1,1}
        t[6].op(2, 2) *= beta;                   // c^(6)_{3,3}
    } else {
        t[3].op(0, 0) *= beta;
        t[6].op(2, 2) *= beta;
        for (int i : {0, 1, 2}) t[i].op(i, 1) *= beta; // c^(4)_{k,2}
        for (int i : {0, 2}) {                         // c^(4)_{k,1}, c^(4)_{k,3}, k=1,3
            t[i].op(i, 0) *= beta;
            t[i].op(i, 2) *= beta;
        }
    }
    return scaled;
}

std::pair<Operator, std::vector<LindbladTerm>> ideal_spin_model(const IdealSpinModel& m) {
    const double phi12 = m.expanded ? m.phi_s + M_PI : m.phi_s;
    const Complex c12 =
        Complex(0, -1) * m.omega / std::sqrt(2.0) * std::exp(Complex(0, phi12));
    const Complex c23 =
        Complex(0, -1) * m.omega / std::sqrt(2.0) * std::exp(Complex(0, m.phi_s));
    Operator h = Operator::Zero(3, 3);
    h(0, 0) = m.delta;
    h(2, 2) = -m.delta;
    h(0, 1) = c12;
    h(1, 0) = std::conj(c12);
    h(1, 2) = c23;
    h(2, 1) = std::conj(c23);

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    const Operator l_gain = -inv_sqrt2 * (spin1_plus() * spin1_z());
    const Operator l_damp = inv_sqrt2 * (spin1_minus() * spin1_z());
    std::vector<LindbladTerm> terms;
    terms.push_back(LindbladTerm::with_rate(l_gain, m.gamma_g, DecayPath{3, 2, 0}));
    terms.push_back(LindbladTerm::with_rate(l_damp, m.gamma_d, DecayPath{1, 2, 0}));
    return {h, terms};
}

} // namespace spinsync

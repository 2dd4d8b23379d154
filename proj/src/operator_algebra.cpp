#include "spinsync/operator_algebra.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace spinsync {

namespace {

void check_square(const Operator& a, const char* what) {
    if (a.rows() != a.cols() || a.rows() < 1) {
        throw std::invalid_argument(std::string(what) + ": operator must be square");
    }
}

} // namespace

bool is_hermitian(const Operator& a, double tol) {
    if (a.rows() != a.cols()) return false;
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

StateVector vectorize(const Operator& rho) {
    check_square(rho, "vectorize");
    return Eigen::Map<const StateVector>(rho.data(), rho.size());
}

Operator devectorize(const StateVector& v) {
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(v.size()))));
    if (d * d != v.size()) {
        throw std::invalid_argument("devectorize: length is not a perfect square");
    }
    return Eigen::Map<const Operator>(v.data(), d, d);
}

Operator dissipator_apply(const LindbladTerm& term, const Operator& rho) {
    check_square(rho, "dissipator_apply");
    if (term.op.rows() != rho.rows() || term.op.cols() != rho.cols()) {
        throw std::invalid_argument("dissipator_apply: operator/state dimension mismatch");
    }
    const Operator ldl = term.op.adjoint() * term.op;
    Operator out = term.op * rho * term.op.adjoint();
    out.noalias() -= 0.5 * (ldl * rho + rho * ldl);
    return term.rate * out;
}

SuperOperator commutator_superop(const Operator& h) {
    check_square(h, "commutator_superop");
    const Eigen::Index d = h.rows();
    const Operator id = Operator::Identity(d, d);
    // vec(A rho B) = (B^T kron A) vec(rho), column-major
    return Complex(0, -1) * (Eigen::kroneckerProduct(id, h) -
                             Eigen::kroneckerProduct(h.transpose(), id));
}

SuperOperator dissipator_superop(const LindbladTerm& term) {
    check_square(term.op, "dissipator_superop");
    const Eigen::Index d = term.op.rows();
    const Operator id = Operator::Identity(d, d);
    const Operator ldl = term.op.adjoint() * term.op;
    SuperOperator s = Eigen::kroneckerProduct(term.op.conjugate(), term.op);
    s -= 0.5 * (Eigen::kroneckerProduct(id, ldl) +
                Eigen::kroneckerProduct(ldl.transpose(), id));
    return term.rate * s;
}

SuperOperator cross_dissipator_superop(const Operator& l_ref, const Operator& l_pert) {
    check_square(l_ref, "cross_dissipator_superop");
    if (l_pert.rows() != l_ref.rows() || l_pert.cols() != l_ref.cols()) {
        throw std::invalid_argument("cross_dissipator_superop: dimension mismatch");
    }
    const Eigen::Index d = l_ref.rows();
    const Operator id = Operator::Identity(d, d);
    const Operator a = l_ref.adjoint() * l_pert;
    const Operator b = l_pert.adjoint() * l_ref;
    SuperOperator s = Eigen::kroneckerProduct(l_pert.conjugate(), l_ref);
    s += Eigen::kroneckerProduct(l_ref.conjugate(), l_pert);
    s -= 0.5 * (Eigen::kroneckerProduct(id, a) + Eigen::kroneckerProduct(a.transpose(), id));
    s -= 0.5 * (Eigen::kroneckerProduct(id, b) + Eigen::kroneckerProduct(b.transpose(), id));
    return s;
}

SuperOperator liouvillian(const Operator& h, const std::vector<LindbladTerm>& terms) {
    check_square(h, "liouvillian");
    if (!is_hermitian(h)) {
        throw std::invalid_argument("liouvillian: Hamiltonian must be Hermitian");
    }
    SuperOperator l = commutator_superop(h);
    for (const auto& term : terms) {
        if (term.op.rows() != h.rows()) {
            throw std::invalid_argument("liouvillian: jump operator dimension mismatch");
        }
        l += dissipator_superop(term);
    }
    return l;
}

Operator unitary_exp(const Operator& a) {
    check_square(a, "unitary_exp");
    if (!is_hermitian(a)) {
        throw std::invalid_argument("unitary_exp: generator must be Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<Operator> es(a);
    const Eigen::VectorXd& ev = es.eigenvalues();
    StateVector phases(ev.size());
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        phases(i) = std::exp(Complex(0, -ev(i)));
    }
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double trace_preservation_defect(const SuperOperator& l) {
    const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(l.rows()))));
    const StateVector vec_id = vectorize(Operator::Identity(d, d));
    const double scale = std::max(1.0, l.cwiseAbs().maxCoeff());
    return (vec_id.adjoint() * l).cwiseAbs().maxCoeff() / scale;
}

} // namespace spinsync

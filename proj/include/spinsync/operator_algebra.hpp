#pragma once

#include <vector>

#include "spinsync/types.hpp"

namespace spinsync {

bool is_hermitian(const Operator& a, double tol = tolerances().hermitian);

inline Operator hermitize(const Operator& a) { return 0.5 * (a + a.adjoint()); }

// Column-major vectorization; devectorize is its inverse.
StateVector vectorize(const Operator& rho);
Operator devectorize(const StateVector& v);

// L rho L^dag - 1/2 {L^dag L, rho}, scaled by the explicit rate if the term
// carries one.
Operator dissipator_apply(const LindbladTerm& term, const Operator& rho);

// -i[h, .] as a superoperator.
SuperOperator commutator_superop(const Operator& h);

// Superoperator of a single dissipator.
SuperOperator dissipator_superop(const LindbladTerm& term);

// Mixed dissipator cross-term for perturbative splittings of a jump operator:
//   C[Lr, Lp](rho) = Lr rho Lp^dag + Lp rho Lr^dag
//                    - 1/2 {Lr^dag Lp, rho} - 1/2 {Lp^dag Lr, rho}
SuperOperator cross_dissipator_superop(const Operator& l_ref, const Operator& l_pert);

// L such that L vec(rho) = vec(-i[h, rho] + sum of dissipators).
SuperOperator liouvillian(const Operator& h, const std::vector<LindbladTerm>& terms);

// exp(-i a) for Hermitian a, via eigendecomposition.
Operator unitary_exp(const Operator& a);

// max |vec(I)^dag L| / max(1, max|L|); zero for trace-preserving generators.
double trace_preservation_defect(const SuperOperator& l);

} // namespace spinsync

#include "spinsync/spin.hpp"

namespace spinsync {

Operator spin1_z() {
    Operator s = Operator::Zero(3, 3);
    s(0, 0) = 1.0;
    s(2, 2) = -1.0;
    return s;
}

Operator spin1_plus() {
    Operator s = Operator::Zero(3, 3);
    s(0, 1) = std::sqrt(2.0);
    s(1, 2) = std::sqrt(2.0);
    return s;
}

Operator spin1_minus() { return spin1_plus().adjoint(); }

Operator spin1_y() {
    return (spin1_plus() - spin1_minus()) / Complex(0, 2);
}

} // namespace spinsync

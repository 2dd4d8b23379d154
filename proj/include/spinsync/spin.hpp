#pragma once

#include "spinsync/types.hpp"

namespace spinsync {

// Dimensionless spin-1 operators in the |M=+1>, |M=0>, |M=-1> basis.
Operator spin1_z();
Operator spin1_plus();
Operator spin1_minus();
Operator spin1_y();

} // namespace spinsync

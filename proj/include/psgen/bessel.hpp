#pragma once

namespace psgen {

/// Bessel function of the first kind, order zero. Piecewise evaluation
/// (power series / downward recurrence / Hankel asymptotics) accurate to
/// better than 1e-12 absolute over all x; this accuracy is part of the
/// structure-function quadrature contract.
double bessel_j0(double x);

}  // namespace psgen

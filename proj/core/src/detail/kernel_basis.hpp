#pragma once

// Internal: the (Psi_a, Psi_b, Wronskian) triple behind a resolvent kernel,
// built once per (operator, z) and reused across many (x, y) evaluations
// (quadrature oracles, derivative jumps, Wronskian scans).

#include <functional>

#include "solvops/operators.hpp"

namespace solvops::detail {

struct KernelBasis {
  std::function<cplx(double)> psi_a, dpsi_a; // square integrable at the left end
  std::function<cplx(double)> psi_b, dpsi_b; // square integrable at the right end
  cplx wronskian;                            // W(Psi_b, Psi_a) = 1/prefactor
  cplx z;

  cplx kernel(double x, double y) const {
    double xs = x < y ? x : y;
    double xl = x < y ? y : x;
    return psi_a(xs) * psi_b(xl) / wronskian;
  }
  // d/dx of kernel(x, y); side selects the branch at x == y (+1: x > y)
  cplx kernel_dx(double x, double y, int side = 0) const {
    bool upper = side != 0 ? side > 0 : x > y;
    if (upper) return psi_a(y) * dpsi_b(x) / wronskian;
    return dpsi_a(x) * psi_b(y) / wronskian;
  }
};

KernelBasis make_kernel_basis(const OperatorSpec& spec, cplx z);

} // namespace solvops::detail

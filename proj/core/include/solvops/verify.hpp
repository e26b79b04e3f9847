#pragma once

// Independent oracles: a finite-difference resolvent solver on a truncated
// window (geometrically graded toward a singular left endpoint), adaptive
// Gauss-Kronrod quadrature, Schur row/column bounds, Wronskian scans and
// boundary-condition Wronskian limits.  Nothing here trusts the closed-form
// kernels except where a boundary condition at an oscillatory endpoint
// requires the exact solution ratio in the edge row (noted below).

#include <functional>
#include <vector>

#include "solvops/operators.hpp"

namespace solvops {

class OracleUnreliableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GridClustering { Uniform, GeometricTowardLeft };

struct Grid {
  double a = 0.0;
  double b = 1.0;
  int n = 16; // interior points
  GridClustering clustering = GridClustering::Uniform;

  std::vector<double> points() const; // n interior points, ascending
  Grid refined() const;               // nested: n -> 2n+1
  double nominal_h() const;           // largest spacing
};

// pointwise potential of the family at x
cplx potential(const OperatorSpec& spec, double x);

// second-order nonuniform central difference of -u'' + V u with Dirichlet
// zeros at the window edges
std::vector<cplx> fd_apply(const OperatorSpec& spec, const Grid& grid, const std::vector<cplx>& u);

// solve (fd_apply - z) u = f by banded LU with partial pivoting; nudges z by
// 1e-6 if a spurious discrete eigenvalue collides (returned in z_used)
struct OracleSolution {
  std::vector<cplx> u;
  cplx z_used;
  double condition_estimate = 0.0;
};
OracleSolution oracle_resolve(const OperatorSpec& spec, cplx z, const Grid& grid,
                              const std::vector<cplx>& f);

struct BumpSpec {
  double center = 0.0;
  double halfwidth = 1.0;
};

struct GreenResidualOptions {
  std::vector<double> compare_points; // empty: derived from the grid
  std::vector<BumpSpec> bumps;        // empty: three bumps across the window
  double quad_tol = 1e-10;
};

struct GreenResidualReport {
  cplx z;
  cplx z_used;
  Grid grid;
  double rel_l2_error = 0.0;
  double jump_error = 0.0;
  double wronskian_spread = 0.0;
  double condition_estimate = 0.0;
};

// compare oracle_resolve against quadrature of the closed-form kernel on
// smooth bump data; check the analytic derivative jump and the constancy of
// the kernel-factor Wronskian across the window
GreenResidualReport green_residual(const OperatorSpec& spec, cplx z, const Grid& grid,
                                   const GreenResidualOptions& opt = {});

struct QuadratureResult {
  cplx value{0.0, 0.0};
  double err = 0.0;
};

// adaptive G7/K15; a and b may be +-infinity (exponential substitution)
QuadratureResult quadrature(const std::function<cplx(double)>& f, double a, double b,
                            double tol = 1e-10, int max_depth = 48);

struct SchurBound {
  double c1 = 0.0;    // sup_x int |K(x,y)| dy over the window
  double c2 = 0.0;    // sup_y int |K(x,y)| dx
  double bound = 0.0; // min( sqrt(c1 c2), sum over the four split blocks )
};

SchurBound schur_bound(const std::function<cplx(double, double)>& kernel, double a, double b,
                       double c_split, int samples = 48, double tol = 1e-6);

struct WronskianScanResult {
  cplx mean{0.0, 0.0};
  double spread = 0.0; // max |W(x) - mean|
};

WronskianScanResult wronskian_scan(const std::function<cplx(double)>& f,
                                   const std::function<cplx(double)>& fp,
                                   const std::function<cplx(double)>& g,
                                   const std::function<cplx(double)>& gp,
                                   const std::vector<double>& points);

enum class Endpoint { Left, Right };

struct BcLimitResult {
  cplx limit{0.0, 0.0};
  bool trivial = false; // endpoint has index 0: no b.c. functional there
};

// extrapolate W(Phi_endpoint, Xi)(x) toward the endpoint on a geometric
// sequence of points; Phi is the family's boundary-condition function
BcLimitResult bc_wronskian_limit(const OperatorSpec& spec, const std::function<cplx(double)>& xi,
                                 const std::function<cplx(double)>& dxi, Endpoint endpoint);

} // namespace solvops

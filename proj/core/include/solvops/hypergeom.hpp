#pragma once

// Regularized hypergeometric kernels: 0F1 and 1F1 in the "bold" (divided by
// Gamma(c+k)) normalization, the divergent 2F0 sum by optimal truncation,
// and the recessive solution U_alpha of the 0F1 equation.  Everything in
// Appendices A-C reduces to these.

#include <stdexcept>

#include "solvops/complexmath.hpp"

namespace solvops {

enum class EvalPath { SeriesAt0, AsymptoticAtInf, ConnectionFormula, EpsilonLimit };

const char* to_string(EvalPath p);

// Result of a special-function evaluation.  err_est is a heuristic forward
// error: last included term (series) or first omitted term (asymptotics),
// plus a rounding term proportional to the largest partial sum, propagated
// through later arithmetic by naive accumulation.  It is not certified.
struct SpecialValue {
  cplx value{0.0, 0.0};
  EvalPath path = EvalPath::SeriesAt0;
  double err_est = 0.0;
};

struct SeriesPolicy {
  double tol = 1e-16;
  int max_terms = 10000;
  int consecutive_small = 3;
};

class NonconvergenceError : public std::runtime_error {
 public:
  NonconvergenceError(const std::string& what, SpecialValue partial)
      : std::runtime_error(what), partial_sum(partial) {}
  SpecialValue partial_sum;
};

class AsymptoticRegimeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoValidPathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// 0F1 regularized: sum w^n / (n! Gamma(c+n)); entire in c and w.
SpecialValue f01_reg(cplx c, cplx w, const SeriesPolicy& policy = {});

// 1F1 regularized: sum (a)_k r^k / (k! Gamma(c+k)); entire in a, c, r.
SpecialValue f11_reg(cplx a, cplx c, cplx r, const SeriesPolicy& policy = {});

// Divergent 2F0 sum at argument w by optimal truncation (stop at the
// smallest term); throws AsymptoticRegimeError when the terms grow from the
// start.  Terminating cases (a or b a nonpositive integer) are summed
// exactly.
SpecialValue f20_asymptotic(cplx a, cplx b, cplx w);

// U_alpha(z): recessive solution of z v'' + (alpha+1) v' - v = 0,
// ~ exp(-2 sqrt z) z^(-alpha/2-1/4) at infinity.  Path selection between the
// connection formula (with compensated summation where cancellation would
// eat double precision), the asymptotic 2F0 form, and a two-sided epsilon
// limit at integer alpha.
SpecialValue u_alpha(cplx alpha, cplx z);
SpecialValue u_alpha(cplx alpha, Phased z);

// d/dz U_alpha(z) = -U_{alpha+1}(z), exact contiguous relation.
SpecialValue u_alpha_deriv(cplx alpha, cplx z);
SpecialValue u_alpha_deriv(cplx alpha, Phased z);

// F_alpha(z) = 0F1-regularized(alpha+1; z), the entire companion solution;
// d/dz F_alpha = F_{alpha+1}.
SpecialValue f_alpha(cplx alpha, Phased z, const SeriesPolicy& policy = {});

} // namespace solvops

#include "solvops/hypergeom.hpp"

#include <algorithm>
#include <type_traits>
#include <cmath>

#include "detail/series.hpp"

namespace solvops {

const char* to_string(EvalPath p) {
  switch (p) {
    case EvalPath::SeriesAt0: return "series";
    case EvalPath::AsymptoticAtInf: return "asymptotic";
    case EvalPath::ConnectionFormula: return "connection";
    case EvalPath::EpsilonLimit: return "eps-limit";
  }
  return "?";
}

namespace detail {

namespace {

constexpr double eps_d = 2.2e-16;
constexpr double eps_dd = 1.0e-30;

// exact nonpositive integer: the 1/Gamma start value is exactly zero there
bool exact_nonpos_int(cplx c) {
  return c.imag() == 0.0 && c.real() <= 0.0 && c.real() == std::round(c.real());
}

bool exact_nonpos_int(const ddc& c) {
  return c.im.hi == 0.0 && c.im.lo == 0.0 && c.re.lo == 0.0 && c.re.hi <= 0.0 &&
         c.re.hi == std::round(c.re.hi);
}

bool small_enough(double t, double sum_abs, double tol) {
  // relative stop, absolute when the sum sits near zero
  return sum_abs < 1e-280 ? t < tol : t < tol * sum_abs;
}

template <class CX>
struct Ops;

template <>
struct Ops<cplx> {
  static cplx real(double x) { return {x, 0.0}; }
  static double mag(cplx z) { return std::abs(z); }
  static cplx rgamma_here(cplx z) { return reciprocal_gamma(z); }
  static double re_hi(cplx z) { return z.real(); }
  static constexpr double eps = eps_d;
};

template <>
struct Ops<ddc> {
  static ddc real(double x) { return ddc{dd(x), dd(0.0)}; }
  static double mag(const ddc& z) { return ddc_abs_est(z); }
  static ddc rgamma_here(const ddc& z) { return dd_rgamma(z); }
  static double re_hi(const ddc& z) { return z.re.hi; }
  static constexpr double eps = eps_dd;
};

// sum_{n} prefac_n(a) w^n / (n! Gamma(c+n)); with_a toggles the (a)_n factor.
template <class CX>
void hyper_series(bool with_a, CX ca, CX cc, CX cw, const SeriesPolicy& policy,
                  CX& sum_out, double& err_out, double& peak_out, int& terms_out) {
  using O = Ops<CX>;
  int n0 = 0;
  if (exact_nonpos_int(cc)) n0 = 1 - int(std::lround(O::re_hi(cc)));

  // t_{n0} = (a)_{n0} w^{n0} / (n0! Gamma(c+n0)); all factor arithmetic must
  // stay in the working type or the extended precision is silently lost
  CX t = O::rgamma_here(cc + O::real(double(n0)));
  for (int j = 0; j < n0; ++j) {
    CX f = cw / O::real(double(j + 1));
    if (with_a) f = f * (ca + O::real(double(j)));
    t = t * f;
  }

  CX sum = t;
  double peak = O::mag(t);
  int consec = 0;
  int n = n0;
  double last = peak;
  while (n - n0 < policy.max_terms) {
    CX f = cw / ((cc + O::real(double(n))) * O::real(double(n + 1)));
    if (with_a) f = f * (ca + O::real(double(n)));
    t = t * f;
    ++n;
    sum = sum + t;
    last = O::mag(t);
    peak = std::max(peak, last);
    if (small_enough(last, O::mag(sum), policy.tol)) {
      if (++consec >= policy.consecutive_small) break;
    } else {
      consec = 0;
    }
    if (last == 0.0) break; // terminating series
  }
  sum_out = sum;
  peak_out = peak;
  terms_out = n - n0 + 1;
  err_out = last + O::eps * peak * (2.0 + std::sqrt(double(terms_out)));
  if (n - n0 >= policy.max_terms && consec < policy.consecutive_small) {
    SpecialValue partial{cplx{}, EvalPath::SeriesAt0, err_out};
    if constexpr (std::is_same_v<CX, cplx>) partial.value = sum;
    else partial.value = sum.to_cplx();
    throw NonconvergenceError("hypergeometric series did not converge", partial);
  }
}

} // namespace

SeriesOut f01_series(cplx c, cplx w, const SeriesPolicy& policy) {
  SeriesOut o;
  hyper_series<cplx>(false, {}, c, w, policy, o.sum, o.err, o.peak, o.terms);
  return o;
}

SeriesOut f11_series(cplx a, cplx c, cplx r, const SeriesPolicy& policy) {
  SeriesOut o;
  hyper_series<cplx>(true, a, c, r, policy, o.sum, o.err, o.peak, o.terms);
  return o;
}

SeriesOutDD f01_series_dd(ddc c, cplx w, const SeriesPolicy& policy) {
  SeriesOutDD o;
  hyper_series<ddc>(false, {}, c, ddc(w), policy, o.sum, o.err, o.peak, o.terms);
  return o;
}

SeriesOutDD f11_series_dd(ddc a, ddc c, cplx r, const SeriesPolicy& policy) {
  SeriesOutDD o;
  hyper_series<ddc>(true, a, c, ddc(r), policy, o.sum, o.err, o.peak, o.terms);
  return o;
}

F20Out f20_sum(cplx a, cplx b, cplx w) {
  F20Out o;
  cplx t{1.0, 0.0};
  cplx sum = t;
  double tm = 1.0;
  o.terms = 1;
  if (w == cplx(0.0, 0.0)) {
    o.sum = sum;
    o.ok = true;
    o.terminated = true;
    return o;
  }
  int n = 0;
  while (true) {
    cplx tn = t * (a + double(n)) * (b + double(n)) * w / double(n + 1);
    double mn = std::abs(tn);
    if (mn == 0.0) { // polynomial case: exact
      o.sum = sum;
      o.err = 4.0 * eps_d * double(o.terms) * std::abs(sum);
      o.ok = true;
      o.terminated = true;
      return o;
    }
    if (mn >= tm) {
      if (n == 0 && mn > 1e-16 * tm) {
        o.sum = sum;
        o.err = mn;
        o.ok = false; // terms grow immediately: not in the asymptotic regime
        return o;
      }
      // optimal truncation at the smallest term; taking half of the first
      // omitted term trims the superasymptotic error by a useful factor
      o.sum = sum + 0.5 * tn;
      o.err = 0.5 * mn + 4.0 * eps_d * std::abs(sum);
      o.ok = true;
      return o;
    }
    t = tn;
    tm = mn;
    sum += t;
    ++o.terms;
    ++n;
    if (mn < eps_d * std::abs(sum) || n > 10000) {
      o.sum = sum;
      o.err = tm + 4.0 * eps_d * std::abs(sum);
      o.ok = true;
      return o;
    }
  }
}

double dist_to_integers(cplx z) {
  double d = std::abs(z.real() - std::round(z.real()));
  return std::hypot(d, z.imag());
}

ddc dd_pow_phased(const Phased& z, ddc a) {
  ddc lg = dd_clog(ddc(z.base));
  lg.im = lg.im + dd_mul_pow2(dd_pi, 0.5) * double(z.quarter_turns);
  return dd_cexp(a * lg);
}

namespace {

// connection formula in plain double:
//   U_alpha = sqrt(pi)/sin(-pi alpha) F_alpha + sqrt(pi)/sin(pi alpha) z^-alpha F_-alpha
cplx u_conn_double(cplx alpha, const Phased& z, double& err) {
  SeriesPolicy pol;
  auto fp = f01_series(alpha + 1.0, z.value(), pol);
  auto fm = f01_series(1.0 - alpha, z.value(), pol);
  cplx s = std::sin(pi * alpha);
  cplx za = z.pow(-alpha);
  cplx t1 = -sqrt_pi / s * fp.sum;
  cplx t2 = sqrt_pi / s * za * fm.sum;
  cplx u = t1 + t2;
  double scale = std::max(std::abs(t1), std::abs(t2));
  err = sqrt_pi / std::abs(s) * (fp.err + std::abs(za) * fm.err) + 4.0 * eps_d * scale;
  return u;
}

cplx u_conn_dd(cplx alpha, const Phased& z, double& err) {
  SeriesPolicy pol;
  pol.tol = 1e-31;
  // parameter shifts formed in dd: a pre-rounded 1 - alpha costs the whole
  // compensation (one ulp in c moves the sum by ~1e-16 relative)
  ddc one{dd(1.0), dd(0.0)};
  auto fp = f01_series_dd(one + ddc(alpha), z.value(), pol);
  auto fm = f01_series_dd(one - ddc(alpha), z.value(), pol);
  ddc s = dd_sin_pi(ddc(alpha));
  ddc za = dd_pow_phased(z, ddc(-alpha));
  ddc sq_pi{dd_sqrt(dd_pi), dd(0.0)};
  ddc t1 = -(sq_pi / s) * fp.sum;
  ddc t2 = (sq_pi / s) * za * fm.sum;
  ddc u = t1 + t2;
  double scale = std::max(ddc_abs_est(t1), ddc_abs_est(t2));
  double sp = sqrt_pi / ddc_abs_est(s);
  err = sp * (fp.err + ddc_abs_est(za) * fm.err) + 8.0 * eps_dd * scale;
  return u.to_cplx();
}

// asymptotic form U = e^{-2 sqrt z} z^{-alpha/2 - 1/4} 2F0(1/2+alpha, 1/2-alpha; -1/(4 sqrt z))
bool u_asym(cplx alpha, const Phased& z, cplx& u, double& err) {
  cplx sz = z.pow(0.5);
  cplx w = -0.25 / sz;
  auto s = f20_sum(0.5 + alpha, 0.5 - alpha, w);
  if (!s.ok) return false;
  cplx pre = std::exp(-2.0 * sz) * z.pow(-alpha / 2.0 - 0.25);
  u = pre * s.sum;
  err = std::abs(pre) * s.err;
  return true;
}

struct UOne {
  cplx u;
  EvalPath path;
  double err;
};

UOne u_alpha_one(cplx alpha, const Phased& z);

// peak-term magnitude of the connection combination relative to |U|:
// exp(2(|s|-|Re s|)) from the alternating series and exp(4 Re s) from the
// subtraction of two I-sized terms, s = sqrt(z) on the carried sheet
double conn_cancel_amp(const Phased& z) {
  cplx s = z.pow(0.5);
  double m = std::abs(s), re = s.real();
  return std::exp(2.0 * (m - std::abs(re)) + 4.0 * std::max(re, 0.0));
}

UOne u_alpha_eps_limit(cplx alpha, const Phased& z) {
  double e = 1e-5 * (1.0 + std::abs(alpha));
  cplx ap = alpha + e;
  cplx am = alpha - e;
  double errp, errm;
  double ampl = conn_cancel_amp(z);
  bool dd_side = ampl * eps_d >= 1e-13;
  cplx up = dd_side ? u_conn_dd(ap, z, errp) : u_conn_double(ap, z, errp);
  cplx um = dd_side ? u_conn_dd(am, z, errm) : u_conn_double(am, z, errm);
  // first-order pole parts cancel in the average; the residual is O(e^2)
  cplx u = 0.5 * (up + um);
  double err = 0.5 * (errp + errm) + 1e-7 * (1.0 + std::abs(u));
  return {u, EvalPath::EpsilonLimit, err};
}

UOne u_alpha_one(cplx alpha, const Phased& z) {
  if (z.base == cplx(0.0, 0.0)) throw std::domain_error("u_alpha: z must be nonzero");
  double amp = conn_cancel_amp(z);
  double conn_d = eps_d * amp;
  double conn_dd_est = eps_dd * amp;
  double near_int = dist_to_integers(alpha);
  double sin_amp = near_int > 1e-3 ? 1.0 / std::min(1.0, pi * near_int) : 1e3;
  conn_d *= sin_amp;
  conn_dd_est *= sin_amp;

  cplx ua;
  double erra;
  bool have_asym = false;
  if (std::abs(z.base) > 25.0) have_asym = u_asym(alpha, z, ua, erra);

  if (have_asym) {
    double rel_a = erra / std::max(std::abs(ua), 1e-300);
    if (rel_a < std::min({conn_d, conn_dd_est, 1e-13})) {
      return {ua, EvalPath::AsymptoticAtInf, erra};
    }
  }
  if (near_int <= 1e-3) {
    if (have_asym) {
      double rel_a = erra / std::max(std::abs(ua), 1e-300);
      if (rel_a < 1e-7) return {ua, EvalPath::AsymptoticAtInf, erra};
    }
    return u_alpha_eps_limit(alpha, z);
  }
  double err;
  if (conn_d < 1e-13) {
    cplx u = u_conn_double(alpha, z, err);
    return {u, EvalPath::ConnectionFormula, err};
  }
  cplx u = u_conn_dd(alpha, z, err);
  if (have_asym && erra < err * std::max(std::abs(u), 1e-300)) {
    return {ua, EvalPath::AsymptoticAtInf, erra};
  }
  return {u, EvalPath::ConnectionFormula, err};
}

} // namespace

UPair u_alpha_pair(cplx alpha, Phased z) {
  UOne a = u_alpha_one(alpha, z);
  UOne b = u_alpha_one(alpha + 1.0, z);
  return {a.u, b.u, a.path, a.err, b.err};
}

} // namespace detail

SpecialValue f01_reg(cplx c, cplx w, const SeriesPolicy& policy) {
  auto o = detail::f01_series(c, w, policy);
  return {o.sum, EvalPath::SeriesAt0, o.err};
}

SpecialValue f11_reg(cplx a, cplx c, cplx r, const SeriesPolicy& policy) {
  auto o = detail::f11_series(a, c, r, policy);
  return {o.sum, EvalPath::SeriesAt0, o.err};
}

SpecialValue f20_asymptotic(cplx a, cplx b, cplx w) {
  auto o = detail::f20_sum(a, b, w);
  if (!o.ok) {
    throw AsymptoticRegimeError("2F0: asymptotic regime not reached (terms grow from n=0)");
  }
  return {o.sum, EvalPath::AsymptoticAtInf, o.err};
}

SpecialValue u_alpha(cplx alpha, Phased z) {
  auto p = detail::u_alpha_pair(alpha, z);
  return {p.u, p.path, p.err_u};
}

SpecialValue u_alpha(cplx alpha, cplx z) { return u_alpha(alpha, phased(z)); }

SpecialValue u_alpha_deriv(cplx alpha, Phased z) {
  auto p = detail::u_alpha_pair(alpha, z);
  return {-p.u_next, p.path, p.err_next};
}

SpecialValue u_alpha_deriv(cplx alpha, cplx z) { return u_alpha_deriv(alpha, phased(z)); }

SpecialValue f_alpha(cplx alpha, Phased z, const SeriesPolicy& policy) {
  auto o = detail::f01_series(alpha + 1.0, z.value(), policy);
  return {o.sum, EvalPath::SeriesAt0, o.err};
}

} // namespace solvops

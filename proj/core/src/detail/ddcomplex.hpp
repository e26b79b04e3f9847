#pragma once

// Double-double ("dd") real and complex arithmetic, ~31 significant digits.
// Internal to the series engines: the connection formulas subtract terms that
// are exponentially larger than the result, and the mid-argument band (too
// small for the asymptotic series, too large for plain double summation)
// needs the extra working precision.  Algorithms follow Dekker/Knuth and the
// QD library conventions; requires FMA (present on every target we build on).

#include <cmath>
#include <complex>
#include <cstdint>

namespace solvops::detail {

struct dd {
  double hi = 0.0;
  double lo = 0.0;

  constexpr dd() = default;
  constexpr dd(double h) : hi(h), lo(0.0) {}
  constexpr dd(double h, double l) : hi(h), lo(l) {}

  explicit operator double() const { return hi; }
};

inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline dd quick_two_sum(double a, double b) {
  double s = a + b;
  return {s, b - (s - a)};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline dd operator+(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  dd t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline dd operator-(dd a) { return {-a.hi, -a.lo}; }
inline dd operator-(dd a, dd b) { return a + (-b); }

inline dd operator*(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline dd operator/(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = a - b * dd(q1);
  double q2 = r.hi / b.hi;
  r = r - b * dd(q2);
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return q + dd(q3);
}

inline dd operator+(dd a, double b) { return a + dd(b); }
inline dd operator-(dd a, double b) { return a - dd(b); }
inline dd operator*(dd a, double b) { return a * dd(b); }
inline dd operator/(dd a, double b) { return a / dd(b); }
inline dd operator+(double a, dd b) { return dd(a) + b; }
inline dd operator-(double a, dd b) { return dd(a) - b; }
inline dd operator*(double a, dd b) { return dd(a) * b; }
inline dd operator/(double a, dd b) { return dd(a) / b; }

inline bool operator<(dd a, dd b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(dd a, dd b) { return b < a; }

inline dd dd_abs(dd a) { return a.hi < 0.0 ? -a : a; }

inline dd dd_mul_pow2(dd a, double p) { return {a.hi * p, a.lo * p}; }

inline dd dd_sqrt(dd a) {
  if (a.hi == 0.0) return {0.0, 0.0};
  double s = std::sqrt(a.hi);
  dd e = a - two_prod(s, s);
  return quick_two_sum(s, e.hi / (2.0 * s));
}

// Constants.  lo parts are the standard correction terms for the nearest
// doubles; pi_lo equals sin(pi_hi) to within one ulp.
inline constexpr dd dd_pi{3.141592653589793116, 1.2246467991473531772e-16};
inline constexpr dd dd_2pi{6.283185307179586232, 2.4492935982947063543e-16};
inline constexpr dd dd_pi_2{1.570796326794896558, 6.1232339957367658861e-17};
inline constexpr dd dd_ln2{0.69314718055994530942, 2.3190468138462995584e-17};

inline dd dd_exp(dd x) {
  // e^x = 2^k e^r with r = x - k ln2, |r| <= ln2/2, then a plain Taylor sum.
  if (x.hi > 709.0) return {INFINITY, 0.0};
  if (x.hi < -709.0) return {0.0, 0.0};
  double k = std::nearbyint(x.hi / dd_ln2.hi);
  dd r = x - dd_ln2 * k;
  dd sum = dd(1.0) + r;
  dd term = r;
  for (int n = 2; n <= 26; ++n) {
    term = term * r / double(n);
    sum = sum + term;
    if (std::abs(term.hi) < 1e-35 * std::abs(sum.hi)) break;
  }
  return dd_mul_pow2(sum, std::ldexp(1.0, int(k)));
}

inline dd dd_log(dd x) {
  // Newton refinement of the double seed on f(y) = e^y - x.
  dd y = dd(std::log(x.hi));
  for (int it = 0; it < 2; ++it) y = y + x * dd_exp(-y) - 1.0;
  return y;
}

inline void dd_sincos_reduced(dd r, dd& s, dd& c) {
  // |r| <= pi/4
  dd r2 = r * r;
  dd term = r;
  dd sum = r;
  for (int n = 1; n <= 14; ++n) {
    term = term * r2 / double((2 * n) * (2 * n + 1));
    sum = (n % 2 == 1) ? sum - term : sum + term;
  }
  s = sum;
  term = dd(1.0);
  sum = dd(1.0);
  for (int n = 1; n <= 14; ++n) {
    term = term * r2 / double((2 * n - 1) * (2 * n));
    sum = (n % 2 == 1) ? sum - term : sum + term;
  }
  c = sum;
}

inline void dd_sincos(dd x, dd& s, dd& c) {
  // Reduce modulo pi/2.  Adequate for |x| up to ~1e6; the callers stay far
  // below that.
  double q = std::nearbyint(x.hi / dd_pi_2.hi);
  dd r = x - dd_pi_2 * q;
  // one correction pass in case of boundary rounding
  if (std::abs(r.hi) > dd_pi_2.hi * 0.5000001) {
    double q2 = std::nearbyint(r.hi / dd_pi_2.hi);
    r = r - dd_pi_2 * q2;
    q += q2;
  }
  dd sr, cr;
  dd_sincos_reduced(r, sr, cr);
  switch (std::int64_t(q) & 3) { // two's complement & matches mod 4 for q < 0
    case 0: s = sr; c = cr; break;
    case 1: s = cr; c = -sr; break;
    case 2: s = -sr; c = -cr; break;
    default: s = -cr; c = sr; break;
  }
}

inline dd dd_sinh(dd x) {
  dd e = dd_exp(x);
  return dd_mul_pow2(e - 1.0 / e, 0.5);
}
inline dd dd_cosh(dd x) {
  dd e = dd_exp(x);
  return dd_mul_pow2(e + 1.0 / e, 0.5);
}

struct ddc {
  dd re, im;

  ddc() = default;
  ddc(dd r) : re(r), im(0.0) {}
  ddc(dd r, dd i) : re(r), im(i) {}
  ddc(double r) : re(r), im(0.0) {}
  ddc(std::complex<double> z) : re(z.real()), im(z.imag()) {}

  std::complex<double> to_cplx() const { return {re.hi + re.lo, im.hi + im.lo}; }
};

inline ddc operator+(ddc a, ddc b) { return {a.re + b.re, a.im + b.im}; }
inline ddc operator-(ddc a, ddc b) { return {a.re - b.re, a.im - b.im}; }
inline ddc operator-(ddc a) { return {-a.re, -a.im}; }
inline ddc operator*(ddc a, ddc b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline ddc operator*(ddc a, dd b) { return {a.re * b, a.im * b}; }
inline ddc operator*(dd a, ddc b) { return b * a; }
inline ddc operator/(ddc a, ddc b) {
  dd d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
inline ddc operator/(ddc a, dd b) { return {a.re / b, a.im / b}; }
inline ddc operator/(dd a, ddc b) { return ddc(a) / b; }

inline double ddc_abs_est(const ddc& z) { return std::abs(z.to_cplx()); }

inline ddc dd_cexp(ddc z) {
  dd ex = dd_exp(z.re);
  dd s, c;
  dd_sincos(z.im, s, c);
  return {ex * c, ex * s};
}

inline ddc dd_clog(ddc z) {
  // Newton on e^w = z from the double seed; two passes reach full dd
  // precision and avoid a dd atan2.
  std::complex<double> zd = z.to_cplx();
  std::complex<double> w0 = std::log(zd);
  ddc w{dd(w0.real()), dd(w0.imag())};
  for (int it = 0; it < 2; ++it) {
    ddc corr = z * dd_cexp(-w);
    w = w + ddc{corr.re - 1.0, corr.im};
  }
  return w;
}

inline ddc dd_cpow(ddc z, ddc a) { return dd_cexp(a * dd_clog(z)); }

// sin(pi z) with the argument reduction done on the real part only; the
// imaginary part enters through sinh/cosh and needs no reduction.
inline ddc dd_sin_pi(ddc z) {
  double n = std::nearbyint(z.re.hi);
  dd xr = z.re - n; // |xr| <= 1/2 (+ dd tail)
  dd spx, cpx;
  dd_sincos(dd_pi * xr, spx, cpx);
  if (std::int64_t(n) % 2 != 0) {
    spx = -spx;
    cpx = -cpx;
  }
  dd sh = dd_sinh(dd_pi * z.im);
  dd ch = dd_cosh(dd_pi * z.im);
  return {spx * ch, cpx * sh};
}

// log Gamma by Stirling with recurrence lift; valid for Re z >= 0.5.
inline ddc dd_lgamma_right(ddc z) {
  // Bernoulli numbers B2..B20 as exact rationals.
  static const long long bnum[10] = {1, -1, 1, -1, 5, -691, 7, -3617, 43867, -174611};
  static const long long bden[10] = {6, 30, 42, 30, 66, 2730, 6, 510, 798, 330};

  ddc shift{dd(0.0), dd(0.0)};
  ddc w = z;
  bool have_shift = false;
  while (std::abs(w.to_cplx()) < 33.0) {
    ddc lw = dd_clog(w);
    shift = shift + lw;
    w = w + ddc{dd(1.0), dd(0.0)};
    have_shift = true;
  }
  ddc lw = dd_clog(w);
  ddc res = (w - ddc{dd(0.5), dd(0.0)}) * lw - w;
  // + ln(2 pi)/2
  static const dd half_ln_2pi = dd_mul_pow2(dd_log(dd_2pi), 0.5);
  res = res + ddc{half_ln_2pi, dd(0.0)};
  ddc w2 = w * w;
  ddc zk = w;
  for (int n = 0; n < 10; ++n) {
    dd coef = dd(double(bnum[n])) / dd(double(bden[n] * (2 * n + 2) * (2 * n + 1)));
    res = res + ddc{coef, dd(0.0)} / zk;
    zk = zk * w2;
  }
  if (have_shift) res = res - shift;
  return res;
}

// 1/Gamma(z), full plane, ~1e-29 relative away from the zeros' neighbors.
inline ddc dd_rgamma(ddc z) {
  if (z.re.hi >= 0.5) return dd_cexp(-dd_lgamma_right(z));
  // reflection: 1/Gamma(z) = sin(pi z)/pi * Gamma(1-z)
  ddc one_minus{dd(1.0) - z.re, -z.im};
  ddc g = dd_cexp(dd_lgamma_right(one_minus));
  return dd_sin_pi(z) * g / ddc{dd_pi, dd(0.0)};
}

inline ddc dd_gamma(ddc z) {
  if (z.re.hi >= 0.5) return dd_cexp(dd_lgamma_right(z));
  return ddc{dd(1.0), dd(0.0)} / dd_rgamma(z);
}

} // namespace solvops::detail

// solvops command-line front end: evaluate special functions and resolvent
// kernels, enumerate spectra, run the grid-oracle verification, check the
// transmutation identities and scan parameter planes.  Output is CSV
// (RFC 4180, LF endings, 17 significant digits) or JSON with stable key
// order.  Exit codes: 0 ok, 2 validation, 3 spectral point, 4 oracle
// unreliable, 5 threshold exceeded.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "solvops/bessel.hpp"
#include "solvops/hypergeom.hpp"
#include "solvops/operators.hpp"
#include "solvops/verify.hpp"
#include "solvops/whittaker.hpp"

using namespace solvops;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitSpectralPoint = 3;
constexpr int kExitOracleUnreliable = 4;
constexpr int kExitThreshold = 5;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

cplx parse_cplx(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) return {std::stod(s), 0.0};
  return {std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))};
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (!tok.empty()) out.push_back(std::stod(tok));
  }
  return out;
}

int thread_cap() {
  if (const char* env = std::getenv("SOLVOPS_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return int(std::max(1u, std::thread::hardware_concurrency()));
}

struct Output {
  std::string path; // empty: stdout
  void write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream f(path, std::ios::binary);
    f << text;
  }
};

struct FamilyArgs {
  std::string family;
  std::string m = "0.5,0";
  std::string beta = "0,0";
  std::string k = "1,0";
  double ell = 1.0;
  std::string gamma = "0,0";
  bool gamma_inf = false;

  OperatorSpec build() const {
    cplx mm = parse_cplx(m), bb = parse_cplx(beta), kk = parse_cplx(k);
    if (family == "bessel") return OperatorSpec::bessel(mm);
    if (family == "exponential") return OperatorSpec::exponential(kk);
    if (family == "neg-exponential")
      return OperatorSpec::neg_exponential(ell, parse_cplx(gamma), gamma_inf);
    if (family == "whittaker") return OperatorSpec::whittaker(bb, mm);
    if (family == "morse") return OperatorSpec::morse(bb, kk);
    if (family == "isotonic") return OperatorSpec::isotonic(kk, mm);
    if (family == "harmonic") return OperatorSpec::harmonic(kk);
    throw ValidationError("unknown family: " + family);
  }

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family,
                    "bessel|exponential|neg-exponential|whittaker|morse|isotonic|harmonic")
        ->required();
    cmd->add_option("--m", m, "parameter m as re,im");
    cmd->add_option("--beta", beta, "parameter beta as re,im");
    cmd->add_option("--k", k, "parameter k as re,im");
    cmd->add_option("--ell", ell, "parameter ell (neg-exponential)");
    cmd->add_option("--gamma", gamma, "boundary parameter gamma as re,im");
    cmd->add_flag("--gamma-inf", gamma_inf, "use the gamma = infinity realization");
  }
};

SpecialValue eval_function(const std::string& fn, cplx a, cplx c, cplx beta, cplx m, int sign,
                           int parity, double x) {
  cplx cx{x, 0.0};
  if (fn == "f01_reg") return f01_reg(c, cx);
  if (fn == "f11_reg") return f11_reg(a, c, cx);
  if (fn == "f20_asymptotic") return f20_asymptotic(a, c, cx);
  if (fn == "u_alpha") return u_alpha(a, cx);
  if (fn == "bessel_i2d") return bessel_i2d(m, cx);
  if (fn == "macdonald_k2d") return macdonald_k2d(m, cx);
  if (fn == "bessel_i1d") return bessel_i1d(m, cx);
  if (fn == "macdonald_k1d") return macdonald_k1d(m, cx);
  if (fn == "bessel_j2d") return bessel_j2d(m, cx);
  if (fn == "bessel_j1d") return bessel_j1d(m, cx);
  if (fn == "hankel2d") return hankel2d(sign, m, cx);
  if (fn == "hankel1d") return hankel1d(sign, m, cx);
  if (fn == "whit_i1d") return whit_i1d({beta, m}, cx);
  if (fn == "whit_k1d") return whit_k1d({beta, m}, cx);
  if (fn == "whit_i2d") return whit_i2d({beta, m}, cx);
  if (fn == "whit_k2d") return whit_k2d({beta, m}, cx);
  if (fn == "isotonic_i") return isotonic_i({beta, m}, cx);
  if (fn == "isotonic_k") return isotonic_k({beta, m}, cx);
  if (fn == "weber_i") return weber_i(beta, parity, cx);
  if (fn == "weber_k") return weber_k(beta, cx);
  throw ValidationError("unknown function: " + fn);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"solvops: exactly solvable 1d Schrodinger operators"};
  app.require_subcommand(1);

  // ---- eval ----
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a special function on a set of points");
  std::string ev_fn, ev_a = "0,0", ev_c = "1,0", ev_beta = "0,0", ev_m = "0.5,0", ev_at;
  int ev_sign = +1, ev_parity = +1, ev_count = 0;
  double ev_from = 0.0, ev_to = 0.0;
  std::string ev_out, ev_format = "csv";
  cmd_eval->add_option("--fn", ev_fn, "function name")->required();
  cmd_eval->add_option("--a", ev_a, "parameter a / alpha as re,im");
  cmd_eval->add_option("--c", ev_c, "parameter c / b as re,im");
  cmd_eval->add_option("--beta", ev_beta, "parameter beta as re,im");
  cmd_eval->add_option("--m", ev_m, "parameter m as re,im");
  cmd_eval->add_option("--sign", ev_sign, "+1 or -1 (hankel)");
  cmd_eval->add_option("--parity", ev_parity, "+1 or -1 (weber_i)");
  cmd_eval->add_option("--at", ev_at, "comma-separated evaluation points");
  cmd_eval->add_option("--from", ev_from, "range start");
  cmd_eval->add_option("--to", ev_to, "range end");
  cmd_eval->add_option("--count", ev_count, "range point count");
  cmd_eval->add_option("--out", ev_out, "output file (default stdout)");
  cmd_eval->add_option("--format", ev_format, "csv|json");

  // ---- kernel ----
  auto* cmd_kernel = app.add_subcommand("kernel", "evaluate a resolvent kernel on an (x,y) grid");
  FamilyArgs ker_fam;
  ker_fam.attach(cmd_kernel);
  std::string ker_z = "-1,0", ker_x, ker_y, ker_out, ker_format = "csv";
  cmd_kernel->add_option("--z", ker_z, "spectral parameter as re,im")->required();
  cmd_kernel->add_option("--x", ker_x, "comma-separated x values")->required();
  cmd_kernel->add_option("--y", ker_y, "comma-separated y values")->required();
  cmd_kernel->add_option("--out", ker_out, "output file");
  cmd_kernel->add_option("--format", ker_format, "csv|json");

  // ---- spectrum ----
  auto* cmd_spectrum = app.add_subcommand("spectrum", "enumerate the point spectrum");
  FamilyArgs sp_fam;
  sp_fam.attach(cmd_spectrum);
  int sp_count = 8;
  std::string sp_out, sp_format = "csv";
  cmd_spectrum->add_option("--count", sp_count, "number of eigenvalues");
  cmd_spectrum->add_option("--out", sp_out, "output file");
  cmd_spectrum->add_option("--format", sp_format, "csv|json");

  // ---- verify ----
  auto* cmd_verify = app.add_subcommand("verify", "grid-oracle verification of a resolvent kernel");
  FamilyArgs vf_fam;
  vf_fam.attach(cmd_verify);
  std::string vf_z = "-1,0", vf_window, vf_out;
  int vf_n = 30000;
  std::string vf_clustering = "uniform";
  double vf_max_rel = 1e-3, vf_max_jump = 1e-7;
  cmd_verify->add_option("--z", vf_z, "spectral parameter as re,im")->required();
  cmd_verify->add_option("--window", vf_window, "window as a,b")->required();
  cmd_verify->add_option("--n", vf_n, "interior grid points");
  cmd_verify->add_option("--clustering", vf_clustering, "uniform|geometric");
  cmd_verify->add_option("--max-rel-l2", vf_max_rel, "threshold for exit status");
  cmd_verify->add_option("--max-jump", vf_max_jump, "threshold for exit status");
  cmd_verify->add_option("--out", vf_out, "output file");

  // ---- transmute ----
  auto* cmd_transmute = app.add_subcommand("transmute", "evaluate both sides of a transmutation identity");
  std::string tr_pair, tr_k = "1,0", tr_m = "0.5,0", tr_beta = "0,0", tr_gamma = "0,0", tr_out;
  double tr_ell = 1.0, tr_x = 0.3, tr_y = 0.9, tr_tol = 1e-9;
  cmd_transmute->add_option("--pair", tr_pair,
                            "exp-bessel|isotonic-whittaker|morse-whittaker|isotonic-morse|negexp-bessel")
      ->required();
  cmd_transmute->add_option("--k", tr_k, "k as re,im");
  cmd_transmute->add_option("--m", tr_m, "m as re,im");
  cmd_transmute->add_option("--beta", tr_beta, "beta as re,im");
  cmd_transmute->add_option("--gamma", tr_gamma, "gamma as re,im");
  cmd_transmute->add_option("--ell", tr_ell, "ell");
  cmd_transmute->add_option("--x", tr_x, "first point");
  cmd_transmute->add_option("--y", tr_y, "second point");
  cmd_transmute->add_option("--tol", tr_tol, "relative mismatch threshold for exit status");
  cmd_transmute->add_option("--out", tr_out, "output file");

  // ---- scan ----
  auto* cmd_scan = app.add_subcommand("scan", "scan a parameter plane, CSV heatmap output");
  FamilyArgs sc_fam;
  sc_fam.attach(cmd_scan);
  std::string sc_param = "k", sc_re = "-2:2:41", sc_im = "-2:2:41", sc_z = "-1,0";
  std::string sc_quantity = "kernel", sc_out;
  double sc_x = 0.3, sc_y = 0.9;
  cmd_scan->add_option("--param", sc_param, "which parameter to scan: k|m|beta|gamma");
  cmd_scan->add_option("--re", sc_re, "real axis as from:to:count");
  cmd_scan->add_option("--im", sc_im, "imag axis as from:to:count");
  cmd_scan->add_option("--z", sc_z, "spectral parameter as re,im");
  cmd_scan->add_option("--quantity", sc_quantity, "kernel|domain");
  cmd_scan->add_option("--x", sc_x, "kernel first point");
  cmd_scan->add_option("--y", sc_y, "kernel second point");
  cmd_scan->add_option("--out", sc_out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cmd_eval->parsed()) {
      std::vector<double> pts;
      if (!ev_at.empty()) pts = parse_list(ev_at);
      for (int i = 0; i < ev_count; ++i) {
        pts.push_back(ev_count == 1 ? ev_from : ev_from + (ev_to - ev_from) * i / (ev_count - 1.0));
      }
      if (pts.empty()) throw ValidationError("eval: no points given (--at or --from/--to/--count)");
      cplx a = parse_cplx(ev_a), c = parse_cplx(ev_c), beta = parse_cplx(ev_beta), m = parse_cplx(ev_m);
      if (ev_format == "json") {
        ordered_json rows = ordered_json::array();
        for (double x : pts) {
          auto v = eval_function(ev_fn, a, c, beta, m, ev_sign, ev_parity, x);
          rows.push_back({{"x", x},
                          {"re", v.value.real()},
                          {"im", v.value.imag()},
                          {"err_est", v.err_est},
                          {"path", to_string(v.path)}});
        }
        Output{ev_out}.write(ordered_json({{"function", ev_fn}, {"rows", rows}}).dump(2) + "\n");
      } else {
        std::string text = "x,re,im,err_est,path\n";
        for (double x : pts) {
          auto v = eval_function(ev_fn, a, c, beta, m, ev_sign, ev_parity, x);
          text += fmt(x) + "," + fmt(v.value.real()) + "," + fmt(v.value.imag()) + "," +
                  fmt(v.err_est) + "," + to_string(v.path) + "\n";
        }
        Output{ev_out}.write(text);
      }
      return 0;
    }

    if (cmd_kernel->parsed()) {
      auto spec = ker_fam.build();
      cplx z = parse_cplx(ker_z);
      auto xs = parse_list(ker_x);
      auto ys = parse_list(ker_y);
      if (ker_format == "json") {
        ordered_json rows = ordered_json::array();
        for (double x : xs) {
          for (double y : ys) {
            auto kv = resolvent_kernel(spec, z, x, y);
            rows.push_back({{"x", x}, {"y", y}, {"re", kv.value.real()}, {"im", kv.value.imag()},
                            {"wronskian_re", kv.wronskian_used.real()},
                            {"wronskian_im", kv.wronskian_used.imag()}});
          }
        }
        Output{ker_out}.write(
            ordered_json({{"family", spec.family_name()}, {"rows", rows}}).dump(2) + "\n");
      } else {
        std::string text = "x,y,re,im\n";
        for (double x : xs) {
          for (double y : ys) {
            auto kv = resolvent_kernel(spec, z, x, y);
            text += fmt(x) + "," + fmt(y) + "," + fmt(kv.value.real()) + "," + fmt(kv.value.imag()) + "\n";
          }
        }
        Output{ker_out}.write(text);
      }
      return 0;
    }

    if (cmd_spectrum->parsed()) {
      auto spec = sp_fam.build();
      auto sd = spectrum(spec, sp_count);
      if (sp_format == "json") {
        ordered_json eig = ordered_json::array();
        for (const auto& e : sd.point) {
          eig.push_back({{"n", e.n}, {"re", e.eigenvalue.real()}, {"im", e.eigenvalue.imag()}});
        }
        const char* cont = sd.continuous == ContinuousSpectrum::RayFromZero ? "ray-from-zero"
                           : sd.continuous == ContinuousSpectrum::FullRealLine ? "full-real-line"
                                                                               : "empty";
        Output{sp_out}.write(ordered_json({{"family", spec.family_name()},
                                           {"continuous", cont},
                                           {"truncated", sd.truncated},
                                           {"eigenvalues", eig}})
                                 .dump(2) +
                             "\n");
      } else {
        std::string text = "n,re,im\n";
        for (const auto& e : sd.point) {
          text += std::to_string(e.n) + "," + fmt(e.eigenvalue.real()) + "," +
                  fmt(e.eigenvalue.imag()) + "\n";
        }
        Output{sp_out}.write(text);
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      auto spec = vf_fam.build();
      cplx z = parse_cplx(vf_z);
      auto win = parse_list(vf_window);
      if (win.size() != 2) throw ValidationError("verify: --window needs a,b");
      Grid g{win[0], win[1], vf_n,
             vf_clustering == "geometric" ? GridClustering::GeometricTowardLeft
                                          : GridClustering::Uniform};
      auto rep = green_residual(spec, z, g);
      ordered_json j{{"family", spec.family_name()},
                     {"z", {{"re", rep.z.real()}, {"im", rep.z.imag()}}},
                     {"z_used", {{"re", rep.z_used.real()}, {"im", rep.z_used.imag()}}},
                     {"window", {win[0], win[1]}},
                     {"n", vf_n},
                     {"rel_l2_error", rep.rel_l2_error},
                     {"jump_error", rep.jump_error},
                     {"wronskian_spread", rep.wronskian_spread},
                     {"condition_estimate", rep.condition_estimate}};
      Output{vf_out}.write(j.dump(2) + "\n");
      if (rep.rel_l2_error > vf_max_rel || rep.jump_error > vf_max_jump) return kExitThreshold;
      return 0;
    }

    if (cmd_transmute->parsed()) {
      TransmuteParams p;
      p.k = parse_cplx(tr_k);
      p.m = parse_cplx(tr_m);
      p.beta = parse_cplx(tr_beta);
      p.gamma_bc = parse_cplx(tr_gamma);
      p.ell = tr_ell;
      TransmutePair pair;
      if (tr_pair == "exp-bessel") pair = TransmutePair::ExpBessel;
      else if (tr_pair == "isotonic-whittaker") pair = TransmutePair::IsotonicWhittaker;
      else if (tr_pair == "morse-whittaker") pair = TransmutePair::MorseWhittaker;
      else if (tr_pair == "isotonic-morse") pair = TransmutePair::IsotonicMorse;
      else if (tr_pair == "negexp-bessel") pair = TransmutePair::NegExpBessel;
      else throw ValidationError("transmute: unknown pair " + tr_pair);
      auto r = transmute(pair, p, tr_x, tr_y);
      double mismatch = std::abs(r.lhs - r.rhs) / std::max(1e-300, std::abs(r.lhs));
      ordered_json j{{"pair", tr_pair},
                     {"lhs", {{"re", r.lhs.real()}, {"im", r.lhs.imag()}}},
                     {"rhs", {{"re", r.rhs.real()}, {"im", r.rhs.imag()}}},
                     {"relative_mismatch", mismatch}};
      Output{tr_out}.write(j.dump(2) + "\n");
      return mismatch <= tr_tol ? 0 : kExitThreshold;
    }

    if (cmd_scan->parsed()) {
      auto axis = [](const std::string& s) {
        auto p1 = s.find(':');
        auto p2 = s.find(':', p1 + 1);
        double from = std::stod(s.substr(0, p1));
        double to = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
        int count = std::stoi(s.substr(p2 + 1));
        std::vector<double> v(count);
        for (int i = 0; i < count; ++i) v[i] = count == 1 ? from : from + (to - from) * i / (count - 1.0);
        return v;
      };
      auto res = axis(sc_re);
      auto ims = axis(sc_im);
      cplx z = parse_cplx(sc_z);
      int nr = int(res.size()), ni = int(ims.size());
      std::vector<double> value(size_t(nr) * ni, 0.0);
      std::atomic<int> next{0};
      int total = nr * ni;
      auto worker = [&]() {
        for (int idx = next.fetch_add(1); idx < total; idx = next.fetch_add(1)) {
          int i = idx / ni, j = idx % ni;
          FamilyArgs fa = sc_fam;
          std::string pv = fmt(res[i]) + "," + fmt(ims[j]);
          if (sc_param == "k") fa.k = pv;
          else if (sc_param == "m") fa.m = pv;
          else if (sc_param == "beta") fa.beta = pv;
          else if (sc_param == "gamma") fa.gamma = pv;
          double out;
          try {
            auto spec = fa.build();
            if (sc_quantity == "domain") {
              out = 1.0;
            } else {
              out = std::abs(resolvent_kernel(spec, z, sc_x, sc_y).value);
            }
          } catch (const std::exception&) {
            out = sc_quantity == "domain" ? 0.0 : std::nan("");
          }
          value[idx] = out;
        }
      };
      int nthreads = std::min(thread_cap(), total);
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
      std::string text = "re,im,value\n";
      for (int i = 0; i < nr; ++i) {
        for (int j = 0; j < ni; ++j) {
          text += fmt(res[i]) + "," + fmt(ims[j]) + "," + fmt(value[size_t(i) * ni + j]) + "\n";
        }
      }
      Output{sc_out}.write(text);
      return 0;
    }
  } catch (const SpectralPointError& e) {
    std::cerr << "spectral point: " << e.what() << "\n";
    return kExitSpectralPoint;
  } catch (const OracleUnreliableError& e) {
    std::cerr << "oracle unreliable: " << e.what() << "\n";
    return kExitOracleUnreliable;
  } catch (const ValidationError& e) {
    std::cerr << "validation: " << e.what() << "\n";
    return kExitValidation;
  } catch (const UnsupportedRegimeError& e) {
    std::cerr << "unsupported regime: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include "airy/profile.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "airy/numtheory.hpp"

namespace airy {

namespace {
constexpr double kPi = std::numbers::pi;
}

RationalTime RationalTime::reduced(std::int64_t p, std::int64_t q) {
  if (p < 0) throw std::domain_error("RationalTime: numerator must be >= 0");
  auto [rp, rq] = reduce_fraction(p, q);
  return RationalTime{rp, rq};
}

StepProfile compute_profile(const RationalTime& t) {
  const std::int64_t q = t.q;
  const std::int64_t n = 2 * q;
  StepProfile out{t, std::vector<double>(static_cast<std::size_t>(n))};
  for (std::int64_t j = 0; j < n; ++j) {
    double acc = 0.0;
    for (std::int64_t l = -q; l < q; ++l) {
      if (mod_norm(l, 2) == 0) continue;
      const std::int64_t ln = mod_norm(l, n);
      // exponents of e^{iπ·/q} are periodic mod 2q; reduce before the trig
      const std::int64_t e_cubic =
          mod_mul(mod_mul(mod_mul(ln, ln, n), ln, n), t.p, n);
      const std::int64_t e_lin = mod_mul(ln, j, n);
      const std::complex<double> num =
          std::polar(1.0, kPi * static_cast<double>(e_lin - e_cubic) /
                              static_cast<double>(q));
      const std::complex<double> den =
          std::polar(1.0, -kPi * static_cast<double>(l) /
                              static_cast<double>(q)) -
          1.0;
      acc += (num / den).real();
    }
    out.values[static_cast<std::size_t>(j)] =
        0.5 + acc / static_cast<double>(q);
  }
  return out;
}

Jump compute_jump(const RationalTime& t, std::int64_t j) {
  const int sign = mod_norm(t.p + j - 1, 2) == 0 ? 1 : -1;
  KummerSpec spec(t.p, t.q, j);
  CycloSum magnitude = t.q % 2 == 1 ? kummer_Se(spec) : kummer_So(spec);
  const double value = static_cast<double>(sign) *
                       magnitude.to_complex().real() /
                       static_cast<double>(t.q);
  return Jump{sign, std::move(magnitude), value};
}

DiracComb compute_comb(const RationalTime& t) {
  const std::int64_t n = 2 * t.q;
  DiracComb out{t, std::vector<double>(static_cast<std::size_t>(n))};
  for (std::int64_t l = 0; l < n; ++l) {
    out.betas[static_cast<std::size_t>(l)] =
        kummer_S(KummerSpec(t.p, t.q, l)).to_complex().real() /
        static_cast<double>(n);
  }
  return out;
}

double superpose_step(const RationalTime& t, std::int64_t j) {
  return superpose_step(compute_comb(t), j);
}

double superpose_step(const DiracComb& comb, std::int64_t j) {
  const std::int64_t q = comb.time.q;
  double acc = 0.0;
  for (std::int64_t l = 0; l < 2 * q; ++l) {
    // sample point in units of π: (j - l + 1/2)/q, wrapped into [0, 2).
    // The numerator 2(j - l) + 1 is odd, so the step's nodes are never hit.
    const std::int64_t num = mod_norm(2 * (j - l) + 1, 4 * q);
    if (num > 2 * q) acc += comb.betas[static_cast<std::size_t>(l)];
  }
  return acc;
}

double fourier_eval(double t, double x, std::int64_t terms) {
  if (terms < 1) throw std::domain_error("fourier_eval: terms must be >= 1");
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  long double acc = 0.0L;
  for (std::int64_t n = 0; n < terms; ++n) {
    const long double k = static_cast<long double>(2 * n + 1);
    const long double phase = std::fmod(k * k * k * static_cast<long double>(t), two_pi);
    acc += std::sin(k * static_cast<long double>(x) - phase) / k;
  }
  return 0.5 - (2.0 / kPi) * static_cast<double>(acc);
}

double fourier_eval(const RationalTime& t, double x, std::int64_t terms) {
  if (terms < 1) throw std::domain_error("fourier_eval: terms must be >= 1");
  const std::int64_t n = 2 * t.q;
  double acc = 0.0;
  for (std::int64_t i = 0; i < terms; ++i) {
    const std::int64_t k = 2 * i + 1;
    const std::int64_t km = mod_norm(k, n);
    const std::int64_t phase =
        mod_mul(mod_mul(mod_mul(km, km, n), km, n), t.p, n);
    acc += std::sin(static_cast<double>(k) * x -
                    kPi * static_cast<double>(phase) /
                        static_cast<double>(t.q)) /
           static_cast<double>(k);
  }
  return 0.5 - (2.0 / kPi) * acc;
}

ExtremalJumps extremal_jumps(const RationalTime& t) {
  ExtremalJumps out;
  bool first = true;
  for (std::int64_t j = 0; j < 2 * t.q; ++j) {
    const double v = compute_jump(t, j).value;
    if (first || v > out.value_max) {
      out.j_max = j;
      out.value_max = v;
    }
    if (first || v < out.value_min) {
      out.j_min = j;
      out.value_min = v;
    }
    first = false;
  }
  return out;
}

std::string format_sig12(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void write_profile_csv(std::ostream& os, const StepProfile& profile) {
  os << "j,x_start,x_end,a_j\n";
  const double q = static_cast<double>(profile.time.q);
  for (std::size_t j = 0; j < profile.values.size(); ++j) {
    os << j << ',' << format_sig12(static_cast<double>(j) / q) << ','
       << format_sig12(static_cast<double>(j + 1) / q) << ','
       << format_sig12(profile.values[j]) << '\n';
  }
}

void write_comb_csv(std::ostream& os, const DiracComb& comb) {
  os << "l,x_node,beta\n";
  const double q = static_cast<double>(comb.time.q);
  for (std::size_t l = 0; l < comb.betas.size(); ++l) {
    os << l << ',' << format_sig12(static_cast<double>(l) / q) << ','
       << format_sig12(comb.betas[l]) << '\n';
  }
}

}  // namespace airy

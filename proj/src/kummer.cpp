#include "airy/kummer.hpp"

#include <cmath>
#include <stdexcept>

#include "airy/numtheory.hpp"

namespace airy {

KummerSpec::KummerSpec(std::int64_t p_in, std::int64_t q_in, std::int64_t j_in)
    : p(p_in), q(q_in) {
  if (q < 1) throw std::domain_error("KummerSpec: q must be >= 1");
  if (p != 0 && gcd_i64(p, q) != 1)
    throw std::domain_error("KummerSpec: p/q must be reduced");
  j = mod_norm(j_in, 2 * q);
}

CycloSum kummer_S(const KummerSpec& spec) {
  const std::int64_t n = 2 * spec.q;
  const std::int64_t lin = mod_norm(spec.j, n);
  const std::int64_t cub = mod_norm(-mod_norm(spec.p, n), n);
  CycloSum out(n);
  for (std::int64_t v = 0; v < n; ++v) {
    const std::int64_t v3 = mod_mul(mod_mul(v, v, n), v, n);
    out.add_term(mod_norm(mod_mul(lin, v, n) + mod_mul(cub, v3, n), n));
  }
  return out;
}

CycloSum kummer_Se(const KummerSpec& spec) {
  const std::int64_t n = spec.q;
  const std::int64_t lin = mod_norm(spec.j, n);
  const std::int64_t cub = mod_norm(-mod_mul(4, spec.p, n), n);
  CycloSum out(n);
  for (std::int64_t v = 0; v < n; ++v) {
    const std::int64_t v3 = mod_mul(mod_mul(v, v, n), v, n);
    out.add_term(mod_norm(mod_mul(lin, v, n) + mod_mul(cub, v3, n), n));
  }
  return out;
}

CycloSum kummer_So(const KummerSpec& spec) {
  if (spec.q % 2 == 0 && spec.p % 2 == 0)
    throw std::domain_error("kummer_So: p must be odd when q is even");
  const std::int64_t n = 2 * spec.q;
  const std::int64_t lin = mod_norm(spec.j, n);
  const std::int64_t cub = mod_norm(-mod_norm(spec.p, n), n);
  CycloSum out(n);
  for (std::int64_t v = 1; v < n; v += 2) {
    const std::int64_t v3 = mod_mul(mod_mul(v, v, n), v, n);
    out.add_term(mod_norm(mod_mul(lin, v, n) + mod_mul(cub, v3, n), n));
  }
  return out;
}

namespace {

// Σ_{ν=0}^{m-1} ζ_m^{lin·ν + quad·ν² + cub·ν³}, evaluated numerically.
std::complex<double> character_sum(std::int64_t m, std::int64_t lin,
                                   std::int64_t quad, std::int64_t cub) {
  CycloSum s(m);
  for (std::int64_t v = 0; v < m; ++v) {
    const std::int64_t v2 = mod_mul(v, v, m);
    const std::int64_t v3 = mod_mul(v2, v, m);
    const std::int64_t e = mod_norm(
        mod_mul(lin, v, m) + mod_mul(quad, v2, m) + mod_mul(cub, v3, m), m);
    s.add_term(e);
  }
  return s.to_complex();
}

bool close(std::complex<double> a, std::complex<double> b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(a));
}

}  // namespace

bool crt_split_check(std::int64_t q, std::int64_t f3, std::int64_t j,
                     double tol) {
  if (q < 2 || q % 2 == 0)
    throw std::domain_error("crt_split_check: q must be odd and >= 2");
  const auto lhs = character_sum(q, mod_norm(j, q), 0, mod_norm(f3, q));
  std::complex<double> rhs(1.0, 0.0);
  for (const auto& pp : factorize(q).entries) {
    const std::int64_t m = pp.value();
    const std::int64_t qh = q / m;
    const std::int64_t cub = mod_mul(mod_norm(f3, m), mod_mul(qh, qh, m), m);
    rhs *= character_sum(m, mod_norm(j, m), 0, cub);
  }
  return close(lhs, rhs, tol);
}

bool crt_split_check_even(std::int64_t q, std::int64_t g1, std::int64_t g2,
                          std::int64_t g3, double tol) {
  if (q < 2 || q % 2 != 0)
    throw std::domain_error("crt_split_check_even: q must be even");
  const auto lhs =
      character_sum(q, mod_norm(g1, q), mod_norm(g2, q), mod_norm(g3, q));
  std::complex<double> rhs(1.0, 0.0);
  for (const auto& pp : factorize(q).entries) {
    const std::int64_t m = pp.value();
    const std::int64_t qh = q / m;
    const std::int64_t quad = mod_mul(mod_norm(g2, m), qh, m);
    const std::int64_t cub = mod_mul(mod_norm(g3, m), mod_mul(qh, qh, m), m);
    rhs *= character_sum(m, mod_norm(g1, m), quad, cub);
  }
  return close(lhs, rhs, tol);
}

}  // namespace airy

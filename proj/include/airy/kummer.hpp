#pragma once

#include <cstdint>

#include "airy/cyclo.hpp"

namespace airy {

// ---------------------------------------------------------------------------
// Cubic exponential (Kummer) sums attached to the time value t = π p/q and a
// node index j:
//
//   S (p,q,j) = Σ_{ν=0}^{2q-1} ζ_{2q}^{jν - pν³}          (full sum)
//   Se(p,q,j) = Σ_{ν=0}^{q-1}  ζ_q^{jν - 4pν³}            (even part)
//   So(p,q,j) = Σ_{ν odd, 0<ν<2q} ζ_{2q}^{jν - pν³}       (odd part)
//
// All three are real. Exponent arithmetic is reduced through 128-bit
// intermediates, so cubes never overflow for any int64-scale q.
// ---------------------------------------------------------------------------

struct KummerSpec {
  std::int64_t p = 0;
  std::int64_t q = 1;
  std::int64_t j = 0;  // stored reduced into [0, 2q)

  /// Validates q >= 1 and gcd(p, q) = 1 whenever p != 0; reduces j mod 2q.
  KummerSpec(std::int64_t p, std::int64_t q, std::int64_t j);
};

CycloSum kummer_S(const KummerSpec& spec);
CycloSum kummer_Se(const KummerSpec& spec);

/// Odd partial sum. Rejects p even together with q even (unreduced time).
CycloSum kummer_So(const KummerSpec& spec);

/// Multiplicative splitting check for odd q: the full cubic character sum
/// Σ_ν ζ_q^{jν + f3·ν³} must factor over the prime powers l^n of q into
/// sums with the cubic coefficient twisted by the squared complement,
/// f3·(q/l^n)². Compared numerically at the given tolerance.
bool crt_split_check(std::int64_t q, std::int64_t f3, std::int64_t j,
                     double tol = 1e-8);

/// Even-q analogue with a quadratic term: Σ_ν ζ_q^{g1ν + g2ν² + g3ν³}
/// factors with per-component coefficients (g2·q̂, g3·q̂²).
bool crt_split_check_even(std::int64_t q, std::int64_t g1, std::int64_t g2,
                          std::int64_t g3, double tol = 1e-8);

}  // namespace airy

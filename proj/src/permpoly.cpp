#include "airy/permpoly.hpp"

#include <stdexcept>
#include <vector>

#include "airy/numtheory.hpp"

namespace airy {

namespace {

// Coefficient conditions for one prime power; f1, f2, f3 already in [0, l).
bool prime_power_ok(std::int64_t l, int n, std::int64_t f1, std::int64_t f2,
                    std::int64_t f3) {
  if (l == 2) {
    if (n == 1) return (f1 + f2 + f3) % 2 == 1;
    return f1 == 1 && f2 == 0 && f3 == 0;
  }
  if (l == 3) {
    const bool base = (f1 + f3) % 3 != 0 && f2 == 0;
    return n == 1 ? base : (f1 != 0 && base);
  }
  const bool linear_only = f1 != 0 && f2 == 0 && f3 == 0;
  if ((l - 1) % 3 == 0) return linear_only;
  if (n == 1) {
    const bool critical =
        f3 != 0 && mod_mul(f2, f2, l) == mod_mul(3, mod_mul(f1, f3, l), l);
    return critical || linear_only;
  }
  return linear_only;
}

}  // namespace

bool is_permutation_table(const CubicCoeffs& c, std::int64_t q) {
  if (q < 2) throw std::domain_error("is_permutation_table: q must be >= 2");
  for (const auto& pp : factorize(q).entries) {
    if (!prime_power_ok(pp.prime, pp.exponent, mod_norm(c.f1, pp.prime),
                        mod_norm(c.f2, pp.prime), mod_norm(c.f3, pp.prime)))
      return false;
  }
  return true;
}

bool is_permutation_brute(const CubicCoeffs& c, std::int64_t q,
                          std::int64_t max_evals) {
  if (q < 2) throw std::domain_error("is_permutation_brute: q must be >= 2");
  if (q > max_evals)
    throw std::runtime_error("is_permutation_brute: evaluation bound exceeded");
  const std::int64_t f1 = mod_norm(c.f1, q);
  const std::int64_t f2 = mod_norm(c.f2, q);
  const std::int64_t f3 = mod_norm(c.f3, q);
  std::vector<char> seen(static_cast<std::size_t>(q), 0);
  for (std::int64_t v = 0; v < q; ++v) {
    const std::int64_t v2 = mod_mul(v, v, q);
    const std::int64_t v3 = mod_mul(v2, v, q);
    const std::int64_t y = mod_norm(
        mod_mul(f1, v, q) + mod_mul(f2, v2, q) + mod_mul(f3, v3, q), q);
    if (seen[static_cast<std::size_t>(y)]) return false;
    seen[static_cast<std::size_t>(y)] = 1;
  }
  return true;
}

}  // namespace airy

#pragma once

#include <cstdint>

namespace airy {

/// Coefficients of the cubic f(x) = f1·x + f2·x² + f3·x³, read modulo
/// whatever ring the caller supplies. The zero polynomial is a legal input
/// (and never a permutation for q > 1).
struct CubicCoeffs {
  std::int64_t f1 = 0;
  std::int64_t f2 = 0;
  std::int64_t f3 = 0;
};

/// Closed-form permutation test over Z_q: for every prime power l^n fully
/// dividing q, the coefficient conditions for (l, n) must hold. Conditions,
/// with coefficients reduced mod l:
///   l = 2, n = 1:  f1 + f2 + f3 odd
///   l = 2, n > 1:  f1 odd, f2 even, f3 even
///   l = 3, n = 1:  f1 + f3 != 0, f2 = 0
///   l = 3, n > 1:  f1 != 0, f1 + f3 != 0, f2 = 0
///   3 | l - 1:     f1 != 0, f2 = f3 = 0                 (any n)
///   3 ∤ l - 1:     n = 1: f2² = 3·f1·f3 with f3 != 0, or f1 != 0 with
///                         f2 = f3 = 0
///                  n > 1: f1 != 0, f2 = f3 = 0
bool is_permutation_table(const CubicCoeffs& c, std::int64_t q);

/// Ground-truth check: evaluates f over all of Z_q and tests bijectivity.
/// Throws a resource error when q exceeds `max_evals`.
bool is_permutation_brute(const CubicCoeffs& c, std::int64_t q,
                          std::int64_t max_evals = 1'000'000);

}  // namespace airy

#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "airy/numtheory.hpp"

namespace airy {

// ---------------------------------------------------------------------------
// Exact integer combination of N-th roots of unity:
//
//   value = Σ_k coeffs[k] · ζ_N^k,   ζ_N = e^{2πi/N}.
//
// The vanishing test is exact: the value is zero iff the coefficient
// polynomial is divisible by Φ_N over Z, which is decided by synthetic
// division with a remainder check. No floating thresholds are involved, so
// the zero/nonzero verdict is trustworthy for composite N as well.
// ---------------------------------------------------------------------------

class CycloSum {
 public:
  explicit CycloSum(std::int64_t order);

  /// Multiset of exponents; entries are reduced mod N on ingestion.
  static CycloSum from_exponents(std::int64_t order,
                                 const std::vector<std::int64_t>& exps);

  std::int64_t order() const { return order_; }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  void add_term(std::int64_t exponent, std::int64_t multiplicity = 1);

  /// Exact vanishing test (divisibility by Φ_N).
  bool is_zero() const;

  /// Floating-point evaluation Σ coeffs[k]·e^{2πik/N}.
  std::complex<double> to_complex() const;

  /// Complex conjugate, i.e. coefficients remapped k -> N-k mod N.
  CycloSum conjugated() const;

  /// Exact reality test: the difference with the conjugate vanishes.
  bool is_real() const;

  /// Rewrite in a larger order; `new_order` must be a multiple of order().
  CycloSum embedded(std::int64_t new_order) const;

  CycloSum& operator+=(const CycloSum& rhs);
  friend CycloSum operator+(CycloSum lhs, const CycloSum& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend CycloSum operator-(const CycloSum& a, const CycloSum& b);

  /// Coefficient-wise equality (not equality of values).
  friend bool operator==(const CycloSum&, const CycloSum&) = default;

 private:
  std::int64_t order_ = 1;
  std::vector<mpz_class> coeffs_;
};

}  // namespace airy

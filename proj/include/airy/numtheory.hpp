#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace airy {

// ---------------------------------------------------------------------------
// Modular arithmetic helpers. All moduli must be positive; results land in
// [0, m). mod_mul goes through 128-bit intermediates, so products are exact
// for any int64 modulus.
// ---------------------------------------------------------------------------

std::int64_t mod_norm(std::int64_t x, std::int64_t m);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m);
std::int64_t gcd_i64(std::int64_t a, std::int64_t b);

/// Deterministic trial-division primality check.
bool is_prime(std::int64_t n);

struct PrimePower {
  std::int64_t prime = 0;
  int exponent = 0;

  std::int64_t value() const;  // prime^exponent
  std::string str() const;     // e.g. "7^2"

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes; factorize(1) is empty.
struct Factorization {
  std::vector<PrimePower> entries;

  std::int64_t product() const;
};

Factorization factorize(std::int64_t n);

/// Complement q̂ = q / prime^k where prime^k is the full power of `prime` in q.
/// The result is coprime to `prime`. Throws if `prime` does not divide q.
std::int64_t complement(std::int64_t q, std::int64_t prime);

/// Legendre symbol (a/q) for an odd prime q, via the Euler criterion.
/// Returns 0 exactly when q divides a.
int legendre(std::int64_t a, std::int64_t q);

/// Reduce p/q to lowest terms with positive denominator; (0, q) becomes (0, 1).
std::pair<std::int64_t, std::int64_t> reduce_fraction(std::int64_t p,
                                                      std::int64_t q);

// ---------------------------------------------------------------------------
// Dense univariate polynomial over Z with arbitrary-precision coefficients.
// coeffs()[k] multiplies x^k; the zero polynomial has an empty vector and
// degree -1. Only what the cyclotomic machinery needs is provided.
// ---------------------------------------------------------------------------

struct PolyDivMod;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial x_pow_minus_one(std::int64_t n);  // x^n - 1

  std::int64_t degree() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  /// Coefficient of x^k; zero beyond the degree.
  const mpz_class& coeff(std::size_t k) const;

  /// Long division by a monic divisor. Stays in Z and is exact.
  PolyDivMod divmod_monic(const IntPolynomial& divisor) const;

  friend IntPolynomial operator*(const IntPolynomial&, const IntPolynomial&);
  friend IntPolynomial operator-(const IntPolynomial&, const IntPolynomial&);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

struct PolyDivMod {
  IntPolynomial quotient;
  IntPolynomial remainder;
};

/// n-th cyclotomic polynomial Φ_n, computed by exact division of x^n - 1 by
/// all Φ_d with d | n, d < n. Results are memoized; the reference stays valid
/// for the lifetime of the program.
const IntPolynomial& cyclotomic(std::int64_t n);

}  // namespace airy

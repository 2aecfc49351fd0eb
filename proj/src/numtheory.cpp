#include "airy/numtheory.hpp"

#include <mutex>
#include <map>
#include <stdexcept>

namespace airy {

std::int64_t mod_norm(std::int64_t x, std::int64_t m) {
  std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
  a = mod_norm(a, m);
  b = mod_norm(b, m);
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t acc = mod_norm(1, m);
  base = mod_norm(base, m);
  while (exp > 0) {
    if (exp & 1) acc = mod_mul(acc, base, m);
    base = mod_mul(base, base, m);
    exp >>= 1;
  }
  return acc;
}

std::int64_t gcd_i64(std::int64_t a, std::int64_t b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::int64_t PrimePower::value() const {
  std::int64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::string PrimePower::str() const {
  return std::to_string(prime) + "^" + std::to_string(exponent);
}

std::int64_t Factorization::product() const {
  std::int64_t v = 1;
  for (const auto& e : entries) v *= e.value();
  return v;
}

Factorization factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: argument must be >= 1");
  Factorization out;
  auto strip = [&](std::int64_t d) {
    if (n % d != 0) return;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.entries.push_back({d, e});
  };
  strip(2);
  strip(3);
  for (std::int64_t d = 5; d * d <= n; d += 6) {
    strip(d);
    strip(d + 2);
  }
  if (n > 1) out.entries.push_back({n, 1});
  return out;
}

std::int64_t complement(std::int64_t q, std::int64_t prime) {
  if (q < 2 || prime < 2 || q % prime != 0)
    throw std::domain_error("complement: prime must divide q");
  while (q % prime == 0) q /= prime;
  return q;
}

int legendre(std::int64_t a, std::int64_t q) {
  if (q < 3 || q % 2 == 0 || !is_prime(q))
    throw std::domain_error("legendre: modulus must be an odd prime");
  std::int64_t r = mod_pow(mod_norm(a, q), (q - 1) / 2, q);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::pair<std::int64_t, std::int64_t> reduce_fraction(std::int64_t p,
                                                      std::int64_t q) {
  if (q < 1) throw std::domain_error("reduce_fraction: denominator must be >= 1");
  if (p == 0) return {0, 1};
  std::int64_t g = gcd_i64(p, q);
  return {p / g, q / g};
}

// ---------------------------------------------------------------------------
// IntPolynomial
// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(std::int64_t n) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, mpz_class(0));
  c.front() = -1;
  c.back() = 1;
  return IntPolynomial(std::move(c));
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const {
  static const mpz_class zero(0);
  return k < coeffs_.size() ? coeffs_[k] : zero;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1,
                           mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) {
      mpz_addmul(c[i + k].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[k].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()),
                           mpz_class(0));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(k) - b.coeff(k);
  return IntPolynomial(std::move(c));
}

PolyDivMod IntPolynomial::divmod_monic(
    const IntPolynomial& divisor) const {
  if (divisor.is_zero() || divisor.coeffs_.back() != 1)
    throw std::domain_error("divmod_monic: divisor must be monic");
  const std::size_t d = divisor.coeffs_.size() - 1;
  std::vector<mpz_class> rem = coeffs_;
  if (rem.size() <= d) return {IntPolynomial{}, IntPolynomial(std::move(rem))};

  std::vector<mpz_class> quot(rem.size() - d, mpz_class(0));
  mpz_class c;
  for (std::size_t i = rem.size(); i-- > d;) {
    if (rem[i] == 0) continue;
    c = rem[i];
    quot[i - d] = c;
    for (std::size_t t = 0; t < d; ++t) {
      mpz_submul(rem[i - d + t].get_mpz_t(), c.get_mpz_t(),
                 divisor.coeffs_[t].get_mpz_t());
    }
    rem[i] = 0;
  }
  return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

const IntPolynomial& cyclotomic(std::int64_t n) {
  if (n < 1) throw std::domain_error("cyclotomic: index must be >= 1");
  static std::map<std::int64_t, IntPolynomial> cache;
  static std::mutex mutex;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // Φ_n = (x^n - 1) / Π_{d|n, d<n} Φ_d; recursion bottoms out at Φ_1 = x - 1.
  IntPolynomial acc = IntPolynomial::x_pow_minus_one(n);
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto divmod = acc.divmod_monic(cyclotomic(d));
    if (!divmod.remainder.is_zero())
      throw std::logic_error("cyclotomic: inexact division");
    acc = std::move(divmod.quotient);
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(acc)).first->second;
}

}  // namespace airy

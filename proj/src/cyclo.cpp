#include "airy/cyclo.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace airy {

CycloSum::CycloSum(std::int64_t order) : order_(order) {
  if (order < 1) throw std::domain_error("CycloSum: order must be >= 1");
  coeffs_.assign(static_cast<std::size_t>(order), mpz_class(0));
}

CycloSum CycloSum::from_exponents(std::int64_t order,
                                  const std::vector<std::int64_t>& exps) {
  CycloSum s(order);
  for (std::int64_t e : exps) s.add_term(e);
  return s;
}

void CycloSum::add_term(std::int64_t exponent, std::int64_t multiplicity) {
  coeffs_[static_cast<std::size_t>(mod_norm(exponent, order_))] +=
      multiplicity;
}

bool CycloSum::is_zero() const {
  const IntPolynomial& phi = cyclotomic(order_);
  const auto& div = phi.coeffs();
  const std::size_t d = div.size() - 1;  // deg Φ_N, always >= 1

  std::vector<mpz_class> rem = coeffs_;
  mpz_class c;
  for (std::size_t i = rem.size(); i-- > d;) {
    if (rem[i] == 0) continue;
    c = rem[i];
    for (std::size_t t = 0; t < d; ++t)
      mpz_submul(rem[i - d + t].get_mpz_t(), c.get_mpz_t(),
                 div[t].get_mpz_t());
    rem[i] = 0;
  }
  for (std::size_t t = 0; t < d && t < rem.size(); ++t)
    if (rem[t] != 0) return false;
  return true;
}

std::complex<double> CycloSum::to_complex() const {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(order_);
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    const double w = coeffs_[k].get_d();
    const double a = step * static_cast<double>(k);
    acc += std::complex<double>(w * std::cos(a), w * std::sin(a));
  }
  return acc;
}

CycloSum CycloSum::conjugated() const {
  CycloSum out(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    std::size_t kk = k == 0 ? 0 : static_cast<std::size_t>(order_) - k;
    out.coeffs_[kk] = coeffs_[k];
  }
  return out;
}

bool CycloSum::is_real() const { return (*this - conjugated()).is_zero(); }

CycloSum CycloSum::embedded(std::int64_t new_order) const {
  if (new_order < order_ || new_order % order_ != 0)
    throw std::domain_error("CycloSum: embedding order must be a multiple");
  const std::int64_t factor = new_order / order_;
  CycloSum out(new_order);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    out.coeffs_[k * static_cast<std::size_t>(factor)] = coeffs_[k];
  return out;
}

CycloSum& CycloSum::operator+=(const CycloSum& rhs) {
  if (rhs.order_ != order_)
    throw std::domain_error("CycloSum: mismatched orders in +=");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  return *this;
}

CycloSum operator-(const CycloSum& a, const CycloSum& b) {
  if (a.order_ != b.order_)
    throw std::domain_error("CycloSum: mismatched orders in -");
  CycloSum out(a.order_);
  for (std::size_t k = 0; k < out.coeffs_.size(); ++k)
    out.coeffs_[k] = a.coeffs_[k] - b.coeffs_[k];
  return out;
}

}  // namespace airy

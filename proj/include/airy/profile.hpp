#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "airy/kummer.hpp"

namespace airy {

/// Reduced rational time t = π p/q with p >= 0, q >= 1 and gcd(p, q) = 1;
/// p = 0 forces q = 1.
struct RationalTime {
  std::int64_t p = 0;
  std::int64_t q = 1;

  static RationalTime reduced(std::int64_t p, std::int64_t q);

  friend bool operator==(const RationalTime&, const RationalTime&) = default;
};

/// The 2q constant values a_0..a_{2q-1} the solution takes on the
/// subintervals (πj/q, π(j+1)/q).
struct StepProfile {
  RationalTime time;
  std::vector<double> values;
};

/// Coefficients β_0..β_{2q-1} of the fundamental solution's delta comb at
/// the nodes πl/q.
struct DiracComb {
  RationalTime time;
  std::vector<double> betas;
};

/// One jump a_j - a_{j-1}: the sign factor (-1)^{p+j-1}, the exact partial
/// Kummer sum carrying the magnitude, and the floating value. The jump is
/// exactly zero iff magnitude.is_zero().
struct Jump {
  int sign;
  CycloSum magnitude;
  double value;
};

struct ExtremalJumps {
  std::int64_t j_max = 0;
  double value_max = 0.0;
  std::int64_t j_min = 0;
  double value_min = 0.0;
};

/// Profile values by direct summation of the rescaled Fourier coefficients
/// over odd frequencies in [-q, q).
StepProfile compute_profile(const RationalTime& t);

/// Jump at node j via the partial Kummer sum route:
///   a_j - a_{j-1} = (-1)^{p+j-1}/q · Se(p,q,j)   (q odd)
///   a_j - a_{j-1} = (-1)^{p+j-1}/q · So(p,q,j)   (q even)
Jump compute_jump(const RationalTime& t, std::int64_t j);

/// Delta-comb coefficients β_l = S(p,q,l)/(2q). The 1/(2q) normalization is
/// forced by Σβ_l = 1 (the constant solution must be preserved).
DiracComb compute_comb(const RationalTime& t);

/// Evaluates Σ_l β_l σ(x - πl/q) at the midpoint x = π(j+½)/q, where σ is
/// the 2π-periodic unit step. Must reproduce compute_profile(t).values[j].
double superpose_step(const RationalTime& t, std::int64_t j);

/// Same superposition against a precomputed comb (one comb serves all j).
double superpose_step(const DiracComb& comb, std::int64_t j);

/// Truncated Fourier partial sum of the solution; rendering only.
/// t is the actual time value (e.g. π/3), x the position in radians.
double fourier_eval(double t, double x, std::int64_t terms);

/// Same partial sum with exact modular phase reduction for rational times;
/// immune to the precision loss of forming (2n+1)³·t in floating point.
double fourier_eval(const RationalTime& t, double x, std::int64_t terms);

/// Largest and smallest jump over j in [0, 2q); ties broken by smallest j.
ExtremalJumps extremal_jumps(const RationalTime& t);

// --- serialization ---------------------------------------------------------

/// Fixed 12-significant-digit, locale-independent float formatting used by
/// every CSV writer; negative zero is normalized.
std::string format_sig12(double v);

/// CSV layout: header "j,x_start,x_end,a_j", one row per subinterval,
/// x in units of π.
void write_profile_csv(std::ostream& os, const StepProfile& profile);

/// CSV layout: header "l,x_node,beta", x in units of π.
void write_comb_csv(std::ostream& os, const DiracComb& comb);

}  // namespace airy

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "airy/numtheory.hpp"
#include "airy/profile.hpp"

namespace airy {

/// Membership condition "j mod modulus ∈ residues". Negated conditions
/// (j ≠ r mod m) are normalized into the complement residue set on
/// construction, so evaluation is a plain union of memberships.
struct CongruenceClause {
  std::int64_t modulus = 2;
  std::vector<std::int64_t> residues;  // sorted, proper nonempty subset

  static CongruenceClause in(std::int64_t modulus,
                             std::vector<std::int64_t> residues);
  static CongruenceClause excluding(std::int64_t modulus,
                                    std::int64_t residue);

  bool matches(std::int64_t j) const;
};

/// The set of points of constancy, i.e. node indices j in [0, 2q) where the
/// profile has no jump.
struct PCSet {
  std::int64_t q = 1;
  std::vector<std::int64_t> members;  // sorted

  bool contains(std::int64_t j) const;

  friend bool operator==(const PCSet&, const PCSet&) = default;
};

struct ComponentClauses {
  PrimePower prime_power;
  std::vector<CongruenceClause> clauses;
};

enum class PredictStatus { supported, unsupported };

/// Congruence-rule prediction of the point-of-constancy set, one clause set
/// per prime power of q, combined by union. Prime powers outside the rule
/// table yield an explicit unsupported status, never a silent wrong answer.
struct Prediction {
  std::int64_t p = 0;
  std::int64_t q = 1;
  PredictStatus status = PredictStatus::supported;
  std::string unsupported_reason;  // names the offending prime power(s)
  std::vector<ComponentClauses> components;
  PCSet set;  // populated when supported
};

/// Rule table, with l^n the prime power and q̂ = complement(q, l):
///   l odd, n = 1:   l = 3        -> j ≠ p·q̂² (mod 3)
///                   3 | l - 1    -> no clause
///                   3 ∤ l - 1    -> j = 0 (mod l)
///   l odd, n = 2:   l = 3        -> j ≠ 0 (mod 3)
///                   l > 3        -> legendre(j, l) = -legendre(3p, l)
///   l = 3, n = 3, q = 27:        -> j = 1, 2 (mod 3)  or  j = 6p (mod 9)
///   l = 2, n = 1:                -> j = 0 (mod 2)
///   l = 2, n = 2, q = 4:         -> j = 0 (mod 2)  or  j = 3p (mod 4)
///   l = 2, n = 3, q = 8:         -> j = 0 (mod 2)  or  j = 2-p (mod 4)
///   l = 2, n ∈ {4,5}, q = 2^n, p = 1:
///                                -> j = 0 (mod 2)  or  j ≠ 7 (mod 8)
///   anything else: unsupported.
/// t = 0 is answered directly: every j except 0 and q is a point of
/// constancy (the step only jumps at its own discontinuities).
Prediction predict(const RationalTime& t);

/// Union semantics: j belongs to the result iff at least one clause matches.
PCSet clause_eval(const std::vector<CongruenceClause>& clauses,
                  std::int64_t q);

nlohmann::ordered_json to_json(const Prediction& prediction);
nlohmann::ordered_json to_json(const PCSet& set, std::int64_t p);

}  // namespace airy

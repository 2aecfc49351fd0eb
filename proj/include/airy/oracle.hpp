#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "airy/predictor.hpp"
#include "airy/profile.hpp"

namespace airy {

/// Ground truth: j is a point of constancy iff the attached partial Kummer
/// sum vanishes exactly (cyclotomic divisibility, no floating thresholds).
PCSet oracle_pcset(const RationalTime& t);

enum class Agreement { agree, mismatch, not_applicable };

struct VerifyReport {
  RationalTime time;
  Prediction predicted;
  PCSet oracle_set;
  std::vector<std::int64_t> missing;   // oracle minus predicted
  std::vector<std::int64_t> spurious;  // predicted minus oracle
  Agreement agreement = Agreement::not_applicable;
};

/// Predictor-versus-oracle comparison; unsupported predictions still carry
/// the oracle set and are marked not-applicable.
VerifyReport verify(const RationalTime& t);

enum class PPolicy { all_reduced, first };

/// Reports for every q in [2, q_max], p ascending over reduced numerators in
/// [1, 2q) (or just the first one). Deterministic order.
std::vector<VerifyReport> verify_range(std::int64_t q_max, PPolicy policy);

nlohmann::ordered_json to_json(const VerifyReport& report);

}  // namespace airy

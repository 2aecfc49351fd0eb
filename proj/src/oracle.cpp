#include "airy/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "airy/kummer.hpp"

namespace airy {

PCSet oracle_pcset(const RationalTime& t) {
  PCSet out{t.q, {}};
  for (std::int64_t j = 0; j < 2 * t.q; ++j) {
    KummerSpec spec(t.p, t.q, j);
    const CycloSum sum = t.q % 2 == 1 ? kummer_Se(spec) : kummer_So(spec);
    if (sum.is_zero()) out.members.push_back(j);
  }
  return out;
}

VerifyReport verify(const RationalTime& t) {
  VerifyReport report{t, predict(t), oracle_pcset(t), {}, {},
                      Agreement::not_applicable};
  if (report.predicted.status != PredictStatus::supported) return report;

  std::set_difference(report.oracle_set.members.begin(),
                      report.oracle_set.members.end(),
                      report.predicted.set.members.begin(),
                      report.predicted.set.members.end(),
                      std::back_inserter(report.missing));
  std::set_difference(report.predicted.set.members.begin(),
                      report.predicted.set.members.end(),
                      report.oracle_set.members.begin(),
                      report.oracle_set.members.end(),
                      std::back_inserter(report.spurious));
  report.agreement = report.missing.empty() && report.spurious.empty()
                         ? Agreement::agree
                         : Agreement::mismatch;
  return report;
}

std::vector<VerifyReport> verify_range(std::int64_t q_max, PPolicy policy) {
  if (q_max < 2) throw std::domain_error("verify_range: q_max must be >= 2");
  std::vector<VerifyReport> reports;
  for (std::int64_t q = 2; q <= q_max; ++q) {
    for (std::int64_t p = 1; p < 2 * q; ++p) {
      if (gcd_i64(p, q) != 1) continue;
      reports.push_back(verify(RationalTime{p, q}));
      if (policy == PPolicy::first) break;
    }
  }
  return reports;
}

nlohmann::ordered_json to_json(const VerifyReport& report) {
  nlohmann::ordered_json j = to_json(report.predicted);
  j["oracle_members"] = report.oracle_set.members;
  j["missing"] = report.missing;
  j["spurious"] = report.spurious;
  switch (report.agreement) {
    case Agreement::agree:
      j["agree"] = true;
      break;
    case Agreement::mismatch:
      j["agree"] = false;
      break;
    case Agreement::not_applicable:
      j["agree"] = nullptr;
      break;
  }
  return j;
}

}  // namespace airy

// Acceptance suite: runs every acceptance criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion, with detail lines for any
// finding. Exit code is the number of failed criteria.
//
// Two criteria assert identities that the exact kernel refutes; they are
// implemented as stated, fail, and print the counterexamples instead of
// being quietly reconciled (see the detail lines of criteria 3, 5 and 7).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "airy/kummer.hpp"
#include "airy/numtheory.hpp"
#include "airy/oracle.hpp"
#include "airy/permpoly.hpp"
#include "airy/predictor.hpp"
#include "airy/profile.hpp"

using namespace airy;

namespace {

using Members = std::vector<std::int64_t>;
using CongruencePairs =
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>>;

Members by_congruences(std::int64_t q, const CongruencePairs& pairs) {
  Members out;
  for (std::int64_t j = 0; j < 2 * q; ++j) {
    for (const auto& [m, rs] : pairs) {
      bool hit = false;
      for (std::int64_t r : rs) hit = hit || j % m == r;
      if (hit) {
        out.push_back(j);
        break;
      }
    }
  }
  return out;
}

std::string show(const Members& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m[i]);
  }
  return s + "}";
}

struct Detail {
  std::vector<std::string> lines;
  void add(std::string line) { lines.push_back(std::move(line)); }
};

// q in [2, q_max], all reduced p in [1, 2q)
template <typename F>
void for_reduced(std::int64_t q_max, F&& f) {
  for (std::int64_t q = 2; q <= q_max; ++q)
    for (std::int64_t p = 1; p < 2 * q; ++p)
      if (gcd_i64(p, q) == 1) f(RationalTime{p, q});
}

bool both_routes_equal(const RationalTime& t, const Members& expect,
                       Detail& detail) {
  const Prediction pred = predict(t);
  bool ok = true;
  if (pred.status != PredictStatus::supported ||
      pred.set.members != expect) {
    detail.add("predictor differs at p=" + std::to_string(t.p) +
               " q=" + std::to_string(t.q));
    ok = false;
  }
  const PCSet oracle = oracle_pcset(t);
  if (oracle.members != expect) {
    detail.add("oracle differs at p=" + std::to_string(t.p) +
               " q=" + std::to_string(t.q) + ": got " + show(oracle.members));
    ok = false;
  }
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion1(Detail& detail) {
  bool ok = true;
  ok &= both_routes_equal({1, 3}, {0, 2, 3, 5}, detail);
  ok &= both_routes_equal({2, 3}, {0, 1, 3, 4}, detail);
  ok &= both_routes_equal({1, 5}, {0, 5}, detail);
  ok &= both_routes_equal({1, 7}, {}, detail);
  ok &= both_routes_equal({1, 11}, {0, 11}, detail);
  ok &= both_routes_equal({1, 15},
                          by_congruences(15, {{3, {0, 2}}, {5, {0}}}), detail);
  ok &= both_routes_equal({2, 15},
                          by_congruences(15, {{3, {0, 1}}, {5, {0}}}), detail);
  ok &= both_routes_equal({1, 21}, by_congruences(21, {{3, {0, 2}}}), detail);
  for (std::int64_t p : {1, 3, 5})
    ok &= both_routes_equal({p, 2}, {0, 2}, detail);
  ok &= both_routes_equal({1, 6},
                          by_congruences(6, {{2, {0}}, {3, {0, 2}}}), detail);
  ok &= both_routes_equal({1, 10},
                          by_congruences(10, {{2, {0}}, {5, {0}}}), detail);
  return ok;
}

bool criterion2(Detail& detail) {
  bool ok = true;
  if (oracle_pcset({1, 49}).members != by_congruences(49, {{7, {1, 2, 4}}})) {
    detail.add("PC(1/49) differs from the quadratic-residue classes");
    ok = false;
  }
  if (oracle_pcset({1, 25}).members != by_congruences(25, {{5, {1, 4}}})) {
    detail.add("PC(1/25) differs from the quadratic-residue classes");
    ok = false;
  }
  return ok;
}

bool criterion3(Detail& detail) {
  bool ok = true;
  for (std::int64_t p : {1, 3}) {
    const Members expect =
        by_congruences(4, {{2, {0}}, {4, {mod_norm(3 * p, 4)}}});
    if (oracle_pcset({p, 4}).members != expect) {
      detail.add("q=4 rule fails at p=" + std::to_string(p));
      ok = false;
    }
  }
  for (std::int64_t p : {1, 3, 5, 7}) {
    const Members expect =
        by_congruences(8, {{2, {0}}, {4, {mod_norm(2 - p, 4)}}});
    if (oracle_pcset({p, 8}).members != expect) {
      detail.add("q=8 rule fails at p=" + std::to_string(p));
      ok = false;
    }
  }
  for (std::int64_t q : {16, 32}) {
    const Members expect =
        by_congruences(q, {{2, {0}}, {8, {0, 1, 2, 3, 4, 5, 6}}});
    const Members got = oracle_pcset({1, q}).members;
    if (got != expect) {
      // report the actual excluded residue classes mod 8 as the finding
      std::vector<bool> excluded(8, true);
      for (std::int64_t j : got) excluded[j % 8] = false;
      std::string classes;
      for (int r = 0; r < 8; ++r)
        if (excluded[r]) classes += (classes.empty() ? "" : ",") +
                                    std::to_string(r);
      detail.add("finding: exact PC(1/" + std::to_string(q) +
                 ") excludes j = " + classes +
                 " (mod 8); the recorded experimental rule excludes 7 "
                 "(mod 8). Not reconciled.");
      ok = false;
    }
  }
  return ok;
}

bool criterion4(Detail& detail) {
  bool ok = true;
  for (std::int64_t p : {1, 2, 4, 5}) {
    const Members expect =
        by_congruences(27, {{3, {1, 2}}, {9, {mod_norm(6 * p, 9)}}});
    if (oracle_pcset({p, 27}).members != expect) {
      detail.add("q=27 rule fails at p=" + std::to_string(p));
      ok = false;
    }
  }
  return ok;
}

bool criterion5(Detail& detail) {
  std::int64_t agree = 0, mismatch = 0, unsupported = 0;
  std::vector<std::pair<std::int64_t, std::string>> unsupported_by_q;
  for_reduced(60, [&](const RationalTime& t) {
    const VerifyReport r = verify(t);
    switch (r.agreement) {
      case Agreement::agree:
        ++agree;
        break;
      case Agreement::mismatch:
        ++mismatch;
        detail.add("mismatch at p=" + std::to_string(t.p) +
                   " q=" + std::to_string(t.q) +
                   ": missing=" + show(r.missing) +
                   " spurious=" + show(r.spurious));
        break;
      case Agreement::not_applicable:
        ++unsupported;
        if (unsupported_by_q.empty() ||
            unsupported_by_q.back().first != t.q)
          unsupported_by_q.emplace_back(t.q,
                                        r.predicted.unsupported_reason);
        break;
    }
  });
  detail.add("agree=" + std::to_string(agree) +
             " mismatch=" + std::to_string(mismatch) +
             " unsupported=" + std::to_string(unsupported));
  std::string qs;
  for (const auto& [q, reason] : unsupported_by_q)
    qs += (qs.empty() ? "" : ", ") + std::to_string(q) + " (" + reason + ")";
  detail.add("unsupported q: " + qs);
  if (mismatch > 0)
    detail.add("finding: the single mismatch is the recorded q=32 "
               "experimental rule; the exact set excludes j = 3 (mod 8).");
  return mismatch == 0;
}

bool criterion6(Detail& detail) {
  std::int64_t mismatches = 0;
  for (std::int64_t q = 2; q <= 30; ++q)
    for (std::int64_t f1 = 0; f1 < q; ++f1)
      for (std::int64_t f2 = 0; f2 < q; ++f2)
        for (std::int64_t f3 = 0; f3 < q; ++f3) {
          const CubicCoeffs c{f1, f2, f3};
          if (is_permutation_table(c, q) != is_permutation_brute(c, q))
            ++mismatches;
        }
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<std::int64_t> qdist(2, 200);
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t q = qdist(rng);
    std::uniform_int_distribution<std::int64_t> fdist(0, q - 1);
    const CubicCoeffs c{fdist(rng), fdist(rng), fdist(rng)};
    if (is_permutation_table(c, q) != is_permutation_brute(c, q))
      ++mismatches;
  }
  if (mismatches > 0)
    detail.add(std::to_string(mismatches) + " coefficient-test mismatches");
  return mismatches == 0;
}

bool criterion7(Detail& detail) {
  double worst_sum = 0, worst_complement = 0, worst_antisym = 0;
  double worst_comb_sum = 0, worst_comb_sym = 0, worst_jump_eq = 0;
  std::string sym_example;
  for_reduced(60, [&](const RationalTime& t) {
    const std::int64_t n = 2 * t.q;
    const StepProfile sp = compute_profile(t);
    double sum = 0;
    for (double v : sp.values) sum += v;
    worst_sum = std::max(worst_sum,
                         std::abs(sum - static_cast<double>(t.q)));
    if (t.q % 2 == 1)
      for (std::int64_t j = 0; j < t.q; ++j)
        worst_complement =
            std::max(worst_complement,
                     std::abs(sp.values[j] + sp.values[j + t.q] - 1.0));
    for (std::int64_t j = 0; j < t.q; ++j) {
      const double d1 = sp.values[j] - sp.values[(j + n - 1) % n];
      const double d2 =
          sp.values[(j + t.q) % n] - sp.values[(j + t.q - 1) % n];
      worst_antisym = std::max(worst_antisym, std::abs(d1 + d2));
    }
    const DiracComb comb = compute_comb(t);
    double bsum = 0;
    for (double b : comb.betas) bsum += b;
    worst_comb_sum = std::max(worst_comb_sum, std::abs(bsum - 1.0));
    for (std::int64_t l = 0; l < n; ++l) {
      const double err =
          std::abs(comb.betas[(n - l) % n] - comb.betas[l]);
      if (err > worst_comb_sym) {
        worst_comb_sym = err;
        sym_example = "p=" + std::to_string(t.p) + " q=" +
                      std::to_string(t.q) + " l=" + std::to_string(l);
      }
    }
    for (std::int64_t j = 0; j < n; ++j) {
      const double diff = sp.values[j] - sp.values[(j + n - 1) % n];
      worst_jump_eq = std::max(
          worst_jump_eq, std::abs(diff - compute_jump(t, j).value));
    }
  });
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max errors: sum=%.2e complement=%.2e antisym=%.2e "
                "comb_sum=%.2e jump_eq=%.2e",
                worst_sum, worst_complement, worst_antisym, worst_comb_sum,
                worst_jump_eq);
  detail.add(buf);
  const bool others_ok = worst_sum < 1e-9 && worst_complement < 1e-9 &&
                         worst_antisym < 1e-9 && worst_comb_sum < 1e-9 &&
                         worst_jump_eq < 1e-8;
  const bool sym_ok = worst_comb_sym < 1e-9;
  if (!sym_ok) {
    std::snprintf(buf, sizeof buf,
                  "finding: beta_{2q-l} = beta_l fails (max err %.2e at %s); "
                  "the true reflection is beta_{2q-l}(p/q) = "
                  "beta_l((2q-p)/q). Not reconciled.",
                  worst_comb_sym, sym_example.c_str());
    detail.add(buf);
  }
  return others_ok && sym_ok;
}

bool criterion8(Detail& detail) {
  double worst = 0;
  for_reduced(40, [&](const RationalTime& t) {
    const StepProfile sp = compute_profile(t);
    const DiracComb comb = compute_comb(t);
    for (std::int64_t j = 0; j < 2 * t.q; ++j)
      worst = std::max(worst,
                       std::abs(superpose_step(comb, j) - sp.values[j]));
  });
  char buf[80];
  std::snprintf(buf, sizeof buf, "max |superpose - profile| = %.2e", worst);
  detail.add(buf);
  return worst < 1e-8;
}

bool criterion9(Detail& detail) {
  std::int64_t failures = 0;
  for (std::int64_t q = 9; q <= 105; q += 2) {
    if (is_prime(q)) continue;
    for (std::int64_t j = 0; j < q; ++j)
      if (!crt_split_check(q, -4, j, 1e-8)) ++failures;
  }
  if (failures > 0)
    detail.add(std::to_string(failures) + " splitting failures");
  return failures == 0;
}

bool criterion10(Detail& detail) {
  double max_zero = 0, min_nonzero = 1e300;
  bool coherent = true;
  for_reduced(60, [&](const RationalTime& t) {
    for (std::int64_t j = 0; j < 2 * t.q; ++j) {
      const KummerSpec spec(t.p, t.q, j);
      const CycloSum s =
          t.q % 2 == 1 ? kummer_Se(spec) : kummer_So(spec);
      const double mag = std::abs(s.to_complex());
      if (s.is_zero())
        max_zero = std::max(max_zero, mag);
      else
        min_nonzero = std::min(min_nonzero, mag);
      coherent = coherent && (s.is_zero() == (mag < 1e-6));
    }
  });
  char buf[120];
  std::snprintf(buf, sizeof buf,
                "max |zero| = %.2e, min |nonzero| = %.2e", max_zero,
                min_nonzero);
  detail.add(buf);
  const bool dead_band_clear = max_zero < 1e-6 && min_nonzero > 1e-3;
  return coherent && dead_band_clear;
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<bool(Detail&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "worked constancy sets via predictor and oracle", 1.0, criterion1},
      {2, "squared primes: quadratic-character sets (q = 25, 49)", 5.0,
       criterion2},
      {3, "power-of-two sets at q = 4, 8, 16, 32", 10.0, criterion3},
      {4, "q = 27 congruence set for p = 1, 2, 4, 5", 5.0, criterion4},
      {5, "predictor-oracle sweep, q <= 60, all reduced p", 120.0,
       criterion5},
      {6, "cubic permutation test vs brute force", 120.0, criterion6},
      {7, "profile and comb identities, q <= 60", 120.0, criterion7},
      {8, "superposition matches profiles, q <= 40", 120.0, criterion8},
      {9, "multiplicative splitting, odd composite q <= 105", 120.0,
       criterion9},
      {10, "exact zero test vs floating magnitude, q <= 60", 120.0,
       criterion10},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Detail detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = c.run(detail);
    const double dt =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (dt > c.budget_seconds) {
      detail.add("over time budget: " + std::to_string(dt) + "s > " +
                 std::to_string(c.budget_seconds) + "s");
      ok = false;
    }
    std::printf("[%s] criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL",
                c.id, c.name, dt);
    for (const auto& line : detail.lines)
      std::printf("       %s\n", line.c_str());
    if (!ok) ++failures;
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}

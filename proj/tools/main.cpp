// Command-line surface for the exact rational-time step-profile machinery:
// piecewise-constant profiles, jump data, delta-comb coefficients,
// congruence-rule predictions, the exact vanishing oracle, verification
// sweeps, and Fourier render data. Emits CSV or JSON for external plotting.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <numbers>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "airy/kummer.hpp"
#include "airy/numtheory.hpp"
#include "airy/oracle.hpp"
#include "airy/predictor.hpp"
#include "airy/profile.hpp"

namespace {

using airy::format_sig12;
using airy::RationalTime;
using json = nlohmann::ordered_json;

struct CliConfig {
  double tolerance = 1e-9;
  std::string format = "csv";
  std::string out_path;
};

// Exit codes: 0 success/agreement, 1 mismatch or violated identity,
// 2 usage/domain error, 3 unsupported prediction without --fallback-oracle.
constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

int emit(const CliConfig& cfg, const std::string& text) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(cfg.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file " << cfg.out_path << "\n";
    return kUsage;
  }
  out << text;
  return kOk;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

int run_profile(std::int64_t p_in, std::int64_t q_in, const CliConfig& cfg) {
  const RationalTime t = RationalTime::reduced(p_in, q_in);
  const airy::StepProfile profile = airy::compute_profile(t);

  // cheap self-checks on the emitted data
  double sum = 0.0;
  for (double v : profile.values) sum += v;
  bool ok = std::abs(sum - static_cast<double>(t.q)) <=
            cfg.tolerance * static_cast<double>(t.q);
  if (t.q % 2 == 1) {
    for (std::int64_t j = 0; j < t.q && ok; ++j)
      ok = std::abs(profile.values[j] + profile.values[j + t.q] - 1.0) <=
           cfg.tolerance;
  }
  if (!ok)
    std::cerr << "warning: profile identities violated beyond tolerance\n";

  std::ostringstream os;
  if (cfg.format == "json") {
    json j;
    j["p"] = t.p;
    j["q"] = t.q;
    j["values"] = profile.values;
    os << dump(j);
  } else {
    if (p_in != t.p || q_in != t.q)
      os << "# reduced " << p_in << "/" << q_in << " -> " << t.p << "/" << t.q
         << "\n";
    airy::write_profile_csv(os, profile);
  }
  const int rc = emit(cfg, os.str());
  return rc != kOk ? rc : (ok ? kOk : kMismatch);
}

int run_comb(std::int64_t p_in, std::int64_t q_in, const CliConfig& cfg) {
  const RationalTime t = RationalTime::reduced(p_in, q_in);
  const airy::DiracComb comb = airy::compute_comb(t);

  double sum = 0.0;
  for (double b : comb.betas) sum += b;
  const bool ok = std::abs(sum - 1.0) <= cfg.tolerance;
  if (!ok) std::cerr << "warning: comb coefficients do not sum to 1\n";

  std::ostringstream os;
  if (cfg.format == "json") {
    json j;
    j["p"] = t.p;
    j["q"] = t.q;
    j["betas"] = comb.betas;
    os << dump(j);
  } else {
    airy::write_comb_csv(os, comb);
  }
  const int rc = emit(cfg, os.str());
  return rc != kOk ? rc : (ok ? kOk : kMismatch);
}

int run_jumps(std::int64_t p_in, std::int64_t q_in, const CliConfig& cfg) {
  const RationalTime t = RationalTime::reduced(p_in, q_in);
  const airy::ExtremalJumps ext = airy::extremal_jumps(t);

  std::ostringstream os;
  if (cfg.format == "json") {
    json j;
    j["p"] = t.p;
    j["q"] = t.q;
    auto rows = json::array();
    for (std::int64_t k = 0; k < 2 * t.q; ++k) {
      const airy::Jump jump = airy::compute_jump(t, k);
      rows.push_back({{"j", k},
                      {"value", jump.value},
                      {"exact_zero", jump.magnitude.is_zero()}});
    }
    j["jumps"] = std::move(rows);
    j["extremal"] = {{"j_max", ext.j_max},
                     {"value_max", ext.value_max},
                     {"j_min", ext.j_min},
                     {"value_min", ext.value_min}};
    os << dump(j);
  } else {
    os << "j,value,exact_zero\n";
    for (std::int64_t k = 0; k < 2 * t.q; ++k) {
      const airy::Jump jump = airy::compute_jump(t, k);
      os << k << ',' << format_sig12(jump.value) << ','
         << (jump.magnitude.is_zero() ? "true" : "false") << '\n';
    }
    os << "# extremal j_max=" << ext.j_max
       << " value_max=" << format_sig12(ext.value_max) << " j_min=" << ext.j_min
       << " value_min=" << format_sig12(ext.value_min) << "\n";
  }
  return emit(cfg, os.str());
}

int run_predict(std::int64_t p_in, std::int64_t q_in, bool fallback,
                const CliConfig& cfg) {
  const RationalTime t = RationalTime::reduced(p_in, q_in);
  const airy::Prediction prediction = airy::predict(t);
  json j = airy::to_json(prediction);
  const bool unsupported =
      prediction.status == airy::PredictStatus::unsupported;
  if (unsupported && fallback)
    j["oracle_members"] = airy::oracle_pcset(t).members;
  const int rc = emit(cfg, dump(j));
  if (rc != kOk) return rc;
  return unsupported && !fallback ? kUnsupported : kOk;
}

int run_oracle(std::int64_t p_in, std::int64_t q_in, const CliConfig& cfg) {
  const RationalTime t = RationalTime::reduced(p_in, q_in);
  return emit(cfg, dump(airy::to_json(airy::oracle_pcset(t), t.p)));
}

int run_verify_single(std::int64_t p_in, std::int64_t q_in, bool fallback,
                      const CliConfig& cfg) {
  const RationalTime t = RationalTime::reduced(p_in, q_in);
  const airy::VerifyReport report = airy::verify(t);
  const int rc = emit(cfg, dump(airy::to_json(report)));
  if (rc != kOk) return rc;
  switch (report.agreement) {
    case airy::Agreement::agree:
      return kOk;
    case airy::Agreement::mismatch:
      return kMismatch;
    case airy::Agreement::not_applicable:
      return fallback ? kOk : kUnsupported;
  }
  return kOk;
}

int run_verify_range(std::int64_t q_max, const CliConfig& cfg) {
  const auto reports = airy::verify_range(q_max, airy::PPolicy::all_reduced);
  std::int64_t agree = 0, mismatch = 0, unsupported = 0;
  auto mismatches = json::array();
  auto unsupported_cases = json::array();
  auto rows = json::array();
  for (const auto& r : reports) {
    rows.push_back(airy::to_json(r));
    switch (r.agreement) {
      case airy::Agreement::agree:
        ++agree;
        break;
      case airy::Agreement::mismatch:
        ++mismatch;
        mismatches.push_back({{"p", r.time.p}, {"q", r.time.q}});
        break;
      case airy::Agreement::not_applicable:
        ++unsupported;
        unsupported_cases.push_back({{"p", r.time.p},
                                     {"q", r.time.q},
                                     {"reason",
                                      r.predicted.unsupported_reason}});
        break;
    }
  }
  json j;
  j["q_max"] = q_max;
  j["policy"] = "all-reduced";
  j["summary"] = {{"total", static_cast<std::int64_t>(reports.size())},
                  {"agree", agree},
                  {"mismatch", mismatch},
                  {"unsupported", unsupported},
                  {"mismatches", std::move(mismatches)},
                  {"unsupported_cases", std::move(unsupported_cases)}};
  j["reports"] = std::move(rows);
  const int rc = emit(cfg, dump(j));
  if (rc != kOk) return rc;
  return mismatch > 0 ? kMismatch : kOk;
}

int run_render(bool have_pq, std::int64_t p_in, std::int64_t q_in,
               double t_over_pi, std::int64_t terms, std::int64_t samples,
               const CliConfig& cfg) {
  std::ostringstream os;
  constexpr double pi = std::numbers::pi;
  const RationalTime t =
      have_pq ? RationalTime::reduced(p_in, q_in) : RationalTime{};
  auto eval = [&](double x_units) -> double {
    const double x = x_units * pi;
    if (have_pq) return airy::fourier_eval(t, x, terms);
    return airy::fourier_eval(t_over_pi * pi, x, terms);
  };

  std::vector<double> xs, us;
  xs.reserve(samples);
  us.reserve(samples);
  for (std::int64_t i = 0; i < samples; ++i) {
    const double x_units =
        2.0 * static_cast<double>(i) / static_cast<double>(samples - 1);
    xs.push_back(x_units);
    us.push_back(eval(x_units));
  }
  if (cfg.format == "json") {
    json j;
    j["terms"] = terms;
    j["x"] = xs;
    j["u"] = us;
    os << dump(j);
  } else {
    os << "x,u\n";
    for (std::int64_t i = 0; i < samples; ++i)
      os << format_sig12(xs[i]) << ',' << format_sig12(us[i]) << '\n';
  }
  return emit(cfg, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rational-time profiles of the periodic Airy equation"};
  app.require_subcommand(1);
  app.fallthrough();

  CliConfig cfg;
  app.add_option("--tol", cfg.tolerance, "floating tolerance for identities")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--out", cfg.out_path, "write output to a file");

  std::int64_t p = 0, q = 0;
  int rc = kOk;

  auto* profile = app.add_subcommand("profile", "piecewise-constant profile");
  profile->add_option("p", p, "numerator of t/pi")->required();
  profile->add_option("q", q, "denominator of t/pi")->required();
  profile->callback([&] { rc = run_profile(p, q, cfg); });

  auto* jumps = app.add_subcommand("jumps", "jump at every node, with exact "
                                            "zero flags and extrema");
  jumps->add_option("p", p)->required();
  jumps->add_option("q", q)->required();
  jumps->callback([&] { rc = run_jumps(p, q, cfg); });

  auto* comb = app.add_subcommand("comb", "delta-comb coefficients of the "
                                          "fundamental solution");
  comb->add_option("p", p)->required();
  comb->add_option("q", q)->required();
  comb->callback([&] { rc = run_comb(p, q, cfg); });

  bool fallback = false;
  auto* predict = app.add_subcommand("predict", "congruence-rule prediction "
                                                "of the constancy set");
  predict->add_option("p", p)->required();
  predict->add_option("q", q)->required();
  predict->add_flag("--fallback-oracle", fallback,
                    "attach the oracle set when rules do not apply");
  predict->callback([&] { rc = run_predict(p, q, fallback, cfg); });

  auto* oracle = app.add_subcommand("oracle", "exact constancy set from "
                                              "Kummer-sum vanishing");
  oracle->add_option("p", p)->required();
  oracle->add_option("q", q)->required();
  oracle->callback([&] { rc = run_oracle(p, q, cfg); });

  std::int64_t range = 0;
  auto* verify = app.add_subcommand("verify", "compare prediction against "
                                              "the oracle");
  verify->add_option("p", p);
  verify->add_option("q", q);
  verify->add_option("--range", range, "sweep all q in [2, N]")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--fallback-oracle", fallback,
                   "exit 0 on unsupported cases");
  verify->callback([&] {
    if (range > 0) {
      rc = run_verify_range(range, cfg);
    } else if (verify->count("p") == 1 && verify->count("q") == 1) {
      rc = run_verify_single(p, q, fallback, cfg);
    } else {
      throw CLI::ValidationError("verify",
                                 "expected either `verify p q` or "
                                 "`verify --range N`");
    }
  });

  double t_over_pi = 0.0;
  std::int64_t terms = 20000, samples = 1200;
  auto* render = app.add_subcommand("render", "truncated Fourier evaluation "
                                              "on [0, 2*pi]");
  render->add_option("p", p);
  render->add_option("q", q);
  auto* irr = render->add_option("--irrational", t_over_pi,
                                 "evaluate at t = X*pi instead of p/q");
  render->add_option("--terms", terms, "partial-sum length")
      ->check(CLI::PositiveNumber);
  render->add_option("--samples", samples, "sample count on [0, 2*pi]")
      ->check(CLI::Range(std::int64_t{2},
                         std::numeric_limits<std::int64_t>::max()));
  render->callback([&] {
    const bool have_pq = render->count("p") == 1 && render->count("q") == 1;
    const bool have_irr = irr->count() > 0;
    if (have_pq == have_irr)
      throw CLI::ValidationError(
          "render", "expected either `render p q` or `render --irrational X`");
    rc = run_render(have_pq, p, q, t_over_pi, terms, samples, cfg);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return rc;
}

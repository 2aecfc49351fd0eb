#include "airy/predictor.hpp"

#include <algorithm>
#include <stdexcept>

namespace airy {

CongruenceClause CongruenceClause::in(std::int64_t modulus,
                                      std::vector<std::int64_t> residues) {
  if (modulus < 2)
    throw std::domain_error("CongruenceClause: modulus must be >= 2");
  for (auto& r : residues) r = mod_norm(r, modulus);
  std::sort(residues.begin(), residues.end());
  residues.erase(std::unique(residues.begin(), residues.end()),
                 residues.end());
  if (residues.empty() ||
      residues.size() >= static_cast<std::size_t>(modulus))
    throw std::domain_error("CongruenceClause: residues must be a proper "
                            "nonempty subset");
  return CongruenceClause{modulus, std::move(residues)};
}

CongruenceClause CongruenceClause::excluding(std::int64_t modulus,
                                             std::int64_t residue) {
  const std::int64_t r = mod_norm(residue, modulus);
  std::vector<std::int64_t> keep;
  for (std::int64_t k = 0; k < modulus; ++k)
    if (k != r) keep.push_back(k);
  return in(modulus, std::move(keep));
}

bool CongruenceClause::matches(std::int64_t j) const {
  return std::binary_search(residues.begin(), residues.end(),
                            mod_norm(j, modulus));
}

bool PCSet::contains(std::int64_t j) const {
  return std::binary_search(members.begin(), members.end(), j);
}

PCSet clause_eval(const std::vector<CongruenceClause>& clauses,
                  std::int64_t q) {
  PCSet out{q, {}};
  for (std::int64_t j = 0; j < 2 * q; ++j) {
    for (const auto& clause : clauses) {
      if (clause.matches(j)) {
        out.members.push_back(j);
        break;
      }
    }
  }
  return out;
}

namespace {

// Clause set for one prime power, or unsupported (returns false).
bool component_clauses(std::int64_t p, std::int64_t q, const PrimePower& pp,
                       ComponentClauses& out, std::string& reason) {
  const std::int64_t l = pp.prime;
  const int n = pp.exponent;
  out = ComponentClauses{pp, {}};

  if (l == 2) {
    if (n == 1) {
      out.clauses.push_back(CongruenceClause::in(2, {0}));
      return true;
    }
    if (n == 2 && q == 4) {
      out.clauses.push_back(CongruenceClause::in(2, {0}));
      out.clauses.push_back(CongruenceClause::in(4, {mod_mul(3, p, 4)}));
      return true;
    }
    if (n == 3 && q == 8) {
      out.clauses.push_back(CongruenceClause::in(2, {0}));
      out.clauses.push_back(CongruenceClause::in(4, {mod_norm(2 - p, 4)}));
      return true;
    }
    if ((n == 4 || n == 5) && (q == 16 || q == 32)) {
      if (p != 1) {
        reason = pp.str() + " with p != 1";
        return false;
      }
      out.clauses.push_back(CongruenceClause::in(2, {0}));
      out.clauses.push_back(CongruenceClause::excluding(8, 7));
      return true;
    }
    reason = pp.str();
    return false;
  }

  if (n == 1) {
    if (l == 3) {
      const std::int64_t qh = complement(q, 3);
      out.clauses.push_back(
          CongruenceClause::excluding(3, mod_mul(p, mod_mul(qh, qh, 3), 3)));
      return true;
    }
    if ((l - 1) % 3 == 0) return true;  // no constraint from this prime
    out.clauses.push_back(CongruenceClause::in(l, {0}));
    return true;
  }

  if (n == 2) {
    if (l == 3) {
      out.clauses.push_back(CongruenceClause::excluding(3, 0));
      return true;
    }
    // The squared complement is Legendre-invisible, so only 3p matters.
    const int target = -legendre(mod_mul(3, p, l), l);
    std::vector<std::int64_t> residues;
    for (std::int64_t r = 1; r < l; ++r)
      if (legendre(r, l) == target) residues.push_back(r);
    out.clauses.push_back(CongruenceClause::in(l, std::move(residues)));
    return true;
  }

  if (l == 3 && n == 3 && q == 27) {
    out.clauses.push_back(CongruenceClause::in(3, {1, 2}));
    out.clauses.push_back(CongruenceClause::in(9, {mod_mul(6, p, 9)}));
    return true;
  }

  reason = pp.str();
  return false;
}

}  // namespace

Prediction predict(const RationalTime& t) {
  Prediction out;
  out.p = t.p;
  out.q = t.q;

  if (t.p == 0) {
    // t = 0: the step only jumps at j = 0 and j = q.
    out.set.q = t.q;
    for (std::int64_t j = 0; j < 2 * t.q; ++j)
      if (j != 0 && j != t.q) out.set.members.push_back(j);
    return out;
  }
  if (t.q < 2) throw std::domain_error("predict: q must be >= 2");

  std::vector<std::string> blocked;
  for (const auto& pp : factorize(t.q).entries) {
    ComponentClauses comp;
    std::string reason;
    if (component_clauses(t.p, t.q, pp, comp, reason)) {
      out.components.push_back(std::move(comp));
    } else {
      blocked.push_back(reason);
    }
  }

  if (!blocked.empty()) {
    out.status = PredictStatus::unsupported;
    std::string joined;
    for (const auto& r : blocked) {
      if (!joined.empty()) joined += ", ";
      joined += r;
    }
    out.unsupported_reason = joined;
    return out;
  }

  std::vector<CongruenceClause> all;
  for (const auto& comp : out.components)
    all.insert(all.end(), comp.clauses.begin(), comp.clauses.end());
  out.set = clause_eval(all, t.q);
  return out;
}

nlohmann::ordered_json to_json(const Prediction& prediction) {
  nlohmann::ordered_json j;
  j["p"] = prediction.p;
  j["q"] = prediction.q;
  j["status"] = prediction.status == PredictStatus::supported ? "supported"
                                                              : "unsupported";
  if (prediction.status == PredictStatus::unsupported)
    j["reason"] = prediction.unsupported_reason;
  auto components = nlohmann::ordered_json::array();
  for (const auto& comp : prediction.components) {
    nlohmann::ordered_json cj;
    cj["prime_power"] = comp.prime_power.str();
    auto clauses = nlohmann::ordered_json::array();
    for (const auto& clause : comp.clauses) {
      clauses.push_back(
          {{"mod", clause.modulus}, {"residues", clause.residues}});
    }
    cj["clauses"] = std::move(clauses);
    components.push_back(std::move(cj));
  }
  j["components"] = std::move(components);
  if (prediction.status == PredictStatus::supported)
    j["members"] = prediction.set.members;
  return j;
}

nlohmann::ordered_json to_json(const PCSet& set, std::int64_t p) {
  nlohmann::ordered_json j;
  j["p"] = p;
  j["q"] = set.q;
  j["members"] = set.members;
  return j;
}

}  // namespace airy

#include "dgp/report.hpp"

#include <limits>
#include <sstream>

namespace dgp {

nlohmann::json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
    return static_cast<long long>(x);
  return to_string(x);
}

nlohmann::json to_json(const CongruenceReport& r, bool timing) {
  nlohmann::json counts = nlohmann::json::object(), residues = nlohmann::json::object();
  for (const auto& [k, v] : r.counts) counts[k] = big_json(v);
  for (const auto& [k, v] : r.residues) residues[k] = big_json(v);
  nlohmann::json j = {{"statement", r.statement}, {"graph", r.graph},   {"q", r.q},
                      {"counts", counts},         {"modulus", big_json(r.modulus)},
                      {"residues", residues},     {"pass", r.pass},     {"skipped", r.skipped}};
  if (!r.detail.empty()) j["detail"] = r.detail;
  if (timing) j["millis"] = r.millis;
  return j;
}

std::string csv_header() { return "statement,graph,q,modulus,pass,skipped,residues,millis"; }

std::string to_csv(const CongruenceReport& r, bool timing) {
  std::ostringstream out;
  out << r.statement << ',' << r.graph << ',' << r.q << ',' << to_string(r.modulus) << ',' << (r.pass ? 1 : 0) << ','
      << (r.skipped ? 1 : 0) << ',';
  for (std::size_t i = 0; i < r.residues.size(); ++i) out << (i ? ";" : "") << to_string(r.residues[i].second);
  out << ',';
  if (timing) out << r.millis;
  return out.str();
}

}  // namespace dgp

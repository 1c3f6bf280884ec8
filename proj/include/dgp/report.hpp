#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dgp/bigint.hpp"
#include "dgp/congruence.hpp"

namespace dgp {

/// Integer if it fits in 64 bits, decimal string otherwise.
nlohmann::json big_json(const BigInt& x);

/// {statement, graph, q, counts, modulus, residues, pass, skipped, detail,
/// millis}; millis is left out unless `timing`.
nlohmann::json to_json(const CongruenceReport& r, bool timing = true);

std::string csv_header();
/// statement,graph,q,modulus,pass,skipped,residues,millis with residues
/// joined by ';'.
std::string to_csv(const CongruenceReport& r, bool timing = true);

}  // namespace dgp

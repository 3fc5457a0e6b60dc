#pragma once

#include <string>

#include "json.hpp"
#include "syz/certify.hpp"
#include "syz/koszul/koszul.hpp"

namespace syz {

using nlohmann::json;

// Stable JSON documents. Rationals render as "num/den" strings, integer
// levels as JSON numbers, "infinite" and null as documented per field.
json certificate_to_json(const EmbeddingSpec& spec, const Certificate& cert);
json witness_to_json(const WitnessReport& w);
json veronese_query_to_json(int n, int d, std::optional<Int> p);

std::string certificate_to_markdown(const EmbeddingSpec& spec, const Certificate& cert);
std::string witness_to_markdown(const WitnessReport& w);
std::string veronese_query_to_markdown(int n, int d, std::optional<Int> p);

json strip_to_json(const koszul::BettiStrip& strip);
// Rows i, columns j, entries k_{i,j}, holes rendered "?".
std::string strip_to_tsv(const koszul::BettiStrip& strip);
std::string strip_to_markdown(const koszul::BettiStrip& strip);

std::string np_status_str(NpStatus s);

}  // namespace syz

#pragma once

// Stable JSON shapes. Object keys are emitted in sorted order and big
// integer dimensions as decimal strings, so dump -> parse -> dump is the identity.

#include "lmhs/koszul.hpp"
#include "lmhs/limit_mhs.hpp"
#include "lmhs/pencil.hpp"
#include "lmhs/sweep.hpp"
#include "lmhs/weight_ss.hpp"

#include <json.hpp>

namespace lmhs {

using Json = nlohmann::json;

Json to_json(const Summand& s, std::int64_t mult);
Json to_json(const FormalSum& s);
Json to_json(const GradedObject& g);
Json to_json(const E1Page& page);
Json to_json(const JordanProfile& j);
Json to_json(const SweepResult& r);

/// Counts that normally fit a JSON integer; falls back to a decimal string otherwise.
Json count_to_json(const BigInt& v);

Json limit_to_json(const DegenerationInput& input, bool full);
Json pencil_to_json(const PencilInput& input);

/// {"n":int,"r":int,"YI":{"<size>":{"<j>":int}},"YpI":{...}}; values may also be decimal strings.
CohomologyTable table_from_json(const Json& doc);
Json table_to_json(const CohomologyTable& table);

}  // namespace lmhs

#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "aowf/constructions.hpp"
#include "aowf/protocols.hpp"
#include "aowf/verification.hpp"
#include "aowf/witness.hpp"

namespace aowf {

using nlohmann::json;

// Serialization conventions (documented in the README):
//   - bit strings as "0"/"1" text, the empty string for epsilon;
//   - bottom as null;
//   - unbounded naturals as decimal strings;
//   - object keys sorted (nlohmann default), two-space indent, trailing
//     newline. Identical inputs produce byte-identical files.

json bits_to_json(const Bits& b);
Bits bits_from_json(const json& j);
json ev_to_json(const ExtendedValue& v);
json nat_to_json(const Nat& n);

json instance_to_json(const SubsetSumInstance& inst);
SubsetSumInstance instance_from_json(const json& j);

json report_to_json(const PropertyReport& r);
json census_to_json(const AmbiguityProfile& p);
json chain_to_json(const CounterexampleChain& c);
json transcript_to_json(const Transcript& t, const json* attacks = nullptr);
json growth_to_json(const PreimageGrowthResult& h);

std::string canonical_dump(const json& j);
void write_json_file(const std::filesystem::path& path, const json& j);
json read_json_file(const std::filesystem::path& path);

}  // namespace aowf

#pragma once

#include <json.hpp>

#include "fpa/channel.hpp"
#include "fpa/codec.hpp"
#include "fpa/combinatorics.hpp"
#include "fpa/pir.hpp"

// JSON views of the report/transcript structs. Conventions:
//  - arbitrary-precision integers are decimal strings (JSON numbers cannot
//    carry them);
//  - positions, server ids and target bit indices are 1-based on the wire,
//    matching the CLI, while the library API stays 0-based.
namespace fpa {

nlohmann::json to_json(const BoundsReport& r);
nlohmann::json to_json(const ExperimentReport& r);
nlohmann::json to_json(const RetrievalTranscript& t);
nlohmann::json to_json(const LocalDecodeResult& r);
nlohmann::json to_json(const PrivacyEstimate& e);

}  // namespace fpa

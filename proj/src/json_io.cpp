#include "fpa/json_io.hpp"

namespace fpa {

using nlohmann::json;

json to_json(const BoundsReport& r) {
  json j;
  j["lambda"] = r.lambda;
  j["m"] = r.m;
  j["n"] = r.n;
  j["d"] = r.d;
  j["space"] = r.space.str();
  j["exact"] = r.exact;
  if (r.exact) {
    j["ball_dminus1"] = r.ball_dminus1.str();
    j["ball_half"] = r.ball_half.str();
    j["gilbert_lower_num"] = numerator(r.gilbert).str();
    j["gilbert_lower_den"] = denominator(r.gilbert).str();
    j["packing_upper_num"] = numerator(r.packing).str();
    j["packing_upper_den"] = denominator(r.packing).str();
  }
  j["asym_lower_log"] = r.asym_lower_log;
  j["asym_upper_log"] = r.asym_upper_log;
  return j;
}

json to_json(const ExperimentReport& r) {
  json j;
  j["trials"] = r.trials;
  j["delta"] = r.delta;
  j["d"] = r.d;
  j["uds_rate"] = r.uds_rate;
  j["lfi_error_rate"] = r.lfi_error_rate;
  j["lfi_bound"] = r.lfi_bound;
  j["mean_reads"] = r.mean_reads;
  j["seed"] = r.seed;
  return j;
}

json to_json(const RetrievalTranscript& t) {
  json j;
  j["target"] = t.target + 1;
  json queries = json::array();
  for (const PirQuery& q : t.queries)
    queries.push_back(json{{"server", q.server + 1}, {"position", q.position + 1}});
  j["queries"] = std::move(queries);
  j["bit"] = t.bit;
  return j;
}

json to_json(const LocalDecodeResult& r) {
  json j;
  j["bit"] = r.bit;
  j["iterations"] = r.iterations;
  j["symbols_read"] = r.symbols_read;
  json reads = json::array();
  for (int pos : r.read_positions) reads.push_back(pos + 1);
  j["read_positions"] = std::move(reads);
  return j;
}

json to_json(const PrivacyEstimate& e) {
  json j;
  j["p_estimate"] = e.p_estimate;
  j["mode"] = privacy_mode_name(e.mode);
  j["trials"] = e.trials;
  j["seed"] = e.seed;
  return j;
}

}  // namespace fpa

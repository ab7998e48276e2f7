#pragma once

// JSON and DOT interchange. All I/O is 1-based (vertices, mutation
// histories); everything in-memory stays 0-based. JSON objects use sorted
// keys, so identical data serializes to identical bytes.

#include <json.hpp>
#include <string>

#include "ctk/exchange.hpp"
#include "ctk/verify.hpp"

namespace ctk {

nlohmann::json vecs_to_json(const std::vector<Vec>& vs);
std::vector<Vec> vecs_from_json(const nlohmann::json& j);

nlohmann::json quiver_to_json(const Quiver& q);
Quiver quiver_from_json(const nlohmann::json& j);

nlohmann::json seed_to_json(const Seed& s);
Seed seed_from_json(const nlohmann::json& j);

nlohmann::json seed_report_to_json(const VerificationReport& r);
nlohmann::json realization_to_json(const RingelRealization& r);

// with_timings controls whether wall-clock fields appear; without them the
// document is byte-stable across runs.
nlohmann::json report_to_json(const AggregateReport& r, bool with_timings);

// Emit-only format; parsing exists to keep emissions honest (round-trip).
std::string quiver_to_dot(const Quiver& q);
Quiver quiver_from_dot(const std::string& text);

DynkinType make_type(const std::string& letter, int rank);

}  // namespace ctk

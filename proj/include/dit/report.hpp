#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dit/graph.hpp"
#include "dit/invariants.hpp"
#include "dit/search.hpp"
#include "dit/transforms.hpp"

namespace dit {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kToolVersion = "0.1.0";

/// Rationals are always written "p/q", integers included ("3/1").
Json rational_json(const Rat& r);
/// Inverse of rational_json; throws InputError on anything else.
Rat rational_from_json(const Json& j);

Json graph_json(const Graph& g);
Json profile_json(const InvariantProfile& p);
Json trace_json(const TransformTrace& t);
Json driver_json(const DriverRun& run);
Json extremal_json(const ExtremalResult& r, std::string_view graph_class, std::string_view objective,
                   Direction direction);
Json conjecture_json(const ConjectureReport& report);

/// Header row plus one row per n.
std::string conjecture_csv(const ConjectureReport& report);

/// Top-level document: tool, toolVersion, command echo, optional timing, then `body`.
Json report_document(std::vector<std::string> command, std::string_view kind, Json body,
                     std::optional<double> seconds = std::nullopt);

/// Pretty-printed with a trailing newline.
std::string dump(const Json& j);

}  // namespace dit

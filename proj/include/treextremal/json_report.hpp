#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "treextremal/extremal.hpp"
#include "treextremal/subtree_count.hpp"
#include "treextremal/verify.hpp"

namespace treextremal {

using Json = nlohmann::ordered_json;

/// Bumped on any breaking change to a payload below.
inline constexpr std::string_view kSchemaVersion = "1.0";

/// {"schema_version", "command", "inputs", "results"}.
Json output_document(std::string_view command, Json inputs, Json results);

Json to_json(const Tree& t);
Json to_json(const ExtremalReport& r);
Json to_json(const VerificationReport& r);

/// phi, per-vertex counts, diameter, caterpillar flag and Wiener index.
Json tree_summary(const Tree& t);

}  // namespace treextremal

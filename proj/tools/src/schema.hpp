#pragma once

#include <string>
#include <vector>

#include <json.hpp>
#include <yaml-cpp/yaml.h>

namespace vacpol::cli
{
/*!
 * Validate a YAML/JSON document tree against the subset of JSON Schema used
 * by the shipped config schema: type, properties, additionalProperties,
 * required, enum, const, not, minimum/maximum (plus exclusive forms),
 * minItems, minLength and items.
 *
 * Returns one message per violation, prefixed with "line:col: /json/pointer".
 */
std::vector<std::string> validate_document(YAML::Node const& doc,
                                           nlohmann::json const& schema);

//! The schema compiled into the tool.
nlohmann::json const& config_schema();
}  // namespace vacpol::cli

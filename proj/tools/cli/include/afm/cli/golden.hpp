#pragma once

// Reference values printed alongside computed table entries. Values are kept
// as the printed strings so the print precision survives.

#include <json.hpp>

#include <string_view>

namespace afm::cli {

// Parsed golden data set; DomainError if the embedded text is malformed.
const nlohmann::json& golden();

int golden_version();

// Numeric value of a printed entry.
double printed_value(const nlohmann::json& entry);

// One unit in the last printed digit: "0.0097" -> 1e-4, "62.1" -> 0.1, "2" -> 1.
double last_digit_unit(std::string_view printed);

} // namespace afm::cli

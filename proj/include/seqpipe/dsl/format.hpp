#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "seqpipe/dsl/eval.hpp"

namespace seqpipe::dsl {

enum class Format { Table, Csv, Json };

std::optional<Format> parse_format(std::string_view name);

/// table: entries joined by ", ", columns right-aligned for 2-D values.
/// csv: one row per line, entries quoted only when they contain a comma,
/// quote or space. json: see to_json. Output ends with a newline.
std::string format(const Value& v, Format f);

/// {"kind": ..., "order"/"rows"/"size": n, "entries": ...}. A FieldElem with
/// denominator 1 is its list of ascending r-coefficients as decimal strings
/// (zero is ["0"]); any other one is {"num": [...], "den": [...]}.
nlohmann::ordered_json to_json(const Value& v);
/// Inverse of to_json; throws std::invalid_argument on malformed input.
Value from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json field_to_json(const FieldElem& e);
FieldElem field_from_json(const nlohmann::ordered_json& j);

}  // namespace seqpipe::dsl

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace superx {

  enum class Status { pass, fail, info };

  std::string_view to_string(Status s) noexcept;
  // Throws ParseError.
  Status parse_status(std::string_view text);

  // The outcome of one CLI command. Tabular results live in payload["rows"]
  // as an array of flat objects sharing the same keys; every other payload
  // member is a scalar or nested summary.
  struct Report {
    std::string                command;
    std::optional<std::string> group;
    Status                     status = Status::info;
    nlohmann::ordered_json     payload = nlohmann::ordered_json::object();
    std::int64_t               elapsed_ms = 0;

    friend bool operator==(Report const&, Report const&) = default;
  };

  // {command, group, status, payload, elapsed_ms}; group is null when absent.
  nlohmann::ordered_json to_json(Report const& r);
  // Throws ParseError on schema violations.
  Report report_from_json(nlohmann::ordered_json const& j);

  enum class Format { text, json, csv };

  // Throws ParseError.
  Format parse_format(std::string_view text);

  std::string render(Report const& r, Format f);

}  // namespace superx

#pragma once

#include <optional>
#include <string>

#include "clutter_algebra/certificate.hpp"
#include "clutter_algebra/rounding.hpp"

namespace clutter_algebra {

// What a CLI command prints: a title, the statement that backs the result,
// an optional verdict, and the same content as JSON.
struct Report {
  std::string title;
  std::string statement;
  std::optional<bool> holds;  // absent for plain computations
  Json json = Json::object();
  std::string text;  // body lines after the header
};

Report verdict_report(const std::string& title, const std::string& statement, const Verdict& v);
Report property_report(const std::string& title, const std::string& statement, const PropertyReport& r);

std::string render_text(const Report& r);
std::string render_json(const Report& r);

// 0 when the property holds or nothing was asserted, 1 when it fails.
int exit_code(const Report& r);

}  // namespace clutter_algebra

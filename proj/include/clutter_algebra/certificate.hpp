#pragma once

#include <optional>
#include <string>

#include <json.hpp>

namespace clutter_algebra {

using Json = nlohmann::ordered_json;

// Tagged witness attached to a verdict.  `text` is in an input format the
// CLI accepts back, so a failure can be replayed.
struct Certificate {
  std::string kind;
  Json data;
  std::string text;
};

struct Verdict {
  bool holds = false;
  std::optional<Certificate> certificate;
  std::string basis;  // the statement or engine that decided

  explicit operator bool() const { return holds; }
};

inline Json to_json(const Certificate& c) { return Json{{"kind", c.kind}, {"data", c.data}, {"text", c.text}}; }

inline Json to_json(const Verdict& v) {
  Json j{{"verdict", v.holds}, {"basis", v.basis}};
  j["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  return j;
}

}  // namespace clutter_algebra

#include "clutter_algebra/report.hpp"

#include <sstream>

namespace clutter_algebra {

namespace {

std::string certificate_text(const Certificate& c) {
  std::string out = "certificate (" + c.kind + "):\n" + c.text;
  if (!out.empty() && out.back() != '\n') out += '\n';
  return out;
}

}  // namespace

Report verdict_report(const std::string& title, const std::string& statement, const Verdict& v) {
  Report r;
  r.title = title;
  r.statement = statement;
  r.holds = v.holds;
  r.json = to_json(v);
  if (!v.basis.empty()) r.text += "decided by: " + v.basis + "\n";
  if (v.certificate) r.text += certificate_text(*v.certificate);
  return r;
}

Report property_report(const std::string& title, const std::string& statement, const PropertyReport& p) {
  Report r;
  r.title = title;
  r.statement = statement;
  r.json = p.to_json();
  bool all = true;
  for (const auto& [name, v] : p.verdicts) {
    all = all && v.holds;
    r.text += name + ": " + (v.holds ? "true" : "false");
    if (!v.basis.empty()) r.text += "  [" + v.basis + "]";
    r.text += "\n";
    if (v.certificate) r.text += "  " + certificate_text(*v.certificate);
  }
  for (const auto& s : p.skipped) r.text += "skipped: " + s + "\n";
  r.holds = all;
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << r.title;
  if (r.holds) out << ": " << (*r.holds ? "true" : "false");
  out << "\n";
  if (!r.statement.empty()) out << "statement: " << r.statement << "\n";
  out << r.text;
  return out.str();
}

std::string render_json(const Report& r) {
  Json j;
  j["title"] = r.title;
  j["statement"] = r.statement;
  j["holds"] = r.holds ? Json(*r.holds) : Json(nullptr);
  j["result"] = r.json;
  return j.dump(2) + "\n";
}

int exit_code(const Report& r) { return r.holds && !*r.holds ? 1 : 0; }

}  // namespace clutter_algebra

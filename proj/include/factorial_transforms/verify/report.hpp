#pragma once

// Report serialization: JSON array and plain-text table.

#include "factorial_transforms/verify/registry.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

namespace ft::verify {

inline nlohmann::json to_json(const CheckReport& r) {
  auto finite_or_null = [](double v) { return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr); };
  return nlohmann::json{{"name", r.name},
                        {"layer", to_string(r.layer)},
                        {"status", to_string(r.status)},
                        {"max_abs_error", finite_or_null(r.max_abs_error)},
                        {"tolerance", finite_or_null(r.tolerance)},
                        {"trials", r.trials},
                        {"seed", r.seed},
                        {"elapsed_ms", r.elapsed_ms},
                        {"informational", r.informational},
                        {"description", r.description},
                        {"note", r.note}};
}

inline nlohmann::json to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr;
}

inline std::string format_error(double v) {
  if (!std::isfinite(v)) return "inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

inline std::string text_table(const std::vector<CheckReport>& reports) {
  std::size_t width = 4;
  for (const auto& r : reports) width = std::max(width, r.name.size());
  std::ostringstream out;
  auto pad = [](std::string s, std::size_t w) {
    s.resize(std::max(s.size(), w), ' ');
    return s;
  };
  out << pad("name", width) << "  " << pad("layer", 7) << "  " << pad("status", 6) << "  " << pad("max_err", 10)
      << "  " << pad("tol", 10) << "  " << pad("trials", 6) << "  ms\n";
  for (const auto& r : reports) {
    std::string status = r.informational ? "info" : to_string(r.status);
    std::string tol = r.informational ? "-" : format_error(r.tolerance);
    out << pad(r.name, width) << "  " << pad(to_string(r.layer), 7) << "  " << pad(status, 6) << "  "
        << pad(format_error(r.max_abs_error), 10) << "  " << pad(tol, 10) << "  " << pad(std::to_string(r.trials), 6)
        << "  " << r.elapsed_ms << "\n";
    if (!r.note.empty() && (r.informational || r.status != Status::pass)) out << "    " << r.note << "\n";
  }
  Summary s = summarize(reports);
  out << reports.size() << " checks: " << s.passed << " passed (" << s.informational << " informational), "
      << s.failed << " failed, " << s.errors << " errors\n";
  return out.str();
}

}  // namespace ft::verify

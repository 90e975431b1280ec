#include "nilorb/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nilorb {

namespace {

std::string fmt_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Skipped:
      return "SKIPPED";
  }
  return "SKIPPED";
}

void CheckReport::finalize() {
  status = CheckStatus::Pass;
  for (const auto& [name, value] : residuals)
    if (!(value <= tolerance)) status = CheckStatus::Fail;
}

double CheckReport::max_residual() const {
  double m = 0.0;
  for (const auto& [name, value] : residuals)
    if (value > m) m = value;
  return m;
}

bool CheckReport::operator==(const CheckReport& o) const {
  return check_name == o.check_name && inputs == o.inputs && residuals == o.residuals &&
         tolerance == o.tolerance && status == o.status && anchor == o.anchor;
}

std::string to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check_name"] = r.check_name;
  j["inputs"] = r.inputs;
  nlohmann::ordered_json res = nlohmann::ordered_json::array();
  for (const auto& [name, value] : r.residuals)
    res.push_back({{"name", name}, {"value", value}});
  j["residuals"] = res;
  j["tolerance"] = r.tolerance;
  j["status"] = status_name(r.status);
  j["anchor"] = r.anchor;
  return j.dump();
}

CheckReport parse_report(const std::string& json_text) {
  auto j = nlohmann::json::parse(json_text);
  CheckReport r;
  r.check_name = j.at("check_name").get<std::string>();
  r.inputs = j.at("inputs").get<std::map<std::string, std::string>>();
  for (const auto& item : j.at("residuals"))
    r.residuals.emplace_back(item.at("name").get<std::string>(),
                             item.at("value").get<double>());
  r.tolerance = j.at("tolerance").get<double>();
  std::string st = j.at("status").get<std::string>();
  if (st == "PASS")
    r.status = CheckStatus::Pass;
  else if (st == "FAIL")
    r.status = CheckStatus::Fail;
  else if (st == "SKIPPED")
    r.status = CheckStatus::Skipped;
  else
    throw std::invalid_argument("unknown status " + st);
  r.anchor = j.at("anchor").get<std::string>();
  return r;
}

std::string to_text(const CheckReport& r) {
  std::ostringstream out;
  out << "[" << status_name(r.status) << "] " << r.check_name;
  if (!r.anchor.empty()) out << " (" << r.anchor << ")";
  out << "\n";
  if (!r.inputs.empty()) {
    out << "  inputs:";
    for (const auto& [k, v] : r.inputs) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "  tolerance: " << fmt_real(r.tolerance) << "\n";
  for (const auto& [name, value] : r.residuals)
    out << "  " << name << ": " << fmt_real(value) << "\n";
  return out.str();
}

}  // namespace nilorb

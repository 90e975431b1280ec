#ifndef NILORB_REPORT_HPP
#define NILORB_REPORT_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nilorb {

enum class CheckStatus { Pass, Fail, Skipped };

std::string status_name(CheckStatus s);

/// Structured result of one verification run: named residuals against a
/// single tolerance, plus the inputs that produced them.
struct CheckReport {
  std::string check_name;
  std::map<std::string, std::string> inputs;
  std::vector<std::pair<std::string, double>> residuals;
  double tolerance = 0.0;
  CheckStatus status = CheckStatus::Skipped;
  std::string anchor;  // identifier of the verified identity

  /// Sets status from the residuals: Pass iff all <= tolerance.
  void finalize();
  double max_residual() const;

  bool operator==(const CheckReport& o) const;
};

/// JSON with reals kept to >= 12 significant digits; round-trips exactly
/// through parse_report.
std::string to_json(const CheckReport& r);
CheckReport parse_report(const std::string& json_text);

/// Multi-line human-readable rendering.
std::string to_text(const CheckReport& r);

}  // namespace nilorb

#endif

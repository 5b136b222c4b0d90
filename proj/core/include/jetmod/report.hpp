#ifndef JETMOD_REPORT_HPP
#define JETMOD_REPORT_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace jetmod {

struct Violation {
  std::string sample;  // the offending sample point, e.g. "j=0 s=(1) m=(2)"
  std::string detail;
};

/// Outcome of an exact verification run. A check passes iff no violation was
/// recorded; `indeterminate` marks runs that could not decide (for instance
/// an eigenvalue computation that leaves the rationals).
struct Report {
  Report() = default;
  explicit Report(std::string report_name) : name(std::move(report_name)) {}

  std::string name;
  std::size_t checked = 0;
  std::vector<Violation> violations;
  bool indeterminate = false;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const { return violations.empty() && !indeterminate; }
  void fail(std::string sample, std::string detail = {});
  void note(std::string text) { notes.push_back(std::move(text)); }
  /// Appends the counts and violations of another report, prefixing samples
  /// with its name.
  void absorb(const Report& other);

  /// One-line human summary: "name: ok (checked 120)" or the violation count.
  [[nodiscard]] std::string summary() const;
};

}  // namespace jetmod

#endif  // JETMOD_REPORT_HPP

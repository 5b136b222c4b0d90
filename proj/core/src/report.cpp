#include "jetmod/report.hpp"

namespace jetmod {

void Report::fail(std::string sample, std::string detail) {
  violations.push_back({std::move(sample), std::move(detail)});
}

void Report::absorb(const Report& other) {
  checked += other.checked;
  indeterminate = indeterminate || other.indeterminate;
  for (const auto& v : other.violations) violations.push_back({other.name + ": " + v.sample, v.detail});
  for (const auto& n : other.notes) notes.push_back(other.name + ": " + n);
}

std::string Report::summary() const {
  std::string out = name + ": ";
  if (!violations.empty()) {
    out += std::to_string(violations.size()) + " violation(s)";
  } else if (indeterminate) {
    out += "indeterminate";
  } else {
    out += "ok";
  }
  return out + " (checked " + std::to_string(checked) + ")";
}

}  // namespace jetmod

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cellalg/errors.hpp"

namespace cellalg {

// One named check with an optional witness describing the first failure.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string witness;  // empty on pass
};

// Ordered list of check results. Validation routines return these instead of
// throwing, so callers can render every finding.
class Report {
 public:
  void add(std::string name, bool ok, std::string witness = {}) {
    items_.push_back({std::move(name), ok, std::move(witness)});
  }

  void merge(const Report& other) {
    items_.insert(items_.end(), other.items_.begin(), other.items_.end());
  }

  bool passed() const {
    for (const auto& it : items_)
      if (!it.passed) return false;
    return true;
  }

  std::size_t failure_count() const {
    std::size_t n = 0;
    for (const auto& it : items_)
      if (!it.passed) ++n;
    return n;
  }

  const std::vector<CheckResult>& items() const { return items_; }

  std::string summary() const {
    std::string out;
    for (const auto& it : items_) {
      out += it.passed ? "pass " : "FAIL ";
      out += it.name;
      if (!it.passed && !it.witness.empty()) {
        out += " [";
        out += it.witness;
        out += "]";
      }
      out += "\n";
    }
    return out;
  }

  // For hard invariants: turn any failure into an exception.
  void require(const std::string& context) const {
    if (!passed()) throw ValidationError(context + ":\n" + summary());
  }

 private:
  std::vector<CheckResult> items_;
};

}  // namespace cellalg

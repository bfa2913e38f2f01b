// Verification report shared by every check.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ntazrp {

struct Failure {
  std::vector<long> location;
  std::string label;
  std::string expected;
  std::string actual;
  std::string residual;
};

struct Report {
  std::string suite;
  std::map<std::string, std::string> parameters;
  std::vector<Failure> failures;
  std::uint64_t failure_count = 0;
  std::uint64_t checked = 0;
  double timing_ms = 0.0;

  static constexpr std::size_t kMaxStoredFailures = 50;

  bool passed() const { return failure_count == 0; }
  void add_failure(Failure f);
  /// Folds another report's counts and failures into this one.
  void merge(const Report& other);
  /// Sorts failures by location, then label.
  void finalize();
};

}  // namespace ntazrp

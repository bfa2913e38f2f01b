#include "ntazrp/report.hpp"

#include <algorithm>

namespace ntazrp {

void Report::add_failure(Failure f) {
  ++failure_count;
  if (failures.size() < kMaxStoredFailures) failures.push_back(std::move(f));
}

void Report::merge(const Report& other) {
  checked += other.checked;
  failure_count += other.failure_count;
  for (const auto& f : other.failures) {
    if (failures.size() >= kMaxStoredFailures) break;
    failures.push_back(f);
  }
}

void Report::finalize() {
  std::stable_sort(failures.begin(), failures.end(), [](const Failure& a, const Failure& b) {
    if (a.location != b.location) return a.location < b.location;
    return a.label < b.label;
  });
}

}  // namespace ntazrp

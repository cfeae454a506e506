#include "dualbin/packing.hpp"

#include <stdexcept>

namespace dualbin {

std::size_t Packing::packed_count() const {
  std::size_t count = 0;
  for (std::int64_t a : assignment)
    if (a != kRejected) ++count;
  return count;
}

VerifyReport verify_packing(const Instance& inst, const Packing& p) {
  VerifyReport report;
  if (p.assignment.size() != inst.size()) {
    report.structure_error = "assignment has " + std::to_string(p.assignment.size()) +
                             " entries for " + std::to_string(inst.size()) + " items";
    return report;
  }
  for (std::size_t i = 0; i < p.assignment.size(); ++i) {
    std::int64_t a = p.assignment[i];
    if (a == kRejected) continue;
    if (a < 0 || static_cast<std::uint64_t>(a) >= inst.bins) {
      report.structure_error = "item " + std::to_string(i) + " assigned to bin " +
                               std::to_string(a) + " outside [0, " +
                               std::to_string(inst.bins) + ")";
      return report;
    }
  }
  report.structure_ok = true;
  report.packed_count = p.packed_count();
  report.loads.assign(inst.bins, Weight{});
  for (std::size_t i = 0; i < p.assignment.size(); ++i) {
    std::int64_t a = p.assignment[i];
    if (a != kRejected) report.loads[a] = report.loads[a] + inst.weights[i];
  }
  report.feasible = true;
  for (std::uint64_t b = 0; b < inst.bins; ++b) {
    if (report.loads[b] > Weight::one()) {
      report.feasible = false;
      report.overfull_bins.push_back(b);
    }
  }
  return report;
}

std::vector<Weight> bin_loads(const Instance& inst, const Packing& p) {
  VerifyReport report = verify_packing(inst, p);
  if (!report.structure_ok) throw std::invalid_argument(report.structure_error);
  return std::move(report.loads);
}

}  // namespace dualbin

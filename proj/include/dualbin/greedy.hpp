#ifndef DUALBIN_GREEDY_HPP
#define DUALBIN_GREEDY_HPP

#include <optional>
#include <vector>

#include "dualbin/packing.hpp"

namespace dualbin {

// Per-bin residual capacity tracker shared by the first-fit variants and
// the slot-reservation players.
class BinResiduals {
 public:
  explicit BinResiduals(std::uint64_t bins)
      : residual_(bins, Weight::one()) {}

  std::uint64_t bins() const { return residual_.size(); }
  const Weight& residual(std::uint64_t b) const { return residual_[b]; }

  // Lowest-index bin whose residual admits w, or nullopt.
  std::optional<std::uint64_t> first_fit_bin(const Weight& w) const;

  void occupy(std::uint64_t b, const Weight& w);  // requires w <= residual

  // first_fit_bin plus the occupancy update when a bin fits.
  std::optional<std::uint64_t> place_first_fit(const Weight& w);

 private:
  std::vector<Weight> residual_;
};

// First Fit over the arrival order. Items already placed by `initial`
// are kept untouched; items heavier than `filter_max` (when given) are
// rejected without processing. An infeasible initial packing is a
// precondition error (std::invalid_argument).
Packing first_fit(const Instance& inst,
                  const std::optional<Packing>& initial = std::nullopt,
                  const std::optional<Weight>& filter_max = std::nullopt);

// First Fit over items sorted by (weight, original index); the result is
// indexed by original item positions.
Packing first_fit_increasing(const Instance& inst);

struct EtaResult {
  std::optional<Weight> eta;  // absent when no candidate threshold works
  Packing packing;
};

// Restricted-subsequence first fit: scan the distinct input weights in
// decreasing order and return the first threshold eta for which FF packs
// every item of weight <= eta, together with that packing.
EtaResult rsff(const Instance& inst);

}  // namespace dualbin

#endif

#include "dualbin/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dualbin {

std::optional<std::uint64_t> BinResiduals::first_fit_bin(const Weight& w) const {
  for (std::uint64_t b = 0; b < residual_.size(); ++b) {
    if (w <= residual_[b]) return b;
  }
  return std::nullopt;
}

void BinResiduals::occupy(std::uint64_t b, const Weight& w) {
  if (w > residual_[b]) throw std::invalid_argument("bin overflow");
  residual_[b] = residual_[b] - w;
}

std::optional<std::uint64_t> BinResiduals::place_first_fit(const Weight& w) {
  std::optional<std::uint64_t> bin = first_fit_bin(w);
  if (bin) occupy(*bin, w);
  return bin;
}

namespace {

// Runs FF over the given processing order, mutating packing/residuals.
void run_first_fit(const Instance& inst, std::span<const std::size_t> order,
                   const std::optional<Weight>& filter_max, Packing& packing,
                   BinResiduals& residuals) {
  for (std::size_t i : order) {
    if (packing.assignment[i] != kRejected) continue;  // pre-placed
    const Weight& w = inst.weights[i];
    if (filter_max && w > *filter_max) continue;
    std::optional<std::uint64_t> bin = residuals.place_first_fit(w);
    if (bin) packing.assignment[i] = static_cast<std::int64_t>(*bin);
  }
}

}  // namespace

Packing first_fit(const Instance& inst, const std::optional<Packing>& initial,
                  const std::optional<Weight>& filter_max) {
  Packing packing = initial ? *initial : Packing::all_rejected(inst.size());
  BinResiduals residuals(inst.bins);
  if (initial) {
    VerifyReport report = verify_packing(inst, *initial);
    if (!report.structure_ok) throw std::invalid_argument(report.structure_error);
    if (!report.feasible)
      throw std::invalid_argument("initial packing is infeasible");
    for (std::uint64_t b = 0; b < inst.bins; ++b)
      residuals.occupy(b, report.loads[b]);
  }
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  run_first_fit(inst, order, filter_max, packing, residuals);
  return packing;
}

Packing first_fit_increasing(const Instance& inst) {
  std::vector<std::size_t> order(inst.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return inst.weights[a] < inst.weights[b];
  });
  Packing packing = Packing::all_rejected(inst.size());
  BinResiduals residuals(inst.bins);
  run_first_fit(inst, order, std::nullopt, packing, residuals);
  return packing;
}

EtaResult rsff(const Instance& inst) {
  std::vector<Weight> candidates(inst.weights.begin(), inst.weights.end());
  std::sort(candidates.begin(), candidates.end(),
            [](const Weight& a, const Weight& b) { return b < a; });
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const Weight& eta : candidates) {
    Packing packing = first_fit(inst, std::nullopt, eta);
    bool packs_all = true;
    for (std::size_t i = 0; i < inst.size(); ++i) {
      if (inst.weights[i] <= eta && packing.assignment[i] == kRejected) {
        packs_all = false;
        break;
      }
    }
    if (packs_all) return {eta, std::move(packing)};
  }
  return {std::nullopt, Packing::all_rejected(inst.size())};
}

}  // namespace dualbin

#include "dualbin/ptas.hpp"

#include <algorithm>
#include <stdexcept>

#include "dualbin/greedy.hpp"

namespace dualbin {

namespace {

void check_eps(const Weight& eps) {
  if (eps.is_zero() || !(eps < Weight::one()))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
}

}  // namespace

SplitResult split_small_large(const Instance& inst, const Weight& eps) {
  check_eps(eps);
  SplitResult split;
  for (std::size_t i = 0; i < inst.size(); ++i) {
    if (inst.weights[i] <= eps) {
      split.small_items.push_back(i);
      split.small_weight = split.small_weight + inst.weights[i];
    } else {
      split.large_items.push_back(i);
    }
  }
  return split;
}

std::vector<std::size_t> sort_by_weight(const Instance& inst,
                                        std::span<const std::size_t> items) {
  std::vector<std::size_t> sorted(items.begin(), items.end());
  std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
    return inst.weights[a] < inst.weights[b];
  });
  return sorted;
}

std::vector<std::size_t> select_l_prime(const Instance& inst,
                                        std::span<const std::size_t> large_sorted,
                                        const Weight& budget) {
  std::vector<std::size_t> selection;
  Weight running;
  for (std::size_t i : large_sorted) {
    Weight next = running + inst.weights[i];
    if (next > budget) break;  // items only grow from here
    running = next;
    selection.push_back(i);
  }
  return selection;
}

std::uint64_t floor_eps_m(const Weight& eps, std::uint64_t m) {
  Weight product = eps * Weight::from_u64(m, 0);
  return (product.numerator() >> product.exponent()).to_u64();
}

GroupSpec group_and_round(const Instance& inst,
                          std::span<const std::size_t> l_prime_sorted,
                          std::uint64_t m, const Weight& eps) {
  check_eps(eps);
  if (l_prime_sorted.empty())
    throw std::invalid_argument("group_and_round needs a nonempty selection");
  GroupSpec spec;
  spec.group_size = floor_eps_m(eps, m);
  if (spec.group_size == 0)
    throw std::invalid_argument(
        "eps*m < 1: the rounding path does not apply; fall back to the "
        "brute-force oracle");
  for (std::size_t start = 0; start < l_prime_sorted.size();
       start += spec.group_size) {
    std::size_t stop = std::min(l_prime_sorted.size(),
                                start + static_cast<std::size_t>(spec.group_size));
    std::vector<std::size_t> group(l_prime_sorted.begin() + start,
                                   l_prime_sorted.begin() + stop);
    spec.group_sizes.push_back(group.size());
    spec.rounded_weights.push_back(inst.weights[group.back()]);  // sorted: max
    spec.members.push_back(std::move(group));
  }
  return spec;
}

MergedClasses merge_rounded(std::span<const std::uint64_t> sizes,
                            std::span<const Weight> rounded, std::uint64_t m) {
  if (sizes.size() != rounded.size())
    throw std::invalid_argument("group sizes and rounded weights differ in length");
  MergedClasses merged;
  merged.gi.bins = m;
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    if (g > 0 && rounded[g] < rounded[g - 1])
      throw std::invalid_argument("rounded weights must be non-decreasing");
    if (!merged.gi.weights.empty() && merged.gi.weights.back() == rounded[g]) {
      merged.gi.counts.back() += sizes[g];
    } else {
      merged.gi.weights.push_back(rounded[g]);
      merged.gi.counts.push_back(sizes[g]);
    }
    merged.class_of_group.push_back(merged.gi.weights.size() - 1);
  }
  return merged;
}

namespace {

PtasResult run_grouped_path(const Instance& inst, const Weight& eps,
                            const SplitResult& split,
                            std::uint64_t dp_state_guard) {
  PtasResult result;
  result.branch = PtasBranch::Grouped;
  result.small_count = split.small_items.size();
  result.large_count = split.large_items.size();
  result.packing = Packing::all_rejected(inst.size());

  Weight shrunk_capacity = Weight::from_u64(inst.bins, 0) * (Weight::one() - eps);
  Weight budget;  // m(1-eps) - w(S), clamped at zero
  if (shrunk_capacity > split.small_weight)
    budget = shrunk_capacity - split.small_weight;

  std::vector<std::size_t> large_sorted = sort_by_weight(inst, split.large_items);
  std::vector<std::size_t> selection = select_l_prime(inst, large_sorted, budget);
  result.l_prime_count = selection.size();

  BinResiduals residuals(inst.bins);
  if (!selection.empty()) {
    GroupSpec spec = group_and_round(inst, selection, inst.bins, eps);
    result.group_size = spec.group_size;
    result.groups = spec.groups();
    MergedClasses merged =
        merge_rounded(spec.group_sizes, spec.rounded_weights, inst.bins);
    DPSolution dp = solve_grouped_dp(merged.gi, dp_state_guard);
    result.dp_count = dp.best_count;

    // slots get the smallest-index true items of their class
    std::vector<std::vector<std::size_t>> class_items(merged.gi.classes());
    for (std::size_t g = 0; g < spec.groups(); ++g) {
      auto& bucket = class_items[merged.class_of_group[g]];
      bucket.insert(bucket.end(), spec.members[g].begin(), spec.members[g].end());
    }
    for (auto& bucket : class_items) std::sort(bucket.begin(), bucket.end());

    std::vector<std::size_t> next(merged.gi.classes(), 0);
    for (std::uint64_t b = 0; b < inst.bins; ++b) {
      for (std::size_t c = 0; c < merged.gi.classes(); ++c) {
        for (std::uint32_t slot = 0; slot < dp.bin_contents[b][c]; ++slot) {
          result.packing.assignment[class_items[c][next[c]++]] =
              static_cast<std::int64_t>(b);
          // the bin reserves the rounded weight, not the true one
          residuals.occupy(b, merged.gi.weights[c]);
        }
      }
    }
  }

  // first-fit the small items into the space left by the reservations
  for (std::size_t i : split.small_items) {
    std::optional<std::uint64_t> bin = residuals.place_first_fit(inst.weights[i]);
    if (bin) result.packing.assignment[i] = static_cast<std::int64_t>(*bin);
  }
  return result;
}

}  // namespace

PtasResult ptas_solve(const Instance& inst, const Weight& eps,
                      std::uint64_t dp_state_guard) {
  check_eps(eps);
  SplitResult split = split_small_large(inst, eps);

  // greedy certificate: FFI restricted to the small items
  std::vector<std::size_t> small_sorted = sort_by_weight(inst, split.small_items);
  Packing ffi_small = Packing::all_rejected(inst.size());
  BinResiduals residuals(inst.bins);
  bool rejected_small = false;
  for (std::size_t i : small_sorted) {
    std::optional<std::uint64_t> bin = residuals.place_first_fit(inst.weights[i]);
    if (bin) {
      ffi_small.assignment[i] = static_cast<std::int64_t>(*bin);
    } else {
      rejected_small = true;
    }
  }
  if (rejected_small) {
    PtasResult result;
    result.branch = PtasBranch::SmallCertificate;
    result.packing = std::move(ffi_small);
    result.small_count = split.small_items.size();
    result.large_count = split.large_items.size();
    return result;
  }
  return run_grouped_path(inst, eps, split, dp_state_guard);
}

PtasResult grouped_pipeline(const Instance& inst, const Weight& eps,
                            std::uint64_t dp_state_guard) {
  check_eps(eps);
  SplitResult split = split_small_large(inst, eps);
  return run_grouped_path(inst, eps, split, dp_state_guard);
}

}  // namespace dualbin

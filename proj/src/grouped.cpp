#include "dualbin/grouped.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "dualbin/errors.hpp"

namespace dualbin {

std::uint64_t GroupedInstance::total_items() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return total;
}

void GroupedInstance::validate() const {
  if (weights.empty()) throw std::invalid_argument("grouped instance needs k >= 1");
  if (weights.size() != counts.size())
    throw std::invalid_argument("weights and multiplicities differ in length");
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].is_zero() || weights[i] > Weight::one())
      throw std::invalid_argument("class weight outside (0, 1]");
    if (i > 0 && !(weights[i - 1] < weights[i]))
      throw std::invalid_argument("class weights must be strictly increasing");
  }
}

GroupedInstance group_by_weight(const Instance& inst) {
  std::map<Weight, std::uint64_t> histo;
  for (const Weight& w : inst.weights) ++histo[w];
  GroupedInstance gi;
  gi.bins = inst.bins;
  for (auto& [w, c] : histo) {
    gi.weights.push_back(w);
    gi.counts.push_back(c);
  }
  return gi;
}

std::vector<std::vector<std::size_t>> class_members(const Instance& inst,
                                                    const GroupedInstance& gi) {
  std::vector<std::vector<std::size_t>> members(gi.classes());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    auto it = std::lower_bound(gi.weights.begin(), gi.weights.end(),
                               inst.weights[i]);
    if (it == gi.weights.end() || !(*it == inst.weights[i]))
      throw std::invalid_argument("instance weight missing from grouped classes");
    members[it - gi.weights.begin()].push_back(i);
  }
  return members;
}

std::vector<std::vector<std::uint32_t>> enumerate_bin_tuples(
    const GroupedInstance& gi) {
  gi.validate();
  std::size_t k = gi.classes();
  std::vector<std::vector<std::uint32_t>> tuples;
  std::vector<std::uint32_t> cur(k, 0);
  // depth-first in class order yields lexicographic output
  auto rec = [&](auto&& self, std::size_t cls, const Weight& load) -> void {
    if (cls == k) {
      tuples.push_back(cur);
      return;
    }
    Weight next = load;
    for (std::uint64_t l = 0;; ++l) {
      if (l > 0) {
        next = next + gi.weights[cls];
        if (next > Weight::one()) break;
      }
      if (l > gi.counts[cls]) break;
      cur[cls] = static_cast<std::uint32_t>(l);
      self(self, cls + 1, next);
    }
    cur[cls] = 0;
  };
  rec(rec, 0, Weight{});
  return tuples;
}

namespace {

struct DpLayout {
  std::vector<std::uint64_t> stride;  // mixed-radix strides per class
  std::uint64_t states = 1;
};

DpLayout make_layout(const GroupedInstance& gi, std::uint64_t bins,
                     std::uint64_t state_guard) {
  DpLayout layout;
  layout.stride.resize(gi.classes());
  for (std::size_t i = 0; i < gi.classes(); ++i) {
    layout.stride[i] = layout.states;
    std::uint64_t radix = gi.counts[i] + 1;
    if (layout.states > state_guard / radix)
      throw ResourceLimitError(
          "grouped DP state space exceeds the guard; use the brute-force "
          "oracle or a larger epsilon");
    layout.states *= radix;
  }
  unsigned __int128 total =
      static_cast<unsigned __int128>(layout.states) * (bins + 1);
  if (total > state_guard)
    throw ResourceLimitError(
        "grouped DP state space exceeds the guard; use the brute-force "
        "oracle or a larger epsilon");
  return layout;
}

}  // namespace

DPSolution solve_grouped_dp(const GroupedInstance& gi, std::uint64_t state_guard) {
  gi.validate();
  std::size_t k = gi.classes();
  std::uint64_t m = gi.bins;
  DpLayout layout = make_layout(gi, m, state_guard);
  std::uint64_t states = layout.states;

  std::vector<std::vector<std::uint32_t>> tuples = enumerate_bin_tuples(gi);
  std::vector<std::uint64_t> tuple_offset(tuples.size());
  std::vector<std::uint32_t> tuple_sum(tuples.size());
  for (std::size_t t = 0; t < tuples.size(); ++t) {
    std::uint64_t off = 0;
    std::uint32_t sum = 0;
    for (std::size_t i = 0; i < k; ++i) {
      off += tuples[t][i] * layout.stride[i];
      sum += tuples[t][i];
    }
    tuple_offset[t] = off;
    tuple_sum[t] = sum;
  }

  DPSolution solution;
  solution.bin_contents.assign(m, std::vector<std::uint32_t>(k, 0));
  if (m == 0) return solution;

  std::vector<std::uint32_t> prev(states, 0), cur(states, 0);
  // chosen tuple index per (layer-1, state), for reconstruction
  std::vector<std::uint32_t> parent(states * m, 0);
  std::vector<std::uint32_t> digits(k, 0);
  for (std::uint64_t layer = 1; layer <= m; ++layer) {
    std::fill(digits.begin(), digits.end(), 0);
    std::uint32_t* parent_row = parent.data() + (layer - 1) * states;
    for (std::uint64_t s = 0; s < states; ++s) {
      std::uint32_t best = 0;
      std::uint32_t best_tuple = 0;  // zero tuple is always first and feasible
      for (std::size_t t = 0; t < tuples.size(); ++t) {
        bool fits = true;
        for (std::size_t i = 0; i < k; ++i) {
          if (tuples[t][i] > digits[i]) {
            fits = false;
            break;
          }
        }
        if (!fits) continue;
        std::uint32_t cand = tuple_sum[t] + prev[s - tuple_offset[t]];
        if (cand > best) {  // strict: first maximizer in lexicographic order wins
          best = cand;
          best_tuple = static_cast<std::uint32_t>(t);
        }
      }
      cur[s] = best;
      parent_row[s] = best_tuple;
      // odometer step to the next mixed-radix state
      for (std::size_t i = 0; i < k; ++i) {
        if (digits[i] < gi.counts[i]) {
          ++digits[i];
          break;
        }
        digits[i] = 0;
      }
    }
    std::swap(prev, cur);
  }

  std::uint64_t full = states - 1;
  solution.best_count = prev[full];
  std::uint64_t s = full;
  for (std::uint64_t layer = m; layer >= 1; --layer) {
    std::uint32_t t = parent[(layer - 1) * states + s];
    solution.bin_contents[m - layer] = tuples[t];
    s -= tuple_offset[t];
  }
  return solution;
}

Packing expand_solution(const Instance& inst, const GroupedInstance& gi,
                        const DPSolution& dp) {
  std::vector<std::vector<std::size_t>> members = class_members(inst, gi);
  std::vector<std::size_t> next(gi.classes(), 0);
  Packing packing = Packing::all_rejected(inst.size());
  for (std::uint64_t b = 0; b < dp.bin_contents.size(); ++b) {
    for (std::size_t i = 0; i < gi.classes(); ++i) {
      for (std::uint32_t c = 0; c < dp.bin_contents[b][i]; ++c) {
        if (next[i] >= members[i].size())
          throw std::invalid_argument("DP solution exceeds class multiplicity");
        packing.assignment[members[i][next[i]++]] = static_cast<std::int64_t>(b);
      }
    }
  }
  return packing;
}

}  // namespace dualbin

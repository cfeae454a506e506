#ifndef DUALBIN_ONLINE_HPP
#define DUALBIN_ONLINE_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "dualbin/greedy.hpp"

namespace dualbin {

// One-pass solver: sees one item at a time and must commit to a bin (or
// rejection) before the next item is revealed.
class OnlineSolver {
 public:
  virtual ~OnlineSolver() = default;
  virtual std::optional<std::uint64_t> on_item(const Weight& w) = 0;
};

class FirstFitSolver : public OnlineSolver {
 public:
  explicit FirstFitSolver(std::uint64_t bins) : residuals_(bins) {}
  std::optional<std::uint64_t> on_item(const Weight& w) override;

 private:
  BinResiduals residuals_;
};

// Places each item uniformly among the bins that still fit it.
class RandomFitSolver : public OnlineSolver {
 public:
  RandomFitSolver(std::uint64_t bins, std::uint64_t seed)
      : residuals_(bins), rng_(seed) {}
  std::optional<std::uint64_t> on_item(const Weight& w) override;

 private:
  BinResiduals residuals_;
  std::mt19937_64 rng_;
};

// Replays a packing computed ahead of time, one decision per arrival.
class ReplaySolver : public OnlineSolver {
 public:
  explicit ReplaySolver(std::vector<std::int64_t> assignment)
      : assignment_(std::move(assignment)) {}
  std::optional<std::uint64_t> on_item(const Weight& w) override;

 private:
  std::vector<std::int64_t> assignment_;
  std::size_t cursor_ = 0;
};

// Drives a solver over an arrival sequence and collects the packing.
Packing run_online(const Instance& inst, OnlineSolver& solver);

}  // namespace dualbin

#endif

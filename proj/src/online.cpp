#include "dualbin/online.hpp"

#include "dualbin/errors.hpp"
#include "dualbin/rng.hpp"

namespace dualbin {

std::optional<std::uint64_t> FirstFitSolver::on_item(const Weight& w) {
  return residuals_.place_first_fit(w);
}

std::optional<std::uint64_t> RandomFitSolver::on_item(const Weight& w) {
  std::vector<std::uint64_t> fits;
  for (std::uint64_t b = 0; b < residuals_.bins(); ++b) {
    if (w <= residuals_.residual(b)) fits.push_back(b);
  }
  if (fits.empty()) return std::nullopt;
  std::uint64_t pick = fits[uniform_u64(rng_, 0, fits.size() - 1)];
  residuals_.occupy(pick, w);
  return pick;
}

std::optional<std::uint64_t> ReplaySolver::on_item(const Weight&) {
  if (cursor_ >= assignment_.size())
    throw ProtocolError("replay solver ran past its script");
  std::int64_t a = assignment_[cursor_++];
  if (a == kRejected) return std::nullopt;
  return static_cast<std::uint64_t>(a);
}

Packing run_online(const Instance& inst, OnlineSolver& solver) {
  Packing packing = Packing::all_rejected(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    std::optional<std::uint64_t> bin = solver.on_item(inst.weights[i]);
    if (bin) packing.assignment[i] = static_cast<std::int64_t>(*bin);
  }
  return packing;
}

}  // namespace dualbin

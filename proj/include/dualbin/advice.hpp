#ifndef DUALBIN_ADVICE_HPP
#define DUALBIN_ADVICE_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "dualbin/brute_force.hpp"
#include "dualbin/online.hpp"
#include "dualbin/ptas.hpp"

namespace dualbin {

// Parameters known to both the oracle and the player; they are part of
// the problem statement and are not charged to the advice length.
struct AdviceParams {
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t s = 0;  // maximum weight bit size
  Weight eps;

  static AdviceParams for_instance(const Instance& inst, const Weight& eps) {
    return {inst.size(), inst.bins, inst.max_bit_size(), eps};
  }
};

struct FfAdvice {
  std::optional<Weight> eta;  // absent: the player rejects everything
  bool operator==(const FfAdvice&) const = default;
};

struct PtasAdvice {
  std::vector<std::uint64_t> group_sizes;  // may be empty (no large selection)
  std::vector<Weight> rounded_weights;     // non-decreasing, each > eps
  std::size_t groups() const { return group_sizes.size(); }
  bool operator==(const PtasAdvice&) const = default;
};

struct AdviceString {
  std::variant<FfAdvice, PtasAdvice> content;
  bool is_ff() const { return std::holds_alternative<FfAdvice>(content); }
  bool operator==(const AdviceString&) const = default;
};

// Field widths of the bit layout. Sizes take ceil(log2(n+1)) bits; the
// group count takes ceil(log2(ceil(1/eps^2)+2)) bits; weight fields take
// s bits holding the numerator at exponent s (0 stands for weight one in
// rounded-weight fields and for "absent" in the eta field).
std::uint64_t size_field_width(std::uint64_t n);
std::uint64_t group_count_field_width(const Weight& eps);
std::uint64_t ceil_inv_eps_squared(const Weight& eps);

std::vector<bool> encode_advice(const AdviceString& advice,
                                const AdviceParams& params);
AdviceString decode_advice(const std::vector<bool>& bits,
                           const AdviceParams& params);

// The oracle: run RSFF; a threshold <= eps becomes FF advice, otherwise
// the grouped selection's sizes and rounded weights are written down.
// Instances with no bins or no items get the absent-threshold FF advice.
AdviceString build_advice(const Instance& inst, const Weight& eps);

// Enforces the one-at-a-time reveal/decide alternation.
class ArrivalStream {
 public:
  explicit ArrivalStream(const Instance& inst) : inst_(inst) {}
  std::size_t size() const { return inst_.size(); }
  bool finished() const { return decided_ == inst_.size(); }
  const Weight& reveal();  // ProtocolError if a decision is pending
  void decide();           // ProtocolError if nothing was revealed

 private:
  const Instance& inst_;
  std::size_t revealed_ = 0;
  std::size_t decided_ = 0;
};

// Slot class recorded per decision.
inline constexpr std::int64_t kSlotNone = -2;   // rejected / no slot
inline constexpr std::int64_t kSlotSmall = -1;  // packed as a small item

struct TranscriptEntry {
  std::size_t item = 0;
  std::int64_t decision = kRejected;  // bin index or kRejected
  std::int64_t slot_class = kSlotNone;
};

struct OnlineTranscript {
  std::vector<TranscriptEntry> entries;
  Packing packing;
  std::uint64_t advice_bits_used = 0;
};

// The advice player. FF advice: first-fit everything up to the
// threshold. Grouped advice: rerun the (deterministic) DP to reproduce
// the oracle's slot layout, pre-reserve the slots, then place small
// items first-fit against the reserved residuals and large items into
// the first free slot of the smallest class that can hold them.
class AdvicePlayer : public OnlineSolver {
 public:
  AdvicePlayer(const AdviceParams& params, const std::vector<bool>& bits,
               std::uint64_t dp_state_guard = kDefaultDpStateGuard);

  std::optional<std::uint64_t> on_item(const Weight& w) override;
  std::int64_t last_slot_class() const { return last_slot_class_; }
  const AdviceString& advice() const { return advice_; }

 private:
  AdviceParams params_;
  AdviceString advice_;
  BinResiduals residuals_;
  // grouped mode state
  std::vector<Weight> class_weights_;
  std::vector<std::vector<std::uint32_t>> slots_;  // [class][bin] remaining
  std::vector<std::uint64_t> class_cursor_;        // first bin worth scanning
  std::int64_t last_slot_class_ = kSlotNone;
};

OnlineTranscript online_play(ArrivalStream& stream, const AdviceParams& params,
                             const std::vector<bool>& bits,
                             std::uint64_t dp_state_guard = kDefaultDpStateGuard);
OnlineTranscript online_play(const Instance& inst, const AdviceParams& params,
                             const std::vector<bool>& bits,
                             std::uint64_t dp_state_guard = kDefaultDpStateGuard);

struct SimulationReport {
  std::uint64_t advice_bits = 0;
  bool ff_mode = false;
  std::uint64_t groups = 0;          // realized k (grouped mode)
  std::uint64_t online_count = 0;
  std::uint64_t oracle_count = 0;    // offline packing the advice encodes
  // ptas_solve on the same instance; absent when its rounding-path
  // precondition (eps*m >= 1) fails while the protocol itself is fine
  std::optional<std::uint64_t> ptas_count;
  std::optional<std::uint64_t> opt;  // brute force, when requested
  OnlineTranscript transcript;
};

// End-to-end: build advice, encode, decode, play the arrival sequence,
// verify the resulting packing, and compare against the offline runs.
SimulationReport simulate(const Instance& inst, const Weight& eps,
                          bool with_oracle = false,
                          std::size_t oracle_guard = kDefaultBruteForceGuard,
                          std::uint64_t dp_state_guard = kDefaultDpStateGuard);

std::string format_transcript(const OnlineTranscript& transcript);

}  // namespace dualbin

#endif

#include "dualbin/advice.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "dualbin/errors.hpp"
#include "dualbin/greedy.hpp"

namespace dualbin {

namespace {

void append_field(std::vector<bool>& bits, const BigUint& value,
                  std::uint64_t width) {
  if (value.bit_length() > width)
    throw std::invalid_argument("advice field value does not fit its width");
  for (std::uint64_t i = width; i-- > 0;) bits.push_back(value.bit(i));
}

struct BitReader {
  const std::vector<bool>& bits;
  std::size_t pos = 0;

  bool read_bit() {
    if (pos >= bits.size()) throw ParseError("advice string truncated");
    return bits[pos++];
  }
  BigUint read_field(std::uint64_t width) {
    BigUint value;
    std::uint64_t consumed = 0;
    while (consumed < width) {  // word at a time; fields can span kilobits
      std::uint64_t chunk = std::min<std::uint64_t>(32, width - consumed);
      std::uint32_t word = 0;
      for (std::uint64_t j = 0; j < chunk; ++j)
        word = (word << 1) | (read_bit() ? 1u : 0u);
      value = (value << chunk) + BigUint(word);
      consumed += chunk;
    }
    return value;
  }
};

}  // namespace

std::uint64_t size_field_width(std::uint64_t n) {
  return std::bit_width(n);
}

std::uint64_t ceil_inv_eps_squared(const Weight& eps) {
  if (eps.is_zero() || !(eps < Weight::one()))
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (eps.exponent() > 31)
    throw std::invalid_argument("epsilon finer than 2^-31 is not supported");
  std::uint64_t a = eps.numerator().to_u64();
  std::uint64_t pow = std::uint64_t{1} << (2 * eps.exponent());
  return (pow + a * a - 1) / (a * a);
}

std::uint64_t group_count_field_width(const Weight& eps) {
  return std::bit_width(ceil_inv_eps_squared(eps) + 1);  // values 0..ceil+1
}

std::vector<bool> encode_advice(const AdviceString& advice,
                                const AdviceParams& params) {
  std::vector<bool> bits;
  if (advice.is_ff()) {
    const FfAdvice& ff = std::get<FfAdvice>(advice.content);
    bits.push_back(false);
    BigUint field;  // all-zero field means "absent"
    if (ff.eta) {
      if (ff.eta->exponent() > params.s)
        throw std::invalid_argument("eta is finer than the declared bit size");
      field = ff.eta->scaled_numerator(params.s);
      if (field.is_zero() || field.bit_length() > params.s)
        throw std::invalid_argument("eta does not fit the threshold field");
    }
    append_field(bits, field, params.s);
    return bits;
  }

  const PtasAdvice& pt = std::get<PtasAdvice>(advice.content);
  bits.push_back(true);
  std::uint64_t k_width = group_count_field_width(params.eps);
  std::uint64_t k = pt.groups();
  if (std::bit_width(k) > k_width)
    throw std::invalid_argument("group count does not fit the advice layout");
  append_field(bits, BigUint(k), k_width);
  std::uint64_t size_width = size_field_width(params.n);
  for (std::size_t g = 0; g < k; ++g) {
    if (pt.group_sizes[g] > params.n)
      throw std::invalid_argument("group size exceeds the item count");
    append_field(bits, BigUint(pt.group_sizes[g]), size_width);
    const Weight& w = pt.rounded_weights[g];
    if (w.exponent() > params.s)
      throw std::invalid_argument("rounded weight finer than the declared bit size");
    BigUint field = w.scaled_numerator(params.s);
    // weight one scales to 2^s, which wraps to the otherwise unused zero
    if (field.bit_length() > params.s) field = BigUint{};
    append_field(bits, field, params.s);
  }
  return bits;
}

AdviceString decode_advice(const std::vector<bool>& bits,
                           const AdviceParams& params) {
  BitReader reader{bits};
  bool ptas_mode = reader.read_bit();
  if (!ptas_mode) {
    if (bits.size() != 1 + params.s) throw ParseError("advice length mismatch");
    BigUint field = reader.read_field(params.s);
    FfAdvice ff;
    if (!field.is_zero()) ff.eta = Weight(std::move(field), params.s);
    return {ff};
  }

  std::uint64_t k_width = group_count_field_width(params.eps);
  std::uint64_t k = reader.read_field(k_width).to_u64();
  std::uint64_t size_width = size_field_width(params.n);
  if (bits.size() != 1 + k_width + k * (size_width + params.s))
    throw ParseError("advice length mismatch");
  PtasAdvice pt;
  std::uint64_t total = 0;
  for (std::uint64_t g = 0; g < k; ++g) {
    std::uint64_t size = reader.read_field(size_width).to_u64();
    if (size == 0 || size > params.n)
      throw ParseError("group size out of range");
    total += size;
    BigUint field = reader.read_field(params.s);
    Weight w = field.is_zero() ? Weight::one() : Weight(std::move(field), params.s);
    if (!pt.rounded_weights.empty() && w < pt.rounded_weights.back())
      throw ParseError("rounded weights must be non-decreasing");
    if (w <= params.eps) throw ParseError("rounded weight not above epsilon");
    pt.group_sizes.push_back(size);
    pt.rounded_weights.push_back(std::move(w));
  }
  if (total > params.n) throw ParseError("group sizes exceed the item count");
  return {pt};
}

AdviceString build_advice(const Instance& inst, const Weight& eps) {
  EtaResult rs = rsff(inst);
  if (rs.eta && *rs.eta <= eps) return {FfAdvice{rs.eta}};
  if (!rs.eta && (inst.bins == 0 || inst.size() == 0)) return {FfAdvice{}};

  // threshold above epsilon (or none usable): write the grouped selection
  SplitResult split = split_small_large(inst, eps);
  Weight shrunk = Weight::from_u64(inst.bins, 0) * (Weight::one() - eps);
  Weight budget;
  if (shrunk > split.small_weight) budget = shrunk - split.small_weight;
  std::vector<std::size_t> large_sorted = sort_by_weight(inst, split.large_items);
  std::vector<std::size_t> selection = select_l_prime(inst, large_sorted, budget);
  PtasAdvice pt;
  if (!selection.empty()) {
    GroupSpec spec = group_and_round(inst, selection, inst.bins, eps);
    pt.group_sizes = spec.group_sizes;
    pt.rounded_weights = spec.rounded_weights;
  }
  return {pt};
}

const Weight& ArrivalStream::reveal() {
  if (revealed_ != decided_)
    throw ProtocolError("next item requested before the pending decision");
  if (revealed_ >= inst_.size()) throw ProtocolError("arrival stream exhausted");
  return inst_.weights[revealed_++];
}

void ArrivalStream::decide() {
  if (decided_ + 1 != revealed_)
    throw ProtocolError("decision committed without a revealed item");
  ++decided_;
}

AdvicePlayer::AdvicePlayer(const AdviceParams& params,
                           const std::vector<bool>& bits,
                           std::uint64_t dp_state_guard)
    : params_(params),
      advice_(decode_advice(bits, params)),
      residuals_(params.m) {
  if (!advice_.is_ff()) {
    const PtasAdvice& pt = std::get<PtasAdvice>(advice_.content);
    if (pt.groups() > 0) {
      MergedClasses merged =
          merge_rounded(pt.group_sizes, pt.rounded_weights, params.m);
      DPSolution dp = solve_grouped_dp(merged.gi, dp_state_guard);
      class_weights_ = merged.gi.weights;
      slots_.assign(class_weights_.size(),
                    std::vector<std::uint32_t>(params.m, 0));
      class_cursor_.assign(class_weights_.size(), 0);
      for (std::uint64_t b = 0; b < params.m; ++b) {
        for (std::size_t c = 0; c < class_weights_.size(); ++c) {
          slots_[c][b] = dp.bin_contents[b][c];
          for (std::uint32_t slot = 0; slot < slots_[c][b]; ++slot)
            residuals_.occupy(b, class_weights_[c]);
        }
      }
    }
  }
}

std::optional<std::uint64_t> AdvicePlayer::on_item(const Weight& w) {
  last_slot_class_ = kSlotNone;
  if (advice_.is_ff()) {
    const FfAdvice& ff = std::get<FfAdvice>(advice_.content);
    if (!ff.eta || w > *ff.eta) return std::nullopt;
    std::optional<std::uint64_t> bin = residuals_.place_first_fit(w);
    if (bin) last_slot_class_ = kSlotSmall;
    return bin;
  }
  if (w <= params_.eps) {
    std::optional<std::uint64_t> bin = residuals_.place_first_fit(w);
    if (bin) last_slot_class_ = kSlotSmall;
    return bin;
  }
  // first free slot of the smallest class that can hold the item
  auto it = std::lower_bound(class_weights_.begin(), class_weights_.end(), w);
  for (std::size_t c = it - class_weights_.begin(); c < class_weights_.size();
       ++c) {
    while (class_cursor_[c] < params_.m && slots_[c][class_cursor_[c]] == 0)
      ++class_cursor_[c];
    if (class_cursor_[c] >= params_.m) continue;
    std::uint64_t bin = class_cursor_[c];
    --slots_[c][bin];
    last_slot_class_ = static_cast<std::int64_t>(c);
    return bin;
  }
  return std::nullopt;
}

OnlineTranscript online_play(ArrivalStream& stream, const AdviceParams& params,
                             const std::vector<bool>& bits,
                             std::uint64_t dp_state_guard) {
  if (stream.size() != params.n)
    throw ProtocolError("stream length disagrees with the declared item count");
  AdvicePlayer player(params, bits, dp_state_guard);
  OnlineTranscript transcript;
  transcript.advice_bits_used = bits.size();
  transcript.packing = Packing::all_rejected(stream.size());
  for (std::size_t i = 0; i < stream.size(); ++i) {
    const Weight& w = stream.reveal();
    std::optional<std::uint64_t> bin = player.on_item(w);
    stream.decide();
    TranscriptEntry entry;
    entry.item = i;
    entry.decision = bin ? static_cast<std::int64_t>(*bin) : kRejected;
    entry.slot_class = player.last_slot_class();
    transcript.entries.push_back(entry);
    transcript.packing.assignment[i] = entry.decision;
  }
  return transcript;
}

OnlineTranscript online_play(const Instance& inst, const AdviceParams& params,
                             const std::vector<bool>& bits,
                             std::uint64_t dp_state_guard) {
  ArrivalStream stream(inst);
  return online_play(stream, params, bits, dp_state_guard);
}

SimulationReport simulate(const Instance& inst, const Weight& eps,
                          bool with_oracle, std::size_t oracle_guard,
                          std::uint64_t dp_state_guard) {
  AdviceParams params = AdviceParams::for_instance(inst, eps);
  AdviceString advice = build_advice(inst, eps);
  std::vector<bool> bits = encode_advice(advice, params);
  AdviceString decoded = decode_advice(bits, params);
  if (!(decoded == advice))
    throw ProtocolError("advice did not round-trip through its encoding");

  SimulationReport report;
  report.advice_bits = bits.size();
  report.ff_mode = advice.is_ff();
  if (!advice.is_ff())
    report.groups = std::get<PtasAdvice>(advice.content).groups();

  report.transcript = online_play(inst, params, bits, dp_state_guard);
  VerifyReport verify = verify_packing(inst, report.transcript.packing);
  if (!verify.ok()) throw ProtocolError("online packing failed verification");
  report.online_count = verify.packed_count;

  // offline packing the oracle derived the advice from
  if (advice.is_ff()) {
    report.oracle_count = rsff(inst).packing.packed_count();
  } else {
    report.oracle_count =
        grouped_pipeline(inst, eps, dp_state_guard).packing.packed_count();
  }
  try {
    report.ptas_count =
        ptas_solve(inst, eps, dp_state_guard).packing.packed_count();
  } catch (const std::invalid_argument&) {
    // the offline scheme refuses eps*m < 1 with a nonempty selection
  }
  if (with_oracle) report.opt = brute_force_opt(inst, oracle_guard).opt;
  return report;
}

std::string format_transcript(const OnlineTranscript& transcript) {
  std::ostringstream out;
  out << "# item decision class\n";
  for (const TranscriptEntry& e : transcript.entries) {
    out << e.item << ' ';
    if (e.decision == kRejected)
      out << 'R';
    else
      out << e.decision;
    out << ' ';
    if (e.slot_class == kSlotSmall)
      out << 'S';
    else if (e.slot_class == kSlotNone)
      out << 'N';
    else
      out << e.slot_class;
    out << '\n';
  }
  return out.str();
}

}  // namespace dualbin

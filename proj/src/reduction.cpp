#include "dualbin/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dualbin/errors.hpp"

namespace dualbin {

BspInstance BspInstance::from_values(std::uint64_t n1,
                                     std::vector<std::uint64_t> values) {
  if (n1 > values.size())
    throw std::invalid_argument("n1 exceeds the number of values");
  for (std::uint64_t v : values) {
    if (v == 0) throw std::invalid_argument("values must be positive");
  }
  BspInstance bsp;
  bsp.n1 = n1;
  bsp.values = std::move(values);
  std::vector<std::uint64_t> sorted = bsp.values;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (n1 == 0) {
    bsp.threshold = sorted.empty() ? 0 : sorted.front();
  } else if (n1 == sorted.size()) {
    bsp.threshold = sorted.back() - 1;
  } else {
    if (sorted[n1 - 1] == sorted[n1])
      throw std::invalid_argument(
          "no strict threshold separates the largest n1 values");
    bsp.threshold = sorted[n1];
  }
  return bsp;
}

namespace {

std::vector<std::uint64_t> tokenize_counts(std::string_view text,
                                           const char* what) {
  std::vector<std::uint64_t> out;
  std::string cur;
  bool in_comment = false;
  std::size_t line = 1;
  auto flush = [&] {
    if (cur.empty()) return;
    try {
      out.push_back(BigUint::from_decimal(cur).to_u64());
    } catch (const std::exception&) {
      throw ParseError("line " + std::to_string(line) + ": invalid " + what +
                       " '" + cur + "'");
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == '\n') {
      flush();
      in_comment = false;
      ++line;
      continue;
    }
    if (in_comment) continue;
    if (c == '#') {
      flush();
      in_comment = true;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      flush();
      continue;
    }
    cur.push_back(c);
  }
  flush();
  return out;
}

}  // namespace

BspInstance parse_bsp(std::string_view text) {
  std::vector<std::uint64_t> tokens = tokenize_counts(text, "integer");
  if (tokens.size() < 2)
    throw ParseError("line 1: expected value count and large count");
  std::uint64_t n = tokens[0], n1 = tokens[1];
  if (tokens.size() != 2 + n)
    throw ParseError("expected " + std::to_string(n) + " values, found " +
                     std::to_string(tokens.size() - 2));
  std::vector<std::uint64_t> values(tokens.begin() + 2, tokens.end());
  for (std::uint64_t v : values) {
    if (v == 0) throw ParseError("values must be positive");
  }
  if (n1 > n) throw ParseError("large count exceeds value count");
  try {
    return BspInstance::from_values(n1, std::move(values));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_bsp(const BspInstance& bsp) {
  std::ostringstream out;
  out << bsp.size() << ' ' << bsp.n1 << '\n';
  for (std::size_t i = 0; i < bsp.size(); ++i) {
    if (i) out << ' ';
    out << bsp.values[i];
  }
  out << '\n';
  return out.str();
}

Weight f_map(std::uint64_t y) {
  if (y < 1) throw std::invalid_argument("f is defined for y >= 1");
  // the result has bit size y+4; refuse sizes that would not fit in memory
  if (y > (std::uint64_t{1} << 24))
    throw ResourceLimitError("f(y) would need a weight of more than 2^24 bits");
  // (2^y + 1) / 2^(y+4) = 1/16 + 2^-(y+4)
  BigUint num = BigUint::power_of_two(y) + BigUint(1);
  return Weight(std::move(num), y + 4);
}

namespace {

Weight half() { return Weight::from_u64(1, 1); }

}  // namespace

Instance build_reduction_instance(const BspInstance& bsp) {
  Instance inst;
  inst.bins = bsp.size();
  inst.weights.reserve(2 * bsp.size());
  for (std::uint64_t i = 0; i < bsp.n1; ++i)
    inst.weights.push_back(half() + delta_min());
  for (std::size_t i = 0; i < bsp.size(); ++i)
    inst.weights.push_back(half() - f_map(bsp.values[i]));
  for (std::size_t i = 0; i < bsp.size(); ++i) {
    if (!bsp.is_large(i)) inst.weights.push_back(half() + f_map(bsp.values[i]));
  }
  return inst;
}

Packing explicit_pairing(const BspInstance& bsp) {
  std::size_t n = bsp.size();
  Packing packing = Packing::all_rejected(2 * n);
  // preprocessing items occupy bins 0..n1-1
  for (std::uint64_t i = 0; i < bsp.n1; ++i)
    packing.assignment[i] = static_cast<std::int64_t>(i);
  std::uint64_t next_large_bin = 0;
  std::uint64_t next_small_bin = bsp.n1;
  std::vector<std::uint64_t> small_bin_of;  // per small value, in order
  for (std::size_t i = 0; i < n; ++i) {
    if (bsp.is_large(i)) {
      packing.assignment[bsp.n1 + i] = static_cast<std::int64_t>(next_large_bin++);
    } else {
      small_bin_of.push_back(next_small_bin);
      packing.assignment[bsp.n1 + i] = static_cast<std::int64_t>(next_small_bin++);
    }
  }
  for (std::size_t j = 0; j < small_bin_of.size(); ++j)
    packing.assignment[bsp.n1 + n + j] = static_cast<std::int64_t>(small_bin_of[j]);
  return packing;
}

ReductionRun reduce_and_run(const BspInstance& bsp, OnlineSolver& solver) {
  ReductionRun run;
  run.constructed = build_reduction_instance(bsp);
  run.packing = Packing::all_rejected(run.constructed.size());
  std::size_t n = bsp.size();

  std::vector<bool> bin_has_phase1(n, false);
  std::size_t item = 0;
  auto feed = [&](std::size_t idx) -> std::optional<std::uint64_t> {
    std::optional<std::uint64_t> bin =
        solver.on_item(run.constructed.weights[idx]);
    if (bin) {
      if (*bin >= n) throw ProtocolError("solver chose a bin that does not exist");
      run.packing.assignment[idx] = static_cast<std::int64_t>(*bin);
    }
    return bin;
  };

  for (std::uint64_t i = 0; i < bsp.n1; ++i) {
    std::optional<std::uint64_t> bin = feed(item++);
    if (bin) bin_has_phase1[*bin] = true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::uint64_t> bin = feed(item++);
    bool guess_large = bin && bin_has_phase1[*bin];
    run.guessed_large.push_back(guess_large);
    // revealed to the guesser right away, though never consulted
    run.guess_correct.push_back(guess_large == bsp.is_large(i));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!bsp.is_large(i)) feed(item++);
  }

  VerifyReport verify = verify_packing(run.constructed, run.packing);
  if (!verify.ok()) throw ProtocolError("wrapped solver produced an invalid packing");

  ReductionReport& rep = run.report;
  for (std::uint64_t i = 0; i < bsp.n1; ++i) {
    if (run.packing.assignment[i] == kRejected) ++rep.p1;
  }
  for (std::size_t i = 0; i < n; ++i) {
    bool unpacked = run.packing.assignment[bsp.n1 + i] == kRejected;
    if (bsp.is_large(i)) {
      rep.l2 += unpacked;
      rep.g1 += run.guess_correct[i];
    } else {
      rep.s2 += unpacked;
      rep.g2 += run.guess_correct[i];
    }
  }
  for (std::size_t idx = bsp.n1 + n; idx < run.constructed.size(); ++idx) {
    if (run.packing.assignment[idx] == kRejected) ++rep.p3;
  }
  return run;
}

std::int64_t accounting_bound_tight(std::uint64_t p1, std::uint64_t l2,
                                    std::uint64_t s2, std::uint64_t p3,
                                    std::uint64_t n1, std::uint64_t n2) {
  std::int64_t bound = static_cast<std::int64_t>(n1 + n2) -
                       static_cast<std::int64_t>(s2 + p1 + 4 * (p1 + p3) + 2 * l2);
  return std::max<std::int64_t>(bound, 0);
}

std::int64_t accounting_bound_loose(std::uint64_t p1, std::uint64_t l2,
                                    std::uint64_t s2, std::uint64_t p3,
                                    std::uint64_t n1, std::uint64_t n2) {
  std::int64_t bound = static_cast<std::int64_t>(n1 + n2) -
                       5 * static_cast<std::int64_t>(p1 + l2 + s2 + p3);
  return std::max<std::int64_t>(bound, 0);
}

std::optional<double> entropy_lower_bound(std::uint64_t n, std::uint64_t r) {
  if (n == 0 || r > n) throw std::invalid_argument("need 0 <= r <= n, n >= 1");
  double alpha = static_cast<double>(n - r) / static_cast<double>(n);
  if (alpha < 0.5) return std::nullopt;
  double entropy = 0.0;  // H(1) -> 0 by limit
  if (alpha < 1.0)
    entropy = -alpha * std::log2(alpha) - (1 - alpha) * std::log2(1 - alpha);
  return (1.0 - entropy) * static_cast<double>(n);
}

}  // namespace dualbin

#include "dualbin/instance.hpp"

#include <algorithm>
#include <sstream>

#include "dualbin/errors.hpp"

namespace dualbin {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t line = 1;
  std::string cur;
  bool in_comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back({cur, line});
      cur.clear();
    }
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
  return tokens;
}

std::uint64_t parse_count(const Token& tok, const char* what) {
  if (tok.text.empty() || tok.text[0] == '-')
    throw ParseError("line " + std::to_string(tok.line) + ": " + what +
                     " must be a non-negative integer, got '" + tok.text + "'");
  try {
    return BigUint::from_decimal(tok.text).to_u64();
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(tok.line) + ": invalid " + what +
                     " '" + tok.text + "'");
  }
}

}  // namespace

std::uint64_t Instance::max_bit_size() const {
  std::uint64_t s = 0;
  for (const Weight& w : weights) s = std::max(s, w.exponent());
  return s;
}

Instance parse_instance(std::string_view text) {
  std::vector<Token> tokens = tokenize(text);
  if (tokens.size() < 2) throw ParseError("line 1: expected item count and bin count");
  std::uint64_t n = parse_count(tokens[0], "item count");
  std::uint64_t m = parse_count(tokens[1], "bin count");
  if (tokens.size() != 2 + n)
    throw ParseError("expected " + std::to_string(n) + " weight records, found " +
                     std::to_string(tokens.size() - 2));
  Instance inst;
  inst.bins = m;
  inst.weights.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const Token& tok = tokens[2 + i];
    Weight w;
    try {
      w = Weight::parse(tok.text);
    } catch (const std::exception& e) {
      throw ParseError("line " + std::to_string(tok.line) + ": " + e.what());
    }
    if (w.is_zero() || w > Weight::one())
      throw ParseError("line " + std::to_string(tok.line) + ": weight " + tok.text +
                       " is outside (0, 1]");
    inst.weights.push_back(std::move(w));
  }
  return inst;
}

std::string serialize_instance(const Instance& inst) {
  std::ostringstream out;
  out << inst.size() << ' ' << inst.bins << '\n';
  for (const Weight& w : inst.weights) out << w.str() << '\n';
  return out.str();
}

}  // namespace dualbin

#include "bidihuff/oracle.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "bidihuff/error.hpp"

namespace bidihuff::oracle {

namespace {

void check_bit_cap(const BitString& bits, std::size_t cap) {
  if (bits.size() > cap) {
    throw CapExceeded("oracle input", std::to_string(bits.size()) + " bits", cap);
  }
}

bool matches_at(const BitString& bits, std::size_t pos, std::size_t end, const Codeword& word,
                std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    if (pos + i >= end || bits[pos + i] != static_cast<std::uint8_t>(word[i] - '0')) return false;
  }
  return true;
}

// Parses of bits[0, end) into whole reversed codewords, optionally followed by
// a nonempty tail that is a proper prefix of some reversed codeword.
void extend(const CodeTable& reversed, const BitString& bits, std::size_t end, std::size_t pos,
            Parse& current, bool allow_tail, std::set<Parse>& out) {
  if (pos == end) {
    out.insert(current);
    return;
  }
  const std::size_t rest = end - pos;
  for (SymbolId id = 0; id < reversed.codewords.size(); ++id) {
    const Codeword& w = reversed.codewords[id];
    if (w.size() <= rest) {
      if (matches_at(bits, pos, end, w, w.size())) {
        current.push_back(id);
        extend(reversed, bits, end, pos + w.size(), current, allow_tail, out);
        current.pop_back();
      }
    } else if (allow_tail && matches_at(bits, pos, end, w, rest)) {
      out.insert(current);
    }
  }
}

std::size_t common_prefix(const std::set<Parse>& parses) {
  const Parse& first = *parses.begin();
  std::size_t n = first.size();
  for (const auto& p : parses) {
    std::size_t k = 0;
    while (k < n && k < p.size() && p[k] == first[k]) ++k;
    n = k;
  }
  return n;
}

}  // namespace

std::vector<Parse> all_parses(const Codebook& code, const BitString& reversed_bits,
                              std::size_t cap) {
  check_bit_cap(reversed_bits, cap);
  const CodeTable reversed = reverse_code(code);
  std::set<Parse> out;
  Parse current;
  extend(reversed, reversed_bits, reversed_bits.size(), 0, current, false, out);
  return {out.begin(), out.end()};
}

std::vector<DecisionEvent> oracle_decision_trace(const Codebook& code,
                                                 const BitString& reversed_bits,
                                                 std::size_t cap) {
  check_bit_cap(reversed_bits, cap);
  const CodeTable reversed = reverse_code(code);
  std::vector<DecisionEvent> events;
  Parse committed;
  std::int64_t consumed = 0;

  auto emit = [&](std::int64_t t, const Parse& source, std::size_t upto) {
    if (upto <= committed.size()) return;
    DecisionEvent e;
    e.index = events.size() + 1;
    e.symbols.assign(source.begin() + static_cast<std::ptrdiff_t>(committed.size()),
                     source.begin() + static_cast<std::ptrdiff_t>(upto));
    e.commit_time = t;
    e.first_end = consumed + static_cast<std::int64_t>(reversed.codewords[e.symbols[0]].size());
    e.delay = e.commit_time - e.first_end;
    for (SymbolId s : e.symbols) consumed += static_cast<std::int64_t>(reversed.codewords[s].size());
    committed.assign(source.begin(), source.begin() + static_cast<std::ptrdiff_t>(upto));
    events.push_back(std::move(e));
  };

  const auto n = static_cast<std::int64_t>(reversed_bits.size());
  for (std::int64_t t = 1; t <= n; ++t) {
    std::set<Parse> viable;
    Parse current;
    extend(reversed, reversed_bits, static_cast<std::size_t>(t), 0, current, true, viable);
    if (viable.empty()) {
      throw InvalidStream("no viable parse after bit " + std::to_string(t));
    }
    const Parse& any = *viable.begin();
    emit(t, any, common_prefix(viable));
  }

  const auto full = all_parses(code, reversed_bits, cap);
  if (full.size() != 1) {
    throw InvalidStream(full.empty() ? "no complete parse" : "more than one complete parse");
  }
  emit(n, full[0], full[0].size());
  return events;
}

Rational exhaustive_avg_delay(const Codebook& code, std::size_t message_len, std::uint64_t cap) {
  const std::size_t m = code.size();
  BigInt total = 1;
  for (std::size_t i = 0; i < message_len; ++i) {
    total *= m;
    if (total > cap) break;
  }
  if (total > cap) {
    throw CapExceeded("exhaustive_avg_delay", std::to_string(m) + "^" + std::to_string(message_len) +
                                                  " messages",
                      cap);
  }

  // Weights are 2^-(total bits); scale everything by 2^(message_len * max_len).
  int max_len = 0;
  for (SymbolId s = 0; s < m; ++s) max_len = std::max(max_len, code.length(s));
  const auto scale_bits = static_cast<unsigned>(message_len * static_cast<std::size_t>(max_len));

  BigInt weighted_delay = 0;
  BigInt weighted_count = 0;
  std::vector<SymbolId> message(message_len, 0);
  while (true) {
    const BitString bits = encode(code, message);
    const BigInt weight = BigInt(1) << (scale_bits - static_cast<unsigned>(bits.size()));
    const auto events = oracle_decision_trace(code, bits.reversed(), bits.size());
    std::int64_t delay_sum = 0;
    for (const auto& e : events) delay_sum += e.delay;
    weighted_delay += weight * delay_sum;
    weighted_count += weight * static_cast<std::int64_t>(events.size());

    std::size_t pos = 0;
    while (pos < message_len && ++message[pos] == m) message[pos++] = 0;
    if (pos == message_len) break;
  }
  if (weighted_count == 0) return Rational(0);
  return Rational(weighted_delay, weighted_count);
}

}  // namespace bidihuff::oracle

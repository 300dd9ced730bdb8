#pragma once

#include <cstdint>
#include <vector>

#include "bidihuff/codebook.hpp"
#include "bidihuff/decoder.hpp"
#include "bidihuff/rational.hpp"

// Exhaustive reference implementations. Exponential by construction; every
// entry point enforces a size cap and throws CapExceeded beyond it.
namespace bidihuff::oracle {

inline constexpr std::size_t kDefaultBitCap = 32;
inline constexpr std::uint64_t kDefaultMessageCap = 1'000'000;

using Parse = std::vector<SymbolId>;

// Every decomposition of `reversed_bits` into reversed codewords.
std::vector<Parse> all_parses(const Codebook& code, const BitString& reversed_bits,
                              std::size_t cap = kDefaultBitCap);

// Decisions of the scenario-list semantics recomputed from scratch: after each
// prefix, every partial parse whose unparsed tail is empty or a proper prefix
// of a reversed codeword is viable, and the longest common symbol prefix of
// the viable parses is committed.
std::vector<DecisionEvent> oracle_decision_trace(const Codebook& code,
                                                 const BitString& reversed_bits,
                                                 std::size_t cap = kDefaultBitCap);

// Exact expected delay per decision, E[sum of delays] / E[number of
// decisions], over all m^message_len messages weighted by their dyadic
// probabilities, using the oracle trace.
Rational exhaustive_avg_delay(const Codebook& code, std::size_t message_len,
                              std::uint64_t cap = kDefaultMessageCap);

}  // namespace bidihuff::oracle

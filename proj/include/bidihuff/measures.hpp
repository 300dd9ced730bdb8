#pragma once

#include <cstdint>
#include <utility>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/codebook.hpp"
#include "bidihuff/enumerator.hpp"
#include "bidihuff/rational.hpp"

namespace bidihuff {

// How eta scores leaf squares. The default scores them 0 like any other
// non-middle node; LeavesPositive scores every square +1.
enum class EtaConvention { Default, LeavesPositive };

struct MeasureReport {
  Rational m_plus;
  Rational m_delta;
  Rational m_total;  // m_plus + m_delta
};

// Sum of 2^-level over middle squares.
Rational m_plus(const BackwardTrie& trie);

// +1 middle square, -1 null, 0 otherwise.
int eta(const BackwardTrie& trie, NodeIndex node, EtaConvention convention = EtaConvention::Default);

// Sum of eta(n) * 2^-level(n) over Q = children(middle squares) U children(root).
Rational m_delta(const BackwardTrie& trie, EtaConvention convention = EtaConvention::Default);

MeasureReport m_measure(const Codebook& code, EtaConvention convention = EtaConvention::Default);

struct Selection {
  Codebook code;
  MeasureReport report;
};

// The equivalent code with the largest M. Ties go to the code whose sorted
// codewords, concatenated, are lexicographically smallest.
Selection select_min_delay_code(const LengthVector& lengths,
                                std::uint64_t cap = kDefaultEnumerationCap,
                                EtaConvention convention = EtaConvention::Default);

// Tie-break key used by select_min_delay_code.
std::string selection_key(const Codebook& code);

}  // namespace bidihuff

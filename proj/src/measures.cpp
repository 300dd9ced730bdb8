#include "bidihuff/measures.hpp"

#include <algorithm>
#include <set>

namespace bidihuff {

Rational m_plus(const BackwardTrie& trie) {
  Rational sum = 0;
  for (NodeIndex v : node_classes(trie).middle_squares) {
    sum += dyadic(static_cast<unsigned>(trie.node(v).level()));
  }
  return sum;
}

int eta(const BackwardTrie& trie, NodeIndex node, EtaConvention convention) {
  switch (trie.node(node).kind) {
    case NodeKind::MiddleSquare: return 1;
    case NodeKind::Null: return -1;
    case NodeKind::LeafSquare: return convention == EtaConvention::LeavesPositive ? 1 : 0;
    case NodeKind::Plain: return 0;
  }
  return 0;
}

Rational m_delta(const BackwardTrie& trie, EtaConvention convention) {
  std::set<NodeIndex> q;
  auto add_children = [&](NodeIndex n) {
    for (int bit = 0; bit < 2; ++bit) {
      const NodeIndex c = trie.child(n, bit);
      if (c != kNoNode) q.insert(c);
    }
  };
  add_children(BackwardTrie::kRoot);
  for (NodeIndex v : node_classes(trie).middle_squares) add_children(v);

  Rational sum = 0;
  for (NodeIndex n : q) {
    const int e = eta(trie, n, convention);
    if (e != 0) sum += e * dyadic(static_cast<unsigned>(trie.node(n).level()));
  }
  return sum;
}

MeasureReport m_measure(const Codebook& code, EtaConvention convention) {
  const BackwardTrie trie(code);
  MeasureReport r;
  r.m_plus = m_plus(trie);
  r.m_delta = m_delta(trie, convention);
  r.m_total = r.m_plus + r.m_delta;
  return r;
}

std::string selection_key(const Codebook& code) {
  auto words = code.codewords();
  std::sort(words.begin(), words.end());
  std::string key;
  for (const auto& w : words) key += w;
  return key;
}

Selection select_min_delay_code(const LengthVector& lengths, std::uint64_t cap,
                                EtaConvention convention) {
  auto family = enumerate_codes(lengths, cap);
  std::optional<Selection> best;
  std::string best_key;
  while (auto code = family.next()) {
    MeasureReport report = m_measure(*code, convention);
    std::string key = selection_key(*code);
    if (!best || report.m_total > best->report.m_total ||
        (report.m_total == best->report.m_total && key < best_key)) {
      best = Selection{std::move(*code), std::move(report)};
      best_key = std::move(key);
    }
  }
  return std::move(*best);
}

}  // namespace bidihuff

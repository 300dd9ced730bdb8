#include "bidihuff/decoder.hpp"

#include <algorithm>
#include <sstream>

#include "bidihuff/error.hpp"

namespace bidihuff {

std::optional<EarlyCommit> early_commit_check(const BackwardTrie& trie, NodeIndex node) {
  NodeIndex cur = node;
  int distance = 0;
  while (true) {
    const TrieNode& n = trie.node(cur);
    if (n.kind == NodeKind::LeafSquare) {
      if (distance == 0) return std::nullopt;
      return EarlyCommit{*n.symbol, distance};
    }
    if (n.kind == NodeKind::Null) return std::nullopt;
    if (n.kind == NodeKind::MiddleSquare && cur != node) return std::nullopt;
    NodeIndex only = kNoNode;
    int live_children = 0;
    for (int bit = 0; bit < 2; ++bit) {
      const NodeIndex c = n.children[bit];
      if (c != kNoNode && trie.node(c).kind != NodeKind::Null) {
        only = c;
        ++live_children;
      }
    }
    if (live_children != 1) return std::nullopt;
    cur = only;
    ++distance;
  }
}

BackwardDecoder::BackwardDecoder(const BackwardTrie& trie, DecodeOptions options)
    : trie_(trie), options_(options), bound_(list_size_bound(trie)) {}

BackwardDecoder::Scenario BackwardDecoder::make_scenario() {
  Scenario s;
  if (!spare_.empty()) {
    s.buffer = std::move(spare_.back());
    spare_.pop_back();
    s.buffer.clear();
  }
  return s;
}

void BackwardDecoder::recycle(Scenario&& s) {
  if (s.buffer.capacity() > 0) spare_.push_back(std::move(s.buffer));
}

namespace {

class CollectingSink final : public DecisionSink {
 public:
  explicit CollectingSink(std::vector<DecisionEvent>& events) : events_(events) {}
  void on_decision(std::size_t index, std::int64_t commit_time, std::int64_t first_end,
                   std::span<const SymbolId> symbols) override {
    events_.push_back(DecisionEvent{index, {symbols.begin(), symbols.end()}, commit_time, first_end,
                                    commit_time - first_end});
  }

 private:
  std::vector<DecisionEvent>& events_;
};

}  // namespace

DecodeResult BackwardDecoder::decode(const BitString& bits) {
  DecodeResult result;
  CollectingSink sink(result.events);
  result.max_list_size = run(bits, sink);
  result.scenario_adds = scenario_adds_;
  for (auto it = result.events.rbegin(); it != result.events.rend(); ++it) {
    result.symbols.insert(result.symbols.end(), it->symbols.rbegin(), it->symbols.rend());
  }
  return result;
}

std::size_t BackwardDecoder::run(const BitString& bits, DecisionSink& sink) {
  for (auto& s : live_) recycle(std::move(s));
  live_.clear();
  live_.push_back(make_scenario());
  scenario_adds_ = 0;

  const auto n_bits = static_cast<std::int64_t>(bits.size());
  std::int64_t consumed = 0;  // reversed-stream bits covered by committed codewords
  std::size_t index = 0;
  std::size_t max_list = 1;

  for (std::int64_t t = 1; t <= n_bits; ++t) {
    const int bit = bits[static_cast<std::size_t>(n_bits - t)];
    next_.clear();
    std::size_t adds = 0;
    for (auto& s : live_) {
      const NodeIndex c = trie_.child(s.cursor, bit);
      if (c == kNoNode) {
        recycle(std::move(s));
        continue;
      }
      const TrieNode& node = trie_.node(c);
      switch (node.kind) {
        case NodeKind::Null:
          recycle(std::move(s));
          break;
        case NodeKind::Plain:
          s.cursor = c;
          next_.push_back(std::move(s));
          break;
        case NodeKind::MiddleSquare: {
          Scenario twin = make_scenario();
          twin.buffer.assign(s.buffer.begin(), s.buffer.end());
          twin.buffer.push_back(*node.symbol);
          s.cursor = c;
          next_.push_back(std::move(s));
          next_.push_back(std::move(twin));
          ++adds;
          break;
        }
        case NodeKind::LeafSquare:
          if (s.pending && *s.pending == *node.symbol) {
            s.pending.reset();
          } else {
            s.buffer.push_back(*node.symbol);
          }
          s.cursor = BackwardTrie::kRoot;
          next_.push_back(std::move(s));
          ++adds;
          break;
      }
    }
    live_.swap(next_);
    next_.clear();
    if (live_.empty()) {
      throw InvalidStream("no scenario survives bit " + std::to_string(t) +
                          " of the reversed stream");
    }
    scenario_adds_ += adds;
    max_list = std::max(max_list, live_.size());
    if (options_.check_invariants) check_invariants(t, adds);

    // Commit while every scenario agrees on its next buffered codeword.
    decided_.clear();
    for (std::size_t k = 0;; ++k) {
      if (live_[0].buffer.size() <= k) break;
      const SymbolId sym = live_[0].buffer[k];
      bool agree = true;
      for (std::size_t i = 1; i < live_.size() && agree; ++i) {
        agree = live_[i].buffer.size() > k && live_[i].buffer[k] == sym;
      }
      if (!agree) break;
      decided_.push_back(sym);
    }
    if (!decided_.empty()) {
      const auto k = static_cast<std::ptrdiff_t>(decided_.size());
      for (auto& s : live_) s.buffer.erase(s.buffer.begin(), s.buffer.begin() + k);
      sink.on_decision(++index, t, consumed + trie_.codeword_length(decided_[0]), decided_);
      for (SymbolId sym : decided_) consumed += trie_.codeword_length(sym);
    }

    if (options_.early_commit && live_.size() == 1 && live_[0].buffer.empty() &&
        !live_[0].pending) {
      if (auto ec = early_commit_check(trie_, live_[0].cursor)) {
        const SymbolId sym = ec->symbol;
        sink.on_decision(++index, t, consumed + trie_.codeword_length(sym), {&sym, 1});
        consumed += trie_.codeword_length(sym);
        live_[0].pending = sym;
        decided_.push_back(sym);
      }
    }
    if (trace_) trace_line(t, bit, decided_);
  }

  // Only scenarios sitting at the root hold a complete parse.
  std::size_t survivor = live_.size();
  std::size_t survivors = 0;
  for (std::size_t i = 0; i < live_.size(); ++i) {
    if (live_[i].cursor == BackwardTrie::kRoot && !live_[i].pending) {
      survivor = i;
      ++survivors;
    }
  }
  if (survivors != 1) {
    throw InvalidStream(survivors == 0 ? "stream does not end on a codeword boundary"
                                       : "more than one complete parse at end of stream");
  }
  auto& last = live_[survivor].buffer;
  if (!last.empty()) {
    sink.on_decision(++index, n_bits, consumed + trie_.codeword_length(last[0]), last);
    if (trace_) {
      std::ostringstream os;
      os << "end t=" << n_bits << " decided=[";
      for (std::size_t i = 0; i < last.size(); ++i) os << (i ? "," : "") << last[i];
      os << "]";
      trace_->push_back(os.str());
    }
    last.clear();
  }
  return max_list;
}

void BackwardDecoder::check_invariants(std::int64_t t, std::size_t adds) const {
  if (adds > 1) {
    throw InvariantViolation("more than one scenario inserted at bit " + std::to_string(t));
  }
  if (live_.size() > static_cast<std::size_t>(bound_) ||
      live_.size() > static_cast<std::size_t>(trie_.depth())) {
    throw InvariantViolation("list size " + std::to_string(live_.size()) + " exceeds bound at bit " +
                             std::to_string(t));
  }
  std::uint64_t seen_small = 0;
  std::vector<bool> seen_large;
  for (const auto& s : live_) {
    const TrieNode& n = trie_.node(s.cursor);
    if (n.kind == NodeKind::LeafSquare || n.kind == NodeKind::Null) {
      throw InvariantViolation("cursor rests on a " + std::string(to_string(n.kind)) +
                               " node at bit " + std::to_string(t));
    }
    const int level = n.level();
    bool dup = false;
    if (level < 64) {
      dup = (seen_small >> level) & 1u;
      seen_small |= std::uint64_t{1} << level;
    } else {
      if (seen_large.size() <= static_cast<std::size_t>(level)) seen_large.resize(level + 1);
      dup = seen_large[level];
      seen_large[level] = true;
    }
    if (dup) {
      throw InvariantViolation("two cursors at level " + std::to_string(level) + " at bit " +
                               std::to_string(t));
    }
  }
}

void BackwardDecoder::trace_line(std::int64_t t, int bit, std::span<const SymbolId> decided) {
  std::ostringstream os;
  os << "t=" << t << " bit=" << bit << " |L|=" << live_.size() << " scenarios=[";
  for (std::size_t i = 0; i < live_.size(); ++i) {
    const auto& s = live_[i];
    if (i) os << ",";
    os << "{";
    for (std::size_t k = 0; k < s.buffer.size(); ++k) os << (k ? "," : "") << s.buffer[k];
    const auto& label = trie_.node(s.cursor).label;
    os << ";" << (label.empty() ? "root" : label);
    if (s.pending) os << ";early=" << *s.pending;
    os << "}";
  }
  os << "] decided=[";
  for (std::size_t i = 0; i < decided.size(); ++i) os << (i ? "," : "") << decided[i];
  os << "]";
  trace_->push_back(os.str());
}

DecodeResult backward_decode(const BackwardTrie& trie, const BitString& bits, bool early_commit) {
  BackwardDecoder decoder(trie, DecodeOptions{early_commit, true});
  return decoder.decode(bits);
}

DecodeTrace backward_decode_trace(const BackwardTrie& trie, const BitString& bits,
                                  bool early_commit) {
  DecodeTrace out;
  BackwardDecoder decoder(trie, DecodeOptions{early_commit, true});
  decoder.set_trace(&out.lines);
  out.result = decoder.decode(bits);
  return out;
}

}  // namespace bidihuff

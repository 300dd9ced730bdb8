#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/codebook.hpp"

namespace bidihuff {

// One decision of the backward decoder. Positions are 1-based bit indices in
// the reversed stream.
struct DecisionEvent {
  std::size_t index = 0;          // 1-based decision ordinal
  std::vector<SymbolId> symbols;  // in backward-stream order
  std::int64_t commit_time = 0;   // bit after whose processing the decision fired
  std::int64_t first_end = 0;     // last bit of the first committed codeword
  std::int64_t delay = 0;         // commit_time - first_end

  friend bool operator==(const DecisionEvent&, const DecisionEvent&) = default;
};

struct DecodeResult {
  std::vector<SymbolId> symbols;  // forward order
  std::vector<DecisionEvent> events;
  std::size_t max_list_size = 0;
  std::size_t scenario_adds = 0;
};

struct DecodeOptions {
  // Commit the sole inevitable codeword ahead of time when the list holds a
  // single empty scenario on a branchless chain (negative delay).
  bool early_commit = false;
  // Verify per-bit structural properties and throw InvariantViolation.
  bool check_invariants = true;
};

struct EarlyCommit {
  SymbolId symbol;
  int distance;  // bits still to read until the codeword ends

  friend bool operator==(const EarlyCommit&, const EarlyCommit&) = default;
};

// The inevitable codeword below `node`, if the non-null subtree below it is a
// single chain without middle squares ending in a leaf square.
std::optional<EarlyCommit> early_commit_check(const BackwardTrie& trie, NodeIndex node);

// Receives decisions as they are made. `symbols` is only valid for the call.
class DecisionSink {
 public:
  virtual ~DecisionSink() = default;
  virtual void on_decision(std::size_t index, std::int64_t commit_time, std::int64_t first_end,
                           std::span<const SymbolId> symbols) = 0;
};

// Scenario-list backward decoder. Reusable across streams; keeps its scratch
// allocations between runs. Not thread-safe; use one instance per thread.
class BackwardDecoder {
 public:
  BackwardDecoder(const BackwardTrie& trie, DecodeOptions options = {});

  // Decodes forward-order `bits` by reading them from the end. Throws
  // InvalidStream or InvariantViolation.
  DecodeResult decode(const BitString& bits);

  // Streams decisions to `sink` without materializing the result. Returns
  // the peak list size.
  std::size_t run(const BitString& bits, DecisionSink& sink);

  // Scenarios inserted during the last run.
  std::size_t scenario_adds() const { return scenario_adds_; }

  // When set, one line per processed bit is appended.
  void set_trace(std::vector<std::string>* trace) { trace_ = trace; }

 private:
  struct Scenario {
    std::vector<SymbolId> buffer;
    NodeIndex cursor = BackwardTrie::kRoot;
    // Symbol already committed ahead of time by early commit.
    std::optional<SymbolId> pending;
  };

  Scenario make_scenario();
  void recycle(Scenario&& s);
  void trace_line(std::int64_t t, int bit, std::span<const SymbolId> decided);
  void check_invariants(std::int64_t t, std::size_t adds) const;

  const BackwardTrie& trie_;
  DecodeOptions options_;
  int bound_;
  std::size_t scenario_adds_ = 0;
  std::vector<Scenario> live_;
  std::vector<Scenario> next_;
  std::vector<std::vector<SymbolId>> spare_;
  std::vector<SymbolId> decided_;
  std::vector<std::string>* trace_ = nullptr;
};

DecodeResult backward_decode(const BackwardTrie& trie, const BitString& bits,
                             bool early_commit = false);

struct DecodeTrace {
  DecodeResult result;
  std::vector<std::string> lines;
};

DecodeTrace backward_decode_trace(const BackwardTrie& trie, const BitString& bits,
                                  bool early_commit = false);

}  // namespace bidihuff

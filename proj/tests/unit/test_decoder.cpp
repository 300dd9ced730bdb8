#include <doctest.h>

#include <random>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/decoder.hpp"
#include "bidihuff/enumerator.hpp"
#include "bidihuff/error.hpp"
#include "bidihuff/oracle.hpp"

using namespace bidihuff;

namespace {

const Codebook& six_word_code() {
  static const Codebook c({"00", "01", "100", "101", "110", "111"});
  return c;
}

std::vector<SymbolId> random_message(std::mt19937_64& rng, const Codebook& code, std::size_t len) {
  // Dyadic sampling by walking the codeword set on fair bits.
  std::vector<SymbolId> out;
  while (out.size() < len) {
    std::string w;
    for (;;) {
      w.push_back((rng() & 1) ? '1' : '0');
      const auto& words = code.codewords();
      auto it = std::find(words.begin(), words.end(), w);
      if (it != words.end()) {
        out.push_back(static_cast<SymbolId>(it - words.begin()));
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("one-codeword stream") {
  const Codebook abc({"0", "10", "11"});
  const BackwardTrie t(abc);
  const DecodeResult r = backward_decode(t, BitString::from_string("0"));
  REQUIRE(r.events.size() == 1);
  CHECK(r.events[0].delay == 0);
  CHECK(r.symbols == std::vector<SymbolId>{0});
}

TEST_CASE("example string a c c c c c b") {
  const Codebook abc({"0", "10", "11"});
  const BackwardTrie t(abc);
  const DecodeResult r = backward_decode(t, BitString::from_string("0111111111110"));
  CHECK(r.symbols == std::vector<SymbolId>{0, 2, 2, 2, 2, 2, 1});
  REQUIRE(r.events.size() == 2);
  CHECK(r.events[0] == DecisionEvent{1, {1, 2, 2, 2, 2, 2}, 13, 2, 11});
  CHECK(r.events[1] == DecisionEvent{2, {0}, 13, 13, 0});
  CHECK(r.max_list_size == 2);
}

TEST_CASE("persistent two-scenario ambiguity") {
  // Reversed stream 001 followed by seventeen 0s.
  const std::string reversed = "001" + std::string(17, '0');
  const BitString bits = BitString::from_string(reversed).reversed();
  const BackwardTrie t(six_word_code());
  const DecodeTrace tr = backward_decode_trace(t, bits);
  REQUIRE(tr.result.events.size() == 1);
  CHECK(tr.result.events[0].commit_time == 20);
  CHECK(tr.result.events[0].symbols.size() == 10);
  CHECK(tr.result.events[0].symbols.front() == 0);
  CHECK(tr.result.symbols.back() == 0);
  REQUIRE(tr.lines.size() == 21);
  // Both readings (c3 c1 c1 ... and c1 c2 c1 ...) stay alive to the end.
  for (std::size_t i = 3; i < 20; ++i) {
    CHECK(tr.lines[i].find("{2") != std::string::npos);
    CHECK(tr.lines[i].find("{0,1") != std::string::npos);
    CHECK(tr.lines[i].find("decided=[]") != std::string::npos);
  }
  CHECK(tr.lines.back().rfind("end t=20", 0) == 0);
  CHECK(oracle::all_parses(six_word_code(), BitString::from_string(reversed)).size() == 1);
}

TEST_CASE("empty stream") {
  const BackwardTrie t(Codebook({"0", "1"}));
  const DecodeTrace tr = backward_decode_trace(t, BitString{});
  CHECK(tr.result.events.empty());
  CHECK(tr.result.symbols.empty());
}

TEST_CASE("invalid streams") {
  const BackwardTrie t(Codebook({"0", "10", "11"}));
  CHECK_THROWS_AS(backward_decode(t, BitString::from_string("1")), InvalidStream);
  CHECK_THROWS_AS(backward_decode(t, BitString::from_string("111")), InvalidStream);
  const BackwardTrie t6(six_word_code());
  CHECK_THROWS_AS(backward_decode(t6, BitString::from_string("0")), InvalidStream);
}

TEST_CASE("early commit condition") {
  const BackwardTrie t9(anti_uniform_code(9));
  const NodeIndex one = t9.child(BackwardTrie::kRoot, 1);
  const auto ec = early_commit_check(t9, one);
  REQUIRE(ec.has_value());
  CHECK(ec->symbol == 8);
  CHECK(ec->distance == 7);
  CHECK_FALSE(early_commit_check(t9, BackwardTrie::kRoot).has_value());

  const BackwardTrie t6(six_word_code());
  CHECK_FALSE(early_commit_check(t6, t6.child(BackwardTrie::kRoot, 0)).has_value());
}

TEST_CASE("early commit gives negative delay") {
  const Codebook code = anti_uniform_code(9);
  const BackwardTrie t(code);
  const BitString bits = encode(code, std::vector<SymbolId>{0, 8});
  const DecodeResult r = backward_decode(t, bits, true);
  CHECK(r.symbols == std::vector<SymbolId>{0, 8});
  REQUIRE(r.events.size() == 2);
  CHECK(r.events[0] == DecisionEvent{1, {8}, 1, 8, -7});
  CHECK(r.events[1] == DecisionEvent{2, {0}, 9, 9, 0});

  const DecodeResult plain = backward_decode(t, bits, false);
  CHECK(plain.events[0].delay == 0);
}

TEST_CASE("round trip with invariant checks") {
  std::mt19937_64 rng(11);
  for (std::size_t m = 2; m <= 7; ++m) {
    for (const auto& lv : complete_length_vectors(m)) {
      auto family = enumerate_codes(lv);
      while (auto code = family.next()) {
        const BackwardTrie t(*code);
        BackwardDecoder plain(t, DecodeOptions{false, true});
        BackwardDecoder early(t, DecodeOptions{true, true});
        for (int trial = 0; trial < 5; ++trial) {
          const auto msg = random_message(rng, *code, 1 + rng() % 30);
          const BitString bits = encode(*code, msg);
          const DecodeResult a = plain.decode(bits);
          const DecodeResult b = early.decode(bits);
          CHECK(a.symbols == msg);
          CHECK(b.symbols == msg);
          CHECK(a.max_list_size <= static_cast<std::size_t>(list_size_bound(t)));
          CHECK(a.max_list_size <= static_cast<std::size_t>(t.depth()));
          // Every symbol is committed exactly once.
          std::size_t committed = 0;
          for (const auto& e : a.events) committed += e.symbols.size();
          CHECK(committed == msg.size());
          for (const auto& e : a.events) CHECK(e.delay >= 0);
        }
      }
    }
  }
}

TEST_CASE("decoder agrees with the oracle") {
  std::mt19937_64 rng(5);
  for (std::size_t m = 2; m <= 5; ++m) {
    for (const auto& lv : complete_length_vectors(m)) {
      auto family = enumerate_codes(lv);
      while (auto code = family.next()) {
        const BackwardTrie t(*code);
        for (int trial = 0; trial < 10; ++trial) {
          std::vector<SymbolId> msg;
          BitString bits;
          for (;;) {
            auto next = random_message(rng, *code, 1);
            if (bits.size() + code->length(next[0]) > 20) break;
            msg.push_back(next[0]);
            bits = encode(*code, msg);
          }
          CHECK(backward_decode(t, bits).events == oracle::oracle_decision_trace(*code, bits.reversed()));
        }
      }
    }
  }
}

TEST_CASE("decoder is reusable and sink-driven") {
  struct Count final : DecisionSink {
    std::size_t n = 0;
    void on_decision(std::size_t, std::int64_t, std::int64_t, std::span<const SymbolId>) override { ++n; }
  };
  const Codebook code = anti_uniform_code(5);
  const BackwardTrie t(code);
  BackwardDecoder d(t);
  const BitString bits = encode(code, std::vector<SymbolId>{4, 0, 3, 1, 2});
  Count sink;
  d.run(bits, sink);
  CHECK(sink.n == d.decode(bits).events.size());
  CHECK(d.decode(bits).symbols == std::vector<SymbolId>{4, 0, 3, 1, 2});
}

#include <doctest.h>

#include <map>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/enumerator.hpp"
#include "brute.hpp"

using namespace bidihuff;

namespace {

std::map<std::string, NodeKind> kinds(const BackwardTrie& t) {
  std::map<std::string, NodeKind> out;
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const auto& n = t.node(static_cast<NodeIndex>(i));
    out[n.label] = n.kind;
  }
  return out;
}

// Classification straight from the reversed codewords.
std::map<std::string, NodeKind> expected_kinds(const Codebook& code) {
  std::vector<std::string> rev;
  for (const auto& w : code.codewords()) rev.push_back(brute::reverse(w));
  auto is_word = [&](const std::string& s) { return std::find(rev.begin(), rev.end(), s) != rev.end(); };
  auto is_path = [&](const std::string& s) {
    for (const auto& r : rev) if (brute::is_prefix(s, r)) return true;
    return false;
  };
  auto has_longer = [&](const std::string& s) {
    for (const auto& r : rev) if (r.size() > s.size() && brute::is_prefix(s, r)) return true;
    return false;
  };
  std::map<std::string, NodeKind> out;
  std::vector<std::string> frontier{""};
  while (!frontier.empty()) {
    std::vector<std::string> next;
    for (const auto& s : frontier) {
      NodeKind k = NodeKind::Plain;
      if (is_word(s)) k = has_longer(s) ? NodeKind::MiddleSquare : NodeKind::LeafSquare;
      out[s] = k;
      if (k == NodeKind::LeafSquare) continue;
      for (char b : {'0', '1'}) {
        const std::string c = s + b;
        if (is_path(c)) next.push_back(c);
        else out[c] = NodeKind::Null;
      }
    }
    frontier = next;
  }
  return out;
}

}  // namespace

TEST_CASE("trie of the six-word example code") {
  const BackwardTrie t(Codebook({"00", "01", "100", "101", "110", "111"}));
  auto k = kinds(t);
  CHECK(k.at("00") == NodeKind::MiddleSquare);
  CHECK(k.at("10") == NodeKind::MiddleSquare);
  for (const char* leaf : {"001", "101", "011", "111"}) CHECK(k.at(leaf) == NodeKind::LeafSquare);
  for (const char* null : {"000", "100", "010", "110"}) CHECK(k.at(null) == NodeKind::Null);
  CHECK(t.depth() == 3);
  CHECK(node_classes(t).middle_squares.size() == 2);
  CHECK(node_classes(t).nulls.size() == 4);
  CHECK(t.read_out().codewords == std::vector<std::string>{"00", "10", "001", "101", "011", "111"});
}

TEST_CASE("trie of {0,1}") {
  const BackwardTrie t(Codebook({"0", "1"}));
  CHECK(t.node_count() == 3);
  CHECK(t.node(t.child(BackwardTrie::kRoot, 0)).kind == NodeKind::LeafSquare);
  CHECK(t.node(t.child(BackwardTrie::kRoot, 1)).kind == NodeKind::LeafSquare);
  CHECK(node_classes(t).nulls.empty());
  CHECK(node_classes(t).middle_squares.empty());
}

TEST_CASE("trie of anti-uniform codes") {
  const BackwardTrie t4(anti_uniform_code(4));
  auto k = kinds(t4);
  CHECK(k.at("0") == NodeKind::MiddleSquare);
  CHECK(k.at("01") == NodeKind::MiddleSquare);
  CHECK(k.at("011") == NodeKind::LeafSquare);
  CHECK(k.at("111") == NodeKind::LeafSquare);
  for (const char* null : {"00", "010", "10", "110"}) CHECK(k.at(null) == NodeKind::Null);

  const BackwardTrie t9(anti_uniform_code(9));
  std::vector<std::string> v;
  for (NodeIndex i : node_classes(t9).middle_squares) v.push_back(t9.node(i).label);
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<std::string>{"0", "01", "011", "0111", "01111", "011111", "0111111"});
}

TEST_CASE("trie matches a direct classification for every small code") {
  for (std::size_t m = 2; m <= 7; ++m) {
    for (const auto& lv : complete_length_vectors(m)) {
      auto family = enumerate_codes(lv);
      while (auto code = family.next()) {
        const BackwardTrie t(*code);
        CHECK(kinds(t) == expected_kinds(*code));
        CHECK(t.read_out() == reverse_code(*code));
        CHECK(t.depth() == lv.max_length());
        for (SymbolId s = 0; s < code->size(); ++s) {
          CHECK(t.node(t.square_of(s)).symbol == s);
          CHECK(t.node(t.square_of(s)).level() == code->length(s));
        }
        CHECK(t == BackwardTrie(*code));
      }
    }
  }
}

TEST_CASE("node classes partition the trie") {
  const BackwardTrie t(canonical_code(LengthVector::parse("2,2,2,3,4,5,5")));
  const auto c = node_classes(t);
  CHECK(c.middle_squares.size() + c.nulls.size() + c.others.size() == t.node_count());
  for (NodeIndex i : c.leaf_squares) CHECK(std::find(c.others.begin(), c.others.end(), i) != c.others.end());
}

TEST_CASE("list size bound") {
  CHECK(list_size_bound(canonical_code(LengthVector::parse("2,2,3,3,3,3"))) == 4);
  CHECK(list_size_bound(Codebook({"0", "1"})) == 1);
  for (std::size_t m = 2; m <= 9; ++m) {
    for (const auto& lv : complete_length_vectors(m)) {
      CHECK(list_size_bound(canonical_code(lv)) == brute::bound(lv.lengths()));
    }
  }
}

TEST_CASE("dot output") {
  const std::string dot = BackwardTrie(anti_uniform_code(3)).to_dot();
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("shape=square") != std::string::npos);
}

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bidihuff/codebook.hpp"

namespace bidihuff {

enum class NodeKind : std::uint8_t {
  Plain,         // path node (the root is Plain)
  MiddleSquare,  // codeword end with descendants
  LeafSquare,    // codeword end without descendants
  Null,          // materialized missing child
};

const char* to_string(NodeKind kind);

using NodeIndex = std::int32_t;
inline constexpr NodeIndex kNoNode = -1;

struct TrieNode {
  std::string label;  // bits from the root; level = label.size()
  NodeKind kind = NodeKind::Plain;
  std::array<NodeIndex, 2> children{kNoNode, kNoNode};
  std::optional<SymbolId> symbol;

  int level() const { return static_cast<int>(label.size()); }
  bool is_square() const { return kind == NodeKind::MiddleSquare || kind == NodeKind::LeafSquare; }
};

// E-tree node partition: V = middle squares, X = nulls, U = plain and leaf
// squares. leaf_squares is listed separately as well.
struct NodeClasses {
  std::vector<NodeIndex> middle_squares;  // V
  std::vector<NodeIndex> nulls;           // X
  std::vector<NodeIndex> others;          // U
  std::vector<NodeIndex> leaf_squares;
};

// Trie over the reversed codewords of a prefix code, with null children
// materialized under every non-null, non-leaf node.
class BackwardTrie {
 public:
  static constexpr NodeIndex kRoot = 0;

  explicit BackwardTrie(const Codebook& code);

  const TrieNode& node(NodeIndex i) const { return nodes_[static_cast<std::size_t>(i)]; }
  std::size_t node_count() const { return nodes_.size(); }
  NodeIndex child(NodeIndex i, int bit) const { return nodes_[static_cast<std::size_t>(i)].children[bit]; }

  int depth() const { return depth_; }
  std::size_t alphabet_size() const { return codeword_lengths_.size(); }
  // Length of the codeword of `symbol` (same forwards and backwards).
  int codeword_length(SymbolId symbol) const { return codeword_lengths_[symbol]; }
  // Node at which the reversed codeword of `symbol` ends.
  NodeIndex square_of(SymbolId symbol) const { return squares_[symbol]; }

  // Reads the reversed codewords back out of the trie, indexed by symbol id.
  CodeTable read_out() const;

  std::string to_dot() const;

  // Structural equality (labels, kinds, symbols, shape).
  friend bool operator==(const BackwardTrie& a, const BackwardTrie& b);

 private:
  std::vector<TrieNode> nodes_;
  std::vector<int> codeword_lengths_;
  std::vector<NodeIndex> squares_;
  int depth_ = 0;
};

inline BackwardTrie build_backward_trie(const Codebook& code) { return BackwardTrie(code); }

NodeClasses node_classes(const BackwardTrie& trie);

// min{ floor(log_phi((phi+1)/(p_m*phi + p_{m-1}))), m-1 } over the two
// smallest probabilities of the code.
int list_size_bound(const Codebook& code);
int list_size_bound(const BackwardTrie& trie);
// Same bound from the two largest codeword lengths and the alphabet size.
int list_size_bound(int longest, int second_longest, std::size_t alphabet_size);

}  // namespace bidihuff

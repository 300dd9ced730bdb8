#include "bidihuff/backtrie.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bidihuff {

const char* to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::Plain: return "plain";
    case NodeKind::MiddleSquare: return "middle-square";
    case NodeKind::LeafSquare: return "leaf-square";
    case NodeKind::Null: return "null";
  }
  return "?";
}

BackwardTrie::BackwardTrie(const Codebook& code) {
  nodes_.push_back(TrieNode{});
  const auto reversed = reverse_code(code);
  squares_.assign(code.size(), kNoNode);
  for (SymbolId id = 0; id < code.size(); ++id) {
    const Codeword& word = reversed.codewords[id];
    codeword_lengths_.push_back(static_cast<int>(word.size()));
    depth_ = std::max(depth_, static_cast<int>(word.size()));
    NodeIndex cur = kRoot;
    for (char c : word) {
      const int bit = c - '0';
      NodeIndex next = nodes_[static_cast<std::size_t>(cur)].children[bit];
      if (next == kNoNode) {
        next = static_cast<NodeIndex>(nodes_.size());
        TrieNode n;
        n.label = nodes_[static_cast<std::size_t>(cur)].label + c;
        nodes_.push_back(std::move(n));
        nodes_[static_cast<std::size_t>(cur)].children[bit] = next;
      }
      cur = next;
    }
    auto& end = nodes_[static_cast<std::size_t>(cur)];
    if (end.symbol) throw std::invalid_argument("duplicate reversed codeword '" + word + "'");
    end.symbol = id;
    squares_[id] = cur;
  }

  // Classify, then materialize nulls under every non-leaf node.
  const std::size_t real_nodes = nodes_.size();
  for (std::size_t i = 0; i < real_nodes; ++i) {
    auto& n = nodes_[i];
    const bool has_children = n.children[0] != kNoNode || n.children[1] != kNoNode;
    if (n.symbol) n.kind = has_children ? NodeKind::MiddleSquare : NodeKind::LeafSquare;
  }
  for (std::size_t i = 0; i < real_nodes; ++i) {
    if (nodes_[i].kind == NodeKind::LeafSquare) continue;
    for (int bit = 0; bit < 2; ++bit) {
      if (nodes_[i].children[bit] != kNoNode) continue;
      TrieNode null_node;
      null_node.label = nodes_[i].label + static_cast<char>('0' + bit);
      null_node.kind = NodeKind::Null;
      nodes_[i].children[bit] = static_cast<NodeIndex>(nodes_.size());
      nodes_.push_back(std::move(null_node));
    }
  }
}

CodeTable BackwardTrie::read_out() const {
  CodeTable out;
  for (NodeIndex sq : squares_) out.codewords.push_back(node(sq).label);
  return out;
}

std::string BackwardTrie::to_dot() const {
  std::ostringstream os;
  os << "digraph backward_trie {\n";
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const auto& n = nodes_[i];
    const std::string name = n.label.empty() ? "root" : n.label;
    os << "  n" << i << " [label=\"" << name;
    if (n.symbol) os << "\\nc" << *n.symbol;
    os << "\", shape=";
    switch (n.kind) {
      case NodeKind::MiddleSquare:
      case NodeKind::LeafSquare: os << "square"; break;
      case NodeKind::Plain: os << "circle"; break;
      case NodeKind::Null: os << "point"; break;
    }
    os << "];\n";
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    for (int bit = 0; bit < 2; ++bit) {
      const NodeIndex c = nodes_[i].children[bit];
      if (c != kNoNode) os << "  n" << i << " -> n" << c << " [label=\"" << bit << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

bool operator==(const BackwardTrie& a, const BackwardTrie& b) {
  if (a.depth_ != b.depth_ || a.codeword_lengths_ != b.codeword_lengths_) return false;
  // Compare by simultaneous traversal so node numbering does not matter.
  std::vector<std::pair<NodeIndex, NodeIndex>> stack{{BackwardTrie::kRoot, BackwardTrie::kRoot}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if ((x == kNoNode) != (y == kNoNode)) return false;
    if (x == kNoNode) continue;
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (nx.label != ny.label || nx.kind != ny.kind || nx.symbol != ny.symbol) return false;
    for (int bit = 0; bit < 2; ++bit) stack.emplace_back(nx.children[bit], ny.children[bit]);
  }
  return true;
}

NodeClasses node_classes(const BackwardTrie& trie) {
  NodeClasses out;
  for (std::size_t i = 0; i < trie.node_count(); ++i) {
    const auto idx = static_cast<NodeIndex>(i);
    switch (trie.node(idx).kind) {
      case NodeKind::MiddleSquare: out.middle_squares.push_back(idx); break;
      case NodeKind::Null: out.nulls.push_back(idx); break;
      case NodeKind::LeafSquare:
        out.leaf_squares.push_back(idx);
        out.others.push_back(idx);
        break;
      case NodeKind::Plain: out.others.push_back(idx); break;
    }
  }
  return out;
}

int list_size_bound(int longest, int second_longest, std::size_t alphabet_size) {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double p_m = std::ldexp(1.0, -longest);
  const double p_m1 = std::ldexp(1.0, -second_longest);
  const double x = std::log((phi + 1.0) / (p_m * phi + p_m1)) / std::log(phi);
  // The argument is never an exact power of phi for dyadic p, so a tiny
  // epsilon only absorbs rounding.
  const auto buro = static_cast<long long>(std::floor(x + 1e-12));
  return static_cast<int>(std::min<long long>(buro, static_cast<long long>(alphabet_size) - 1));
}

int list_size_bound(const Codebook& code) {
  const LengthVector lv = code.length_vector();
  const auto& lengths = lv.lengths();
  const std::size_t m = lengths.size();
  return list_size_bound(lengths[m - 1], lengths[m - 2], m);
}

int list_size_bound(const BackwardTrie& trie) {
  std::vector<int> lengths;
  for (SymbolId s = 0; s < trie.alphabet_size(); ++s) lengths.push_back(trie.codeword_length(s));
  std::sort(lengths.begin(), lengths.end());
  const std::size_t m = lengths.size();
  return list_size_bound(lengths[m - 1], lengths[m - 2], m);
}

}  // namespace bidihuff

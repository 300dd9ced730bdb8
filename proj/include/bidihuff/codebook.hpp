#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bidihuff/rational.hpp"

namespace bidihuff {

using SymbolId = std::uint32_t;

// A codeword is a string over {'0','1'}.
using Codeword = std::string;

// A bitstream. Each element is 0 or 1.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::vector<std::uint8_t> bits);

  // Parses a string of '0'/'1' characters; throws std::invalid_argument on
  // anything else.
  static BitString from_string(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  void push_back(std::uint8_t bit) { bits_.push_back(bit ? 1 : 0); }
  void append(std::string_view codeword);
  void clear() { bits_.clear(); }
  void reserve(std::size_t n) { bits_.reserve(n); }

  BitString reversed() const;
  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Sorted multiset of codeword lengths of a complete binary prefix code.
class LengthVector {
 public:
  // Throws KraftError unless the Kraft sum is exactly 1, std::invalid_argument
  // for an empty sequence, a nonpositive length, or fewer than two lengths.
  static LengthVector validate(std::span<const int> lengths);

  // Comma separated integers, e.g. "1,2,3,3".
  static LengthVector parse(std::string_view text);

  const std::vector<int>& lengths() const { return lengths_; }
  std::size_t alphabet_size() const { return lengths_.size(); }
  int max_length() const { return lengths_.back(); }
  // Number of codewords of exactly `length` bits.
  int multiplicity(int length) const;

  std::string to_string() const;  // "(1,2,3,3)"

  friend bool operator==(const LengthVector&, const LengthVector&) = default;

 private:
  explicit LengthVector(std::vector<int> lengths) : lengths_(std::move(lengths)) {}
  std::vector<int> lengths_;
};

// Exact Kraft sum of a length sequence.
Rational kraft_sum(std::span<const int> lengths);

// Plain codeword table, used for reversed codes, which need not be prefix-free.
struct CodeTable {
  std::vector<Codeword> codewords;  // index = symbol id

  friend bool operator==(const CodeTable&, const CodeTable&) = default;
};

// Complete binary prefix code with dyadic probabilities p_i = 2^-l_i.
// Symbol ids are ordered by codeword length, then lexicographically.
class Codebook {
 public:
  // Validates characters, prefix-freeness and Kraft-tightness, then sorts into
  // canonical symbol order. Throws KraftError or std::invalid_argument.
  explicit Codebook(std::vector<Codeword> codewords);

  std::size_t size() const { return codewords_.size(); }
  const Codeword& codeword(SymbolId id) const { return codewords_.at(id); }
  const std::vector<Codeword>& codewords() const { return codewords_; }
  int length(SymbolId id) const { return static_cast<int>(codewords_.at(id).size()); }
  LengthVector length_vector() const;
  Rational probability(SymbolId id) const;
  CodeTable table() const { return CodeTable{codewords_}; }

  // Codewords joined by ',' in symbol order.
  std::string to_string() const;

  friend bool operator==(const Codebook&, const Codebook&) = default;

 private:
  std::vector<Codeword> codewords_;
};

Codebook canonical_code(const LengthVector& lengths);

// s_i = 1^(i-1) 0 for i < n, s_n = 1^(n-1). Throws std::invalid_argument for n < 2.
Codebook anti_uniform_code(int n);

// Bitwise reversal of every codeword; symbol ids preserved.
CodeTable reverse_code(const CodeTable& table);
inline CodeTable reverse_code(const Codebook& code) { return reverse_code(code.table()); }

// Throws std::out_of_range for an unknown symbol id.
BitString encode(const Codebook& code, std::span<const SymbolId> symbols);

// Forward prefix parse. Throws DecodeError if the bits end inside a codeword.
std::vector<SymbolId> prefix_decode(const Codebook& code, const BitString& bits);

// Text format: one codeword per line, line i is symbol i; blank lines and
// lines starting with '#' are ignored.
Codebook parse_codebook_text(std::string_view text);
Codebook load_codebook_file(const std::string& path);
std::string format_codebook_text(const Codebook& code);

}  // namespace bidihuff

#include "bidihuff/codebook.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "bidihuff/error.hpp"

namespace bidihuff {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) {
    if (b > 1) throw std::invalid_argument("bit value must be 0 or 1");
  }
}

BitString BitString::from_string(std::string_view text) {
  BitString out;
  out.reserve(text.size());
  out.append(text);
  return out;
}

void BitString::append(std::string_view codeword) {
  for (char c : codeword) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument(std::string("invalid bit character '") + c + "'");
    }
    bits_.push_back(c == '1' ? 1 : 0);
  }
}

BitString BitString::reversed() const {
  return BitString(std::vector<std::uint8_t>(bits_.rbegin(), bits_.rend()));
}

std::string BitString::to_string() const {
  std::string s;
  s.reserve(bits_.size());
  for (auto b : bits_) s.push_back(b ? '1' : '0');
  return s;
}

Rational kraft_sum(std::span<const int> lengths) {
  if (lengths.empty()) return Rational(0);
  const int max_len = *std::max_element(lengths.begin(), lengths.end());
  BigInt scaled = 0;
  for (int l : lengths) scaled += BigInt(1) << (max_len - l);
  return Rational(scaled, BigInt(1) << max_len);
}

LengthVector LengthVector::validate(std::span<const int> lengths) {
  if (lengths.empty()) throw std::invalid_argument("length vector is empty");
  for (int l : lengths) {
    if (l < 1) throw std::invalid_argument("codeword length " + std::to_string(l) + " is not positive");
  }
  if (lengths.size() < 2) throw std::invalid_argument("alphabet size must be at least 2");
  const Rational sum = kraft_sum(lengths);
  if (sum < 1) throw KraftError(KraftError::Kind::Deficit, to_fraction_string(sum));
  if (sum > 1) throw KraftError(KraftError::Kind::Overflow, to_fraction_string(sum));
  std::vector<int> sorted(lengths.begin(), lengths.end());
  std::sort(sorted.begin(), sorted.end());
  return LengthVector(std::move(sorted));
}

LengthVector LengthVector::parse(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  // Accept an optional surrounding "(...)".
  while (!text.empty() && (text.front() == '(' || text.front() == ' ')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ')' || text.back() == ' ')) text.remove_suffix(1);
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
      throw std::invalid_argument("cannot parse length '" + std::string(item) + "'");
    }
    values.push_back(value);
    pos = comma + 1;
  }
  return validate(values);
}

int LengthVector::multiplicity(int length) const {
  return static_cast<int>(std::count(lengths_.begin(), lengths_.end(), length));
}

std::string LengthVector::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < lengths_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(lengths_[i]);
  }
  return s + ")";
}

namespace {

bool canonical_less(const Codeword& a, const Codeword& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

Codebook::Codebook(std::vector<Codeword> codewords) : codewords_(std::move(codewords)) {
  if (codewords_.size() < 2) throw std::invalid_argument("a code needs at least two codewords");
  std::vector<int> lengths;
  for (const auto& w : codewords_) {
    if (w.empty()) throw std::invalid_argument("empty codeword");
    if (w.find_first_not_of("01") != Codeword::npos) {
      throw std::invalid_argument("codeword '" + w + "' has characters other than 0/1");
    }
    lengths.push_back(static_cast<int>(w.size()));
  }
  // Throws on a Kraft mismatch.
  LengthVector::validate(lengths);

  std::sort(codewords_.begin(), codewords_.end());
  for (std::size_t i = 0; i + 1 < codewords_.size(); ++i) {
    // In lexicographic order a prefix is immediately followed by its extensions.
    if (codewords_[i + 1].starts_with(codewords_[i])) {
      throw std::invalid_argument("codeword '" + codewords_[i] + "' is a prefix of '" +
                                  codewords_[i + 1] + "'");
    }
  }
  std::sort(codewords_.begin(), codewords_.end(), canonical_less);
}

LengthVector Codebook::length_vector() const {
  std::vector<int> lengths;
  for (const auto& w : codewords_) lengths.push_back(static_cast<int>(w.size()));
  return LengthVector::validate(lengths);
}

Rational Codebook::probability(SymbolId id) const {
  return dyadic(static_cast<unsigned>(length(id)));
}

std::string Codebook::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < codewords_.size(); ++i) {
    if (i) s += ',';
    s += codewords_[i];
  }
  return s;
}

Codebook canonical_code(const LengthVector& lengths) {
  std::vector<Codeword> words;
  std::uint64_t code = 0;
  int prev_len = 0;
  // Lengths are sorted ascending; codes increase by one, shifted on length change.
  for (int len : lengths.lengths()) {
    if (len > 63) throw std::invalid_argument("canonical_code supports lengths up to 63");
    if (!words.empty()) ++code;
    code <<= (len - prev_len);
    prev_len = len;
    Codeword w(static_cast<std::size_t>(len), '0');
    for (int i = 0; i < len; ++i) {
      if ((code >> (len - 1 - i)) & 1u) w[static_cast<std::size_t>(i)] = '1';
    }
    words.push_back(std::move(w));
  }
  return Codebook(std::move(words));
}

Codebook anti_uniform_code(int n) {
  if (n < 2) throw std::invalid_argument("anti-uniform code needs n >= 2");
  std::vector<Codeword> words;
  for (int i = 1; i < n; ++i) words.push_back(Codeword(static_cast<std::size_t>(i - 1), '1') + '0');
  words.push_back(Codeword(static_cast<std::size_t>(n - 1), '1'));
  return Codebook(std::move(words));
}

CodeTable reverse_code(const CodeTable& table) {
  CodeTable out;
  out.codewords.reserve(table.codewords.size());
  for (const auto& w : table.codewords) out.codewords.emplace_back(w.rbegin(), w.rend());
  return out;
}

BitString encode(const Codebook& code, std::span<const SymbolId> symbols) {
  BitString out;
  for (SymbolId s : symbols) {
    if (s >= code.size()) {
      throw std::out_of_range("symbol id " + std::to_string(s) + " out of range for alphabet of " +
                              std::to_string(code.size()));
    }
    out.append(code.codeword(s));
  }
  return out;
}

std::vector<SymbolId> prefix_decode(const Codebook& code, const BitString& bits) {
  // Small binary trie; node 0 is the root, leaves carry a symbol.
  struct Node {
    int child[2] = {-1, -1};
    int symbol = -1;
  };
  std::vector<Node> nodes(1);
  for (SymbolId id = 0; id < code.size(); ++id) {
    int cur = 0;
    for (char c : code.codeword(id)) {
      const int b = c - '0';
      if (nodes[cur].child[b] < 0) {
        nodes[cur].child[b] = static_cast<int>(nodes.size());
        nodes.emplace_back();
      }
      cur = nodes[cur].child[b];
    }
    nodes[cur].symbol = static_cast<int>(id);
  }

  std::vector<SymbolId> out;
  int cur = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    cur = nodes[cur].child[bits[i]];
    if (nodes[cur].symbol >= 0) {
      out.push_back(static_cast<SymbolId>(nodes[cur].symbol));
      cur = 0;
      start = i + 1;
    }
  }
  if (cur != 0) throw DecodeError(DecodeError::Kind::DeadEnd, start);
  return out;
}

Codebook parse_codebook_text(std::string_view text) {
  std::vector<Codeword> words;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    words.push_back(line.substr(first, last - first + 1));
  }
  return Codebook(std::move(words));
}

Codebook load_codebook_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open codebook file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_codebook_text(buf.str());
}

std::string format_codebook_text(const Codebook& code) {
  std::string out;
  for (const auto& w : code.codewords()) out += w + "\n";
  return out;
}

}  // namespace bidihuff

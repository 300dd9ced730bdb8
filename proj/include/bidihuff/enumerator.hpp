#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bidihuff/codebook.hpp"
#include "bidihuff/rational.hpp"

namespace bidihuff {

inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000;

// Number of distinct codeword sets with length multiset L:
// prod_d C(available_d, k_d), available_1 = 2,
// available_{d+1} = 2 * (available_d - k_d).
BigInt count_equivalent(const LengthVector& lengths);

// Lazily yields every prefix code with length multiset L exactly once.
// Depth by depth, the k_d leaves are chosen among the available nodes in
// lexicographic subset order; the first code yielded is the canonical one.
class CodeFamily {
 public:
  const LengthVector& length_vector() const { return lengths_; }
  const BigInt& count() const { return count_; }

  // Next code, or nullopt when exhausted.
  std::optional<Codebook> next();

 private:
  friend CodeFamily enumerate_codes(const LengthVector&, std::uint64_t);
  explicit CodeFamily(LengthVector lengths);

  Codebook materialize() const;
  bool advance();

  LengthVector lengths_;
  BigInt count_;
  std::vector<int> available_;               // per depth, index 0 = depth 1
  std::vector<int> leaves_;                  // k_d
  std::vector<std::vector<int>> choice_;     // chosen leaf positions per depth
  bool started_ = false;
  bool done_ = false;
};

// Throws CapExceeded if count_equivalent(L) > cap.
CodeFamily enumerate_codes(const LengthVector& lengths,
                           std::uint64_t cap = kDefaultEnumerationCap);

// Every complete length vector over an alphabet of m symbols, each sorted
// ascending, in lexicographic order.
std::vector<LengthVector> complete_length_vectors(std::size_t m);

}  // namespace bidihuff

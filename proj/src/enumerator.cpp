#include "bidihuff/enumerator.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "bidihuff/error.hpp"

namespace bidihuff {

namespace {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

// Next k-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[static_cast<std::size_t>(i)] < n - k + i) {
      ++c[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

}  // namespace

BigInt count_equivalent(const LengthVector& lengths) {
  BigInt count = 1;
  int available = 2;
  for (int d = 1; d <= lengths.max_length(); ++d) {
    const int k = lengths.multiplicity(d);
    count *= binomial(available, k);
    available = 2 * (available - k);
  }
  return count;
}

CodeFamily::CodeFamily(LengthVector lengths)
    : lengths_(std::move(lengths)), count_(count_equivalent(lengths_)) {
  int available = 2;
  for (int d = 1; d <= lengths_.max_length(); ++d) {
    const int k = lengths_.multiplicity(d);
    available_.push_back(available);
    leaves_.push_back(k);
    choice_.push_back(first_combination(k));
    available = 2 * (available - k);
  }
}

Codebook CodeFamily::materialize() const {
  std::vector<Codeword> words;
  std::vector<std::string> frontier{"0", "1"};
  for (std::size_t d = 0; d < available_.size(); ++d) {
    std::vector<std::string> next;
    const auto& chosen = choice_[d];
    std::size_t c = 0;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      if (c < chosen.size() && chosen[c] == static_cast<int>(i)) {
        words.push_back(frontier[i]);
        ++c;
      } else {
        next.push_back(frontier[i] + '0');
        next.push_back(frontier[i] + '1');
      }
    }
    frontier = std::move(next);
  }
  return Codebook(std::move(words));
}

bool CodeFamily::advance() {
  for (std::size_t d = choice_.size(); d-- > 0;) {
    if (next_combination(choice_[d], available_[d])) {
      for (std::size_t e = d + 1; e < choice_.size(); ++e) choice_[e] = first_combination(leaves_[e]);
      return true;
    }
  }
  return false;
}

std::optional<Codebook> CodeFamily::next() {
  if (done_) return std::nullopt;
  if (started_ && !advance()) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return materialize();
}

CodeFamily enumerate_codes(const LengthVector& lengths, std::uint64_t cap) {
  const BigInt count = count_equivalent(lengths);
  if (count > cap) throw CapExceeded("enumerate_codes " + lengths.to_string(), count.str() + " codes", cap);
  return CodeFamily(lengths);
}

std::vector<LengthVector> complete_length_vectors(std::size_t m) {
  // Leaf counts per depth: at each depth choose how many of the available
  // nodes become leaves; the rest split. Stops when all m leaves are placed.
  std::vector<LengthVector> out;
  std::vector<int> lengths;
  std::function<void(int, int)> rec = [&](int depth, int available) {
    const int placed = static_cast<int>(lengths.size());
    const int remaining = static_cast<int>(m) - placed;
    if (remaining == 0) {
      if (available == 0) out.push_back(LengthVector::validate(lengths));
      return;
    }
    if (available == 0 || available > remaining) return;
    for (int k = std::min(available, remaining); k >= 0; --k) {
      const int internal = available - k;
      // Every internal node eventually needs at least two leaves below it.
      if (placed + k + 2 * internal > static_cast<int>(m)) continue;
      if (internal == 0 && k != remaining) continue;
      lengths.insert(lengths.end(), static_cast<std::size_t>(k), depth);
      rec(depth + 1, 2 * internal);
      lengths.resize(static_cast<std::size_t>(placed));
    }
  };
  if (m >= 2) rec(1, 2);
  std::sort(out.begin(), out.end(), [](const LengthVector& a, const LengthVector& b) {
    return a.lengths() < b.lengths();
  });
  return out;
}

}  // namespace bidihuff

#pragma once

// Test-side reference computations that share no code with the library.

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

namespace brute {

inline bool is_prefix(const std::string& a, const std::string& b) {
  return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
}

inline bool prefix_free(const std::vector<std::string>& words) {
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (i != j && is_prefix(words[i], words[j])) return false;
  return true;
}

inline std::string binary(unsigned value, int width) {
  std::string s(static_cast<std::size_t>(width), '0');
  for (int i = width - 1; i >= 0; --i, value >>= 1) s[static_cast<std::size_t>(i)] = char('0' + (value & 1u));
  return s;
}

// Every prefix-free set of words with the given sorted lengths, each set
// sorted. Exponential; meant for lengths up to 6 or so.
inline std::set<std::vector<std::string>> all_codes(const std::vector<int>& lengths) {
  std::set<std::vector<std::string>> out;
  std::vector<std::string> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == lengths.size()) {
      auto sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      out.insert(sorted);
      return;
    }
    const int l = lengths[i];
    // Equal lengths are chosen in increasing order to avoid permutations.
    unsigned start = 0;
    if (i > 0 && lengths[i - 1] == l) start = static_cast<unsigned>(std::stoul(cur.back(), nullptr, 2)) + 1;
    for (unsigned v = start; v < (1u << l); ++v) {
      std::string w = binary(v, l);
      bool ok = true;
      for (const auto& c : cur) ok = ok && !is_prefix(c, w) && !is_prefix(w, c);
      if (!ok) continue;
      cur.push_back(w);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

inline std::string reverse(std::string s) {
  std::reverse(s.begin(), s.end());
  return s;
}

// floor(log_phi((phi+1)/(p_m*phi + p_{m-1}))) capped at m-1, from the two
// longest lengths.
inline int bound(const std::vector<int>& sorted_lengths) {
  const double phi = (1 + std::sqrt(5.0)) / 2;
  const std::size_t m = sorted_lengths.size();
  const double pm = std::ldexp(1.0, -sorted_lengths[m - 1]);
  const double pm1 = std::ldexp(1.0, -sorted_lengths[m - 2]);
  const double x = std::log((phi + 1) / (pm * phi + pm1)) / std::log(phi);
  return std::min(static_cast<int>(std::floor(x + 1e-9)), static_cast<int>(m) - 1);
}

}  // namespace brute

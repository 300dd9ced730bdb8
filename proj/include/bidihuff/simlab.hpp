#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bidihuff/codebook.hpp"
#include "bidihuff/enumerator.hpp"
#include "bidihuff/measures.hpp"
#include "bidihuff/rational.hpp"

namespace bidihuff {

inline constexpr std::uint64_t kDefaultMasterSeed = 0x5EED0F0DDBA11ULL;

struct SimConfig {
  std::uint64_t n_strings = 20000;
  std::uint64_t symbols_per_string = 200;
  std::uint64_t master_seed = kDefaultMasterSeed;
  bool early_commit = true;
  // Worker threads; 0 picks BIDIHUFF_THREADS or the hardware concurrency.
  // Results do not depend on this value.
  unsigned threads = 0;

  static SimConfig full() { return SimConfig{}; }
  static SimConfig fast() {
    SimConfig c;
    c.n_strings = 2000;
    return c;
  }
};

// Seed of string `index`: splitmix64(master_seed + splitmix64(index)).
std::uint64_t string_seed(std::uint64_t master_seed, std::uint64_t index);

// Draws `n_symbols` i.i.d. dyadic symbols and returns their encoding. Each
// symbol is sampled by walking the code tree on fair random bits, so
// P(symbol i) = 2^-l_i exactly. The generator is std::mt19937_64 seeded
// with string_seed(...); bits are taken least significant first.
BitString sample_stream(const Codebook& code, std::uint64_t seed, std::uint64_t n_symbols,
                        std::vector<SymbolId>* symbols = nullptr);

struct ProfilePoint {
  std::size_t index = 0;  // 1-based decision ordinal
  double mean_delay = 0;
  std::uint64_t count = 0;
};

struct DelayStats {
  double mean_delay = 0;  // pooled over every decision of every string
  double std_error = 0;   // ratio-estimator standard error over strings
  std::vector<ProfilePoint> profile;
  std::map<std::int64_t, std::uint64_t> histogram;  // delay -> number of decisions
  std::size_t max_list_size = 0;
  std::uint64_t decisions = 0;
  std::int64_t delay_sum = 0;
  std::uint64_t strings = 0;

  double frequency(std::int64_t delay) const;
};

// Throws std::invalid_argument for an empty configuration; decoder errors
// propagate.
DelayStats simulate_code(const Codebook& code, const SimConfig& cfg);

struct CodeResult {
  Codebook code;
  MeasureReport measures;
  DelayStats stats;
};

struct SweepRow {
  LengthVector lengths;
  BigInt count;
  double min_dbar = 0;
  double max_dbar = 0;
  double selected_dbar = 0;
  double delta_d = 0;  // selected - min
  std::size_t min_index = 0;
  std::size_t max_index = 0;
  std::size_t selected_index = 0;
  std::vector<CodeResult> codes;  // enumeration order
};

// Simulates every equivalent code of L under the same per-string seeds.
SweepRow sweep_family(const LengthVector& lengths, const SimConfig& cfg,
                      std::uint64_t cap = kDefaultEnumerationCap,
                      EtaConvention convention = EtaConvention::Default);

// (1 - p_n) * sum_{j < terms} p_n^j (j(n-1) + 1). Throws std::invalid_argument
// unless 0 < p_n < 1, n >= 2 and terms >= 1.
Rational anti_uniform_delay_series(int n, const Rational& p_n, std::uint64_t terms);

// (n-1)/(2^(n-1) - 1) + 1. Throws std::invalid_argument for n < 2.
Rational anti_uniform_delay_closed(int n);

struct Table3Row {
  int n = 0;
  Rational theory;
  DelayStats simulation;
};

std::vector<Table3Row> table3(int n_min, int n_max, const SimConfig& cfg);

}  // namespace bidihuff

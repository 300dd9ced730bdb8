#include "bidihuff/simlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/decoder.hpp"

namespace bidihuff {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Forward code tree used for sampling; leaves hold symbol ids.
struct SamplingTree {
  struct Node {
    std::int32_t child[2] = {-1, -1};
    std::int32_t symbol = -1;
  };
  std::vector<Node> nodes;

  explicit SamplingTree(const Codebook& code) : nodes(1) {
    for (SymbolId id = 0; id < code.size(); ++id) {
      std::int32_t cur = 0;
      for (char c : code.codeword(id)) {
        const int b = c - '0';
        if (nodes[static_cast<std::size_t>(cur)].child[b] < 0) {
          nodes[static_cast<std::size_t>(cur)].child[b] = static_cast<std::int32_t>(nodes.size());
          nodes.emplace_back();
        }
        cur = nodes[static_cast<std::size_t>(cur)].child[b];
      }
      nodes[static_cast<std::size_t>(cur)].symbol = static_cast<std::int32_t>(id);
    }
  }
};

void fill_stream(const SamplingTree& tree, std::uint64_t seed, std::uint64_t n_symbols,
                 BitString& bits, std::vector<SymbolId>* symbols) {
  std::mt19937_64 rng(seed);
  std::uint64_t word = 0;
  int left = 0;
  bits.clear();
  for (std::uint64_t s = 0; s < n_symbols; ++s) {
    std::int32_t cur = 0;
    do {
      if (left == 0) {
        word = rng();
        left = 64;
      }
      const int b = static_cast<int>(word & 1u);
      word >>= 1;
      --left;
      bits.push_back(static_cast<std::uint8_t>(b));
      cur = tree.nodes[static_cast<std::size_t>(cur)].child[b];
    } while (tree.nodes[static_cast<std::size_t>(cur)].symbol < 0);
    if (symbols) symbols->push_back(static_cast<SymbolId>(tree.nodes[static_cast<std::size_t>(cur)].symbol));
  }
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BIDIHUFF_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Integer accumulators; merging is order-insensitive, so any split of the
// strings over workers gives bit-identical results.
struct Accumulator final : DecisionSink {
  std::int64_t delay_offset = 0;
  std::vector<std::uint64_t> hist;  // delay + delay_offset
  std::map<std::int64_t, std::uint64_t> hist_overflow;
  std::vector<std::int64_t> profile_sum;
  std::vector<std::uint64_t> profile_count;
  std::int64_t delay_sum = 0;
  std::uint64_t decisions = 0;
  __int128 sum_dd = 0, sum_de = 0, sum_ee = 0;
  std::size_t max_list = 0;
  std::uint64_t strings = 0;

  std::int64_t string_delay = 0;
  std::int64_t string_events = 0;

  void on_decision(std::size_t index, std::int64_t commit_time, std::int64_t first_end,
                   std::span<const SymbolId>) override {
    const std::int64_t d = commit_time - first_end;
    string_delay += d;
    ++string_events;
    const std::int64_t slot = d + delay_offset;
    if (slot >= 0 && slot < 4096) {
      if (static_cast<std::size_t>(slot) >= hist.size()) hist.resize(static_cast<std::size_t>(slot) + 1, 0);
      ++hist[static_cast<std::size_t>(slot)];
    } else {
      ++hist_overflow[d];
    }
    if (index > profile_sum.size()) {
      profile_sum.resize(index, 0);
      profile_count.resize(index, 0);
    }
    profile_sum[index - 1] += d;
    ++profile_count[index - 1];
  }

  void end_string(std::size_t list_size) {
    delay_sum += string_delay;
    decisions += static_cast<std::uint64_t>(string_events);
    sum_dd += static_cast<__int128>(string_delay) * string_delay;
    sum_de += static_cast<__int128>(string_delay) * string_events;
    sum_ee += static_cast<__int128>(string_events) * string_events;
    max_list = std::max(max_list, list_size);
    ++strings;
    string_delay = 0;
    string_events = 0;
  }

  void merge(const Accumulator& o) {
    if (o.hist.size() > hist.size()) hist.resize(o.hist.size(), 0);
    for (std::size_t i = 0; i < o.hist.size(); ++i) hist[i] += o.hist[i];
    for (const auto& [d, c] : o.hist_overflow) hist_overflow[d] += c;
    if (o.profile_sum.size() > profile_sum.size()) {
      profile_sum.resize(o.profile_sum.size(), 0);
      profile_count.resize(o.profile_sum.size(), 0);
    }
    for (std::size_t i = 0; i < o.profile_sum.size(); ++i) {
      profile_sum[i] += o.profile_sum[i];
      profile_count[i] += o.profile_count[i];
    }
    delay_sum += o.delay_sum;
    decisions += o.decisions;
    sum_dd += o.sum_dd;
    sum_de += o.sum_de;
    sum_ee += o.sum_ee;
    max_list = std::max(max_list, o.max_list);
    strings += o.strings;
  }
};

}  // namespace

std::uint64_t string_seed(std::uint64_t master_seed, std::uint64_t index) {
  return splitmix64(master_seed + splitmix64(index));
}

BitString sample_stream(const Codebook& code, std::uint64_t seed, std::uint64_t n_symbols,
                        std::vector<SymbolId>* symbols) {
  const SamplingTree tree(code);
  BitString bits;
  fill_stream(tree, seed, n_symbols, bits, symbols);
  return bits;
}

double DelayStats::frequency(std::int64_t delay) const {
  if (decisions == 0) return 0;
  auto it = histogram.find(delay);
  return it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(decisions);
}

DelayStats simulate_code(const Codebook& code, const SimConfig& cfg) {
  if (cfg.n_strings < 1 || cfg.symbols_per_string < 1) {
    throw std::invalid_argument("simulation needs at least one string of at least one symbol");
  }
  const BackwardTrie trie(code);
  const SamplingTree tree(code);
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(resolve_threads(cfg.threads), cfg.n_strings));

  std::vector<Accumulator> parts(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](unsigned w) {
    try {
      Accumulator& acc = parts[w];
      acc.delay_offset = trie.depth();
      BackwardDecoder decoder(trie, DecodeOptions{cfg.early_commit, true});
      const std::uint64_t begin = cfg.n_strings * w / workers;
      const std::uint64_t end = cfg.n_strings * (w + 1) / workers;
      BitString stream;
      for (std::uint64_t i = begin; i < end; ++i) {
        fill_stream(tree, string_seed(cfg.master_seed, i), cfg.symbols_per_string, stream, nullptr);
        acc.end_string(decoder.run(stream, acc));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  Accumulator total;
  total.delay_offset = trie.depth();
  for (const auto& p : parts) total.merge(p);

  DelayStats out;
  out.strings = total.strings;
  out.decisions = total.decisions;
  out.delay_sum = total.delay_sum;
  out.max_list_size = total.max_list;
  if (total.decisions > 0) {
    const long double mean =
        static_cast<long double>(total.delay_sum) / static_cast<long double>(total.decisions);
    out.mean_delay = static_cast<double>(mean);
    const auto s = static_cast<long double>(total.strings);
    if (total.strings > 1) {
      const long double resid = static_cast<long double>(total.sum_dd) -
                                2 * mean * static_cast<long double>(total.sum_de) +
                                mean * mean * static_cast<long double>(total.sum_ee);
      const long double e_bar = static_cast<long double>(total.decisions) / s;
      out.std_error = static_cast<double>(std::sqrt(std::max<long double>(resid, 0) / (s * (s - 1))) / e_bar);
    }
  }
  for (std::size_t i = 0; i < total.hist.size(); ++i) {
    if (total.hist[i]) out.histogram[static_cast<std::int64_t>(i) - total.delay_offset] = total.hist[i];
  }
  for (const auto& [d, c] : total.hist_overflow) out.histogram[d] += c;
  for (std::size_t i = 0; i < total.profile_sum.size(); ++i) {
    if (total.profile_count[i] == 0) continue;
    out.profile.push_back(ProfilePoint{i + 1,
                                       static_cast<double>(total.profile_sum[i]) /
                                           static_cast<double>(total.profile_count[i]),
                                       total.profile_count[i]});
  }
  return out;
}

SweepRow sweep_family(const LengthVector& lengths, const SimConfig& cfg, std::uint64_t cap,
                      EtaConvention convention) {
  const Selection selected = select_min_delay_code(lengths, cap, convention);
  auto family = enumerate_codes(lengths, cap);
  SweepRow row{lengths, family.count(), 0, 0, 0, 0, 0, 0, 0, {}};
  while (auto code = family.next()) {
    MeasureReport m = m_measure(*code, convention);
    DelayStats stats = simulate_code(*code, cfg);
    if (*code == selected.code) row.selected_index = row.codes.size();
    row.codes.push_back(CodeResult{std::move(*code), std::move(m), std::move(stats)});
  }
  for (std::size_t i = 0; i < row.codes.size(); ++i) {
    const double d = row.codes[i].stats.mean_delay;
    if (d < row.codes[row.min_index].stats.mean_delay) row.min_index = i;
    if (d > row.codes[row.max_index].stats.mean_delay) row.max_index = i;
  }
  row.min_dbar = row.codes[row.min_index].stats.mean_delay;
  row.max_dbar = row.codes[row.max_index].stats.mean_delay;
  row.selected_dbar = row.codes[row.selected_index].stats.mean_delay;
  row.delta_d = row.selected_dbar - row.min_dbar;
  return row;
}

Rational anti_uniform_delay_series(int n, const Rational& p_n, std::uint64_t terms) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  if (p_n <= 0 || p_n >= 1) throw std::invalid_argument("p_n must lie in (0, 1)");
  if (terms < 1) throw std::invalid_argument("need at least one term");
  Rational sum = 0;
  Rational power = 1;
  for (std::uint64_t j = 0; j < terms; ++j) {
    sum += power * (BigInt(j) * (n - 1) + 1);
    power *= p_n;
  }
  return (1 - p_n) * sum;
}

Rational anti_uniform_delay_closed(int n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  const BigInt denom = (BigInt(1) << (n - 1)) - 1;
  return Rational(BigInt(n - 1), denom) + 1;
}

std::vector<Table3Row> table3(int n_min, int n_max, const SimConfig& cfg) {
  std::vector<Table3Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    rows.push_back(Table3Row{n, anti_uniform_delay_closed(n), simulate_code(anti_uniform_code(n), cfg)});
  }
  return rows;
}

}  // namespace bidihuff

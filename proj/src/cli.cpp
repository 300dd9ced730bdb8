#include "bidihuff/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/codebook.hpp"
#include "bidihuff/decoder.hpp"
#include "bidihuff/enumerator.hpp"
#include "bidihuff/error.hpp"
#include "bidihuff/measures.hpp"
#include "bidihuff/reference_tables.hpp"
#include "bidihuff/simlab.hpp"

namespace bidihuff::cli {

namespace {

using nlohmann::json;

constexpr const char* kSchemaId = "bidihuff-result/1";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CodeSource {
  std::string lengths;
  std::string code_file;
  bool anti_uniform = false;
  int n = 0;
};

struct Options {
  std::string command;
  std::string format = "csv";
  std::string output;
  std::uint64_t seed = kDefaultMasterSeed;
  std::uint64_t strings = 0;  // 0 = from profile
  std::uint64_t symbols = 0;  // 0 = from profile
  bool early_commit = true;
  bool fast = false;
  unsigned threads = 0;
  std::uint64_t cap = kDefaultEnumerationCap;
  bool eta_leaves_positive = false;

  CodeSource code;

  bool count_only = false;
  std::optional<std::string> bits;
  std::optional<std::string> message;
  bool trace = false;
  std::uint64_t terms = 64;
  std::string table;
  bool dot = false;
};

std::string fixed(double v, int digits = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

json rational_json(const Rational& r) {
  return json{{"fraction", to_fraction_string(r)}, {"value", to_double(r)}};
}

SimConfig sim_config(const Options& o) {
  SimConfig c = o.fast ? SimConfig::fast() : SimConfig::full();
  if (o.strings) c.n_strings = o.strings;
  if (o.symbols) c.symbols_per_string = o.symbols;
  c.master_seed = o.seed;
  c.early_commit = o.early_commit;
  c.threads = o.threads;
  return c;
}

json config_json(const Options& o) {
  json j{{"command", o.command}, {"format", o.format}};
  const SimConfig c = sim_config(o);
  j["seed"] = o.seed;
  j["strings"] = c.n_strings;
  j["symbols"] = c.symbols_per_string;
  j["early_commit"] = o.early_commit;
  j["fast"] = o.fast;
  j["threads"] = o.threads;
  j["cap"] = o.cap;
  j["eta"] = o.eta_leaves_positive ? "leaves-positive" : "default";
  if (!o.code.lengths.empty()) j["lengths"] = o.code.lengths;
  if (!o.code.code_file.empty()) j["code_file"] = o.code.code_file;
  if (o.code.anti_uniform) j["anti_uniform_n"] = o.code.n;
  if (!o.table.empty()) j["table"] = o.table;
  return j;
}

EtaConvention eta_convention(const Options& o) {
  return o.eta_leaves_positive ? EtaConvention::LeavesPositive : EtaConvention::Default;
}

Codebook resolve_code(const CodeSource& src) {
  const int given = (!src.lengths.empty()) + (!src.code_file.empty()) + (src.anti_uniform ? 1 : 0);
  if (given != 1) {
    throw UsageError("give exactly one of -L, --code-file, --anti-uniform -n N");
  }
  if (!src.lengths.empty()) return canonical_code(LengthVector::parse(src.lengths));
  if (!src.code_file.empty()) return load_codebook_file(src.code_file);
  if (src.n < 2) throw UsageError("--anti-uniform needs -n N with N >= 2");
  return anti_uniform_code(src.n);
}

LengthVector require_lengths(const Options& o) {
  if (o.code.lengths.empty()) throw UsageError("-L is required");
  return LengthVector::parse(o.code.lengths);
}

std::string space_joined(const Codebook& code) {
  std::string s;
  for (std::size_t i = 0; i < code.size(); ++i) s += (i ? " " : "") + code.codeword(static_cast<SymbolId>(i));
  return s;
}

std::string lengths_csv_field(const LengthVector& l) { return "\"" + l.to_string() + "\""; }

json measures_json(const Codebook& code, const MeasureReport& r) {
  return json{{"code", code.codewords()},
              {"m_plus", rational_json(r.m_plus)},
              {"m_delta", rational_json(r.m_delta)},
              {"m_total", rational_json(r.m_total)}};
}

json stats_json(const DelayStats& s) {
  json profile = json::array();
  for (const auto& p : s.profile) {
    profile.push_back({{"index", p.index}, {"mean_delay", p.mean_delay}, {"count", p.count}});
  }
  json hist = json::array();
  for (const auto& [d, c] : s.histogram) {
    hist.push_back({{"delay", d}, {"count", c}, {"frequency", s.frequency(d)}});
  }
  return json{{"mean_delay", s.mean_delay}, {"std_error", s.std_error},
              {"decisions", s.decisions},   {"strings", s.strings},
              {"delay_sum", s.delay_sum},   {"max_list_size", s.max_list_size},
              {"profile", profile},         {"histogram", hist}};
}

class Report {
 public:
  explicit Report(const Options& o) : o_(o) {}

  // CSV output starts with a comment carrying the resolved configuration.
  std::ostringstream& csv() { return csv_; }
  json& result() { return result_; }

  std::string render() const {
    if (o_.format == "json") {
      json envelope{{"schema", kSchemaId}, {"command", o_.command}, {"config", config_json(o_)},
                    {"result", result_}};
      return envelope.dump(2) + "\n";
    }
    return "# bidihuff " + o_.command + " " + config_json(o_).dump() + "\n" + csv_.str();
  }

 private:
  const Options& o_;
  std::ostringstream csv_;
  json result_ = json::object();
};

void cmd_validate(const Options& o, Report& r) {
  const LengthVector l = require_lengths(o);
  r.csv() << "length_vector,alphabet_size,kraft_sum,valid\n"
          << lengths_csv_field(l) << "," << l.alphabet_size() << ",1,true\n";
  r.result() = {{"length_vector", l.lengths()}, {"alphabet_size", l.alphabet_size()},
                {"kraft_sum", "1"}, {"valid", true}};
}

void cmd_enumerate(const Options& o, Report& r) {
  const LengthVector l = require_lengths(o);
  const BigInt count = count_equivalent(l);
  r.result()["length_vector"] = l.lengths();
  r.result()["count"] = count.str();
  if (o.count_only) {
    r.csv() << count << "\n";
    return;
  }
  auto family = enumerate_codes(l, o.cap);
  json codes = json::array();
  while (auto code = family.next()) {
    r.csv() << code->to_string() << "\n";
    codes.push_back(code->codewords());
  }
  r.result()["codes"] = codes;
}

void cmd_search(const Options& o, Report& r) {
  const LengthVector l = require_lengths(o);
  const Selection sel = select_min_delay_code(l, o.cap, eta_convention(o));
  const auto& m = sel.report;
  r.csv() << "code,m_plus,m_delta,m_total,m_plus_value,m_delta_value,m_total_value\n"
          << space_joined(sel.code) << "," << to_fraction_string(m.m_plus) << ","
          << to_fraction_string(m.m_delta) << "," << to_fraction_string(m.m_total) << ","
          << fixed(to_double(m.m_plus)) << "," << fixed(to_double(m.m_delta)) << ","
          << fixed(to_double(m.m_total)) << "\n";
  r.result() = measures_json(sel.code, m);
  r.result()["length_vector"] = l.lengths();
  r.result()["count"] = count_equivalent(l).str();
}

void cmd_measure(const Options& o, Report& r) {
  const Codebook code = resolve_code(o.code);
  const MeasureReport m = m_measure(code, eta_convention(o));
  if (o.dot) {
    r.csv() << BackwardTrie(code).to_dot();
  } else {
    r.csv() << "code,m_plus,m_delta,m_total,m_plus_value,m_delta_value,m_total_value\n"
            << space_joined(code) << "," << to_fraction_string(m.m_plus) << ","
            << to_fraction_string(m.m_delta) << "," << to_fraction_string(m.m_total) << ","
            << fixed(to_double(m.m_plus)) << "," << fixed(to_double(m.m_delta)) << ","
            << fixed(to_double(m.m_total)) << "\n";
  }
  r.result() = measures_json(code, m);
  r.result()["list_size_bound"] = list_size_bound(code);
}

std::vector<SymbolId> parse_message(const std::string& text) {
  std::vector<SymbolId> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad symbol id '" + item + "'");
    out.push_back(static_cast<SymbolId>(v));
  }
  return out;
}

void cmd_decode(const Options& o, Report& r) {
  const Codebook code = resolve_code(o.code);
  if (o.bits.has_value() == o.message.has_value()) throw UsageError("give exactly one of --bits, --message");
  const BitString bits = o.bits ? BitString::from_string(*o.bits) : encode(code, parse_message(*o.message));
  const BackwardTrie trie(code);
  const DecodeTrace tr = backward_decode_trace(trie, bits, o.early_commit);
  const DecodeResult& res = tr.result;

  if (o.trace) {
    for (const auto& line : tr.lines) r.csv() << line << "\n";
  } else {
    r.csv() << "index,symbols,commit_time,first_end,delay\n";
    for (const auto& e : res.events) {
      r.csv() << e.index << ",";
      for (std::size_t i = 0; i < e.symbols.size(); ++i) r.csv() << (i ? " " : "") << e.symbols[i];
      r.csv() << "," << e.commit_time << "," << e.first_end << "," << e.delay << "\n";
    }
  }
  json events = json::array();
  for (const auto& e : res.events) {
    events.push_back({{"index", e.index}, {"symbols", e.symbols}, {"commit_time", e.commit_time},
                      {"first_end", e.first_end}, {"delay", e.delay}});
  }
  r.result() = {{"bits", bits.to_string()},
                {"symbols", res.symbols},
                {"events", events},
                {"max_list_size", res.max_list_size},
                {"scenario_adds", res.scenario_adds},
                {"list_size_bound", list_size_bound(code)}};
  if (o.trace) r.result()["trace"] = tr.lines;
}

void cmd_simulate(const Options& o, Report& r) {
  const Codebook code = resolve_code(o.code);
  const DelayStats s = simulate_code(code, sim_config(o));
  r.csv() << "# mean_delay=" << fixed(s.mean_delay) << " std_error=" << fixed(s.std_error)
          << " decisions=" << s.decisions << " max_list_size=" << s.max_list_size << "\n";
  r.csv() << "decision_index,mean_delay,count\n";
  for (const auto& p : s.profile) r.csv() << p.index << "," << fixed(p.mean_delay) << "," << p.count << "\n";
  r.result() = stats_json(s);
  r.result()["code"] = code.codewords();
  r.result()["list_size_bound"] = list_size_bound(code);
}

json sweep_json(const SweepRow& row) {
  json codes = json::array();
  for (const auto& c : row.codes) {
    json j = measures_json(c.code, c.measures);
    j["mean_delay"] = c.stats.mean_delay;
    j["std_error"] = c.stats.std_error;
    j["max_list_size"] = c.stats.max_list_size;
    codes.push_back(j);
  }
  return json{{"length_vector", row.lengths.lengths()},
              {"count", row.count.str()},
              {"min_dbar", row.min_dbar},
              {"max_dbar", row.max_dbar},
              {"selected_dbar", row.selected_dbar},
              {"delta_d", row.delta_d},
              {"selected_code", row.codes[row.selected_index].code.codewords()},
              {"min_code", row.codes[row.min_index].code.codewords()},
              {"codes", codes}};
}

void sweep_csv_row(std::ostream& os, const SweepRow& row) {
  os << lengths_csv_field(row.lengths) << "," << row.count << "," << fixed(row.min_dbar, 3) << ","
     << fixed(row.max_dbar, 3) << "," << fixed(row.selected_dbar, 3) << "," << fixed(row.delta_d, 3);
}

void cmd_sweep(const Options& o, Report& r) {
  const LengthVector l = require_lengths(o);
  const SweepRow row = sweep_family(l, sim_config(o), o.cap, eta_convention(o));
  r.csv() << "length_vector,count,min_dbar,max_dbar,selected_dbar,delta_d\n";
  sweep_csv_row(r.csv(), row);
  r.csv() << "\n";
  r.result() = sweep_json(row);
}

void cmd_theory(const Options& o, Report& r) {
  if (!o.code.anti_uniform) throw UsageError("theory currently supports --anti-uniform -n N");
  if (o.code.n < 2) throw UsageError("--anti-uniform needs -n N with N >= 2");
  const Rational closed = anti_uniform_delay_closed(o.code.n);
  const Rational series = anti_uniform_delay_series(o.code.n, dyadic(static_cast<unsigned>(o.code.n - 1)), o.terms);
  r.csv() << "n,closed_form,closed_form_value,series_terms,series_value\n"
          << o.code.n << "," << to_fraction_string(closed) << "," << fixed(to_double(closed)) << ","
          << o.terms << "," << fixed(to_double(series)) << "\n";
  r.result() = {{"n", o.code.n},
                {"closed_form", rational_json(closed)},
                {"series_terms", o.terms},
                {"series", rational_json(series)}};
}

void cmd_reproduce(const Options& o, Report& r) {
  const SimConfig cfg = sim_config(o);
  if (o.table == "table3") {
    r.csv() << "n,theory,simulation,std_error,reference_theory,reference_simulation\n";
    json rows = json::array();
    for (const auto& ref : reference::anti_uniform_table()) {
      const Rational theory = anti_uniform_delay_closed(ref.n);
      const DelayStats s = simulate_code(anti_uniform_code(ref.n), cfg);
      r.csv() << ref.n << "," << fixed(to_double(theory)) << "," << fixed(s.mean_delay) << ","
              << fixed(s.std_error) << "," << ref.theory << "," << ref.simulation << "\n";
      rows.push_back({{"n", ref.n},
                      {"theory", rational_json(theory)},
                      {"simulation", s.mean_delay},
                      {"std_error", s.std_error},
                      {"reference_theory", ref.theory},
                      {"reference_simulation", ref.simulation}});
    }
    r.result() = {{"table", o.table}, {"rows", rows}};
    return;
  }
  int alphabet = 0;
  if (o.table == "table4") alphabet = 7;
  if (o.table == "table5") alphabet = 8;
  if (o.table == "table6") alphabet = 9;
  if (!alphabet) throw UsageError("unknown table '" + o.table + "' (table3|table4|table5|table6)");

  r.csv() << "length_vector,count,min_dbar,max_dbar,selected_dbar,delta_d,"
             "ref_count,ref_min_dbar,ref_max_dbar,ref_selected_dbar,ref_delta_d,ref_anomalous\n";
  json rows = json::array();
  for (const auto& ref : reference::sweep_table(alphabet)) {
    const SweepRow row = sweep_family(LengthVector::parse(ref.lengths), cfg, o.cap, eta_convention(o));
    sweep_csv_row(r.csv(), row);
    r.csv() << "," << ref.count << "," << fixed(ref.min_dbar, 3) << "," << fixed(ref.max_dbar, 3) << ","
            << fixed(ref.selected_dbar, 3) << "," << fixed(ref.delta_d, 3) << ","
            << (ref.anomalous ? "true" : "false") << "\n";
    json j = sweep_json(row);
    j["reference"] = {{"count", ref.count},         {"min_dbar", ref.min_dbar},
                      {"max_dbar", ref.max_dbar},   {"selected_dbar", ref.selected_dbar},
                      {"delta_d", ref.delta_d},     {"anomalous", ref.anomalous}};
    rows.push_back(j);
  }
  r.result() = {{"table", o.table}, {"rows", rows}};
}

void add_format_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", o.output, "Write the report to PATH instead of stdout");
}

void add_sim_flags(CLI::App* sub, Options& o) {
  sub->add_option("--seed", o.seed, "Master seed");
  sub->add_option("--strings", o.strings, "Number of strings (default 20000, 2000 with --fast)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--symbols", o.symbols, "Symbols per string (default 200)")->check(CLI::PositiveNumber);
  sub->add_flag("--fast", o.fast, "2000 x 200 profile");
  sub->add_option("--threads", o.threads, "Worker threads (default BIDIHUFF_THREADS or all cores)");
}

void add_early_commit_flag(CLI::App* sub, Options& o) {
  sub->add_flag("--early-commit,!--no-early-commit", o.early_commit,
                "Commit an inevitable codeword ahead of time (negative delay)");
}

void add_code_source(CLI::App* sub, Options& o) {
  sub->add_option("-L,--lengths", o.code.lengths, "Length vector, comma separated (canonical code)");
  sub->add_option("--code-file", o.code.code_file, "Codebook text file");
  sub->add_flag("--anti-uniform", o.code.anti_uniform, "Canonical anti-uniform code");
  sub->add_option("-n", o.code.n, "Alphabet size for --anti-uniform");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bidirectional Huffman decoding delay toolkit", "bidihuff"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "Check a length vector (exact Kraft test)");
  validate->add_option("-L,--lengths", o.code.lengths, "Length vector")->required();
  add_format_flags(validate, o);

  auto* enumerate = app.add_subcommand("enumerate", "List every prefix code with a length vector");
  enumerate->add_option("-L,--lengths", o.code.lengths, "Length vector")->required();
  enumerate->add_flag("--count-only", o.count_only, "Print only the number of codes");
  enumerate->add_option("--cap", o.cap, "Refuse families larger than this");
  add_format_flags(enumerate, o);

  auto* search = app.add_subcommand("search", "Pick the equivalent code with the largest M");
  search->add_option("-L,--lengths", o.code.lengths, "Length vector")->required();
  search->add_option("--cap", o.cap, "Refuse families larger than this");
  search->add_flag("--eta-leaves-positive", o.eta_leaves_positive, "Score leaf squares +1 in eta");
  add_format_flags(search, o);

  auto* measure = app.add_subcommand("measure", "m+, m-delta and M of one code");
  add_code_source(measure, o);
  measure->add_flag("--eta-leaves-positive", o.eta_leaves_positive, "Score leaf squares +1 in eta");
  measure->add_flag("--dot", o.dot, "Emit the backward trie in DOT format instead of CSV");
  add_format_flags(measure, o);

  auto* decode = app.add_subcommand("decode", "Backward-decode a stream with delay instrumentation");
  add_code_source(decode, o);
  decode->add_option("--bits", o.bits, "Forward-order bit string");
  decode->add_option("--message", o.message, "Comma separated symbol ids to encode first");
  decode->add_flag("--trace", o.trace, "Print the scenario list after every bit");
  add_early_commit_flag(decode, o);
  add_format_flags(decode, o);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo average delay of one code");
  add_code_source(simulate, o);
  add_sim_flags(simulate, o);
  add_early_commit_flag(simulate, o);
  add_format_flags(simulate, o);

  auto* sweep = app.add_subcommand("sweep", "Simulate every equivalent code of a length vector");
  sweep->add_option("-L,--lengths", o.code.lengths, "Length vector")->required();
  sweep->add_option("--cap", o.cap, "Refuse families larger than this");
  sweep->add_flag("--eta-leaves-positive", o.eta_leaves_positive, "Score leaf squares +1 in eta");
  add_sim_flags(sweep, o);
  add_early_commit_flag(sweep, o);
  add_format_flags(sweep, o);

  auto* theory = app.add_subcommand("theory", "Closed-form average delay");
  theory->add_flag("--anti-uniform", o.code.anti_uniform, "Canonical anti-uniform code");
  theory->add_option("-n", o.code.n, "Alphabet size")->required();
  theory->add_option("--terms", o.terms, "Series terms to sum")->check(CLI::PositiveNumber);
  add_format_flags(theory, o);

  auto* reproduce = app.add_subcommand("reproduce", "Regenerate a delay table next to the reference values");
  reproduce->add_option("table", o.table, "table3|table4|table5|table6")->required();
  reproduce->add_option("--cap", o.cap, "Refuse families larger than this");
  reproduce->add_flag("--eta-leaves-positive", o.eta_leaves_positive, "Score leaf squares +1 in eta");
  add_sim_flags(reproduce, o);
  add_early_commit_flag(reproduce, o);
  add_format_flags(reproduce, o);

  // Only `decode` defaults to the plain algorithm.
  decode->preparse_callback([&o](std::size_t) { o.early_commit = false; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out;
    std::ostringstream help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (auto* sub : app.get_subcommands()) o.command = sub->get_name();

  try {
    Report report(o);
    if (o.command == "validate") cmd_validate(o, report);
    else if (o.command == "enumerate") cmd_enumerate(o, report);
    else if (o.command == "search") cmd_search(o, report);
    else if (o.command == "measure") cmd_measure(o, report);
    else if (o.command == "decode") cmd_decode(o, report);
    else if (o.command == "simulate") cmd_simulate(o, report);
    else if (o.command == "sweep") cmd_sweep(o, report);
    else if (o.command == "theory") cmd_theory(o, report);
    else if (o.command == "reproduce") cmd_reproduce(o, report);

    const std::string text = (o.dot && o.format != "json") ? report.csv().str() : report.render();
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream file(o.output);
      if (!file) throw Error("cannot write '" + o.output + "'");
      file << text;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomainError;
  }
}

}  // namespace bidihuff::cli

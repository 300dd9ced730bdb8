#include <doctest.h>

#include <map>

#include "bidihuff/backtrie.hpp"
#include "bidihuff/enumerator.hpp"
#include "bidihuff/measures.hpp"
#include "bidihuff/oracle.hpp"
#include "brute.hpp"

using namespace bidihuff;

namespace {

Rational r(long p, long q) { return Rational(p, q); }

// M computed from label strings alone.
Rational label_measure(const Codebook& code) {
  std::vector<std::string> rev;
  for (const auto& w : code.codewords()) rev.push_back(brute::reverse(w));
  auto word = [&](const std::string& s) { return std::find(rev.begin(), rev.end(), s) != rev.end(); };
  auto path = [&](const std::string& s) {
    for (const auto& x : rev) if (brute::is_prefix(s, x)) return true;
    return false;
  };
  auto middle = [&](const std::string& s) {
    if (!word(s)) return false;
    for (const auto& x : rev) if (x.size() > s.size() && brute::is_prefix(s, x)) return true;
    return false;
  };
  auto weight = [](const std::string& s) { return Rational(1, BigInt(1) << s.size()); };

  Rational total = 0;
  std::set<std::string> q{"0", "1"};
  for (const auto& s : rev) {
    if (!middle(s)) continue;
    total += weight(s);
    q.insert(s + "0");
    q.insert(s + "1");
  }
  for (const auto& s : q) {
    if (middle(s)) total += weight(s);
    else if (!path(s)) total -= weight(s);
  }
  return total;
}

Codebook complement(const Codebook& c) {
  std::vector<std::string> w = c.codewords();
  for (auto& s : w) for (auto& ch : s) ch = ch == '0' ? '1' : '0';
  return Codebook(w);
}

}  // namespace

TEST_CASE("six-word example code") {
  const Codebook c({"00", "01", "100", "101", "110", "111"});
  const BackwardTrie t(c);
  CHECK(m_plus(t) == r(1, 2));
  CHECK(m_delta(t) == r(-1, 4));
  const MeasureReport m = m_measure(c);
  CHECK(m.m_total == r(1, 4));
  CHECK(m_delta(t, EtaConvention::LeavesPositive) == 0);
}

TEST_CASE("two-word code") {
  const MeasureReport m = m_measure(Codebook({"0", "1"}));
  CHECK(m.m_plus == 0);
  CHECK(m.m_delta == 0);
  CHECK(m.m_total == 0);
}

TEST_CASE("anti-uniform n=4") {
  const BackwardTrie t(anti_uniform_code(4));
  CHECK(m_plus(t) == r(3, 4));
  CHECK(m_delta(t) == r(3, 8));
  CHECK(m_measure(anti_uniform_code(4)).m_total == r(9, 8));
}

TEST_CASE("eta values") {
  const BackwardTrie t(anti_uniform_code(4));
  for (std::size_t i = 0; i < t.node_count(); ++i) {
    const auto n = static_cast<NodeIndex>(i);
    switch (t.node(n).kind) {
      case NodeKind::Null: CHECK(eta(t, n) == -1); break;
      case NodeKind::Plain: CHECK(eta(t, n) == 0); break;
      case NodeKind::LeafSquare:
        CHECK(eta(t, n) == 0);
        CHECK(eta(t, n, EtaConvention::LeavesPositive) == 1);
        break;
      case NodeKind::MiddleSquare: CHECK(eta(t, n) == 1); break;
    }
  }
}

TEST_CASE("measure matches a label-level evaluation") {
  for (std::size_t m = 2; m <= 7; ++m) {
    for (const auto& lv : complete_length_vectors(m)) {
      auto family = enumerate_codes(lv);
      while (auto code = family.next()) {
        const Rational total = m_measure(*code).m_total;
        CHECK(total == label_measure(*code));
        CHECK(total == m_measure(complement(*code)).m_total);
      }
    }
  }
}

TEST_CASE("selection") {
  const Selection one = select_min_delay_code(LengthVector::parse("3,3,3,3,3,3,3,3"));
  CHECK(one.code == canonical_code(LengthVector::parse("3,3,3,3,3,3,3,3")));

  const Selection s = select_min_delay_code(LengthVector::parse("1,2,2"));
  CHECK(s.report.m_total == r(3, 4));
  CHECK(s.code == Codebook({"1", "00", "01"}));
  CHECK(oracle::exhaustive_avg_delay(s.code, 6) ==
        oracle::exhaustive_avg_delay(Codebook({"0", "10", "11"}), 6));

  CHECK(selection_key(Codebook({"0", "10", "11"})) == "01011");

  // The selected code has the largest M in its family.
  const auto lv = LengthVector::parse("2,2,2,3,4,5,5");
  const Selection best = select_min_delay_code(lv);
  auto family = enumerate_codes(lv);
  while (auto code = family.next()) CHECK(m_measure(*code).m_total <= best.report.m_total);
}

#include <doctest.h>

#include <set>

#include "bidihuff/enumerator.hpp"
#include "bidihuff/error.hpp"
#include "bidihuff/reference_tables.hpp"
#include "brute.hpp"

using namespace bidihuff;

TEST_CASE("family sizes") {
  CHECK(count_equivalent(LengthVector::parse("1,2,3,4,5,6,6")) == 32);
  CHECK(count_equivalent(LengthVector::parse("3,3,3,3,3,3,3,3")) == 1);
  CHECK(count_equivalent(LengthVector::parse("1,4,4,4,4,4,4,4,4")) == 2);
  CHECK(count_equivalent(LengthVector::parse("2,2,2,4,4,4,4")) == 4);
  CHECK(count_equivalent(LengthVector::parse("1,1")) == 1);
}

TEST_CASE("family sizes match the printed tables") {
  for (int m : {7, 8, 9}) {
    for (const auto& row : reference::sweep_table(m)) {
      CHECK(count_equivalent(LengthVector::parse(row.lengths)) == row.count);
    }
  }
}

TEST_CASE("enumeration against brute force") {
  for (std::size_t m = 2; m <= 7; ++m) {
    for (const auto& lv : complete_length_vectors(m)) {
      const auto expected = brute::all_codes(lv.lengths());
      std::set<std::vector<std::string>> got;
      auto family = enumerate_codes(lv);
      bool first = true;
      while (auto code = family.next()) {
        if (first) CHECK(*code == canonical_code(lv));
        first = false;
        CHECK(code->length_vector() == lv);
        auto w = code->codewords();
        std::sort(w.begin(), w.end());
        CHECK(got.insert(w).second);
      }
      CHECK(got == expected);
      CHECK(count_equivalent(lv) == expected.size());
    }
  }
}

TEST_CASE("small families by hand") {
  auto family = enumerate_codes(LengthVector::parse("1,2,2"));
  CHECK(family.next()->codewords() == std::vector<std::string>{"0", "10", "11"});
  CHECK(family.next()->codewords() == std::vector<std::string>{"1", "00", "01"});
  CHECK_FALSE(family.next().has_value());
  CHECK_FALSE(family.next().has_value());

  auto four = enumerate_codes(LengthVector::parse("2,2,2,4,4,4,4"));
  std::vector<Codebook> codes;
  while (auto c = four.next()) codes.push_back(*c);
  CHECK(codes.size() == 4);
  for (const auto& c : codes) CHECK(brute::prefix_free(c.codewords()));
}

TEST_CASE("enumeration cap") {
  const auto lv = LengthVector::parse("2,2,3,3,4,4,4,5,5");  // 144 codes
  CHECK_THROWS_AS(enumerate_codes(lv, 100), CapExceeded);
  CHECK_NOTHROW(enumerate_codes(lv, 144));
}

TEST_CASE("complete length vectors") {
  // Counts of complete binary trees with m labelled-by-depth leaves.
  CHECK(complete_length_vectors(2).size() == 1);
  CHECK(complete_length_vectors(3).size() == 1);
  CHECK(complete_length_vectors(4).size() == 2);
  CHECK(complete_length_vectors(5).size() == 3);
  CHECK(complete_length_vectors(6).size() == 5);
  std::size_t rows7 = 0;
  for (const auto& lv : complete_length_vectors(7)) {
    CHECK(kraft_sum(lv.lengths()) == 1);
    ++rows7;
  }
  CHECK(rows7 == 9);
  CHECK(complete_length_vectors(8).size() == 16);
  CHECK(complete_length_vectors(9).size() == 28);
}

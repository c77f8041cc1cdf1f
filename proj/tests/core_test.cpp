#include <catch2/catch.hpp>

#include <dyck/area_sequence.hpp>
#include <dyck/text.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "test_support.hpp"

using namespace dyck;
using dyck::test::seq;
using dyck::test::steps;

TEST_CASE("validation follows the area-sequence characterization", "[core]") {
  CHECK(validate(std::vector<letter_t>{0, 1, 0}).valid);
  CHECK(validate(std::vector<letter_t>{}).valid);

  const auto too_steep = validate(std::vector<letter_t>{0, 2});
  REQUIRE_FALSE(too_steep.valid);
  CHECK(too_steep.violation->position == 2);
  CHECK(too_steep.violation->rule == violation_rule::rise_exceeds_one);

  const auto bad_start = validate(std::vector<letter_t>{1, 0});
  REQUIRE_FALSE(bad_start.valid);
  CHECK(bad_start.violation->position == 1);
  CHECK(bad_start.violation->rule == violation_rule::first_letter_nonzero);

  const auto negative = validate(std::vector<letter_t>{0, -1});
  REQUIRE_FALSE(negative.valid);
  CHECK(negative.violation->position == 2);
  CHECK(negative.violation->rule == violation_rule::negative_letter);

  CHECK_FALSE(area_sequence::make({0, 2}).has_value());
  CHECK_THROWS_AS(area_sequence::require({1, 0}), std::invalid_argument);
}

TEST_CASE("step-word conversion", "[core]") {
  CHECK(to_text(to_steps(seq("000"))) == "NENENE");
  CHECK(to_text(to_steps(seq("012"))) == "NNNEEE");
  CHECK(to_text(to_steps(seq("010"))) == "NNEENE");

  CHECK(from_steps(steps("NENENE")) == seq("000"));
  CHECK(from_steps(steps("NNNEEE")) == seq("012"));
  CHECK(from_steps(steps(dyck::test::reference_steps_17)) ==
        seq(dyck::test::reference_word_17));
  CHECK(to_steps(seq(dyck::test::reference_word_17)) ==
        steps(dyck::test::reference_steps_17));

  const auto empty = step_word::make({});
  REQUIRE(empty.has_value());
  CHECK(from_steps(*empty).empty());
}

TEST_CASE("malformed step words name the first bad prefix", "[core]") {
  const auto dips = validate_steps(
      std::vector<step>{step::north, step::east, step::east});
  REQUIRE_FALSE(dips.valid);
  CHECK(dips.violation->prefix_length == 3);
  CHECK(dips.violation->rule == step_rule::below_diagonal);

  const auto starts_east = validate_steps(std::vector<step>{step::east});
  REQUIRE_FALSE(starts_east.valid);
  CHECK(starts_east.violation->prefix_length == 1);

  const auto unbalanced = validate_steps(
      std::vector<step>{step::north, step::north, step::east});
  REQUIRE_FALSE(unbalanced.valid);
  CHECK(unbalanced.violation->prefix_length == 3);
  CHECK(unbalanced.violation->rule == step_rule::unbalanced);

  CHECK_THROWS_AS(step_word::require({step::east}), std::invalid_argument);
}

TEST_CASE("enumeration is lexicographic and complete", "[core]") {
  const auto size3 = enumerate_area_sequences(3);
  REQUIRE(size3.size() == 5);
  CHECK(size3[0] == seq("000"));
  CHECK(size3[1] == seq("001"));
  CHECK(size3[2] == seq("010"));
  CHECK(size3[3] == seq("011"));
  CHECK(size3[4] == seq("012"));

  const std::vector<std::string> expected4 = {
      "0000", "0001", "0010", "0011", "0012", "0100", "0101",
      "0110", "0111", "0112", "0120", "0121", "0122", "0123"};
  const auto size4 = enumerate_area_sequences(4);
  REQUIRE(size4.size() == expected4.size());
  for (std::size_t i = 0; i < expected4.size(); ++i)
    CHECK(size4[i] == seq(expected4[i]));

  const auto size1 = enumerate_area_sequences(1);
  REQUIRE(size1.size() == 1);
  CHECK(size1[0] == seq("0"));

  const auto size0 = enumerate_area_sequences(0);
  REQUIRE(size0.size() == 1);
  CHECK(size0[0].empty());

  for (int n = 0; n <= 9; ++n) {
    const auto all = enumerate_area_sequences(n);
    CHECK(std::is_sorted(all.begin(), all.end()));
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
  }
}

TEST_CASE("enumeration count equals catalan for n <= 14", "[core]") {
  for (int n = 0; n <= 14; ++n) {
    std::uint64_t count = 0;
    for_each_area_sequence(n, [&](const area_sequence&) { ++count; });
    CHECK(count == catalan(n));
  }
}

// Independent oracle: walk every word over {0,...,n-1}^n and keep the ones
// the validator accepts; that filtered list must equal the enumeration.
TEST_CASE("characterization agrees with brute force over all words", "[core]") {
  for (int n = 0; n <= 8; ++n) {
    std::vector<area_sequence> accepted;
    std::vector<letter_t> word(static_cast<std::size_t>(n), 0);
    for (;;) {
      if (validate(word).valid)
        accepted.push_back(area_sequence::unchecked(word));
      // odometer over the alphabet {0,...,n-1}, least significant digit last
      int i = n - 1;
      while (i >= 0 && word[static_cast<std::size_t>(i)] == n - 1) {
        word[static_cast<std::size_t>(i)] = 0;
        --i;
      }
      if (i < 0) break;
      ++word[static_cast<std::size_t>(i)];
    }
    CHECK(accepted == enumerate_area_sequences(n));
  }
}

TEST_CASE("round trip through step words", "[core]") {
  for (int n = 0; n <= 10; ++n) {
    for_each_area_sequence(n, [&](const area_sequence& w) {
      REQUIRE(from_steps(to_steps(w)) == w);
    });
  }
}

TEST_CASE("catalan numbers are exact and overflow loudly", "[core]") {
  const std::vector<std::uint64_t> known = {
      1,    1,     2,     5,      14,     42,      132,    429,
      1430, 4862,  16796, 58786,  208012, 742900,  2674440};
  for (std::size_t n = 0; n < known.size(); ++n)
    CHECK(catalan(static_cast<int>(n)) == known[n]);
  CHECK(catalan(33) == 212336130412243110ULL);
  CHECK_THROWS_AS(catalan(34), std::overflow_error);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("word text parsing accepts both encodings", "[core]") {
  CHECK(parse_word_text("0,1,2,1").letters == std::vector<letter_t>{0, 1, 2, 1});
  CHECK(parse_word_text("0121").letters == std::vector<letter_t>{0, 1, 2, 1});
  CHECK(parse_word_text("").ok);
  CHECK(parse_word_text("").letters.empty());
  CHECK(parse_word_text(" 0, 1 ,2 ").letters == std::vector<letter_t>{0, 1, 2});
  CHECK(parse_word_text("0,10,11").letters == std::vector<letter_t>{0, 10, 11});

  const auto bad_char = parse_word_text("01x1");
  REQUIRE_FALSE(bad_char.ok);
  CHECK(bad_char.position == 3);

  const auto bad_token = parse_word_text("0,x,1");
  REQUIRE_FALSE(bad_token.ok);
  CHECK(bad_token.position == 2);

  const auto trailing_comma = parse_word_text("0,1,");
  REQUIRE_FALSE(trailing_comma.ok);
  CHECK(trailing_comma.position == 3);

  // negative letters parse here and are rejected by validation instead
  const auto negative = parse_word_text("0,-1");
  REQUIRE(negative.ok);
  CHECK_FALSE(validate(negative.letters).valid);
}

TEST_CASE("canonical and compact text forms", "[core]") {
  CHECK(to_text(seq("0121")) == "0,1,2,1");
  CHECK(to_compact_text(seq("0121")) == "0121");
  CHECK(to_text(area_sequence{}) == "");

  // letters above 9 have no compact form
  std::vector<letter_t> tall(static_cast<std::size_t>(12));
  for (int i = 0; i < 12; ++i) tall[static_cast<std::size_t>(i)] = i;
  CHECK_FALSE(to_compact_text(area_sequence::require(tall)).has_value());
}

TEST_CASE("letter access is 1-based", "[core]") {
  const auto w = seq("0,1,2,1");
  CHECK(w.letter(1) == 0);
  CHECK(w.letter(4) == 1);
  CHECK_THROWS_AS(w.letter(0), std::out_of_range);
  CHECK_THROWS_AS(w.letter(5), std::out_of_range);
  CHECK(w.max_letter() == 2);
  CHECK(area_sequence{}.max_letter() == -1);
}

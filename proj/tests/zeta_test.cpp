#include <catch2/catch.hpp>

#include <dyck/area_sequence.hpp>
#include <dyck/statistics.hpp>
#include <dyck/zeta.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "test_support.hpp"

using namespace dyck;
using dyck::test::seq;

namespace {

// The size-13 word whose admissible insertions are known in full.
const char* insertion_example = "0122210122011";

}  // namespace

TEST_CASE("insertions prepend a zero or splice in a bumped letter", "[zeta]") {
  const auto w = seq("010");
  CHECK(insert_at(w, 0) == seq("0010"));
  CHECK(insert_at(w, 1) == seq("0110"));
  CHECK(insert_at(w, 2) == seq("0120"));
  CHECK(insert_at(w, 3) == seq("0101"));

  CHECK(insert_at(area_sequence{}, 0) == seq("0"));
  CHECK(insert_at(seq("0"), 1) == seq("01"));

  CHECK_THROWS_AS(insert_at(w, 4), std::out_of_range);
  CHECK_THROWS_AS(insert_at(w, -1), std::out_of_range);
}

TEST_CASE("admissible insertion order decomposes as maxb, maxa, i0-1",
          "[zeta]") {
  const auto admissible = admissible_insertions::of(seq(insertion_example));
  CHECK(admissible.maxb == std::vector<int>{3, 4, 5, 9, 10});
  CHECK(admissible.maxa == std::vector<int>{12, 13});
  REQUIRE(admissible.i0.has_value());
  CHECK(*admissible.i0 == 9);
  CHECK(admissible.order == std::vector<int>{10, 9, 5, 4, 3, 13, 12, 8});

  const auto empty = admissible_insertions::of(area_sequence{});
  CHECK(empty.order == std::vector<int>{0});
  CHECK(empty.maxb.empty());
  CHECK(empty.maxa.empty());
  CHECK_FALSE(empty.i0.has_value());

  const auto single = admissible_insertions::of(seq("0"));
  CHECK(single.maxb == std::vector<int>{1});
  CHECK(single.maxa.empty());
  REQUIRE(single.i0.has_value());
  CHECK(*single.i0 == 1);
  CHECK(single.order == std::vector<int>{1, 0});
}

TEST_CASE("each admissible insertion adds its index to dinv", "[zeta]") {
  const auto base = seq(insertion_example);
  REQUIRE(dinv(base) == 44);
  const auto admissible = admissible_insertions::of(base);
  REQUIRE(admissible.order.size() == 8);
  for (std::size_t i = 0; i < admissible.order.size(); ++i) {
    const auto grown = zeta_inverse_step(base, static_cast<letter_t>(i));
    CHECK(dinv(grown) == 44 + static_cast<stat_t>(i));
    CHECK(admissible_insertions::of(grown).order.size() == i + 2);
  }

  CHECK(zeta_inverse_step(base, 0) == seq("0,1,2,2,2,1,0,1,2,2,3,0,1,1"));
  CHECK(zeta_inverse_step(base, 5) == seq("0,1,2,2,2,1,0,1,2,2,0,1,1,2"));
  const auto via7 = zeta_inverse_step(base, 7);
  CHECK(via7 == seq("0,1,2,2,2,1,0,1,2,2,2,0,1,1"));
  CHECK(via7.letter(9) == 2);

  CHECK_THROWS_AS(zeta_inverse_step(base, 8), std::out_of_range);
  CHECK_THROWS_AS(zeta_inverse_step(area_sequence{}, 1), std::out_of_range);
  CHECK_THROWS_AS(zeta_inverse_step(seq("0"), 2), std::out_of_range);
}

TEST_CASE("map goldens", "[zeta]") {
  CHECK(zeta_inverse(seq("0121")) == seq("0010"));
  CHECK(zeta_inverse(seq("000")) == seq("012"));
  CHECK(zeta_inverse(seq("012")) == seq("000"));
  CHECK(zeta_inverse(area_sequence{}).empty());
  CHECK(zeta_inverse(seq(dyck::test::reference_word_17)) ==
        seq("0,0,1,2,2,2,0,1,2,3,4,5,6,5,5,6,3"));
}

TEST_CASE("seventeen-step trace matches the hand computation", "[zeta]") {
  const std::vector<const char*> images = {
      "0",
      "00",
      "000",
      "0010",
      "00101",
      "001201",
      "0012201",
      "00122201",
      "001222012",
      "0012220123",
      "00122201233",
      "001222012343",
      "0012220123453",
      "00122201234553",
      "001222012345553",
      "0012220123456553",
      "0,0,1,2,2,2,0,1,2,3,4,5,6,5,5,6,3",
  };
  const auto w = seq(dyck::test::reference_word_17);
  const auto trace = zeta_inverse_trace(w);
  REQUIRE(trace.steps.size() == 17);
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    CHECK(trace.steps[i].image == seq(images[i]));
    CHECK(trace.steps[i].letter == w.letters()[i]);
    // the inserted letter always lands where the peel point says it did
    CHECK(last_insertion_point(trace.steps[i].image) ==
          trace.steps[i].position + 1);
  }
  CHECK(trace.final_image() == seq(images.back()));

  const auto tiny = zeta_inverse_trace(seq("01"));
  REQUIRE(tiny.steps.size() == 2);
  CHECK(tiny.steps[0].letter == 0);
  CHECK(tiny.steps[0].position == 0);
  CHECK(tiny.steps[0].image == seq("0"));
  CHECK(tiny.steps[1].letter == 1);
  CHECK(tiny.steps[1].position == 0);
  CHECK(tiny.steps[1].image == seq("00"));

  CHECK(zeta_inverse_trace(area_sequence{}).steps.empty());
}

TEST_CASE("last insertion point is the left edge of the rightmost maximal "
          "block", "[zeta]") {
  CHECK(last_insertion_point(seq("0,0,1,2,2,2,0,1,2,3,4,5,6,5,5,6,3")) == 16);
  CHECK(last_insertion_point(seq("000")) == 1);
  CHECK(last_insertion_point(seq("0122122")) == 6);
  CHECK_THROWS_AS(last_insertion_point(area_sequence{}), std::invalid_argument);
}

TEST_CASE("inverse map goldens", "[zeta]") {
  CHECK(zeta(seq("0010")) == seq("0121"));
  CHECK(zeta(seq("0,0,1,2,2,2,0,1,2,3,4,5,6,5,5,6,3")) ==
        seq(dyck::test::reference_word_17));
  CHECK(zeta(area_sequence{}).empty());
}

TEST_CASE("admissible decomposition is structurally sound on every word",
          "[zeta]") {
  for (int n = 0; n <= 7; ++n) {
    for_each_area_sequence(n, [&](const area_sequence& w) {
      const auto a = admissible_insertions::of(w);
      if (w.empty()) {
        REQUIRE(a.order == std::vector<int>{0});
        REQUIRE_FALSE(a.i0.has_value());
        return;
      }
      REQUIRE(a.i0.has_value());
      // i0 is the position of a maximal letter
      REQUIRE(std::find(a.maxb.begin(), a.maxb.end(), *a.i0) != a.maxb.end());
      REQUIRE(a.order.size() == a.maxb.size() + a.maxa.size() + 1);
      // order = maxb descending ++ maxa descending ++ (i0 - 1)
      std::vector<int> rebuilt(a.maxb.rbegin(), a.maxb.rend());
      rebuilt.insert(rebuilt.end(), a.maxa.rbegin(), a.maxa.rend());
      rebuilt.push_back(*a.i0 - 1);
      REQUIRE(a.order == rebuilt);
      // pairwise disjoint pieces
      std::vector<int> sorted = a.order;
      std::sort(sorted.begin(), sorted.end());
      REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
      // every entry is a legal insertion position
      for (int c : a.order) {
        REQUIRE(c >= 0);
        REQUIRE(c <= n);
      }
    });
  }
}

TEST_CASE("insertion laws hold exhaustively on small sizes", "[zeta]") {
  for (int n = 0; n <= 7; ++n) {
    for_each_area_sequence(n, [&](const area_sequence& w) {
      const auto admissible = admissible_insertions::of(w);
      const stat_t base = dinv(w);
      for (std::size_t i = 0; i < admissible.order.size(); ++i) {
        const auto grown = insert_at(w, admissible.order[i]);
        REQUIRE(dinv(grown) == base + static_cast<stat_t>(i));
        REQUIRE(admissible_insertions::of(grown).order.size() == i + 2);
        REQUIRE(last_insertion_point(grown) == admissible.order[i] + 1);
      }
    });
  }
}

TEST_CASE("the map is a bijection transporting the statistics", "[zeta]") {
  for (int n = 0; n <= 8; ++n) {
    std::set<area_sequence> images;
    std::uint64_t count = 0;
    for_each_area_sequence(n, [&](const area_sequence& w) {
      const auto image = zeta_inverse(w);
      REQUIRE(image.size() == n);
      REQUIRE(dinv(image) == area(w));
      REQUIRE(area(image) == bounce(w));
      REQUIRE(zeta(image) == w);
      images.insert(image);
      ++count;
    });
    REQUIRE(images.size() == count);
    REQUIRE(count == catalan(n));
  }
}

TEST_CASE("bounce structure of the source shows in the image", "[zeta]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_area_sequence(n, [&](const area_sequence& w) {
      std::vector<letter_t> head(w.letters().begin(), w.letters().end());
      head.pop_back();
      const auto u = area_sequence::unchecked(std::move(head));

      const auto image_w = zeta_inverse(w);
      const auto image_u = zeta_inverse(u);
      const auto bp = bounce_profile::of(w);
      const letter_t b_last = bp.b.back();
      const auto admissible = admissible_insertions::of(image_w);

      REQUIRE((b_last == 0) ==
              (image_w.max_letter() == image_u.max_letter() + 1));
      REQUIRE(static_cast<letter_t>(bp.bounces.size()) == image_w.max_letter());
      REQUIRE(static_cast<letter_t>(admissible.maxb.size()) == b_last + 1);
      REQUIRE(static_cast<letter_t>(admissible.maxa.size()) ==
              w.letters().back() - b_last);
      for (letter_t k = 1; k <= image_w.max_letter(); ++k) {
        int at_least = 0;
        for (letter_t x : image_w.letters())
          if (x >= k) ++at_least;
        REQUIRE(at_least ==
                n - bp.bounces[static_cast<std::size_t>(k) - 1] + 1);
      }
    });
  }
}

TEST_CASE("letter recovery by order index agrees with the dinv difference",
          "[zeta]") {
  for (int n = 1; n <= 7; ++n) {
    for_each_area_sequence(n, [&](const area_sequence& w) {
      const int p = last_insertion_point(w);
      std::vector<letter_t> rest(w.letters().begin(), w.letters().end());
      rest.erase(rest.begin() + (p - 1));
      const auto shorter = area_sequence::unchecked(std::move(rest));

      const auto admissible = admissible_insertions::of(shorter);
      const auto it =
          std::find(admissible.order.begin(), admissible.order.end(), p - 1);
      REQUIRE(it != admissible.order.end());
      REQUIRE(it - admissible.order.begin() == dinv(w) - dinv(shorter));
    });
  }
}

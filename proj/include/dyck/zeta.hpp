#pragma once

// The zeta map on Dyck paths, built iteratively on area sequences.
//
// An insertion at position i prepends a 0 (i = 0) or splices w_i + 1 right
// after position i; both yield area sequences again. Among all insertion
// positions, the admissible ones are ordered so that inserting at the i-th
// of them raises dinv by exactly i. Folding the letters of a word through
// that rule, left to right starting from the empty sequence, defines a
// bijection zeta_inverse with
//
//   dinv(zeta_inverse(w)) = area(w)      and
//   area(zeta_inverse(w)) = bounce(w),
//
// i.e. the inverse of the classical zeta map, which is recovered here as
// zeta() by peeling the uniquely determined last-inserted letter.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "area_sequence.hpp"

namespace dyck {

/// ins_i: prepend 0 for i = 0, otherwise splice w_i + 1 after position i.
/// The result is always a valid area sequence of size n + 1.
inline area_sequence insert_at(const area_sequence& w, int position) {
  const int n = w.size();
  if (position < 0 || position > n)
    throw std::out_of_range("insert_at: position " + std::to_string(position) +
                            " outside [0, " + std::to_string(n) + "]");
  const auto letters = w.letters();
  std::vector<letter_t> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  if (position == 0) {
    out.push_back(0);
    out.insert(out.end(), letters.begin(), letters.end());
  } else {
    out.insert(out.end(), letters.begin(), letters.begin() + position);
    out.push_back(letters[position - 1] + 1);
    out.insert(out.end(), letters.begin() + position, letters.end());
  }
  return area_sequence::unchecked(std::move(out));
}

/// 1-based position of the leftmost letter in the rightmost block of
/// consecutive maximal letters. This is where the latest admissible
/// insertion always lands, which makes it the peel point for zeta().
inline int last_insertion_point(const area_sequence& w) {
  if (w.empty())
    throw std::invalid_argument("last_insertion_point: empty sequence");
  const auto letters = w.letters();
  const letter_t m = w.max_letter();
  int position = w.size();
  while (letters[position - 1] != m) --position;
  while (position > 1 && letters[position - 2] == m) --position;
  return position;
}

/// The admissible insertion positions of a word with maximum letter m:
/// maxb holds the positions of the letters m, maxa the positions of letters
/// m - 1 with no m to their right, and i0 is where the rightmost block of
/// consecutive m letters starts. The admissible order lists maxb descending,
/// then maxa descending, then i0 - 1; inserting at order[i] adds exactly i
/// to dinv. The empty word admits only position 0.
struct admissible_insertions {
  std::vector<int> maxb;    // ascending 1-based positions
  std::vector<int> maxa;    // ascending 1-based positions
  std::optional<int> i0;    // empty word has none
  std::vector<int> order;   // c_0, ..., c_k

  static admissible_insertions of(const area_sequence& w) {
    admissible_insertions result;
    if (w.empty()) {
      result.order = {0};
      return result;
    }
    const auto letters = w.letters();
    const int n = w.size();
    const letter_t m = w.max_letter();

    std::vector<int> maxb_desc;
    std::vector<int> maxa_desc;
    bool max_seen = false;
    for (int i = n - 1; i >= 0; --i) {
      if (letters[i] == m) {
        maxb_desc.push_back(i + 1);
        max_seen = true;
      } else if (m >= 1 && letters[i] == m - 1 && !max_seen) {
        maxa_desc.push_back(i + 1);
      }
    }

    int start = maxb_desc.front();  // rightmost maximal letter
    while (start > 1 && letters[start - 2] == m) --start;
    result.i0 = start;

    result.order = maxb_desc;
    result.order.insert(result.order.end(), maxa_desc.begin(), maxa_desc.end());
    result.order.push_back(start - 1);

    result.maxb.assign(maxb_desc.rbegin(), maxb_desc.rend());
    result.maxa.assign(maxa_desc.rbegin(), maxa_desc.rend());

    // maxb, maxa and {i0 - 1} must be pairwise disjoint; a repeat in the
    // order means the decomposition was misread, so fail loudly.
    std::vector<int> sorted = result.order;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::logic_error("admissible order contains a repeated position");
    return result;
  }
};

/// One step of the iterative map: insert the next letter a of the source
/// word into the current image at admissible position order[a]. The letter
/// must be below the image's admissible count; after the step the new image
/// admits a + 2 positions, so any continuation letter in 0..a+1 stays legal.
inline area_sequence zeta_inverse_step(const area_sequence& image, letter_t a) {
  const auto admissible = admissible_insertions::of(image);
  if (a < 0 || static_cast<std::size_t>(a) >= admissible.order.size())
    throw std::out_of_range(
        "letter " + std::to_string(a) + " is not insertable here (image admits " +
        std::to_string(admissible.order.size()) + " positions)");
  return insert_at(image, admissible.order[static_cast<std::size_t>(a)]);
}

/// The full map: fold the letters of w left to right through
/// zeta_inverse_step, starting from the empty sequence. Sends area to dinv
/// and bounce to area; bijective on each size.
inline area_sequence zeta_inverse(const area_sequence& w) {
  area_sequence image;
  for (letter_t a : w.letters()) image = zeta_inverse_step(image, a);
  return image;
}

struct insertion_step {
  letter_t letter = 0;   // letter of the source word
  int position = 0;      // admissible position it selected
  area_sequence image;   // image after this insertion

  friend bool operator==(const insertion_step&, const insertion_step&) = default;
};

/// Step-by-step record of zeta_inverse: one entry per source letter.
struct insertion_trace {
  std::vector<insertion_step> steps;

  area_sequence final_image() const {
    return steps.empty() ? area_sequence{} : steps.back().image;
  }
};

inline insertion_trace zeta_inverse_trace(const area_sequence& w) {
  insertion_trace trace;
  trace.steps.reserve(static_cast<std::size_t>(w.size()));
  area_sequence image;
  for (letter_t a : w.letters()) {
    const auto admissible = admissible_insertions::of(image);
    if (a < 0 || static_cast<std::size_t>(a) >= admissible.order.size())
      throw std::out_of_range("letter " + std::to_string(a) +
                              " is not insertable here");
    const int position = admissible.order[static_cast<std::size_t>(a)];
    image = insert_at(image, position);
    trace.steps.push_back({a, position, image});
  }
  return trace;
}

/// The classical zeta map, inverse of zeta_inverse. Each round removes the
/// letter at last_insertion_point and recovers the source letter as the
/// index of that spot in the shortened word's admissible order.
inline area_sequence zeta(const area_sequence& w) {
  std::vector<letter_t> recovered(static_cast<std::size_t>(w.size()));
  std::vector<letter_t> current(w.letters().begin(), w.letters().end());
  for (int k = w.size(); k >= 1; --k) {
    const area_sequence image = area_sequence::unchecked(current);
    const int p = last_insertion_point(image);
    current.erase(current.begin() + (p - 1));
    const auto shorter = area_sequence::unchecked(current);
    const auto admissible = admissible_insertions::of(shorter);
    const auto it =
        std::find(admissible.order.begin(), admissible.order.end(), p - 1);
    if (it == admissible.order.end())
      throw std::logic_error(
          "letter recovery failed: removed position is not admissible in the "
          "shortened word");
    recovered[static_cast<std::size_t>(k) - 1] =
        static_cast<letter_t>(it - admissible.order.begin());
  }
  return area_sequence::unchecked(std::move(recovered));
}

}  // namespace dyck

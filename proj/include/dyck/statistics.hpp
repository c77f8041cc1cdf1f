#pragma once

// The three statistics: area, dinv, and bounce.
//
//   area(w)  = sum of the letters.
//   dinv(w)  = sum over i of d_i, where d_i counts the letters to the right
//              of position i equal to w_i or w_i - 1.
//   bounce   = computed from the bounce sequence b, the area sequence of the
//              greedy bounce path under w: b_1 = 0 and b_i = b_{i-1} + 1 when
//              that stays <= w_i, else 0. Each non-initial zero of b is a
//              bounce; the statistic sums their reversed positions n - i + 1.
//
// All statistics of the empty sequence are 0.

#include <vector>

#include "area_sequence.hpp"

namespace dyck {

inline stat_t area(const area_sequence& w) {
  stat_t total = 0;
  for (letter_t x : w.letters()) total += x;
  return total;
}

struct dinv_profile {
  std::vector<stat_t> d;  // d[i] belongs to position i + 1
  stat_t total = 0;

  static dinv_profile of(const area_sequence& w) {
    const auto letters = w.letters();
    const int n = w.size();
    dinv_profile profile;
    profile.d.assign(static_cast<std::size_t>(n), 0);
    // Right-to-left sweep with per-value counts: d_i = #(w_i) + #(w_i - 1)
    // among letters already seen.
    std::vector<int> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int i = n - 1; i >= 0; --i) {
      const letter_t v = letters[i];
      const stat_t d = seen[v] + (v > 0 ? seen[v - 1] : 0);
      profile.d[static_cast<std::size_t>(i)] = d;
      profile.total += d;
      ++seen[v];
    }
    return profile;
  }
};

inline stat_t dinv(const area_sequence& w) { return dinv_profile::of(w).total; }

struct bounce_profile {
  std::vector<letter_t> b;   // bounce sequence; itself a valid area sequence
  std::vector<int> bounces;  // ascending 1-based positions i > 1 with b_i = 0
  stat_t bounce = 0;

  static bounce_profile of(const area_sequence& w) {
    const auto letters = w.letters();
    const int n = w.size();
    bounce_profile profile;
    profile.b.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      letter_t next = 0;
      if (i > 0) {
        const letter_t candidate = profile.b.back() + 1;
        if (candidate <= letters[i]) {
          next = candidate;
        } else {
          profile.bounces.push_back(i + 1);
        }
      }
      profile.b.push_back(next);
    }
    for (int position : profile.bounces) profile.bounce += n - position + 1;
    return profile;
  }

  /// The bounce path itself, as an area sequence.
  area_sequence bounce_path() const { return area_sequence::unchecked(b); }
};

inline stat_t bounce(const area_sequence& w) { return bounce_profile::of(w).bounce; }

}  // namespace dyck

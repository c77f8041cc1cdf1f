#pragma once

// Terminal rendering of a Dyck path on its n x n grid of cells, one
// character per cell, rows printed top-down so the last north step sits on
// the top row. Legend:
//
//   |  cell whose left edge carries a north step of the path
//   \  cell the diagonal passes through
//   #  full cell between the path and the diagonal
//   o  full cell between the bounce path and the diagonal (bounce overlay)
//   .  anything else
//
// The path marker wins where cells coincide, so a bounce run that touches
// the path loses its leftmost 'o'. Rows where the bounce path resets to the
// diagonal show no 'o' at all.

#include <string>

#include "area_sequence.hpp"
#include "statistics.hpp"

namespace dyck {

inline constexpr int max_render_size = 64;

struct render_options {
  bool with_bounce = false;
};

inline std::string render_grid(const area_sequence& w,
                               render_options options = {}) {
  const int n = w.size();
  if (n > max_render_size)
    throw std::invalid_argument("render: size " + std::to_string(n) +
                                " exceeds the " +
                                std::to_string(max_render_size) +
                                "-cell rendering limit");
  if (n == 0) return "";
  const auto letters = w.letters();
  const auto bounce_seq =
      options.with_bounce ? bounce_profile::of(w).b : std::vector<letter_t>{};

  std::string out;
  out.reserve(static_cast<std::size_t>(n) * (n + 1));
  for (int row = n; row >= 1; --row) {
    const letter_t area_cells = letters[row - 1];
    const int path_col = row - 1 - area_cells;  // cell right of the north step
    const int diag_col = row - 1;
    const int bounce_col =
        options.with_bounce ? row - 1 - bounce_seq[row - 1] : diag_col;
    for (int col = 0; col < n; ++col) {
      char cell = '.';
      if (col == path_col)
        cell = '|';
      else if (col == diag_col)
        cell = '\\';
      else if (col > path_col && col < diag_col)
        cell = col >= bounce_col ? 'o' : '#';
      out.push_back(cell);
    }
    if (row > 1) out.push_back('\n');
  }
  return out;
}

}  // namespace dyck

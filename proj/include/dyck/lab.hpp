#pragma once

// Exhaustive verification over Catalan-sized spaces.
//
// Every identity the library is built on can be replayed at desk scale:
// qt_matrix tabulates a pair of statistics over all sequences of one size,
// and verify() runs named invariant suites, reporting the lexicographically
// first counterexample of any failing check. Work may be partitioned by
// word prefix and executed on several threads; partitions are merged in
// prefix order, so results do not depend on scheduling and single-threaded
// runs produce identical output.

#include <atomic>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "area_sequence.hpp"
#include "statistics.hpp"
#include "zeta.hpp"

namespace dyck::lab {

/// Largest size exhaustive operations accept by default. catalan(14) is
/// about 2.7 million words, which keeps any full suite under a minute.
inline constexpr int default_exhaustive_limit = 14;

inline constexpr int default_partition_depth = 3;

inline void require_within_limit(int n, int limit) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  if (n > limit)
    throw std::invalid_argument("size " + std::to_string(n) +
                                " exceeds the exhaustive limit " +
                                std::to_string(limit) +
                                " (raise the limit to force the run)");
}

/// All valid prefixes of length min(depth, n); their extension streams
/// partition the size-n enumeration, in order.
inline std::vector<area_sequence> partition_prefixes(int n, int depth) {
  const int d = depth < n ? depth : n;
  return enumerate_area_sequences(d < 0 ? 0 : d);
}

/// Applies fn to every partition prefix and returns the results in prefix
/// order. jobs <= 1 runs inline; otherwise a small pool claims partitions
/// through an atomic cursor. Order of the result vector is fixed either
/// way, which is what keeps downstream merges deterministic.
template <typename Result, typename PartitionFn>
std::vector<Result> map_partitions(int n, int depth, int jobs, PartitionFn fn) {
  const auto prefixes = partition_prefixes(n, depth);
  std::vector<Result> results(prefixes.size());
  if (jobs <= 1 || prefixes.size() <= 1) {
    for (std::size_t i = 0; i < prefixes.size(); ++i) results[i] = fn(prefixes[i]);
    return results;
  }
  std::atomic<std::size_t> cursor{0};
  const std::size_t workers =
      std::min(static_cast<std::size_t>(jobs), prefixes.size());
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= prefixes.size()) return;
        results[i] = fn(prefixes[i]);
      }
    });
  }
  for (auto& worker : pool) worker.join();
  return results;
}

/// Lexicographically first size-n word failing the predicate, if any.
template <typename Pred>
std::optional<area_sequence> first_violation(int n, int depth, int jobs,
                                             const Pred& holds_for) {
  using found_t = std::optional<area_sequence>;
  auto results = map_partitions<found_t>(
      n, depth, jobs, [&](const area_sequence& prefix) {
        found_t found;
        for_each_extension(prefix, n, [&](const area_sequence& w) {
          if (!found && !holds_for(w)) found = w;
        });
        return found;
      });
  for (auto& found : results)
    if (found) return found;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Statistic pair distributions
// ---------------------------------------------------------------------------

enum class statistic { area, dinv, bounce };

inline const char* to_string(statistic s) {
  switch (s) {
    case statistic::area: return "area";
    case statistic::dinv: return "dinv";
    case statistic::bounce: return "bounce";
  }
  return "?";
}

inline std::optional<statistic> parse_statistic(std::string_view name) {
  if (name == "area") return statistic::area;
  if (name == "dinv") return statistic::dinv;
  if (name == "bounce") return statistic::bounce;
  return std::nullopt;
}

inline stat_t evaluate(statistic s, const area_sequence& w) {
  switch (s) {
    case statistic::area: return area(w);
    case statistic::dinv: return dinv(w);
    case statistic::bounce: return bounce(w);
  }
  return 0;
}

/// Square count matrix N[s][t] = #{w of size n : s1(w) = s, s2(w) = t}.
/// Both axes run 0..n(n-1)/2, the largest value any statistic attains.
class qt_matrix {
 public:
  qt_matrix() = default;

  static qt_matrix build(int n, statistic rows, statistic cols,
                         int limit = default_exhaustive_limit, int jobs = 1,
                         int depth = default_partition_depth) {
    require_within_limit(n, limit);
    qt_matrix m;
    m.n_ = n;
    m.rows_ = rows;
    m.cols_ = cols;
    const std::size_t side =
        n <= 1 ? 1 : static_cast<std::size_t>(n) * (n - 1) / 2 + 1;
    using grid_t = std::vector<std::vector<std::uint64_t>>;
    auto partials = map_partitions<grid_t>(
        n, depth, jobs, [&](const area_sequence& prefix) {
          grid_t grid(side, std::vector<std::uint64_t>(side, 0));
          for_each_extension(prefix, n, [&](const area_sequence& w) {
            ++grid[static_cast<std::size_t>(evaluate(rows, w))]
                  [static_cast<std::size_t>(evaluate(cols, w))];
          });
          return grid;
        });
    m.counts_.assign(side, std::vector<std::uint64_t>(side, 0));
    for (const auto& grid : partials)
      for (std::size_t r = 0; r < side; ++r)
        for (std::size_t c = 0; c < side; ++c) m.counts_[r][c] += grid[r][c];
    return m;
  }

  int n() const noexcept { return n_; }
  statistic row_statistic() const noexcept { return rows_; }
  statistic col_statistic() const noexcept { return cols_; }
  int side() const noexcept { return static_cast<int>(counts_.size()); }

  std::uint64_t at(int r, int c) const {
    return counts_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  }

  const std::vector<std::vector<std::uint64_t>>& counts() const noexcept {
    return counts_;
  }

  std::uint64_t total() const noexcept {
    std::uint64_t sum = 0;
    for (const auto& row : counts_)
      for (std::uint64_t cell : row) sum += cell;
    return sum;
  }

  bool symmetric() const noexcept {
    for (int r = 0; r < side(); ++r)
      for (int c = r + 1; c < side(); ++c)
        if (at(r, c) != at(c, r)) return false;
    return true;
  }

  /// Dense CSV: header cell "rows\cols", then ascending statistic values on
  /// both axes; zero cells written explicitly.
  std::string to_csv() const {
    std::string out;
    out += to_string(rows_);
    out.push_back('\\');
    out += to_string(cols_);
    for (int c = 0; c < side(); ++c) out += "," + std::to_string(c);
    out.push_back('\n');
    for (int r = 0; r < side(); ++r) {
      out += std::to_string(r);
      for (int c = 0; c < side(); ++c) out += "," + std::to_string(at(r, c));
      out.push_back('\n');
    }
    return out;
  }

  friend bool operator==(const qt_matrix& a, const qt_matrix& b) {
    return a.n_ == b.n_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.counts_ == b.counts_;
  }

 private:
  int n_ = 0;
  statistic rows_ = statistic::dinv;
  statistic cols_ = statistic::area;
  std::vector<std::vector<std::uint64_t>> counts_;
};

// ---------------------------------------------------------------------------
// Invariant suites
// ---------------------------------------------------------------------------

enum class check {
  count,        // enumeration size equals catalan(n)
  roundtrip,    // from_steps(to_steps(w)) == w
  bijection,    // zeta_inverse is injective and onto size-n sequences
  inverse,      // zeta(zeta_inverse(w)) == w
  dinv_area,    // dinv(zeta_inverse(w)) == area(w)
  bounce_area,  // area(zeta_inverse(w)) == bounce(w)
  eq3,          // each admissible insertion adds its index to dinv,
                // leaves index + 2 positions, lands at the peel point
  prop4,        // bounce sequence of w mirrors the shape of zeta_inverse(w)
  dual,         // admissible-order and dinv-difference letter recovery agree
  symmetry,     // the (dinv, area) matrix equals its transpose
};

inline constexpr std::array<check, 10> all_checks = {
    check::count,     check::roundtrip,  check::bijection, check::inverse,
    check::dinv_area, check::bounce_area, check::eq3,      check::prop4,
    check::dual,      check::symmetry,
};

inline const char* to_string(check c) {
  switch (c) {
    case check::count: return "count";
    case check::roundtrip: return "roundtrip";
    case check::bijection: return "bijection";
    case check::inverse: return "inverse";
    case check::dinv_area: return "dinv_area";
    case check::bounce_area: return "bounce_area";
    case check::eq3: return "eq3";
    case check::prop4: return "prop4";
    case check::dual: return "dual";
    case check::symmetry: return "symmetry";
  }
  return "?";
}

inline std::optional<check> parse_check(std::string_view name) {
  for (check c : all_checks)
    if (name == to_string(c)) return c;
  return std::nullopt;
}

struct check_result {
  std::string name;
  bool pass = false;
  std::optional<area_sequence> counterexample;  // engaged on failure when a
                                                // single word witnesses it
};

struct verify_report {
  int n = 0;
  std::vector<check_result> checks;
  std::chrono::milliseconds elapsed{0};

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

struct verify_options {
  int limit = default_exhaustive_limit;
  int jobs = 1;
  int depth = default_partition_depth;
};

namespace detail {

inline bool eq3_holds(const area_sequence& w) {
  const auto admissible = admissible_insertions::of(w);
  const stat_t base = dinv(w);
  for (std::size_t i = 0; i < admissible.order.size(); ++i) {
    const area_sequence grown = insert_at(w, admissible.order[i]);
    if (dinv(grown) != base + static_cast<stat_t>(i)) return false;
    if (admissible_insertions::of(grown).order.size() != i + 2) return false;
    if (last_insertion_point(grown) != admissible.order[i] + 1) return false;
  }
  return true;
}

inline bool prop4_holds(const area_sequence& w) {
  if (w.empty()) return true;
  const int n = w.size();
  std::vector<letter_t> prefix(w.letters().begin(), w.letters().end());
  prefix.pop_back();
  const area_sequence u = area_sequence::unchecked(std::move(prefix));

  const area_sequence image_w = zeta_inverse(w);
  const area_sequence image_u = zeta_inverse(u);
  const auto bp = bounce_profile::of(w);
  const letter_t b_last = bp.b.back();
  const letter_t w_last = w.letters().back();
  const auto admissible = admissible_insertions::of(image_w);
  const letter_t max_w = image_w.max_letter();

  if ((b_last == 0) != (max_w == image_u.max_letter() + 1)) return false;
  if (static_cast<letter_t>(bp.bounces.size()) != max_w) return false;
  if (static_cast<letter_t>(admissible.maxb.size()) != b_last + 1) return false;
  if (static_cast<letter_t>(admissible.maxa.size()) != w_last - b_last)
    return false;
  // Values >= k in the image count the reversed position of the k-th bounce.
  for (letter_t k = 1; k <= max_w; ++k) {
    int at_least_k = 0;
    for (letter_t x : image_w.letters())
      if (x >= k) ++at_least_k;
    const int j = bp.bounces[static_cast<std::size_t>(k) - 1];
    if (at_least_k != n - j + 1) return false;
  }
  return true;
}

inline bool dual_recovery_agrees(const area_sequence& w) {
  if (w.empty()) return true;
  const int p = last_insertion_point(w);
  std::vector<letter_t> rest(w.letters().begin(), w.letters().end());
  rest.erase(rest.begin() + (p - 1));
  const area_sequence shorter = area_sequence::unchecked(std::move(rest));

  const auto admissible = admissible_insertions::of(shorter);
  const auto it =
      std::find(admissible.order.begin(), admissible.order.end(), p - 1);
  if (it == admissible.order.end()) return false;
  const stat_t by_index = it - admissible.order.begin();
  const stat_t by_dinv = dinv(w) - dinv(shorter);
  return by_index == by_dinv;
}

inline check_result run_check(check which, int n, const verify_options& opts) {
  check_result result;
  result.name = to_string(which);

  auto from_violation = [&](std::optional<area_sequence> word) {
    result.pass = !word.has_value();
    result.counterexample = std::move(word);
  };

  switch (which) {
    case check::count: {
      auto counts = map_partitions<std::uint64_t>(
          n, opts.depth, opts.jobs, [&](const area_sequence& prefix) {
            std::uint64_t c = 0;
            for_each_extension(prefix, n, [&](const area_sequence&) { ++c; });
            return c;
          });
      std::uint64_t total = 0;
      for (std::uint64_t c : counts) total += c;
      result.pass = total == catalan(n);
      break;
    }
    case check::roundtrip:
      from_violation(first_violation(n, opts.depth, opts.jobs,
                                     [](const area_sequence& w) {
                                       return from_steps(to_steps(w)) == w;
                                     }));
      break;
    case check::bijection: {
      using pair_list = std::vector<std::pair<area_sequence, area_sequence>>;
      auto partials = map_partitions<pair_list>(
          n, opts.depth, opts.jobs, [&](const area_sequence& prefix) {
            pair_list pairs;
            for_each_extension(prefix, n, [&](const area_sequence& w) {
              pairs.emplace_back(zeta_inverse(w), w);
            });
            return pairs;
          });
      pair_list images;
      for (auto& part : partials)
        images.insert(images.end(), std::make_move_iterator(part.begin()),
                      std::make_move_iterator(part.end()));
      std::sort(images.begin(), images.end());
      result.pass = true;
      for (std::size_t i = 1; i < images.size(); ++i) {
        if (images[i].first == images[i - 1].first) {
          // Images are valid size-n words by construction, so with the
          // count equal to catalan(n) the only possible defect is a
          // collision; report its later preimage.
          from_violation(images[i].second);
          return result;
        }
      }
      if (images.size() != catalan(n)) result.pass = false;
      break;
    }
    case check::inverse:
      from_violation(first_violation(n, opts.depth, opts.jobs,
                                     [](const area_sequence& w) {
                                       return zeta(zeta_inverse(w)) == w;
                                     }));
      break;
    case check::dinv_area:
      from_violation(first_violation(n, opts.depth, opts.jobs,
                                     [](const area_sequence& w) {
                                       return dinv(zeta_inverse(w)) == area(w);
                                     }));
      break;
    case check::bounce_area:
      from_violation(first_violation(n, opts.depth, opts.jobs,
                                     [](const area_sequence& w) {
                                       return area(zeta_inverse(w)) == bounce(w);
                                     }));
      break;
    case check::eq3:
      from_violation(first_violation(n, opts.depth, opts.jobs, eq3_holds));
      break;
    case check::prop4:
      from_violation(first_violation(n, opts.depth, opts.jobs, prop4_holds));
      break;
    case check::dual:
      from_violation(
          first_violation(n, opts.depth, opts.jobs, dual_recovery_agrees));
      break;
    case check::symmetry: {
      const auto matrix = qt_matrix::build(n, statistic::dinv, statistic::area,
                                           opts.limit, opts.jobs, opts.depth);
      result.pass = matrix.symmetric() && matrix.total() == catalan(n);
      break;
    }
  }
  return result;
}

}  // namespace detail

/// Runs the named suites over every size-n sequence. Checks execute in the
/// canonical all_checks order regardless of how the set was given.
inline verify_report verify(int n, std::span<const check> checks,
                            verify_options opts = {}) {
  require_within_limit(n, opts.limit);
  const auto start = std::chrono::steady_clock::now();
  verify_report report;
  report.n = n;
  for (check c : all_checks) {
    if (std::find(checks.begin(), checks.end(), c) == checks.end()) continue;
    report.checks.push_back(detail::run_check(c, n, opts));
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

inline verify_report verify_all(int n, verify_options opts = {}) {
  return verify(n, all_checks, opts);
}

}  // namespace dyck::lab

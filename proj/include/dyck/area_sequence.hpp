#pragma once

// Dyck paths encoded as area sequences.
//
// The area sequence of a Dyck path of size n is the word w_1...w_n over
// {0,...,n-1} whose i-th letter counts the full cells between the path's
// i-th north step and the diagonal y = x. A word is an area sequence
// exactly when w_1 = 0 and 0 <= w_{i+1} <= w_i + 1; this header provides
// that validation, the conversion to and from north/east step words, exact
// Catalan numbers, and lexicographic enumeration of all sequences of a
// given size. Positions in reports and accessors are 1-based.

#include <cassert>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dyck {

using letter_t = int;
using stat_t = long long;

enum class violation_rule {
  first_letter_nonzero,  // w_1 != 0
  negative_letter,       // w_i < 0
  rise_exceeds_one,      // w_{i+1} > w_i + 1
};

inline const char* describe(violation_rule rule) {
  switch (rule) {
    case violation_rule::first_letter_nonzero:
      return "first letter must be 0";
    case violation_rule::negative_letter:
      return "letters must be non-negative";
    case violation_rule::rise_exceeds_one:
      return "a letter may exceed its predecessor by at most 1";
  }
  return "unknown rule";
}

struct word_violation {
  int position = 0;  // 1-based index of the first offending letter
  violation_rule rule = violation_rule::first_letter_nonzero;

  friend bool operator==(const word_violation&, const word_violation&) = default;
};

struct validation_report {
  bool valid = true;
  std::optional<word_violation> violation{};  // engaged exactly when !valid
};

/// Checks the area-sequence characterization on a raw letter sequence and
/// reports the first offending position when it fails.
inline validation_report validate(std::span<const letter_t> letters) {
  if (letters.empty()) return {};
  if (letters[0] != 0)
    return {false, word_violation{1, violation_rule::first_letter_nonzero}};
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] < 0)
      return {false,
              word_violation{static_cast<int>(i) + 1, violation_rule::negative_letter}};
    if (letters[i] > letters[i - 1] + 1)
      return {false,
              word_violation{static_cast<int>(i) + 1, violation_rule::rise_exceeds_one}};
  }
  return {};
}

/// A validated area sequence. Immutable after construction; the empty
/// sequence is the size-0 Dyck path and is valid everywhere.
class area_sequence {
 public:
  area_sequence() = default;

  static std::optional<area_sequence> make(std::vector<letter_t> letters) {
    if (!validate(letters).valid) return std::nullopt;
    return area_sequence(std::move(letters));
  }

  /// Like make() but throws std::invalid_argument naming the first
  /// offending position.
  static area_sequence require(std::vector<letter_t> letters) {
    const auto report = validate(letters);
    if (!report.valid) {
      const auto& v = *report.violation;
      throw std::invalid_argument("not an area sequence: position " +
                                  std::to_string(v.position) + ": " +
                                  describe(v.rule));
    }
    return area_sequence(std::move(letters));
  }

  /// Wraps letters the caller has already proven valid (enumeration,
  /// insertion, and letter-removal all preserve validity).
  static area_sequence unchecked(std::vector<letter_t> letters) {
    assert(validate(letters).valid);
    return area_sequence(std::move(letters));
  }

  int size() const noexcept { return static_cast<int>(letters_.size()); }
  bool empty() const noexcept { return letters_.empty(); }
  std::span<const letter_t> letters() const noexcept { return letters_; }
  std::vector<letter_t> to_vector() const { return letters_; }

  /// 1-based letter access.
  letter_t letter(int position) const {
    if (position < 1 || position > size())
      throw std::out_of_range("letter position " + std::to_string(position) +
                              " outside [1, " + std::to_string(size()) + "]");
    return letters_[static_cast<std::size_t>(position) - 1];
  }

  /// Largest letter, or -1 for the empty sequence.
  letter_t max_letter() const noexcept {
    letter_t m = -1;
    for (letter_t x : letters_) m = x > m ? x : m;
    return m;
  }

  friend bool operator==(const area_sequence&, const area_sequence&) = default;
  friend auto operator<=>(const area_sequence&, const area_sequence&) = default;

 private:
  explicit area_sequence(std::vector<letter_t> letters)
      : letters_(std::move(letters)) {}

  std::vector<letter_t> letters_;
};

// ---------------------------------------------------------------------------
// Step words
// ---------------------------------------------------------------------------

enum class step : std::uint8_t { north, east };

enum class step_rule {
  below_diagonal,  // a prefix has more east than north steps
  unbalanced,      // the full word has unequal north and east counts
};

inline const char* describe(step_rule rule) {
  switch (rule) {
    case step_rule::below_diagonal:
      return "prefix dips below the diagonal";
    case step_rule::unbalanced:
      return "north and east counts differ";
  }
  return "unknown rule";
}

struct step_violation {
  int prefix_length = 0;  // length of the first bad prefix
  step_rule rule = step_rule::below_diagonal;

  friend bool operator==(const step_violation&, const step_violation&) = default;
};

struct step_report {
  bool valid = true;
  std::optional<step_violation> violation{};
};

inline step_report validate_steps(std::span<const step> steps) {
  long long north = 0, east = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    (steps[i] == step::north ? north : east) += 1;
    if (east > north)
      return {false, step_violation{static_cast<int>(i) + 1,
                                    step_rule::below_diagonal}};
  }
  if (north != east)
    return {false, step_violation{static_cast<int>(steps.size()),
                                  step_rule::unbalanced}};
  return {};
}

/// A north/east word staying weakly above the diagonal, with equal step
/// counts: the lattice-path form of a Dyck path.
class step_word {
 public:
  step_word() = default;

  static std::optional<step_word> make(std::vector<step> steps) {
    if (!validate_steps(steps).valid) return std::nullopt;
    return step_word(std::move(steps));
  }

  static step_word require(std::vector<step> steps) {
    const auto report = validate_steps(steps);
    if (!report.valid) {
      const auto& v = *report.violation;
      throw std::invalid_argument("not a Dyck step word: prefix of length " +
                                  std::to_string(v.prefix_length) + ": " +
                                  describe(v.rule));
    }
    return step_word(std::move(steps));
  }

  static step_word unchecked(std::vector<step> steps) {
    assert(validate_steps(steps).valid);
    return step_word(std::move(steps));
  }

  /// Number of north steps (the size of the Dyck path).
  int path_size() const noexcept { return static_cast<int>(steps_.size() / 2); }
  std::span<const step> steps() const noexcept { return steps_; }

  friend bool operator==(const step_word&, const step_word&) = default;

 private:
  explicit step_word(std::vector<step> steps) : steps_(std::move(steps)) {}

  std::vector<step> steps_;
};

/// North step i is followed by w_i + 1 - w_{i+1} east steps (w_n + 1 for the
/// last one), which is exactly what keeps w_i full cells on row i.
inline step_word to_steps(const area_sequence& w) {
  const auto letters = w.letters();
  const int n = w.size();
  std::vector<step> steps;
  steps.reserve(2 * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    steps.push_back(step::north);
    const letter_t east_count =
        (i + 1 < n) ? letters[i] + 1 - letters[i + 1] : letters[i] + 1;
    for (letter_t e = 0; e < east_count; ++e) steps.push_back(step::east);
  }
  return step_word::unchecked(std::move(steps));
}

/// Inverse of to_steps: the i-th north step sits i-1-w_i east steps in, so
/// w_i = (i - 1) - (#east steps before it).
inline area_sequence from_steps(const step_word& s) {
  std::vector<letter_t> letters;
  letters.reserve(static_cast<std::size_t>(s.path_size()));
  int east_seen = 0;
  int row = 0;
  for (step st : s.steps()) {
    if (st == step::north) {
      letters.push_back(row - east_seen);
      ++row;
    } else {
      ++east_seen;
    }
  }
  return area_sequence::unchecked(std::move(letters));
}

// ---------------------------------------------------------------------------
// Counting and enumeration
// ---------------------------------------------------------------------------

/// Exact Catalan number (1/(n+1)) * binom(2n, n); throws std::overflow_error
/// instead of wrapping (64 bits hold up to n = 33).
inline std::uint64_t catalan(int n) {
  if (n < 0) throw std::invalid_argument("catalan: size must be non-negative");
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    const std::uint64_t factor = 2 * (2 * static_cast<std::uint64_t>(k) + 1);
    if (c > std::numeric_limits<std::uint64_t>::max() / factor)
      throw std::overflow_error("catalan(" + std::to_string(n) +
                                ") does not fit in 64 bits");
    c = c * factor / (static_cast<std::uint64_t>(k) + 2);
  }
  return c;
}

namespace detail {

template <typename Visitor>
void extend_to_size(std::vector<letter_t>& buffer, int n, Visitor& visit) {
  if (static_cast<int>(buffer.size()) == n) {
    visit(area_sequence::unchecked(buffer));
    return;
  }
  const letter_t top = buffer.empty() ? 0 : buffer.back() + 1;
  for (letter_t a = 0; a <= top; ++a) {
    buffer.push_back(a);
    extend_to_size(buffer, n, visit);
    buffer.pop_back();
  }
}

}  // namespace detail

/// Visits every area sequence of size n exactly once, in ascending
/// lexicographic order. The number of visits is catalan(n); keep n small
/// (the whole space is walked).
template <typename Visitor>
void for_each_area_sequence(int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  std::vector<letter_t> buffer;
  buffer.reserve(static_cast<std::size_t>(n));
  detail::extend_to_size(buffer, n, visit);
}

/// Visits exactly the size-n sequences extending the given prefix, in
/// lexicographic order. Yields nothing when the prefix is longer than n and
/// only the prefix itself when sizes match.
template <typename Visitor>
void for_each_extension(const area_sequence& prefix, int n, Visitor&& visit) {
  if (n < 0) throw std::invalid_argument("size must be non-negative");
  if (prefix.size() > n) return;
  std::vector<letter_t> buffer(prefix.letters().begin(), prefix.letters().end());
  buffer.reserve(static_cast<std::size_t>(n));
  detail::extend_to_size(buffer, n, visit);
}

inline std::vector<area_sequence> enumerate_area_sequences(int n) {
  std::vector<area_sequence> all;
  for_each_area_sequence(n, [&](const area_sequence& w) { all.push_back(w); });
  return all;
}

inline std::vector<area_sequence> enumerate_extensions(const area_sequence& prefix,
                                                       int n) {
  std::vector<area_sequence> all;
  for_each_extension(prefix, n, [&](const area_sequence& w) { all.push_back(w); });
  return all;
}

}  // namespace dyck

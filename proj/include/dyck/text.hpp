#pragma once

// Textual encodings of words.
//
// Canonical form is comma-separated decimal letters ("0,1,2,1"). A compact
// digit string ("0121") is accepted on input when every letter fits one
// digit; mixing the two forms is rejected so "0,1,2" and "012" can never
// disagree. Step words are strings over {N, E}.

#include <charconv>
#include <optional>
#include <string>
#include <string_view>

#include "area_sequence.hpp"

namespace dyck {

inline std::string to_text(std::span<const letter_t> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out.push_back(',');
    out += std::to_string(letters[i]);
  }
  return out;
}

inline std::string to_text(const area_sequence& w) { return to_text(w.letters()); }

/// Digit-string form, available only when every letter is a single digit.
inline std::optional<std::string> to_compact_text(const area_sequence& w) {
  if (w.max_letter() > 9) return std::nullopt;
  std::string out;
  out.reserve(static_cast<std::size_t>(w.size()));
  for (letter_t x : w.letters()) out.push_back(static_cast<char>('0' + x));
  return out;
}

inline std::string to_text(const step_word& s) {
  std::string out;
  out.reserve(s.steps().size());
  for (step st : s.steps()) out.push_back(st == step::north ? 'N' : 'E');
  return out;
}

struct word_parse_result {
  bool ok = false;
  std::vector<letter_t> letters;  // meaningful when ok
  int position = 0;               // 1-based letter/token position when !ok
  std::string message;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses either encoding into raw letters. Validation against the
/// area-sequence characterization is a separate step, so negative letters
/// pass through here and fail there with a position.
inline word_parse_result parse_word_text(std::string_view text) {
  word_parse_result result;
  text = detail::trim(text);
  if (text.empty()) {
    result.ok = true;
    return result;
  }

  if (text.find(',') != std::string_view::npos) {
    int token_index = 0;
    std::size_t begin = 0;
    while (begin <= text.size()) {
      const std::size_t end = std::min(text.find(',', begin), text.size());
      const std::string_view token = detail::trim(text.substr(begin, end - begin));
      ++token_index;
      if (token.empty()) {
        result.position = token_index;
        result.message = "empty letter";
        return result;
      }
      letter_t value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc{} || ptr != token.data() + token.size()) {
        result.position = token_index;
        result.message = "letter '" + std::string(token) + "' is not an integer";
        return result;
      }
      result.letters.push_back(value);
      if (end == text.size()) break;
      begin = end + 1;
    }
    result.ok = true;
    return result;
  }

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c < '0' || c > '9') {
      result.position = static_cast<int>(i) + 1;
      result.message = std::string("unexpected character '") + c +
                       "' in compact word (use commas for letters above 9)";
      return result;
    }
    result.letters.push_back(c - '0');
  }
  result.ok = true;
  return result;
}

struct step_parse_result {
  bool ok = false;
  std::vector<step> steps;
  int position = 0;
  std::string message;
};

inline step_parse_result parse_step_text(std::string_view text) {
  step_parse_result result;
  text = detail::trim(text);
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
      case 'N':
      case 'n':
        result.steps.push_back(step::north);
        break;
      case 'E':
      case 'e':
        result.steps.push_back(step::east);
        break;
      default:
        result.position = static_cast<int>(i) + 1;
        result.message = std::string("unexpected character '") + text[i] +
                         "' in step word (expected N or E)";
        return result;
    }
  }
  result.ok = true;
  return result;
}

}  // namespace dyck

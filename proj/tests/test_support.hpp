#pragma once

#include <dyck/area_sequence.hpp>
#include <dyck/text.hpp>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dyck::test {

inline area_sequence seq(std::string_view text) {
  const auto parsed = parse_word_text(text);
  if (!parsed.ok)
    throw std::invalid_argument("bad test word '" + std::string(text) + "': " +
                                parsed.message);
  return area_sequence::require(parsed.letters);
}

inline step_word steps(std::string_view text) {
  const auto parsed = parse_step_text(text);
  if (!parsed.ok)
    throw std::invalid_argument("bad test steps '" + std::string(text) + "'");
  return step_word::require(parsed.steps);
}

// Size-17 reference word used across the suites: its statistics, admissible
// insertions and map trace are all known by hand.
inline constexpr const char* reference_word_17 = "0,1,2,1,1,1,2,3,3,0,1,1,0,1,2,2,1";
inline constexpr const char* reference_steps_17 =
    "NNNEENENENNNENEEEENNENEENNNENEENEE";

}  // namespace dyck::test

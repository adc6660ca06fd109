#pragma once

#include <string_view>

#include "knotalt/corpus.hpp"
#include "knotalt/pd_code.hpp"

namespace fixture {

inline constexpr std::string_view kTrefoil = "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]";
inline constexpr std::string_view kFigureEight = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";
inline constexpr std::string_view kHopf = "X[1,3,2,4] X[3,1,4,2]";
inline constexpr std::string_view kCurl = "X[1,2,2,1]";

inline knotalt::PDCode pd(std::string_view text) { return knotalt::parse_pd(text); }

inline knotalt::PDCode corpus(std::string_view name) {
  for (const auto& e : knotalt::builtin_corpus())
    if (e.name == name) return knotalt::parse_pd(e.text);
  throw knotalt::InputError("no corpus entry " + std::string(name));
}

}  // namespace fixture

#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "rtm/forest.hpp"
#include "rtm/words.hpp"

namespace rtm::test {

inline Forest F(const std::string& key) { return key == "1" ? Forest() : parse_forest(key); }
inline Word W(const std::string& text) { return Word::parse(text); }

inline WordSum ws(std::initializer_list<std::pair<const char*, long>> terms) {
  WordSum out;
  for (const auto& [w, c] : terms) out.add(W(w), Rational(c));
  return out;
}

inline ForestSum fs(std::initializer_list<std::pair<const char*, Rational>> terms) {
  ForestSum out;
  for (const auto& [f, c] : terms) out.add(F(f), c);
  return out;
}

inline Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

}  // namespace rtm::test

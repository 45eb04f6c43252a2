#include "rtm/words.hpp"

#include <algorithm>
#include <cctype>

#include "rtm/errors.hpp"

namespace rtm {

Word Word::parse(std::string_view text) {
  if (text == "1") return Word();
  for (std::size_t i = 0; i < text.size(); ++i)
    if (text[i] != 'x' && text[i] != 'y')
      throw ParseError("word letters must be 'x' or 'y', got '" + std::string(1, text[i]) + "'", i);
  return Word(std::string(text));
}

int ZIndex::weight() const {
  int w = 0;
  for (int k : parts) w += k;
  return w;
}

std::string to_string(const ZIndex& k) {
  std::string out = "(";
  for (std::size_t i = 0; i < k.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(k.parts[i]);
  }
  return out + ")";
}

ZIndex parse_zindex(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  skip_space();
  if (pos >= text.size() || text[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  ZIndex k;
  skip_space();
  if (pos < text.size() && text[pos] == ')') {
    ++pos;
  } else {
    while (true) {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw ParseError("expected a positive integer", pos);
      if (pos - start > 6) throw ParseError("index entry too large", start);
      int v = std::stoi(std::string(text.substr(start, pos - start)));
      if (v < 1) throw ParseError("index entries must be positive", start);
      k.parts.push_back(v);
      skip_space();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
  }
  skip_space();
  if (pos != text.size()) throw ParseError("trailing characters", pos);
  return k;
}

WordSum concat(const WordSum& a, const WordSum& b) {
  WordSum out;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out.add(wa * wb, ca * cb);
  return out;
}

WordSum right_mult(const WordSum& a, const WordSum& v) { return concat(a, v); }

WordSum r_y_inverse(const WordSum& a) {
  WordSum out;
  for (const auto& [w, c] : a) {
    if (!w.ends_with(Letter::y)) throw DomainError("R_y^{-1}: word '" + w.text() + "' does not end in y");
    out.add(w.prefix(w.weight() - 1), c);
  }
  return out;
}

ZIndex z_encode(const Word& w) {
  if (!w.empty() && !w.ends_with(Letter::y))
    throw DomainError("z_encode: word '" + w.text() + "' does not end in y");
  ZIndex k;
  int run = 1;
  for (char c : w.letters()) {
    if (c == 'x') {
      ++run;
    } else {
      k.parts.push_back(run);
      run = 1;
    }
  }
  return k;
}

Word z_decode(const ZIndex& k) {
  std::string letters;
  for (int part : k.parts) {
    if (part < 1) throw DomainError("z_decode: index entries must be positive");
    letters.append(static_cast<std::size_t>(part - 1), 'x');
    letters.push_back('y');
  }
  return Word::parse(letters);
}

bool is_admissible(const Word& w) {
  return w.empty() || (w.at(0) == Letter::x && w.back() == Letter::y);
}

bool is_admissible(const WordSum& a) {
  return std::all_of(a.begin(), a.end(), [](const auto& term) { return is_admissible(term.first); });
}

Word dual(const Word& w) {
  std::string letters(w.letters().rbegin(), w.letters().rend());
  for (char& c : letters) c = c == 'x' ? 'y' : 'x';
  return Word::parse(letters);
}

std::vector<Word> words_of_weight(int n) {
  std::vector<Word> out;
  if (n < 0) return out;
  const unsigned long count = 1UL << n;
  out.reserve(count);
  for (unsigned long bits = 0; bits < count; ++bits) {
    std::string letters(static_cast<std::size_t>(n), 'x');
    for (int i = 0; i < n; ++i)
      if (bits >> (n - 1 - i) & 1UL) letters[static_cast<std::size_t>(i)] = 'y';
    out.push_back(Word::parse(letters));
  }
  return out;
}

std::vector<Word> admissible_words(int n) {
  if (n == 0) return {Word()};
  std::vector<Word> out;
  for (const auto& w : words_of_weight(n))
    if (is_admissible(w)) out.push_back(w);
  return out;
}

std::string to_string(const WordSum& a) {
  return render_sum(a, [](const Word& w) { return w.text(); });
}

}  // namespace rtm

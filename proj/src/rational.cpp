#include "rtm/rational.hpp"

#include <cctype>

#include "rtm/errors.hpp"

namespace rtm {

std::string to_string(const Rational& q) { return q.get_str(10); }

namespace {

Integer pow10(long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  if (s.empty()) throw ParseError("empty rational", 0);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string num(s.substr(0, slash));
    std::string den(s.substr(slash + 1));
    std::string_view num_digits = num;
    if (!num_digits.empty() && (num_digits[0] == '-' || num_digits[0] == '+'))
      num_digits.remove_prefix(1);
    if (!all_digits(num_digits)) throw ParseError("bad numerator in '" + std::string(text) + "'", 0);
    if (!all_digits(den)) throw ParseError("bad denominator in '" + std::string(text) + "'", slash + 1);
    if (num[0] == '+') num.erase(0, 1);
    Integer d(den, 10);
    if (d == 0) throw ParseError("zero denominator", slash + 1);
    Rational q(Integer(num, 10), d);
    q.canonicalize();
    return q;
  }

  bool negative = false;
  std::size_t pos = 0;
  if (s[0] == '-' || s[0] == '+') {
    negative = s[0] == '-';
    pos = 1;
  }
  std::string mantissa;
  long exponent = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw ParseError("expected digits in '" + std::string(text) + "'", pos);
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw ParseError("unexpected character in '" + std::string(text) + "'", pos);
    std::string_view exp_text = s.substr(pos + 1);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text[0] == '-' || exp_text[0] == '+')) {
      exp_negative = exp_text[0] == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6)
      throw ParseError("bad exponent in '" + std::string(text) + "'", pos + 1);
    long e = std::stol(std::string(exp_text));
    exponent += exp_negative ? -e : e;
  }

  Rational q{Integer(mantissa, 10)};
  if (exponent > 0) q *= pow10(exponent);
  if (exponent < 0) q /= pow10(-exponent);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits[0] == '-') digits.remove_prefix(1);
  if (!all_digits(digits)) throw ParseError("bad integer '" + std::string(text) + "'", 0);
  return Integer(std::string(text), 10);
}

Rational pow2(int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n < 0 ? -n : n));
  return n >= 0 ? Rational(p) : Rational(Integer(1), p);
}

}  // namespace rtm

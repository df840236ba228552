#include "setkit/numbers.hpp"

#include <cctype>

namespace setkit {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  bool negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = (s[0] == '-');
    s = s.substr(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw Error("invalid rational '" + text + "'");
    }
    Natural d(den);
    if (d == 0) throw Error("zero denominator in '" + text + "'");
    value = Rational(Natural(num), d);
  } else if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (head.empty()) head = "0";
    if (!all_digits(head) || !all_digits(tail)) {
      throw Error("invalid rational '" + text + "'");
    }
    Natural den = 1;
    for (std::size_t i = 0; i < tail.size(); ++i) den *= 10;
    value = Rational(Natural(head) * den + Natural(tail.empty() ? "0" : tail), den);
  } else {
    if (!all_digits(s)) throw Error("invalid rational '" + text + "'");
    value = Rational(Natural(s));
  }
  return negative ? -value : value;
}

std::string fraction_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

}  // namespace setkit

#include "gw/scalar.hpp"

#include <cctype>
#include <sstream>

namespace gw {

namespace {

// Reads a signed decimal (possibly scientific) number starting at pos.
// Returns the value and advances pos past it.
double read_number(const std::string& s, size_t& pos) {
  size_t start = pos;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
  bool digits = false;
  while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) ||
                            s[pos] == '.')) {
    digits = digits || std::isdigit(static_cast<unsigned char>(s[pos]));
    ++pos;
  }
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    size_t mark = pos;
    ++pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    bool exp_digits = false;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      exp_digits = true;
      ++pos;
    }
    if (!exp_digits) pos = mark;  // the 'e' belongs to something else
  }
  if (!digits) {
    throw std::invalid_argument("parse_complex: expected a number in '" + s +
                                "' at position " + std::to_string(start));
  }
  return std::stod(s.substr(start, pos - start));
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string s;
  s.reserve(text.size());
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw std::invalid_argument("parse_complex: empty input");

  size_t pos = 0;
  // Pure imaginary with implicit coefficient: "i", "-i", "+i".
  auto is_unit = [&](size_t p) { return s[p] == 'i' || s[p] == 'j'; };
  double first_sign = 1.0;
  size_t probe = 0;
  if (s[probe] == '+' || s[probe] == '-') {
    first_sign = (s[probe] == '-') ? -1.0 : 1.0;
    ++probe;
  }
  if (probe < s.size() && is_unit(probe) && probe + 1 == s.size()) {
    return Complex(0.0, first_sign);
  }

  double first = read_number(s, pos);
  if (pos == s.size()) return Complex(first, 0.0);
  if (is_unit(pos) && pos + 1 == s.size()) return Complex(0.0, first);

  if (s[pos] != '+' && s[pos] != '-') {
    throw std::invalid_argument("parse_complex: cannot parse '" + text + "'");
  }
  // Second term must be imaginary: "<num>i" or bare "+i"/"-i".
  double second_sign = (s[pos] == '-') ? -1.0 : 1.0;
  size_t after_sign = pos + 1;
  double second;
  if (after_sign < s.size() && is_unit(after_sign) &&
      after_sign + 1 == s.size()) {
    second = second_sign;
    pos = after_sign + 1;
  } else {
    second = read_number(s, pos);
    if (pos >= s.size() || !is_unit(pos) || pos + 1 != s.size()) {
      throw std::invalid_argument("parse_complex: cannot parse '" + text +
                                  "' (expected trailing i)");
    }
    ++pos;
  }
  return Complex(first, second);
}

std::string format_complex(const Complex& z) {
  std::ostringstream out;
  out.precision(17);
  if (z.imag() == 0.0) {
    out << z.real();
    return out.str();
  }
  out << z.real();
  if (z.imag() >= 0.0) out << '+';
  out << z.imag() << 'i';
  return out.str();
}

}  // namespace gw

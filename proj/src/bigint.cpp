#include "fibspec/bigint.hpp"

#include <cctype>

namespace fibspec {

Count pow2(unsigned long long k) {
  Count one = 1;
  return one << k;
}

Count pow3(unsigned long long k) { return powi(3, k); }

Count powi(const Count& base, unsigned long long exp) {
  Count result = 1;
  Count b = base;
  while (exp > 0) {
    if (exp & 1) result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

std::string to_decimal(const Count& x) { return x.str(); }

Count parse_decimal(const std::string& s) {
  if (s.empty()) throw validation_error("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw validation_error("sign without digits: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw validation_error("malformed integer literal: " + s);
    }
  }
  return Count(s);
}

Count ceil_div(const Count& num, const Count& den) {
  // C++ big-int division truncates toward zero; our users only pass den > 0.
  Count q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

Count floor_div(const Count& num, const Count& den) {
  Count q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Count num = parse_decimal(s.substr(0, slash));
    Count den = parse_decimal(s.substr(slash + 1));
    if (den == 0) throw validation_error("zero denominator: " + s);
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string head = s.substr(0, dot);
    std::string tail = s.substr(dot + 1);
    if (tail.empty()) throw validation_error("malformed decimal literal: " + s);
    bool negative = !head.empty() && head[0] == '-';
    Count whole = head.empty() || head == "-" || head == "+"
                      ? Count(0)
                      : parse_decimal(head);
    Count frac = parse_decimal(tail);
    if (frac < 0) throw validation_error("malformed decimal literal: " + s);
    Count den = powi(10, tail.size());
    Count num = whole * den + (negative ? -frac : frac);
    if (negative && whole == 0) num = -frac;
    return Rational(num, den);
  }
  return Rational(parse_decimal(s), 1);
}

std::string rational_to_string(const Rational& r) {
  if (r.denominator() == 1) return to_decimal(r.numerator());
  return to_decimal(r.numerator()) + "/" + to_decimal(r.denominator());
}

Count ceil_scale(const Rational& r, const Count& x) {
  return ceil_div(r.numerator() * x, r.denominator());
}

Count floor_scale(const Rational& r, const Count& x) {
  return floor_div(r.numerator() * x, r.denominator());
}

}  // namespace fibspec

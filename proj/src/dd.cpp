#include "mandelroots/dd.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

#include "mandelroots/errors.hpp"

namespace mandelroots {

std::string to_string(const dd& a, int digits) {
  if (!std::isfinite(a.hi)) return std::to_string(a.hi);
  if (a.hi == 0.0) return "0";
  digits = std::max(1, std::min(digits, 34));

  bool neg = a.hi < 0.0;
  dd x = neg ? -a : a;

  int e = static_cast<int>(std::floor(std::log10(x.hi)));
  x = x * pow10i(-e);
  // Guard against log10 rounding at decade boundaries.
  while (x.hi >= 10.0) {
    x = x / 10.0;
    ++e;
  }
  while (x.hi < 1.0) {
    x = x * 10.0;
    --e;
  }

  std::vector<int> dig(static_cast<size_t>(digits) + 1, 0);
  for (int i = 0; i <= digits; ++i) {
    int d = static_cast<int>(std::floor(to_double(x)));
    d = std::clamp(d, 0, 9);
    dig[static_cast<size_t>(i)] = d;
    x = (x - static_cast<double>(d)) * 10.0;
  }
  // Round on the extra digit, propagating carries.
  if (dig[static_cast<size_t>(digits)] >= 5) {
    int i = digits - 1;
    while (i >= 0 && ++dig[static_cast<size_t>(i)] == 10) {
      dig[static_cast<size_t>(i)] = 0;
      --i;
    }
    if (i < 0) {
      dig.insert(dig.begin(), 1);
      ++e;
    }
  }

  std::string out;
  if (neg) out += '-';
  out += static_cast<char>('0' + dig[0]);
  if (digits > 1) {
    out += '.';
    for (int i = 1; i < digits; ++i) out += static_cast<char>('0' + dig[static_cast<size_t>(i)]);
    while (out.size() > 2 && out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  if (e != 0) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "e%+03d", e);
    out += buf;
  }
  return out;
}

dd dd_from_string(const std::string& s) {
  size_t i = 0;
  const size_t n = s.size();
  while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i == n) throw FormatError("empty numeric field");

  bool neg = false;
  if (s[i] == '+' || s[i] == '-') {
    neg = s[i] == '-';
    ++i;
  }

  dd val(0.0);
  int frac = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < n; ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      val = val * 10.0 + static_cast<double>(c - '0');
      if (seen_dot) ++frac;
      seen_digit = true;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw FormatError("unparsable numeric field: " + s);

  int expn = 0;
  if (i < n && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool eneg = false;
    if (i < n && (s[i] == '+' || s[i] == '-')) {
      eneg = s[i] == '-';
      ++i;
    }
    if (i >= n || !std::isdigit(static_cast<unsigned char>(s[i])))
      throw FormatError("unparsable exponent in: " + s);
    while (i < n && std::isdigit(static_cast<unsigned char>(s[i]))) {
      expn = expn * 10 + (s[i] - '0');
      ++i;
    }
    if (eneg) expn = -expn;
  }
  while (i < n && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  if (i != n) throw FormatError("trailing characters in numeric field: " + s);

  val = val * pow10i(expn - frac);
  return neg ? -val : val;
}

}  // namespace mandelroots

#include "cochise/cost.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace cochise {

std::optional<Usd> Usd::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  bool neg = false;
  if (text[i] == '+' || text[i] == '-') {
    neg = text[i] == '-';
    ++i;
  }
  std::int64_t whole = 0;
  bool any_digit = false;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    whole = whole * 10 + (text[i] - '0');
    if (whole > 9'000'000'000LL) return std::nullopt;  // > $9e9: out of range
    any_digit = true;
    ++i;
  }
  std::int64_t frac = 0;
  int frac_digits = 0;
  if (i < text.size() && text[i] == '.') {
    ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      if (frac_digits >= 9) return std::nullopt;
      frac = frac * 10 + (text[i] - '0');
      ++frac_digits;
      any_digit = true;
      ++i;
    }
  }
  if (!any_digit || i != text.size()) return std::nullopt;
  for (int k = frac_digits; k < 9; ++k) frac *= 10;
  std::int64_t nanos = whole * 1'000'000'000LL + frac;
  return Usd::from_nanos(neg ? -nanos : nanos);
}

Usd Usd::from_double(double usd) {
  return Usd::from_nanos(static_cast<std::int64_t>(std::llround(usd * 1e9)));
}

std::string Usd::to_string(int min_frac) const {
  std::int64_t n = nanos_;
  const bool neg = n < 0;
  if (neg) n = -n;
  const std::int64_t whole = n / 1'000'000'000LL;
  std::int64_t frac = n % 1'000'000'000LL;
  char frac_buf[10];
  std::snprintf(frac_buf, sizeof(frac_buf), "%09lld", static_cast<long long>(frac));
  std::string digits(frac_buf);
  while (static_cast<int>(digits.size()) > min_frac && digits.back() == '0') digits.pop_back();
  std::string out = neg ? "-" : "";
  out += std::to_string(whole);
  if (!digits.empty()) {
    out += '.';
    out += digits;
  }
  return out;
}

}  // namespace cochise

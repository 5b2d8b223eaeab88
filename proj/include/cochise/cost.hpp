#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace cochise {

// Exact-decimal USD amount, fixed point with 9 fractional digits.
// All cost arithmetic in the harness happens on integer nano-dollars so
// summation and comparison invariants are bit-testable.
class Usd {
 public:
  constexpr Usd() = default;

  static constexpr Usd from_nanos(std::int64_t nanos) { return Usd(nanos); }

  // Parses a plain decimal string ("1.5", "0.0084", "3"). Rejects more than
  // nine fractional digits and anything non-numeric.
  static std::optional<Usd> parse(std::string_view text);

  // Rounds to the nearest nano-dollar.
  static Usd from_double(double usd);

  constexpr std::int64_t nanos() const { return nanos_; }
  double to_double() const { return static_cast<double>(nanos_) * 1e-9; }

  // Exact decimal rendering with at least `min_frac` fractional digits and
  // no trailing zeros beyond them.
  std::string to_string(int min_frac = 2) const;

  constexpr Usd operator+(Usd o) const { return Usd(nanos_ + o.nanos_); }
  constexpr Usd operator-(Usd o) const { return Usd(nanos_ - o.nanos_); }
  Usd& operator+=(Usd o) {
    nanos_ += o.nanos_;
    return *this;
  }
  constexpr auto operator<=>(const Usd&) const = default;

 private:
  explicit constexpr Usd(std::int64_t nanos) : nanos_(nanos) {}
  std::int64_t nanos_ = 0;
};

// The four token categories the gateway accounts for.
struct TokenCounts {
  std::uint64_t input = 0;
  std::uint64_t output = 0;
  std::uint64_t reasoning = 0;
  std::uint64_t cached = 0;

  bool operator==(const TokenCounts&) const = default;
};

// Per-call token counts plus the USD cost computed from the active price
// table. Serialized flat in LLM-call log payloads.
struct CostMetrics {
  TokenCounts tokens;
  Usd usd;

  bool operator==(const CostMetrics&) const = default;
};

}  // namespace cochise

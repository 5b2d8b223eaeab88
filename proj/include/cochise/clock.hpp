#pragma once

#include <chrono>
#include <cstdint>

namespace cochise {

// Injectable time source. Tests and deterministic runs use FixedClock so
// every timestamp and duration in a log is reproducible byte for byte.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual std::int64_t now_ms() = 0;
};

class SystemClock final : public Clock {
 public:
  std::int64_t now_ms() override {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::system_clock::now().time_since_epoch())
        .count();
  }
};

// Starts at `start_ms` and advances by `step_ms` on every call.
class FixedClock final : public Clock {
 public:
  explicit FixedClock(std::int64_t start_ms, std::int64_t step_ms = 1000)
      : next_(start_ms), step_(step_ms) {}

  std::int64_t now_ms() override {
    const std::int64_t t = next_;
    next_ += step_;
    return t;
  }

 private:
  std::int64_t next_;
  std::int64_t step_;
};

}  // namespace cochise

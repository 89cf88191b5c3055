// Copyright 2026 The wmreg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <string>

#include "wmreg/error.hpp"

namespace wmreg {

// Virtual time is fixed-point milliseconds. Wall-clock time never enters the
// engine.
using Millis = std::chrono::milliseconds;

inline Millis seconds_to_millis(double seconds) {
  if (!std::isfinite(seconds) || seconds < 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "virtual duration must be finite and non-negative");
  }
  return Millis{static_cast<std::int64_t>(std::llround(seconds * 1000.0))};
}

inline double millis_to_seconds(Millis m) {
  return static_cast<double>(m.count()) / 1000.0;
}

// Renders a duration in seconds without trailing zeros ("10", "2.5").
inline std::string format_seconds(Millis m) {
  std::int64_t ms = m.count();
  std::string out = ms < 0 ? "-" : "";
  if (ms < 0) ms = -ms;
  out += std::to_string(ms / 1000);
  std::int64_t frac = ms % 1000;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 3 - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

class VirtualClock {
 public:
  Millis now() const noexcept { return now_; }

  void advance_to(Millis t) {
    if (t < now_) {
      throw Error(ErrorCode::kClockRegression,
                  "cannot move clock from " + format_seconds(now_) + "s to " +
                      format_seconds(t) + "s");
    }
    now_ = t;
  }

  void advance_by(Millis d) { advance_to(now_ + d); }

 private:
  Millis now_{0};
};

}  // namespace wmreg

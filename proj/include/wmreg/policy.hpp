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

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>

#include "wmreg/clock.hpp"
#include "wmreg/error.hpp"

namespace wmreg {

// Forgetting model applied by the WM manager. Decay pops the front of every
// buffer once per period; interference caps every buffer at `capacity` items
// with LRU displacement. Both runs decay before capacity.
class ForgettingPolicy {
 public:
  enum class Kind { kNone, kDecay, kInterference, kBoth };

  ForgettingPolicy() = default;

  static ForgettingPolicy None() { return ForgettingPolicy(); }

  static ForgettingPolicy Decay(Millis period) {
    check_period(period);
    ForgettingPolicy p;
    p.kind_ = Kind::kDecay;
    p.period_ = period;
    return p;
  }

  static ForgettingPolicy Interference(std::size_t capacity) {
    ForgettingPolicy p;
    p.kind_ = Kind::kInterference;
    p.capacity_ = capacity;
    return p;
  }

  static ForgettingPolicy Both(Millis period, std::size_t capacity) {
    check_period(period);
    ForgettingPolicy p;
    p.kind_ = Kind::kBoth;
    p.period_ = period;
    p.capacity_ = capacity;
    return p;
  }

  Kind kind() const noexcept { return kind_; }
  bool has_decay() const noexcept {
    return kind_ == Kind::kDecay || kind_ == Kind::kBoth;
  }
  bool has_capacity() const noexcept {
    return kind_ == Kind::kInterference || kind_ == Kind::kBoth;
  }
  Millis decay_period() const noexcept { return period_; }
  std::size_t capacity() const noexcept { return capacity_; }

  // "none", "decay(10)", "interference(2)", "both(10,2)".
  std::string label() const {
    switch (kind_) {
      case Kind::kNone: return "none";
      case Kind::kDecay: return "decay(" + format_seconds(period_) + ")";
      case Kind::kInterference:
        return "interference(" + std::to_string(capacity_) + ")";
      case Kind::kBoth:
        return "both(" + format_seconds(period_) + "," +
               std::to_string(capacity_) + ")";
    }
    return "none";
  }

  friend bool operator==(const ForgettingPolicy &,
                         const ForgettingPolicy &) = default;

 private:
  static void check_period(Millis period) {
    if (period.count() <= 0) {
      throw Error(ErrorCode::kInvalidArgument, "decay period must be > 0");
    }
  }

  Kind kind_ = Kind::kNone;
  Millis period_{0};
  std::size_t capacity_ = 0;
};

namespace detail {

inline double parse_number(std::string_view text, std::string_view what) {
  std::string s(text);
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used == 0 || used != s.size()) {
    throw Error(ErrorCode::kParse,
                "bad " + std::string(what) + " '" + s + "'");
  }
  return v;
}

inline std::size_t parse_capacity(std::string_view text) {
  double v = parse_number(text, "capacity");
  if (v < 0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw Error(ErrorCode::kInvalidArgument,
                "capacity must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace detail

// Inverse of ForgettingPolicy::label().
inline ForgettingPolicy parse_policy(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  auto open = s.find('(');
  std::string name = s.substr(0, open);
  std::string args;
  if (open != std::string::npos) {
    if (s.back() != ')') throw Error(ErrorCode::kParse, "bad policy '" + s + "'");
    args = s.substr(open + 1, s.size() - open - 2);
  }
  if (name == "none" && open == std::string::npos) return ForgettingPolicy::None();
  if (name == "decay" && !args.empty()) {
    return ForgettingPolicy::Decay(
        seconds_to_millis(detail::parse_number(args, "decay period")));
  }
  if (name == "interference" && !args.empty()) {
    return ForgettingPolicy::Interference(detail::parse_capacity(args));
  }
  if (name == "both") {
    auto comma = args.find(',');
    if (comma != std::string::npos) {
      return ForgettingPolicy::Both(
          seconds_to_millis(
              detail::parse_number(args.substr(0, comma), "decay period")),
          detail::parse_capacity(args.substr(comma + 1)));
    }
  }
  throw Error(ErrorCode::kParse, "unknown policy '" + s + "'");
}

}  // namespace wmreg

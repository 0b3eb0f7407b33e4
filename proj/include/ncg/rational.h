// Copyright 2026 The ncg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NCG_RATIONAL_H_
#define NCG_RATIONAL_H_

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace ncg {

using Rational = boost::rational<std::int64_t>;

// Hop counts. kInfiniteHops marks vertices in different components and
// compares greater than every finite distance.
using Hops = int;
inline constexpr Hops kInfiniteHops = std::numeric_limits<int>::max();

inline Hops AddHops(Hops a, Hops b) {
  return (a == kInfiniteHops || b == kInfiniteHops) ? kInfiniteHops : a + b;
}

// "p/q" in lowest terms, or "p" when q == 1.
std::string ToString(const Rational& r);
std::string HopsToString(Hops h);

// Accepts "p", "p/q", optionally signed. Throws NcgError(kBadRational).
Rational ParseRational(std::string_view text);

// Smallest integer >= r.
std::int64_t Ceil(const Rational& r);

// A rational value or +infinity. Addition saturates.
class Cost {
 public:
  Cost() = default;
  Cost(Rational value) : value_(value) {}  // NOLINT: implicit by intent
  Cost(std::int64_t value) : value_(value) {}  // NOLINT

  static Cost Infinite() {
    Cost c;
    c.infinite_ = true;
    return c;
  }
  static Cost FromHops(Hops h) {
    return h == kInfiniteHops ? Infinite() : Cost(static_cast<std::int64_t>(h));
  }

  bool is_infinite() const { return infinite_; }
  // Precondition: !is_infinite().
  const Rational& value() const { return value_; }

  friend Cost operator+(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return Infinite();
    return Cost(a.value_ + b.value_);
  }
  Cost& operator+=(const Cost& other) { return *this = *this + other; }

  friend bool operator==(const Cost& a, const Cost& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
    return a.value_ == b.value_;
  }
  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend bool operator>(const Cost& a, const Cost& b) { return b < a; }
  friend bool operator<=(const Cost& a, const Cost& b) { return !(b < a); }
  friend bool operator>=(const Cost& a, const Cost& b) { return !(a < b); }

  std::string ToString() const;

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace ncg

#endif  // NCG_RATIONAL_H_

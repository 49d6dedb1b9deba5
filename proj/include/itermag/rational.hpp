#pragma once

// Exact nonnegative rationals extended by an infinity sentinel. Used for
// distances, norms and length gradings.

#include <gmpxx.h>

#include <compare>
#include <string>

namespace itermag {

using Rational = mpq_class;

class Extended {
 public:
  Extended() = default;
  Extended(Rational v) : value_(std::move(v)) { value_.canonicalize(); }  // NOLINT
  Extended(long v) : value_(v) {}                                          // NOLINT
  static Extended infinity() {
    Extended e;
    e.inf_ = true;
    return e;
  }

  bool            is_infinite() const noexcept { return inf_; }
  bool            is_finite() const noexcept { return !inf_; }
  Rational const& value() const;  // throws on infinity

  friend Extended operator+(Extended const& a, Extended const& b) {
    if (a.inf_ || b.inf_) {
      return infinity();
    }
    return Extended(Rational(a.value_ + b.value_));
  }
  friend bool operator==(Extended const& a, Extended const& b) {
    if (a.inf_ || b.inf_) {
      return a.inf_ == b.inf_;
    }
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(Extended const& a, Extended const& b) {
    if (a.inf_ || b.inf_) {
      return static_cast<int>(a.inf_) <=> static_cast<int>(b.inf_);
    }
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "inf" or the canonical fraction ("3", "1/2").
  std::string to_string() const;

 private:
  bool     inf_ = false;
  Rational value_{0};
};

// Accepts "3", "-1/2", "0.25" and (for Extended) "inf". No exponent notation.
// Throws std::invalid_argument on malformed text.
Extended parse_extended(std::string const& text);
Rational parse_rational(std::string const& text);

std::string rational_to_string(Rational const& q);

}  // namespace itermag

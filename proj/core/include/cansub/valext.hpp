#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cansub {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// p^e for any integer exponent (negative exponents give 1/p^|e|).
Rational power(std::int64_t base, int exponent);

/// Accepts "a/b" or "a" with optional leading sign. Decimals are rejected.
Rational parse_rational(std::string_view text);

/// Lowest terms, "num/den"; integers print without a denominator.
std::string format_rational(const Rational& q);

/// A valuation: an exact rational or +infinity.
///
/// Infinity is a tagged state rather than a sentinel number, so comparisons
/// against it are exact. Subtraction and value() are only defined on finite
/// values and throw ErrorKind::kIllegalOperation otherwise.
class ValExt {
 public:
  ValExt() = default;
  ValExt(Rational q) : value_(std::move(q)) {}  // NOLINT(google-explicit-constructor)
  ValExt(int q) : value_(q) {}                  // NOLINT(google-explicit-constructor)

  static ValExt inf() {
    ValExt v;
    v.inf_ = true;
    return v;
  }

  bool is_inf() const noexcept { return inf_; }
  bool is_finite() const noexcept { return !inf_; }
  const Rational& value() const;

  /// Multiplication by a rational. INF scaled by a positive rational stays INF.
  ValExt scaled(const Rational& factor) const;

  std::string to_string() const;
  static ValExt parse(std::string_view text);

  friend ValExt operator+(const ValExt& a, const ValExt& b);
  friend ValExt operator-(const ValExt& a, const ValExt& b);
  friend bool operator==(const ValExt& a, const ValExt& b);
  friend std::strong_ordering operator<=>(const ValExt& a, const ValExt& b);

 private:
  Rational value_{0};
  bool inf_ = false;
};

inline ValExt min(const ValExt& a, const ValExt& b) { return b < a ? b : a; }

/// Nonnegative integer or +infinity; used for the canonical tower depth n and HT depths.
class ExtNat {
 public:
  constexpr ExtNat() = default;
  constexpr explicit ExtNat(int value) : value_(value) {}

  static constexpr ExtNat inf() {
    ExtNat n;
    n.inf_ = true;
    return n;
  }

  constexpr bool is_inf() const noexcept { return inf_; }
  constexpr bool is_finite() const noexcept { return !inf_; }
  int value() const;

  std::string to_string() const;
  /// Accepts a nonnegative decimal integer or "inf".
  static ExtNat parse(std::string_view text);

  friend constexpr bool operator==(const ExtNat& a, const ExtNat& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b) {
    if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
    return a.value_ <=> b.value_;
  }

 private:
  int value_ = 0;
  bool inf_ = false;
};

}  // namespace cansub

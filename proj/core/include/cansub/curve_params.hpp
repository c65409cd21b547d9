#pragma once

#include <cstdint>

#include "cansub/valext.hpp"

namespace cansub {

bool is_prime(std::int64_t p) noexcept;

/// Which branch of the case analysis a curve falls in.
enum class Reduction {
  kOrdinary,        // h == 0
  kCanonical,       // 0 < h < p/(p+1): a canonical subgroup of order p exists
  kTooSupersingular // h >= p/(p+1)
};

/// The p-adic data of an elliptic curve that every computation here depends on:
/// the prime p and the truncated Hasse-invariant valuation h in [0, 1].
class CurveParams {
 public:
  /// Throws kInvalidInput unless p is prime and 0 <= h <= 1.
  CurveParams(std::int64_t p, Rational h);

  /// Truncates a raw Hasse-invariant valuation to 1 before constructing.
  static CurveParams from_hasse_valuation(std::int64_t p, const Rational& raw);

  std::int64_t p() const noexcept { return p_; }
  const Rational& h() const noexcept { return h_; }
  /// Depth of the canonical tower; infinite iff h == 0.
  ExtNat n() const noexcept { return n_; }
  Reduction reduction() const noexcept { return reduction_; }

  /// p/(p+1); no canonical subgroup exists for h at or above it.
  Rational threshold() const;

 private:
  std::int64_t p_;
  Rational h_;
  ExtNat n_;
  Reduction reduction_;
};

/// The unique n >= 0 with 1/(p^(n-1)(p+1)) <= h < 1/(p^(n-2)(p+1)); INF when h == 0.
ExtNat n_of(std::int64_t p, const Rational& h);
inline ExtNat n_of(const CurveParams& params) { return params.n(); }

/// p/(p+1)
Rational supersingular_threshold(std::int64_t p);

}  // namespace cansub

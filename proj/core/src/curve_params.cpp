#include "cansub/curve_params.hpp"

#include "cansub/error.hpp"

namespace cansub {

bool is_prime(std::int64_t p) noexcept {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Rational supersingular_threshold(std::int64_t p) { return make_rational(p, p + 1); }

ExtNat n_of(std::int64_t p, const Rational& h) {
  if (sgn(h) == 0) return ExtNat::inf();
  // lower(n) = p^(1-n)/(p+1) decreases in n; n is the first index it drops to h or below.
  Rational lower = supersingular_threshold(p);
  int n = 0;
  while (lower > h) {
    lower /= p;
    ++n;
  }
  return ExtNat(n);
}

CurveParams::CurveParams(std::int64_t p, Rational h) : p_(p), h_(std::move(h)) {
  if (!is_prime(p_)) throw Error(ErrorKind::kInvalidInput, "p = " + std::to_string(p_) + " is not prime");
  if (sgn(h_) < 0 || h_ > 1) {
    throw Error(ErrorKind::kInvalidInput, "h = " + format_rational(h_) + " outside [0, 1]");
  }
  n_ = n_of(p_, h_);
  if (sgn(h_) == 0) {
    reduction_ = Reduction::kOrdinary;
  } else if (h_ < threshold()) {
    reduction_ = Reduction::kCanonical;
  } else {
    reduction_ = Reduction::kTooSupersingular;
  }
}

CurveParams CurveParams::from_hasse_valuation(std::int64_t p, const Rational& raw) {
  return CurveParams(p, raw > 1 ? Rational(1) : raw);
}

Rational CurveParams::threshold() const { return supersingular_threshold(p_); }

}  // namespace cansub

#include "cansub/valext.hpp"

#include <cctype>

#include "cansub/error.hpp"

namespace cansub {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::kInvalidInput, "zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational power(std::int64_t base, int exponent) {
  mpz_class b(std::to_string(base));
  mpz_class r;
  unsigned magnitude = exponent < 0 ? static_cast<unsigned>(-exponent) : static_cast<unsigned>(exponent);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), magnitude);
  if (exponent >= 0) return Rational(r);
  if (r == 0) throw Error(ErrorKind::kIllegalOperation, "negative power of zero");
  Rational q(mpz_class(1), r);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::kInvalidInput, "not an exact rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw Error(ErrorKind::kInvalidInput, "zero denominator in '" + std::string(text) + "'");
  Rational q(parse_integer(num), d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

const Rational& ValExt::value() const {
  if (inf_) throw Error(ErrorKind::kIllegalOperation, "value() of infinite valuation");
  return value_;
}

ValExt ValExt::scaled(const Rational& factor) const {
  if (inf_) {
    if (sgn(factor) <= 0) throw Error(ErrorKind::kIllegalOperation, "infinity scaled by a nonpositive rational");
    return inf();
  }
  return ValExt(Rational(value_ * factor));
}

std::string ValExt::to_string() const { return inf_ ? "inf" : format_rational(value_); }

ValExt ValExt::parse(std::string_view text) {
  if (text == "inf" || text == "INF" || text == "+inf") return inf();
  return ValExt(parse_rational(text));
}

ValExt operator+(const ValExt& a, const ValExt& b) {
  if (a.inf_ || b.inf_) return ValExt::inf();
  return ValExt(Rational(a.value_ + b.value_));
}

ValExt operator-(const ValExt& a, const ValExt& b) {
  if (a.inf_ || b.inf_) throw Error(ErrorKind::kIllegalOperation, "subtraction involving infinity");
  return ValExt(Rational(a.value_ - b.value_));
}

bool operator==(const ValExt& a, const ValExt& b) {
  if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
  return a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ValExt& a, const ValExt& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  int c = cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

int ExtNat::value() const {
  if (inf_) throw Error(ErrorKind::kIllegalOperation, "value() of infinite depth");
  return value_;
}

std::string ExtNat::to_string() const { return inf_ ? "inf" : std::to_string(value_); }

ExtNat ExtNat::parse(std::string_view text) {
  if (text == "inf" || text == "INF") return inf();
  if (text.empty() || text.size() > 9) throw Error(ErrorKind::kInvalidInput, "bad depth '" + std::string(text) + "'");
  int v = 0;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw Error(ErrorKind::kInvalidInput, "bad depth '" + std::string(text) + "'");
    }
    v = v * 10 + (ch - '0');
  }
  return ExtNat(v);
}

}  // namespace cansub

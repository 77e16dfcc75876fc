#pragma once

// Exact rational numbers backed by GMP. Every algorithmic path in the
// toolkit uses this type; there is no floating-point arithmetic anywhere
// except in the approximate decimal renderings used for display.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vchc {

class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "3", "-7", "0.25", "7/3". Decimal strings are converted exactly.
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return q_; }

  /// Canonical "p" or "p/q" form; parse(str()) round-trips.
  std::string str() const { return q_.get_str(); }

  /// Decimal rendering with `digits` significant digits (display only).
  std::string approx(int digits = 6) const;

  /// Exact decimal expansion when the denominator has only 2 and 5 as
  /// prime factors.
  bool has_terminating_decimal() const;
  /// Decimal with at most `frac_digits` fractional digits, rounded half away
  /// from zero. Exact whenever the expansion terminates within that many
  /// digits.
  std::string decimal(int frac_digits) const;

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_positive() const { return sign() > 0; }
  bool is_negative() const { return sign() < 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  /// Smallest integer >= this. Throws if it does not fit in 64 bits.
  std::int64_t ceil() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

inline mpz_class parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer literal");
  mpz_class z(std::string(s), 10);
  return neg ? mpz_class(-z) : z;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t')) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpz_class num = detail::parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text))
      throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    mpz_class den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(mpq_class(num, den));
  }

  std::string_view body = text;
  bool neg = false;
  if (body.front() == '-' || body.front() == '+') {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto dot = body.find('.');
  std::string_view int_part = body.substr(0, dot);
  std::string_view frac_part = dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
  if (int_part.empty() && frac_part.empty())
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
  if ((!int_part.empty() && !detail::all_digits(int_part)) ||
      (dot != std::string_view::npos && !detail::all_digits(frac_part)))
    throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");

  std::string digits = std::string(int_part.empty() ? "0" : int_part) + std::string(frac_part);
  mpz_class num(digits, 10);
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_part.size());
  if (neg) num = -num;
  return Rational(mpq_class(num, den));
}

inline std::int64_t Rational::ceil() const {
  mpz_class c;
  mpz_cdiv_q(c.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  if (!c.fits_slong_p()) throw std::overflow_error("ceil does not fit in 64 bits");
  return c.get_si();
}

inline bool Rational::has_terminating_decimal() const {
  mpz_class d = q_.get_den();
  while (mpz_divisible_ui_p(d.get_mpz_t(), 2)) d /= 2;
  while (mpz_divisible_ui_p(d.get_mpz_t(), 5)) d /= 5;
  return d == 1;
}

inline std::string Rational::decimal(int frac_digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(frac_digits));
  mpq_class scaled = abs(q_) * scale;
  // round half away from zero: floor(scaled + 1/2)
  mpq_class shifted = scaled + mpq_class(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());

  std::string digits = rounded.get_str();
  if (frac_digits > 0) {
    if (digits.size() <= static_cast<std::size_t>(frac_digits))
      digits.insert(0, static_cast<std::size_t>(frac_digits) + 1 - digits.size(), '0');
    digits.insert(digits.size() - static_cast<std::size_t>(frac_digits), ".");
    while (digits.back() == '0') digits.pop_back();
    if (digits.back() == '.') digits.pop_back();
  }
  if (sign() < 0 && rounded != 0) digits.insert(0, "-");
  return digits;
}

inline std::string Rational::approx(int digits) const {
  if (is_zero()) return "0";
  // Position of the leading digit: find e with 10^e <= |q| < 10^(e+1).
  mpq_class a = abs(q_);
  int exponent = 0;
  mpq_class ten(10);
  while (a >= ten) { a /= ten; ++exponent; }
  while (a < 1) { a *= ten; --exponent; }
  const int frac = digits - 1 - exponent;
  if (frac >= 0) return decimal(frac);
  // Large magnitude: round to the leading `digits` digits.
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(-frac));
  mpq_class shifted = abs(q_) / scale + mpq_class(1, 2);
  mpz_class rounded;
  mpz_fdiv_q(rounded.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  std::string out = mpz_class(rounded * scale).get_str();
  return sign() < 0 ? "-" + out : out;
}

}  // namespace vchc

template <>
struct std::hash<vchc::Rational> {
  std::size_t operator()(const vchc::Rational& r) const { return std::hash<std::string>{}(r.str()); }
};

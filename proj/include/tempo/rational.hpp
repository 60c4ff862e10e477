#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tempo {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. Every delay, timestamp and clock value in the library is one
/// of these; nothing is ever rounded.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator) {
    if (denominator == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
    value_.canonicalize();
  }
  explicit Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

  /// Parses "p", "p/q" or a decimal such as "0.25" / "-1.5". Decimals are
  /// converted exactly ("0.1" is 1/10). Returns nullopt on malformed input.
  static std::optional<Rational> parse(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string s(text);
    auto is_digits = [](std::string_view v) {
      if (v.empty()) return false;
      for (char c : v)
        if (c < '0' || c > '9') return false;
      return true;
    };
    bool negative = false;
    std::string_view body = s;
    if (body.front() == '+' || body.front() == '-') {
      negative = body.front() == '-';
      body.remove_prefix(1);
    }
    mpq_class q;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
      auto num = body.substr(0, slash);
      auto den = body.substr(slash + 1);
      if (!is_digits(num) || !is_digits(den)) return std::nullopt;
      mpz_class d{std::string(den)};
      if (d == 0) return std::nullopt;
      q = mpq_class(mpz_class(std::string(num)), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
      auto ip = body.substr(0, dot);
      auto fp = body.substr(dot + 1);
      if (ip.empty() && fp.empty()) return std::nullopt;
      if (!ip.empty() && !is_digits(ip)) return std::nullopt;
      if (!fp.empty() && !is_digits(fp)) return std::nullopt;
      mpz_class scale;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, fp.size());
      mpz_class whole = ip.empty() ? mpz_class(0) : mpz_class(std::string(ip));
      mpz_class frac = fp.empty() ? mpz_class(0) : mpz_class(std::string(fp));
      q = mpq_class(whole * scale + frac, scale);
    } else {
      if (!is_digits(body)) return std::nullopt;
      q = mpq_class(mpz_class(std::string(body)));
    }
    q.canonicalize();
    if (negative) q = -q;
    return Rational(std::move(q));
  }

  static Rational from_string(std::string_view text) {
    auto r = parse(text);
    if (!r) throw std::invalid_argument("malformed rational: " + std::string(text));
    return *r;
  }

  [[nodiscard]] const mpq_class& raw() const { return value_; }
  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  /// Largest integer <= value.
  [[nodiscard]] mpz_class floor() const {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
    return r;
  }
  /// value - floor(value), in [0, 1).
  [[nodiscard]] Rational fractional() const { return *this - Rational(mpq_class(floor())); }

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace tempo

template <>
struct std::hash<tempo::Rational> {
  std::size_t operator()(const tempo::Rational& r) const noexcept {
    const auto& q = r.raw();
    std::size_t h = mpz_get_ui(q.get_num_mpz_t()) * 0x9e3779b97f4a7c15ULL;
    h ^= mpz_get_ui(q.get_den_mpz_t()) + 0x7f4a7c15ULL + (h << 6) + (h >> 2);
    return h ^ static_cast<std::size_t>(sgn(q) + 1);
  }
};

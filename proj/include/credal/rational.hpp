#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "credal/errors.hpp"

namespace credal {

using BigInt = boost::multiprecision::cpp_int;

/**
 * Exact rational number with arbitrary-precision numerator and denominator.
 *
 * Always kept in lowest terms with a positive denominator.  All arithmetic
 * is exact; conversion to double happens only at output boundaries.
 */
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT: implicit for literals
  Rational(long long n) : v_(n) {}           // NOLINT
  Rational(const BigInt& n) : v_(n) {}       // NOLINT

  Rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw Error("rational with zero denominator");
    BigInt n = num, d = den;
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const BigInt g = boost::multiprecision::gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    v_ = Backend(n, d);
  }
  Rational(long long num, long long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parse "3/4", "-2", "0.65", "+.5".  Decimal forms convert exactly.
  static Rational parse(std::string_view text) {
    size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos; };
    skip_ws();
    size_t begin = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      neg = text[pos] == '-';
      ++pos;
    }
    auto digits = [&]() -> std::string {
      std::string out;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') out.push_back(text[pos++]);
      return out;
    };
    std::string intpart = digits();
    BigInt num;
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
      if (intpart.empty()) throw ParseError("malformed rational: " + std::string(text));
      ++pos;
      std::string denpart = digits();
      if (denpart.empty()) throw ParseError("malformed rational: " + std::string(text));
      num = BigInt(intpart);
      den = BigInt(denpart);
      if (den == 0) throw ParseError("zero denominator: " + std::string(text));
    } else if (pos < text.size() && text[pos] == '.') {
      ++pos;
      std::string fracpart = digits();
      if (intpart.empty() && fracpart.empty())
        throw ParseError("malformed rational: " + std::string(text));
      num = intpart.empty() ? BigInt(0) : BigInt(intpart);
      for (char c : fracpart) {
        num = num * 10 + (c - '0');
        den *= 10;
      }
    } else {
      if (intpart.empty()) throw ParseError("malformed rational: " + std::string(text));
      num = BigInt(intpart);
    }
    skip_ws();
    if (pos != text.size() || begin == text.size())
      throw ParseError("malformed rational: " + std::string(text));
    if (neg) num = -num;
    return Rational(num, den);
  }

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const { return boost::multiprecision::denominator(v_); }
  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return v_ == 0; }

  int sign() const { return v_ == 0 ? 0 : (v_ < 0 ? -1 : 1); }

  double to_double() const { return v_.convert_to<double>(); }

  /// "n" for integers, "n/d" otherwise.
  std::string str() const {
    if (is_integer()) return numerator().str();
    return numerator().str() + "/" + denominator().str();
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(Backend(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw Error("rational division by zero");
    return Rational(Backend(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(Backend(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  using Backend = boost::multiprecision::cpp_rational;
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Backend v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
inline const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace credal

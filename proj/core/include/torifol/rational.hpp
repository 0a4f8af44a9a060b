#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace torifol {

using Int = mpz_class;

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
class Rat {
 public:
  Rat() = default;
  Rat(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rat(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rat(long num, long den);
  explicit Rat(const Int& value) : value_(value) {}
  Rat(const Int& num, const Int& den);
  explicit Rat(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  /// Parses "p", "-p", "p/q". Throws Error (kind Parse) on malformed text
  /// or a zero denominator.
  static Rat parse(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] Int num() const { return value_.get_num(); }
  [[nodiscard]] Int den() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] Int floor() const;
  [[nodiscard]] Int ceil() const;
  [[nodiscard]] Rat abs() const { return Rat(::abs(value_)); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  /// Converts an integral value to int64; throws std::overflow_error when the
  /// value is not an integer or does not fit.
  [[nodiscard]] std::int64_t to_int64() const;

  Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
  Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
  Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r);

 private:
  mpq_class value_;
};

/// Element of the Gaussian rationals Q(i).
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(Rat re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(long re) : re_(re) {}            // NOLINT
  GaussRat(int re) : re_(re) {}             // NOLINT
  GaussRat(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat i() { return {Rat(0), Rat(1)}; }

  /// Parses the text form "a/b+c/d i": either part may be omitted, the
  /// imaginary unit is a trailing 'i' and spaces are ignored.
  /// Examples: "3", "-1/2", "i", "-i", "2i", "1+0i", "1/2-3/4i".
  static GaussRat parse(std::string_view text);

  [[nodiscard]] std::string str() const;

  [[nodiscard]] const Rat& re() const { return re_; }
  [[nodiscard]] const Rat& im() const { return im_; }
  [[nodiscard]] bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  [[nodiscard]] bool is_real() const { return im_.is_zero(); }
  [[nodiscard]] GaussRat conj() const { return {re_, -im_}; }
  [[nodiscard]] Rat norm() const { return re_ * re_ + im_ * im_; }

  GaussRat& operator+=(const GaussRat& o);
  GaussRat& operator-=(const GaussRat& o);
  GaussRat& operator*=(const GaussRat& o);
  GaussRat& operator/=(const GaussRat& o);

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re_, -a.im_}; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const GaussRat& z);

 private:
  Rat re_;
  Rat im_;
};

using QVec = std::vector<Rat>;
using GVec = std::vector<GaussRat>;
using IntVec = std::vector<std::int64_t>;
using QMat = std::vector<QVec>;
using GMat = std::vector<GVec>;

QVec to_qvec(const IntVec& v);
GVec to_gvec(const QVec& v);
GVec to_gvec(const IntVec& v);

Rat dot(const QVec& a, const QVec& b);
Rat dot(const QVec& a, const IntVec& b);

std::string to_string(const IntVec& v);
std::string to_string(const QVec& v);

}  // namespace torifol

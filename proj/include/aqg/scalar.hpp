#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace aqg {

// Exact element of Q(i). Both parts are canonical GMP rationals.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  Scalar(mpq_class re, mpq_class im = 0);

  // Accepts "a/b+c/di" with any part omitted: "1", "-3/4", "i", "-i", "2-1/3i".
  static Scalar parse(std::string_view text);
  std::string str() const;

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  Scalar conj() const;
  Scalar inverse() const;  // throws Error(DivisionByZero)

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  mpq_class re_;
  mpq_class im_;
};

using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);
void axpy(Vec& y, const Scalar& s, const Vec& x);  // y += s x
Scalar dot(const Vec& covector, const Vec& v);     // bilinear, no conjugation
Vec conj(const Vec& v);
Vec kron(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

}  // namespace aqg

#include "aqg/scalar.hpp"

#include <cctype>
#include <sstream>

#include "aqg/error.hpp"

namespace aqg {

namespace {

mpq_class parse_rational(std::string_view text, std::string_view whole) {
  if (text.empty()) throw Error(ErrorCode::ParseError, "empty rational in scalar '" + std::string(whole) + "'");
  std::size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t k = pos; k < text.size(); ++k) {
    char ch = text[k];
    if (ch == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw Error(ErrorCode::ParseError, "bad character in scalar '" + std::string(whole) + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw Error(ErrorCode::ParseError, "malformed rational in scalar '" + std::string(whole) + "'");
  std::string body(text[0] == '+' ? text.substr(1) : text);
  mpq_class q;
  if (q.set_str(body, 10) != 0) throw Error(ErrorCode::ParseError, "malformed scalar '" + std::string(whole) + "'");
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(whole) + "'");
  q.canonicalize();
  return q;
}

mpq_class parse_imag_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1;
  if (text == "-") return -1;
  return parse_rational(text, whole);
}

}  // namespace

Scalar::Scalar(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

Scalar Scalar::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty scalar");
  if (s.back() != 'i') return Scalar(parse_rational(s, text), 0);
  std::string_view body = s.substr(0, s.size() - 1);
  // The split point is the last sign that is not the leading character.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return Scalar(0, parse_imag_coefficient(body, text));
  return Scalar(parse_rational(body.substr(0, split), text), parse_imag_coefficient(body.substr(split), text));
}

std::string Scalar::str() const {
  bool has_re = sgn(re_) != 0;
  bool has_im = sgn(im_) != 0;
  if (!has_im) return re_.get_str();
  std::string out;
  if (has_re) out = re_.get_str();
  mpq_class mag = abs(im_);
  if (sgn(im_) < 0)
    out += "-";
  else if (has_re)
    out += "+";
  if (mag != 1) out += mag.get_str();
  out += "i";
  return out;
}

Scalar Scalar::conj() const {
  Scalar out = *this;
  out.im_ = -out.im_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  if (is_real()) return Scalar(1 / re_, 0);
  mpq_class norm = re_ * re_ + im_ * im_;
  return Scalar(re_ / norm, -im_ / norm);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (sgn(o.re_) != 0) re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (sgn(o.re_) != 0) re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.re_ = -out.re_;
  out.im_ = -out.im_;
  return out;
}

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  Vec out = a;
  for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  Vec out = a;
  for (std::size_t k = 0; k < b.size(); ++k) out[k] -= b[k];
  return out;
}

Vec operator*(const Scalar& s, const Vec& v) {
  Vec out(v.size());
  if (s.is_zero()) return out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) out[k] = s * v[k];
  return out;
}

void axpy(Vec& y, const Scalar& s, const Vec& x) {
  if (y.size() != x.size()) throw Error(ErrorCode::DimensionMismatch, "axpy");
  if (s.is_zero()) return;
  for (std::size_t k = 0; k < x.size(); ++k)
    if (!x[k].is_zero()) y[k] += s * x[k];
}

Scalar dot(const Vec& covector, const Vec& v) {
  if (covector.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "pairing");
  Scalar out;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero() && !covector[k].is_zero()) out += covector[k] * v[k];
  return out;
}

Vec conj(const Vec& v) {
  Vec out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].conj();
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k].str();
  os << "]";
  return os.str();
}

}  // namespace aqg

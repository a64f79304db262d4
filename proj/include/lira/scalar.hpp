#pragma once

// Exact scalars: Gaussian rationals a + b*i with rational a, b.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <utility>

namespace lira {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

struct Scalar {
  Rational re{0};
  Rational im{0};

  Scalar() = default;
  Scalar(int n) : re(n) {}
  Scalar(long long n) : re(n) {}
  Scalar(Rational r) : re(std::move(r)) {}
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  static Scalar i() { return Scalar{Rational(0), Rational(1)}; }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }
  bool is_one() const { return re == 1 && im == 0; }

  Scalar conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  Scalar operator-() const { return {-re, -im}; }

  Scalar& operator+=(const Scalar& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Scalar& operator/=(const Scalar& o) {
    Rational n = o.norm2();
    if (n == 0) throw std::domain_error("scalar division by zero");
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
};

inline std::string rational_str(const Rational& r) { return r.str(); }

// Renders "0", "2", "-1/2", "i", "-i", "3*i", "1+2*i", "1/2-i" and so on.
inline std::string scalar_str(const Scalar& s) {
  if (s.is_zero()) return "0";
  std::string out;
  if (s.re != 0) out += rational_str(s.re);
  if (s.im != 0) {
    if (s.im == 1)
      out += out.empty() ? "i" : "+i";
    else if (s.im == -1)
      out += "-i";
    else {
      std::string t = rational_str(s.im);
      if (!out.empty() && t[0] != '-') out += "+";
      out += t + "*i";
    }
  }
  return out;
}

}  // namespace lira

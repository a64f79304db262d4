#pragma once

// Sparse multivariate polynomials with Gaussian-rational coefficients.
//
// A monomial is an exponent vector indexed by variable slot; slot 0 is the
// most significant variable of the term order. Terms are kept in a map under
// graded lexicographic order, so rbegin() is the leading term and zero
// coefficients are never stored.

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace lira {

using Mono = std::vector<uint32_t>;

inline uint32_t mono_degree(const Mono& m) {
  uint32_t d = 0;
  for (uint32_t e : m) d += e;
  return d;
}

inline bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > b[k]) return false;
  return true;
}

inline Mono mono_mul(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

// Pre: b divides a.
inline Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t k = 0; k < r.size(); ++k) r[k] -= b[k];
  return r;
}

inline Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a);
  for (size_t k = 0; k < r.size(); ++k)
    if (b[k] > r[k]) r[k] = b[k];
  return r;
}

inline bool mono_coprime(const Mono& a, const Mono& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

// Graded lex: compare total degree first, then lexicographically with slot 0
// most significant.
struct GrlexLess {
  bool operator()(const Mono& a, const Mono& b) const {
    uint32_t da = mono_degree(a), db = mono_degree(b);
    if (da != db) return da < db;
    for (size_t k = 0; k < a.size(); ++k)
      if (a[k] != b[k]) return a[k] < b[k];
    return false;
  }
};

class Poly {
 public:
  using Terms = std::map<Mono, Scalar, GrlexLess>;

  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly constant(int nvars, Scalar c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(Mono(nvars, 0), std::move(c));
    return p;
  }
  static Poly variable(int nvars, int slot) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[slot] = 1;
    p.terms_.emplace(std::move(m), Scalar(1));
    return p;
  }
  static Poly monomial(int nvars, Mono m, Scalar c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace(std::move(m), std::move(c));
    return p;
  }

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_.begin()->first) == 0);
  }
  Scalar constant_value() const {
    if (terms_.empty()) return Scalar(0);
    return terms_.begin()->second;
  }

  // -1 for the zero polynomial.
  int degree() const { return terms_.empty() ? -1 : (int)mono_degree(terms_.rbegin()->first); }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    uint32_t d = mono_degree(terms_.begin()->first);
    return d == mono_degree(terms_.rbegin()->first);
  }

  const Mono& leading_mono() const { return terms_.rbegin()->first; }
  const Scalar& leading_coeff() const { return terms_.rbegin()->second; }

  void add_term(const Mono& m, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly operator-() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    int nv = a.nvars_ ? a.nvars_ : b.nvars_;
    Poly r(nv);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
    return r;
  }
  friend Poly operator*(const Scalar& c, const Poly& p) {
    Poly r(p.nvars_);
    if (c.is_zero()) return r;
    for (const auto& [m, pc] : p.terms_) r.terms_.emplace(m, c * pc);
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(uint32_t e) const {
    Poly r = Poly::constant(nvars_, Scalar(1));
    Poly base = *this;
    while (e) {
      if (e & 1u) r = r * base;
      base = base * base;
      e >>= 1u;
    }
    return r;
  }

  // Formal partial derivative with respect to a slot.
  Poly derivative(int slot) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m[slot] == 0) continue;
      Mono n = m;
      n[slot] -= 1;
      r.add_term(n, Scalar((long long)m[slot]) * c);
    }
    return r;
  }

  Poly conj_coeffs() const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.conj());
    return r;
  }

  // Remaps exponents through a slot permutation: new_m[perm[k]] = m[k].
  Poly rename_slots(const std::vector<int>& perm) const {
    Poly r(nvars_);
    for (const auto& [m, c] : terms_) {
      Mono n(nvars_, 0);
      for (size_t k = 0; k < m.size(); ++k) n[perm[k]] = m[k];
      r.add_term(n, c);
    }
    return r;
  }

 private:
  int nvars_;
  Terms terms_;
};

inline std::string mono_str(const Mono& m, const std::vector<std::string>& names) {
  std::string out;
  for (size_t k = 0; k < m.size(); ++k) {
    if (m[k] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[k];
    if (m[k] > 1) out += "^" + std::to_string(m[k]);
  }
  return out;
}

// Terms rendered in descending order: "x^2*y - 2*r + 1".
inline std::string poly_str(const Poly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    std::string cs = scalar_str(c);
    std::string ms = mono_str(m, names);
    bool first = out.empty();
    std::string piece;
    if (ms.empty()) {
      piece = cs;
    } else if (c.is_one()) {
      piece = ms;
    } else if (c == Scalar(-1)) {
      piece = "-" + ms;
    } else {
      bool composite = (c.re != 0 && c.im != 0);
      piece = (composite ? "(" + cs + ")" : cs) + "*" + ms;
    }
    if (!first && piece[0] != '-') out += "+";
    out += piece;
  }
  return out;
}

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Recursive-descent parser for polynomial expressions.
//
// Grammar: integers, rationals p/q, the imaginary unit i, declared variable
// names, + - * / ^ and parentheses. Division requires a nonzero constant
// divisor. Multiplication must be explicit.
class PolyParser {
 public:
  PolyParser(std::string src, const std::map<std::string, int>& slots, int nvars)
      : src_(std::move(src)), slots_(slots), nvars_(nvars) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  std::string src_;
  const std::map<std::string, int>& slots_;
  int nvars_;
  size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError("parse error at position " + std::to_string(pos_) + " in \"" + src_ +
                     "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace((unsigned char)src_[pos_])) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < src_.size() ? src_[pos_] : '\0';
  }

  Poly expr() {
    bool neg = false;
    skip_ws();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        Poly d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division requires a nonzero constant divisor");
        acc = (Scalar(1) / d.constant_value()) * acc;
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      skip_ws();
      if (pos_ >= src_.size() || !std::isdigit((unsigned char)src_[pos_])) fail("exponent must be a nonnegative integer");
      uint32_t e = (uint32_t)read_nat();
      base = base.pow(e);
    }
    return base;
  }

  unsigned long long read_nat() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::stoull(src_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit((unsigned char)c)) {
      std::string digits;
      while (pos_ < src_.size() && std::isdigit((unsigned char)src_[pos_])) digits += src_[pos_++];
      return Poly::constant(nvars_, Scalar(Rational(Integer(digits))));
    }
    if (std::isalpha((unsigned char)c) || c == '_') {
      std::string name;
      while (pos_ < src_.size() &&
             (std::isalnum((unsigned char)src_[pos_]) || src_[pos_] == '_'))
        name += src_[pos_++];
      if (name == "i") return Poly::constant(nvars_, Scalar::i());
      auto it = slots_.find(name);
      if (it == slots_.end()) fail("unknown variable \"" + name + "\"");
      return Poly::variable(nvars_, it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }
};

inline Poly parse_poly(const std::string& src, const std::map<std::string, int>& slots,
                       int nvars) {
  return PolyParser(src, slots, nvars).parse();
}

}  // namespace lira

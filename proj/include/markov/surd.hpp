#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "markov/error.hpp"
#include "markov/int.hpp"

namespace markov {

/**
 * Exact element (a + b*sqrt(d))/c of Q or a real quadratic field.
 *
 * Canonical form: c > 0, gcd(a, b, c) = 1, and
 *   b == 0  =>  d == 0           (rationals carry no radicand)
 *   b != 0  =>  d >= 2, d not a perfect square.
 * Square factors of d are folded into b (bounded trial division for huge
 * radicands; comparisons are value-based, so an unextracted square factor is
 * harmless).
 *
 * Values are immutable; all operations return new values.
 */
class QuadraticSurd {
 public:
  QuadraticSurd() : a_(0), b_(0), c_(1), d_(0) {}
  QuadraticSurd(const Int& n) : a_(n), b_(0), c_(1), d_(0) {}
  QuadraticSurd(long n) : a_(n), b_(0), c_(1), d_(0) {}
  explicit QuadraticSurd(const Rat& r) : a_(r.get_num()), b_(0), c_(r.get_den()), d_(0) {}

  static QuadraticSurd make(Int a, Int b, Int c, Int d) {
    if (c == 0) fail(errc::division_by_zero, "surd with zero denominator");
    if (sgn(d) < 0) fail(errc::out_of_range, "negative radicand");
    if (sgn(c) < 0) {
      a = -a;
      b = -b;
      c = -c;
    }
    if (b == 0 || d == 0) {
      b = 0;
      d = 0;
    } else {
      auto [s, f] = square_split(d);
      b *= s;
      d = f;
      if (d == 1) {
        a += b;
        b = 0;
        d = 0;
      }
    }
    Int g = gcd(gcd(a, b), c);
    if (g > 1) {
      a /= g;
      b /= g;
      c /= g;
    }
    QuadraticSurd s;
    s.a_ = std::move(a);
    s.b_ = std::move(b);
    s.c_ = std::move(c);
    s.d_ = std::move(d);
    return s;
  }

  // sqrt(n) for n >= 0
  static QuadraticSurd sqrt_of(const Int& n) { return make(0, 1, 1, n); }

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }
  const Int& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  Rat rational_value() const {
    if (!is_rational()) fail(errc::out_of_range, "surd is irrational");
    return make_rat(a_, c_);
  }

  QuadraticSurd galois_conjugate() const {
    QuadraticSurd s = *this;
    s.b_ = -s.b_;
    return s;
  }

  QuadraticSurd operator-() const {
    QuadraticSurd s = *this;
    s.a_ = -s.a_;
    s.b_ = -s.b_;
    return s;
  }

  friend QuadraticSurd operator+(const QuadraticSurd& x, const QuadraticSurd& y) {
    Int d = common_field(x, y);
    return make(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
  }
  friend QuadraticSurd operator-(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x + (-y);
  }
  friend QuadraticSurd operator*(const QuadraticSurd& x, const QuadraticSurd& y) {
    Int d = common_field(x, y);
    return make(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + y.a_ * x.b_, x.c_ * y.c_, d);
  }
  friend QuadraticSurd operator/(const QuadraticSurd& x, const QuadraticSurd& y) {
    return x * y.reciprocal();
  }

  QuadraticSurd reciprocal() const {
    if (is_zero()) fail(errc::division_by_zero, "reciprocal of zero");
    // 1/((a+b*sqrt(d))/c) = c*(a - b*sqrt(d))/(a^2 - b^2 d)
    return make(c_ * a_, -c_ * b_, a_ * a_ - b_ * b_ * d_, d_);
  }

  // Exact sign of the value, computed with integer arithmetic only.
  int sign() const { return sign_a_plus_b_sqrt(a_, b_, d_); }

  Int floor() const {
    Int t;
    if (b_ == 0) {
      t = a_;
    } else {
      Int r = isqrt(b_ * b_ * d_);
      // b^2 d is never a perfect square here (d is a non-square)
      if (sgn(b_) > 0) {
        t = a_ + r;
      } else {
        t = a_ - r - 1;
      }
    }
    return floor_div(t, c_);
  }

  // Debug aid only; every library decision is made exactly.
  double approx() const {
    double r = mpz_get_d(a_.get_mpz_t());
    if (b_ != 0) r += mpz_get_d(b_.get_mpz_t()) * std::sqrt(mpz_get_d(d_.get_mpz_t()));
    return r / mpz_get_d(c_.get_mpz_t());
  }

  // Canonical text form "(a + b*sqrt(d))/c".
  std::string str() const {
    return "(" + a_.get_str() + " + " + b_.get_str() + "*sqrt(" + d_.get_str() + "))/" +
           c_.get_str();
  }

  static QuadraticSurd parse(const std::string& text);

 private:
  Int a_, b_, c_, d_;

  static Int common_field(const QuadraticSurd& x, const QuadraticSurd& y) {
    if (x.b_ == 0) return y.d_;
    if (y.b_ == 0) return x.d_;
    if (x.d_ != y.d_) fail(errc::incompatible_fields, "surds lie in different quadratic fields");
    return x.d_;
  }

  // sign of A + B*sqrt(d); d >= 0
  static int sign_a_plus_b_sqrt(const Int& A, const Int& B, const Int& d) {
    if (B == 0 || d == 0) return sgn(A);
    if (sgn(B) > 0) {
      if (sgn(A) >= 0) return 1;
      return sgn(B * B * d - A * A);
    }
    return -sign_a_plus_b_sqrt(-A, -B, d);
  }

  // sign of X + B1*sqrt(d1) + B2*sqrt(d2)
  static int sign_two_radicals(const Int& X, const Int& B1, const Int& d1, const Int& B2,
                               const Int& d2) {
    if (B1 == 0 || d1 == 0) return sign_a_plus_b_sqrt(X, B2, d2);
    if (B2 == 0 || d2 == 0) return sign_a_plus_b_sqrt(X, B1, d1);
    int rad;
    if (sgn(B1) > 0 && sgn(B2) > 0) {
      rad = 1;
    } else if (sgn(B1) < 0 && sgn(B2) < 0) {
      rad = -1;
    } else {
      int cmp = sgn(B1 * B1 * d1 - B2 * B2 * d2);
      rad = (sgn(B1) > 0) ? cmp : -cmp;
    }
    if (rad == 0) return sgn(X);
    if (X == 0) return rad;
    if (sgn(X) == rad) return sgn(X);
    // X and the radical part disagree: compare X^2 against
    // (B1*sqrt(d1)+B2*sqrt(d2))^2 = B1^2 d1 + B2^2 d2 + 2 B1 B2 sqrt(d1 d2).
    int t = sign_a_plus_b_sqrt(B1 * B1 * d1 + B2 * B2 * d2 - X * X, 2 * B1 * B2, d1 * d2);
    if (t == 0) return 0;
    return t > 0 ? rad : -rad;
  }

  friend int surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y);
};

// Exact three-way comparison, valid across different quadratic fields.
inline int surd_cmp(const QuadraticSurd& x, const QuadraticSurd& y) {
  return QuadraticSurd::sign_two_radicals(x.a_ * y.c_ - y.a_ * x.c_, x.b_ * y.c_, x.d_,
                                          -(y.b_ * x.c_), y.d_);
}

inline bool operator==(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_cmp(x, y) == 0;
}
inline bool operator!=(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_cmp(x, y) != 0;
}
inline bool operator<(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_cmp(x, y) < 0;
}
inline bool operator<=(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_cmp(x, y) <= 0;
}
inline bool operator>(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_cmp(x, y) > 0;
}
inline bool operator>=(const QuadraticSurd& x, const QuadraticSurd& y) {
  return surd_cmp(x, y) >= 0;
}

inline QuadraticSurd galois_conjugate(const QuadraticSurd& s) { return s.galois_conjugate(); }

namespace detail {

inline void skip_ws(const std::string& t, size_t& i) {
  while (i < t.size() && (t[i] == ' ' || t[i] == '\t')) ++i;
}

inline Int parse_int(const std::string& t, size_t& i, const char* what) {
  skip_ws(t, i);
  size_t start = i;
  if (i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
  size_t digits_start = i;
  while (i < t.size() && t[i] >= '0' && t[i] <= '9') ++i;
  if (i == digits_start)
    fail(errc::parse_error, std::string("expected integer (") + what + ") at position " +
                                std::to_string(start));
  return Int(t.substr(start, i - start));
}

inline void expect(const std::string& t, size_t& i, const std::string& lit) {
  skip_ws(t, i);
  if (t.compare(i, lit.size(), lit) != 0)
    fail(errc::parse_error, "expected \"" + lit + "\" at position " + std::to_string(i));
  i += lit.size();
}

}  // namespace detail

// Accepts exactly the canonical grammar "(a + b*sqrt(d))/c".
inline QuadraticSurd QuadraticSurd::parse(const std::string& text) {
  size_t i = 0;
  detail::expect(text, i, "(");
  Int a = detail::parse_int(text, i, "a");
  detail::expect(text, i, "+");
  Int b = detail::parse_int(text, i, "b");
  detail::expect(text, i, "*sqrt(");
  Int d = detail::parse_int(text, i, "d");
  detail::expect(text, i, ")");
  detail::expect(text, i, ")/");
  Int c = detail::parse_int(text, i, "c");
  detail::skip_ws(text, i);
  if (i != text.size()) fail(errc::parse_error, "trailing input at position " + std::to_string(i));
  return make(std::move(a), std::move(b), std::move(c), std::move(d));
}

}  // namespace markov

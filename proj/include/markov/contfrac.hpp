#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "markov/error.hpp"
#include "markov/int.hpp"
#include "markov/surd.hpp"

namespace markov {

/// 2x2 integer matrix with rows (p p' / q q'); products of digit matrices
/// (a 1 / 1 0) have determinant +-1.
struct Mat2 {
  Int p, pp, q, qp;

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return Mat2{x.p * y.p + x.pp * y.q, x.p * y.pp + x.pp * y.qp, x.q * y.p + x.qp * y.q,
                x.q * y.pp + x.qp * y.qp};
  }
  Int trace() const { return p + qp; }
  Int det() const { return p * qp - pp * q; }
  bool operator==(const Mat2& o) const = default;
};

inline Mat2 digit_matrix(const Int& a) { return Mat2{a, 1, 1, 0}; }

/// Ordered product of elementary matrices (a_i 1 / 1 0); top row (p, p'),
/// bottom (q, q'), with p/q = [a_0; ..., a_n].
inline Mat2 word_matrix(const std::vector<Int>& digits) {
  if (digits.empty()) fail(errc::empty_word, "word_matrix of empty digit sequence");
  Mat2 m = digit_matrix(digits[0]);
  for (size_t i = 1; i < digits.size(); ++i) m = m * digit_matrix(digits[i]);
  return m;
}

/**
 * Integer part + preperiod digits + period digits of a continued fraction
 * [x0; pre..., (per...)]. Canonical on construction:
 *   - per reduced to its primitive period,
 *   - the preperiod is minimal (no trailing digit can be rotated into per),
 *   - finite CFs never end with digit 1 (unless the whole CF is just x0),
 *   - per empty <=> the value is rational.
 */
class ContinuedFraction {
 public:
  ContinuedFraction() : x0_(0) {}
  explicit ContinuedFraction(Int x0) : x0_(std::move(x0)) {}
  ContinuedFraction(Int x0, std::vector<Int> pre, std::vector<Int> per)
      : x0_(std::move(x0)), pre_(std::move(pre)), per_(std::move(per)) {
    canonicalize();
  }

  const Int& x0() const { return x0_; }
  const std::vector<Int>& pre() const { return pre_; }
  const std::vector<Int>& per() const { return per_; }
  bool is_rational() const { return per_.empty(); }
  bool is_periodic() const { return !per_.empty(); }

  /// i-th partial quotient x_i, i >= 1 (x0 excluded).
  Int digit(long i) const {
    if (i < 1) fail(errc::out_of_range, "digit index must be >= 1");
    if (static_cast<size_t>(i) <= pre_.size()) return pre_[i - 1];
    if (per_.empty()) fail(errc::index_beyond_rational, "rational has no digit " + std::to_string(i));
    return per_[(i - 1 - pre_.size()) % per_.size()];
  }

  /// Number of digits after x0; only meaningful for rationals.
  long digit_count() const { return static_cast<long>(pre_.size()); }

  bool operator==(const ContinuedFraction& o) const = default;

  std::string str() const {
    std::string s = "[" + x0_.get_str();
    if (!pre_.empty() || !per_.empty()) s += ";";
    for (size_t i = 0; i < pre_.size(); ++i) s += (i ? ", " : " ") + pre_[i].get_str();
    if (!per_.empty()) {
      s += pre_.empty() ? " (" : ", (";
      for (size_t i = 0; i < per_.size(); ++i) s += (i ? ", " : "") + per_[i].get_str();
      s += ")";
    }
    s += "]";
    return s;
  }

  static ContinuedFraction parse(const std::string& text);

 private:
  Int x0_;
  std::vector<Int> pre_, per_;

  void canonicalize() {
    for (const Int& d : pre_)
      if (d < 1) fail(errc::invalid_digit, "partial quotients must be >= 1");
    for (const Int& d : per_)
      if (d < 1) fail(errc::invalid_digit, "partial quotients must be >= 1");
    if (!per_.empty()) {
      // primitive period
      size_t L = per_.size();
      for (size_t len = 1; len < L; ++len) {
        if (L % len != 0) continue;
        bool tiles = true;
        for (size_t i = len; i < L && tiles; ++i) tiles = per_[i] == per_[i % len];
        if (tiles) {
          per_.resize(len);
          break;
        }
      }
      // minimal preperiod: absorb matching trailing digits into the period
      while (!pre_.empty() && pre_.back() == per_.back()) {
        pre_.pop_back();
        std::rotate(per_.rbegin(), per_.rbegin() + 1, per_.rend());
      }
    } else if (!pre_.empty() && pre_.back() == 1) {
      // [.., a, 1] = [.., a+1]
      if (pre_.size() == 1) {
        x0_ += 1;
        pre_.clear();
      } else {
        pre_.pop_back();
        pre_.back() += 1;
      }
    }
  }
};

/// gamma = [w; w; ...] as a surd, via gamma = (p - q' + sqrt(D))/(2q) with
/// D = tr(M_w)^2 + 4*(-1)^n, n = digit count - 1.
inline QuadraticSurd purely_periodic_value(const std::vector<Int>& period) {
  if (period.empty()) fail(errc::empty_word, "purely periodic value of empty period");
  Mat2 m = word_matrix(period);
  Int tr = m.trace();
  Int disc = tr * tr + ((period.size() % 2 == 1) ? Int(4) : Int(-4));
  return QuadraticSurd::make(m.p - m.qp, 1, 2 * m.q, disc);
}

namespace detail {

/// [pre[0]; pre[1], ..., (per)] — value of a digit stream read as a full CF
/// (the leading digit is the integer part). pre may be empty if per is not.
inline QuadraticSurd stream_value(const std::vector<Int>& pre, const std::vector<Int>& per) {
  QuadraticSurd v;
  if (per.empty()) {
    if (pre.empty()) fail(errc::empty_word, "empty digit stream");
    v = QuadraticSurd(pre.back());
    for (size_t i = pre.size() - 1; i-- > 0;) v = QuadraticSurd(pre[i]) + v.reciprocal();
    return v;
  }
  v = purely_periodic_value(per);
  for (size_t i = pre.size(); i-- > 0;) v = QuadraticSurd(pre[i]) + v.reciprocal();
  return v;
}

}  // namespace detail

/// Exact value of x as a surd (rational when per is empty).
inline QuadraticSurd cf_value(const ContinuedFraction& x) {
  if (x.pre().empty() && x.per().empty()) return QuadraticSurd(x.x0());
  QuadraticSurd tail = detail::stream_value(x.pre(), x.per());
  return QuadraticSurd(x.x0()) + tail.reciprocal();
}

/// Canonical continued fraction of s. Rationals expand by Euclid; quadratic
/// irrationals use the (P, Q) state-pair method with D fixed and the
/// normalization Q | (D - P^2), so a repeated state marks the minimal period.
inline ContinuedFraction surd_to_cf(const QuadraticSurd& s) {
  if (s.is_rational()) {
    Int p = s.a(), q = s.c();
    Int x0 = floor_div(p, q);
    std::vector<Int> digits;
    Int r = p - x0 * q;
    while (r != 0) {
      // invariant: remaining value = r/q in [0,1)
      std::swap(p, q);
      q = r;
      Int a = floor_div(p, q);
      digits.push_back(a);
      r = p - a * q;
    }
    return ContinuedFraction(x0, std::move(digits), {});
  }
  Int D = s.b() * s.b() * s.d();
  Int P = s.a(), Q = s.c();
  if (sgn(s.b()) < 0) {
    P = -P;
    Q = -Q;
  }
  if ((D - P * P) % Q != 0) {
    Int f = abs(Q);
    P *= f;
    D *= f * f;
    Q *= f;
  }
  std::vector<Int> digits;
  std::map<std::pair<Int, Int>, size_t> seen;
  Int root = isqrt(D);
  for (;;) {
    auto state = std::make_pair(P, Q);
    auto it = seen.find(state);
    if (it != seen.end()) {
      // digits[0] is the integer part; the block digits[f..) repeats.
      const size_t f = it->second;
      std::vector<Int> per(digits.begin() + f, digits.end());
      if (f == 0) {
        // the full expansion repeats from x0: rotate x0 out of the period
        std::rotate(per.begin(), per.begin() + 1, per.end());
        return ContinuedFraction(digits[0], {}, std::move(per));
      }
      std::vector<Int> pre(digits.begin() + 1, digits.begin() + f);
      return ContinuedFraction(digits[0], std::move(pre), std::move(per));
    }
    seen.emplace(state, digits.size());
    // a = floor((P + sqrt(D))/Q), exact for either sign of Q
    Int a = (sgn(Q) > 0) ? floor_div(P + root, Q) : floor_div(-P - root - 1, -Q);
    digits.push_back(a);
    Int P2 = a * Q - P;
    Int Q2 = (D - P2 * P2) / Q;
    P = P2;
    Q = Q2;
  }
}

/// Convergents p_0/q_0 ... p_{n-1}/q_{n-1} of x (p_0/q_0 = x0/1). For a
/// rational x the sequence is truncated at its last convergent.
inline std::vector<Rat> convergents(const ContinuedFraction& x, long n) {
  if (n < 1) fail(errc::out_of_range, "convergent count must be >= 1");
  std::vector<Rat> out;
  Int pm1 = 1, qm1 = 0;  // p_{-1}, q_{-1}
  Int p = x.x0(), q = 1;
  out.push_back(make_rat(p, q));
  for (long k = 1; k < n; ++k) {
    Int d;
    if (static_cast<size_t>(k) <= x.pre().size()) {
      d = x.pre()[k - 1];
    } else if (!x.per().empty()) {
      d = x.per()[(k - 1 - x.pre().size()) % x.per().size()];
    } else {
      break;  // rational exhausted
    }
    Int p2 = d * p + pm1, q2 = d * q + qm1;
    pm1 = p;
    qm1 = q;
    p = p2;
    q = q2;
    out.push_back(make_rat(p, q));
  }
  return out;
}

/// Tail [x_n; x_{n+1}, ...] of x as a surd, n >= 1.
inline QuadraticSurd cf_tail_value(const ContinuedFraction& x, long n) {
  if (n < 1) fail(errc::out_of_range, "tail index must be >= 1");
  const long P = static_cast<long>(x.pre().size());
  if (x.is_rational()) {
    if (n > P) fail(errc::index_beyond_rational, "rational tail index too large");
    std::vector<Int> pre(x.pre().begin() + (n - 1), x.pre().end());
    return detail::stream_value(pre, {});
  }
  if (n <= P) {
    std::vector<Int> pre(x.pre().begin() + (n - 1), x.pre().end());
    return detail::stream_value(pre, x.per());
  }
  const long L = static_cast<long>(x.per().size());
  long j = (n - 1 - P) % L;
  std::vector<Int> rot(x.per().begin() + j, x.per().end());
  rot.insert(rot.end(), x.per().begin(), x.per().begin() + j);
  return purely_periodic_value(rot);
}

/// [0; x_{n-1}, ..., x_1] — the reversed-prefix part of lambda_n; 0 for n = 1.
inline Rat cf_reversed_prefix(const ContinuedFraction& x, long n) {
  Rat v(0);
  for (long i = 1; i <= n - 1; ++i) {
    Rat t = Rat(x.digit(i)) + v;
    v = make_rat(t.get_den(), t.get_num());
  }
  return v;
}

inline ContinuedFraction ContinuedFraction::parse(const std::string& text) {
  size_t i = 0;
  detail::expect(text, i, "[");
  Int x0 = detail::parse_int(text, i, "x0");
  std::vector<Int> pre, per;
  detail::skip_ws(text, i);
  if (i < text.size() && text[i] == ';') {
    ++i;
    bool saw_period = false;
    for (;;) {
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == ']') break;
      if (i < text.size() && text[i] == '(') {
        if (saw_period) fail(errc::parse_error, "second period block at position " + std::to_string(i));
        ++i;
        for (;;) {
          per.push_back(detail::parse_int(text, i, "period digit"));
          detail::skip_ws(text, i);
          if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
          }
          detail::expect(text, i, ")");
          break;
        }
        saw_period = true;
      } else {
        if (saw_period) fail(errc::parse_error, "digit after period block at position " + std::to_string(i));
        pre.push_back(detail::parse_int(text, i, "digit"));
      }
      detail::skip_ws(text, i);
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
  }
  detail::expect(text, i, "]");
  detail::skip_ws(text, i);
  if (i != text.size()) fail(errc::parse_error, "trailing input at position " + std::to_string(i));
  return ContinuedFraction(std::move(x0), std::move(pre), std::move(per));
}

}  // namespace markov

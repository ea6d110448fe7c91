#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "markov/contfrac.hpp"
#include "markov/error.hpp"
#include "markov/int.hpp"
#include "markov/surd.hpp"

namespace markov {

/// Finite word over {a, b}; digit image a = 22, b = 11.
struct Word {
  std::string letters;

  Word() = default;
  explicit Word(std::string s) : letters(std::move(s)) {
    for (char ch : letters)
      if (ch != 'a' && ch != 'b') fail(errc::invalid_digit, "letters must be 'a' or 'b'");
  }

  size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  char operator[](size_t i) const { return letters[i]; }
  bool operator==(const Word& o) const = default;

  Word transpose() const { return Word(std::string(letters.rbegin(), letters.rend())); }
  /// w^+ : drop the first letter
  Word drop_first() const { return Word(letters.substr(1)); }
  /// w^- : drop the last letter
  Word drop_last() const { return Word(letters.substr(0, letters.size() - 1)); }
  /// w_a : last letter replaced by a
  Word last_to_a() const {
    Word w = *this;
    w.letters.back() = 'a';
    return w;
  }
  /// w^b : first letter replaced by b
  Word first_to_b() const {
    Word w = *this;
    w.letters.front() = 'b';
    return w;
  }
  bool is_palindrome() const {
    return std::equal(letters.begin(), letters.begin() + letters.size() / 2, letters.rbegin());
  }

  friend Word operator+(const Word& x, const Word& y) { return Word(x.letters + y.letters); }
  Word pow(size_t k) const {
    Word w;
    for (size_t i = 0; i < k; ++i) w = w + *this;
    return w;
  }
};

inline const Word& letter_a() {
  static const Word w("a");
  return w;
}
inline const Word& letter_b() {
  static const Word w("b");
  return w;
}

inline std::vector<Int> digits(const Word& w) {
  std::vector<Int> out;
  out.reserve(2 * w.size());
  for (char ch : w.letters) {
    int d = ch == 'a' ? 2 : 1;
    out.emplace_back(d);
    out.emplace_back(d);
  }
  return out;
}

struct DigitDecomposition {
  Word word;
  bool stripped_leading_two = false;
};

/// Inverse of digits(): pairs 22 -> a, 11 -> b, optionally after stripping one
/// leading lone 2.
inline DigitDecomposition word_of_digits(const std::vector<Int>& s) {
  DigitDecomposition out;
  size_t i = 0;
  if (s.size() % 2 == 1) {
    if (s.empty() || s[0] != 2)
      fail(errc::non_decomposable, "odd digit count without a leading 2");
    out.stripped_leading_two = true;
    i = 1;
  }
  std::string w;
  for (; i < s.size(); i += 2) {
    if (s[i] == 2 && s[i + 1] == 2) {
      w += 'a';
    } else if (s[i] == 1 && s[i + 1] == 1) {
      w += 'b';
    } else {
      fail(errc::non_decomposable, "digits do not pair into 22/11 blocks at position " +
                                       std::to_string(i + 1));
    }
  }
  out.word = Word(std::move(w));
  return out;
}

enum class InnerOp { U, V };
enum class ExtOp { Ubar, Vbar };

/// Nielsen substitution U: a->ab, b->b; V: a->a, b->ab.
inline Word apply_inner(InnerOp op, const Word& w) {
  std::string out;
  for (char ch : w.letters) {
    if (op == InnerOp::U) {
      out += (ch == 'a') ? "ab" : "b";
    } else {
      out += (ch == 'a') ? "a" : "ab";
    }
  }
  return Word(std::move(out));
}

/// Node (alpha, beta) of the tree generated from (a, b) by the exterior
/// operators Ubar: (ab, b)-style products, Vbar symmetrically.
struct AlphabetPair {
  Word alpha{std::string("a")};
  Word beta{std::string("b")};
  std::vector<ExtOp> path;

  bool operator==(const AlphabetPair& o) const { return alpha == o.alpha && beta == o.beta; }
  Word product() const { return alpha + beta; }
  size_t depth() const { return path.size(); }
};

inline AlphabetPair apply_exterior(ExtOp op, const AlphabetPair& p) {
  AlphabetPair q = p;
  if (op == ExtOp::Ubar) {
    q.alpha = p.alpha + p.beta;
  } else {
    q.beta = p.alpha + p.beta;
  }
  q.path.push_back(op);
  return q;
}

inline AlphabetPair node_at(const std::vector<ExtOp>& path) {
  AlphabetPair p;
  for (ExtOp op : path) p = apply_exterior(op, p);
  return p;
}

/// All tree nodes with depth <= max_depth, in BFS order.
inline std::vector<AlphabetPair> tree_nodes(size_t max_depth) {
  std::vector<AlphabetPair> out{AlphabetPair{}};
  size_t level_begin = 0;
  for (size_t d = 0; d < max_depth; ++d) {
    size_t level_end = out.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      out.push_back(apply_exterior(ExtOp::Ubar, out[i]));
      out.push_back(apply_exterior(ExtOp::Vbar, out[i]));
    }
    level_begin = level_end;
  }
  return out;
}

/// Lower Christoffel word of coprime (mu, nu): a b^{r_1} a b^{r_2} ... a b^{r_nu}
/// with r_i = floor(i mu/nu) - floor((i-1) mu/nu); |w|_b = mu, |w|_a = nu.
inline Word christoffel(const Int& mu, const Int& nu) {
  if (mu < 1 || nu < 1) fail(errc::out_of_range, "christoffel needs positive coordinates");
  if (gcd(mu, nu) != 1) fail(errc::not_coprime, "christoffel coordinates must be coprime");
  std::string w;
  Int prev = 0;
  for (Int i = 1; i <= nu; ++i) {
    Int cur = floor_div(i * mu, nu);
    w += 'a';
    Int r = cur - prev;
    for (Int k = 0; k < r; ++k) w += 'b';
    prev = cur;
  }
  return Word(std::move(w));
}

/// Any two equal-length factors differ by at most 1 in b-count.
inline bool is_balanced(const Word& w) {
  const size_t n = w.size();
  std::vector<int> pref(n + 1, 0);
  for (size_t i = 0; i < n; ++i) pref[i + 1] = pref[i] + (w[i] == 'b');
  for (size_t k = 1; k <= n; ++k) {
    int lo = n, hi = 0;
    for (size_t i = 0; i + k <= n; ++i) {
      int c = pref[i + k] - pref[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

enum class MechanicalVariant { floor, skew };

struct MechanicalSpec {
  QuadraticSurd xi;  // in [0, 1]
  MechanicalVariant variant = MechanicalVariant::floor;
};

/// w_1..w_n with chi(w_k) = floor(k xi) - floor((k-1) xi) (floor variant) or
/// w_1 = a, chi(w_k) = floor(-(k-1) xi) - floor(-k xi) for k >= 2 (skew);
/// chi(a) = 0, chi(b) = 1. Floors are evaluated exactly on surds.
inline Word mechanical_prefix(const MechanicalSpec& spec, long n) {
  if (n < 1) fail(errc::out_of_range, "mechanical prefix needs n >= 1");
  if (spec.xi.sign() < 0 || spec.xi > QuadraticSurd(1))
    fail(errc::out_of_range, "mechanical slope must lie in [0, 1]");
  std::string w;
  if (spec.variant == MechanicalVariant::floor) {
    Int prev = 0;  // floor(0 * xi)
    for (long k = 1; k <= n; ++k) {
      Int cur = (QuadraticSurd(Int(k)) * spec.xi).floor();
      w += (cur - prev == 0) ? 'a' : 'b';
      prev = cur;
    }
  } else {
    w += 'a';
    Int prev = (-spec.xi).floor();  // floor(-(k-1) xi) at k = 2
    for (long k = 2; k <= n; ++k) {
      Int cur = (QuadraticSurd(Int(-k)) * spec.xi).floor();
      // chi = floor(-(k-1) xi) - floor(-k xi) = prev - cur
      w += (prev - cur == 0) ? 'a' : 'b';
      prev = cur;
    }
  }
  return Word(std::move(w));
}

enum class LimitSide { alpha, beta };

/**
 * First n letters of lim alpha_k (right-infinite) or last n letters of
 * lim beta_k (left-infinite) along a finite exterior path. A letter counts as
 * stabilized once two successive path states agree on it, i.e. the usable
 * prefix/suffix is the one already present before the final operator.
 */
inline Word limit_prefix(const std::vector<ExtOp>& path, LimitSide side, long n) {
  if (n < 1) fail(errc::out_of_range, "limit prefix needs n >= 1");
  AlphabetPair p;
  size_t stable = 0;
  for (size_t i = 0; i < path.size(); ++i) {
    stable = (side == LimitSide::alpha) ? p.alpha.size() : p.beta.size();
    p = apply_exterior(path[i], p);
  }
  if (path.empty()) stable = 0;
  if (static_cast<size_t>(n) > stable)
    fail(errc::unstable, "only " + std::to_string(stable) + " letters are stabilized");
  const Word& w = (side == LimitSide::alpha) ? p.alpha : p.beta;
  if (side == LimitSide::alpha) return Word(w.letters.substr(0, n));
  return Word(w.letters.substr(w.size() - n));
}

/**
 * Exterior path whose limit alpha is the mechanical word of slope xi
 * (0 < xi < 1): repeatedly renormalize — for xi < 1/2 emit Vbar and send
 * xi -> xi/(1-xi); for xi >= 1/2 emit Ubar and send xi -> 2 - 1/xi. Stops at
 * xi in {0, 1} (rational slopes) or after max_ops steps.
 */
inline std::vector<ExtOp> path_for_slope(QuadraticSurd xi, size_t max_ops) {
  if (xi.sign() < 0 || xi > QuadraticSurd(1)) fail(errc::out_of_range, "slope must lie in [0, 1]");
  std::vector<ExtOp> path;
  const QuadraticSurd half(make_rat(1, 2));
  while (path.size() < max_ops && !xi.is_zero() && xi != QuadraticSurd(1)) {
    if (xi < half) {
      path.push_back(ExtOp::Vbar);
      xi = xi / (QuadraticSurd(1) - xi);
    } else {
      path.push_back(ExtOp::Ubar);
      xi = QuadraticSurd(2) - xi.reciprocal();
    }
  }
  return path;
}

/// Number of distinct length-n factors of a digit sequence.
inline long subword_complexity(const std::vector<Int>& digit_seq, long n) {
  if (n < 1 || static_cast<size_t>(n) > digit_seq.size())
    fail(errc::out_of_range, "factor length out of range");
  std::unordered_set<std::string> seen;
  std::string buf;
  for (size_t i = 0; i + n <= digit_seq.size(); ++i) {
    buf.clear();
    for (long j = 0; j < n; ++j) {
      buf += digit_seq[i + j].get_str();
      buf += ',';
    }
    seen.insert(buf);
  }
  return static_cast<long>(seen.size());
}

enum class IdentityStatus { pass, fail, skipped };

struct IdentityCheck {
  std::string name;
  IdentityStatus status;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_ok = true;

  void add(const std::string& name, IdentityStatus st) {
    checks.push_back({name, st});
    if (st == IdentityStatus::fail) all_ok = false;
  }
};

/// Word identities of the Christoffel pair machinery, checked as exact word
/// equalities. Identities that degenerate on single-letter components are
/// marked skipped.
inline IdentityReport verify_identities(const AlphabetPair& p) {
  IdentityReport rep;
  const Word &al = p.alpha, &be = p.beta;
  auto eq = [&](const std::string& name, const Word& lhs, const Word& rhs) {
    rep.add(name, lhs == rhs ? IdentityStatus::pass : IdentityStatus::fail);
  };

  eq("alpha*beta == beta_a * alpha^b", al + be, be.last_to_a() + al.first_to_b());
  eq("alpha^b * beta == beta^T * alpha^b", al.first_to_b() + be, be.transpose() + al.first_to_b());
  eq("alpha * beta_a == beta_a * alpha^T", al + be.last_to_a(), be.last_to_a() + al.transpose());
  if (al.size() >= 2) {
    eq("(alpha^b)_a == alpha^T", al.first_to_b().last_to_a(), al.transpose());
  } else {
    rep.add("(alpha^b)_a == alpha^T", IdentityStatus::skipped);
  }
  if (be.size() >= 2) {
    eq("(beta^b)_a == beta^T", be.first_to_b().last_to_a(), be.transpose());
  } else {
    rep.add("(beta^b)_a == beta^T", IdentityStatus::skipped);
  }

  {
    Word prod = al + be;
    Word theta = prod.drop_first().drop_last();
    bool ok = prod[0] == 'a' && prod[prod.size() - 1] == 'b' && theta.is_palindrome();
    rep.add("alpha*beta == a theta b, theta palindrome",
            ok ? IdentityStatus::pass : IdentityStatus::fail);
  }
  {
    // alpha alpha beta beta = a theta' a b theta' b with theta' palindrome
    Word w = al + al + be + be;
    size_t tlen = (w.size() - 4) / 2;
    Word t1(w.letters.substr(1, tlen));
    Word t2(w.letters.substr(tlen + 3, tlen));
    bool ok = w[0] == 'a' && w[tlen + 1] == 'a' && w[tlen + 2] == 'b' &&
              w[w.size() - 1] == 'b' && t1 == t2 && t1.is_palindrome();
    rep.add("alpha^2 beta^2 == a theta' a b theta' b, theta' palindrome",
            ok ? IdentityStatus::pass : IdentityStatus::fail);
  }

  for (auto [w, tag] : {std::make_pair(al, std::string("alpha")), {be, "beta"}}) {
    eq("b U(" + tag + "^T) == U(" + tag + ")^T b",
       letter_b() + apply_inner(InnerOp::U, w.transpose()),
       apply_inner(InnerOp::U, w).transpose() + letter_b());
    eq("V(" + tag + "^T) a == a V(" + tag + ")^T",
       apply_inner(InnerOp::V, w.transpose()) + letter_a(),
       letter_a() + apply_inner(InnerOp::V, w).transpose());
  }

  {
    // finite-prefix proxies for alpha^inf = beta_a (alpha^T)^inf and
    // beta^inf = (beta^T)^inf alpha^b (left-infinite)
    size_t k = 3;
    Word lhs = al.pow(k + 1);
    Word rhs = be.last_to_a() + al.transpose().pow(k + 1);
    bool ok1 = rhs.letters.compare(0, lhs.size(), lhs.letters) == 0 ||
               lhs.letters.compare(0, rhs.size(), rhs.letters) == 0;
    rep.add("alpha^inf == beta_a (alpha^T)^inf (prefix check)",
            ok1 ? IdentityStatus::pass : IdentityStatus::fail);
    Word lhs2 = be.pow(k + 1);
    Word rhs2 = be.transpose().pow(k + 1) + al.first_to_b();
    auto suffix_of = [](const Word& shorter, const Word& longer) {
      return shorter.size() <= longer.size() &&
             longer.letters.compare(longer.size() - shorter.size(), shorter.size(),
                                    shorter.letters) == 0;
    };
    bool ok2 = suffix_of(lhs2, rhs2) || suffix_of(rhs2, lhs2);
    rep.add("beta^inf == (beta^T)^inf alpha^b (suffix check)",
            ok2 ? IdentityStatus::pass : IdentityStatus::fail);
  }

  return rep;
}

}  // namespace markov

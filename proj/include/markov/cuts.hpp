#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "markov/contfrac.hpp"
#include "markov/error.hpp"
#include "markov/int.hpp"
#include "markov/surd.hpp"
#include "markov/words.hpp"

namespace markov {

/// One-sided eventually periodic digit sequence: pre then per repeating;
/// empty per means the stream is finite.
struct DigitStream {
  std::vector<Int> pre, per;

  bool finite() const { return per.empty(); }
  long finite_size() const { return static_cast<long>(pre.size()); }

  Int at(long i) const {  // 1-based
    if (i < 1) fail(errc::out_of_range, "stream index must be >= 1");
    if (static_cast<size_t>(i) <= pre.size()) return pre[i - 1];
    if (per.empty()) fail(errc::index_beyond_rational, "finite stream exhausted");
    return per[(i - 1 - pre.size()) % per.size()];
  }

  /// [s_i; s_{i+1}, ...] as an exact value.
  QuadraticSurd full_value_from(long i) const {
    if (i < 1) fail(errc::out_of_range, "stream index must be >= 1");
    if (static_cast<size_t>(i) <= pre.size() || per.empty()) {
      if (per.empty() && static_cast<size_t>(i) > pre.size())
        fail(errc::index_beyond_rational, "finite stream exhausted");
      std::vector<Int> rest(pre.begin() + (i - 1), pre.end());
      return detail::stream_value(rest, per);
    }
    long j = (i - 1 - static_cast<long>(pre.size())) % static_cast<long>(per.size());
    std::vector<Int> rot(per.begin() + j, per.end());
    rot.insert(rot.end(), per.begin(), per.begin() + j);
    return purely_periodic_value(rot);
  }
};

/**
 * Eventually periodic two-sided digit context around a cut. The left side is
 * read leftward (adjacent digit first) and may be finite; the right side is
 * the infinite continuation.
 */
struct BiWord {
  DigitStream left;   // x_{-1}, x_{-2}, ... outward from the cut
  DigitStream right;  // x_{+1}, x_{+2}, ...
};

/// [x_{+1}; x_{+2}, ...] + [0; x_{-1}, x_{-2}, ...], exact.
inline QuadraticSurd cut_value(const BiWord& w) {
  if (w.right.finite()) fail(errc::out_of_range, "right side of a cut must be infinite");
  QuadraticSurd right = w.right.full_value_from(1);
  if (w.left.finite() && w.left.pre.empty()) return right;
  QuadraticSurd left = w.left.full_value_from(1).reciprocal();
  return right + left;
}

/// lambda_n(x) = [0; x_{n-1}, ..., x_1] + [x_n; x_{n+1}, ...]; the reversed
/// prefix is empty (0) at n = 1.
inline QuadraticSurd lambda_at(const ContinuedFraction& x, long n) {
  if (n < 1) fail(errc::out_of_range, "lambda index must be >= 1");
  return QuadraticSurd(cf_reversed_prefix(x, n)) + cf_tail_value(x, n);
}

enum class Verdict { good, bad, indeterminate };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::good: return "good";
    case Verdict::bad: return "bad";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

struct CutVerdict {
  Verdict kind;
  // first disagreement index (0-based) for definite verdicts; length of the
  // exhausted side for indeterminate ones
  long witness;
};

enum class Boundary { b_a, a_b };

/**
 * Lexicographic cut criterion on finite contexts. E is the left context read
 * outward from the cut (beyond the boundary letter), F the right context;
 * boundary b_a encodes E^T b | a F, boundary a_b encodes E^T a | b F (which,
 * per the digit convention, is the cut E^T 2 | 2 b F splitting the letter a).
 * Good/bad hold for all {a,b}-extensions; a prefix relation between E and F
 * leaves the verdict indeterminate.
 */
inline CutVerdict classify_word_cut(const Word& E, const Word& F, Boundary boundary) {
  size_t m = std::min(E.size(), F.size());
  for (size_t i = 0; i < m; ++i) {
    if (E[i] == F[i]) continue;
    bool e_smaller = E[i] == 'a';  // a < b
    bool good = (boundary == Boundary::b_a) ? e_smaller : !e_smaller;
    return {good ? Verdict::good : Verdict::bad, static_cast<long>(i)};
  }
  return {Verdict::indeterminate, static_cast<long>(m)};
}

namespace detail {

inline const QuadraticSurd& tail_all_b() {  // [1;1,1,...] = (1+sqrt5)/2
  static const QuadraticSurd t = QuadraticSurd::make(1, 1, 2, 5);
  return t;
}
inline const QuadraticSurd& tail_all_a() {  // [2;2,2,...] = 1+sqrt2
  static const QuadraticSurd t = QuadraticSurd::make(1, 1, 1, 2);
  return t;
}

}  // namespace detail

enum class SideContext { left_infinite, right_infinite };

struct CutSite {
  long position;        // digits on the finite side of the cut
  Verdict verdict;      // over {a,b}-extensions of the finite side
  QuadraticSurd value;  // lambda of the cut within the word itself
  bool two_two_a = false;
};

/**
 * Exact classification of the cut at position k of a one-sided word (stream s
 * reads outward from the cut's finite side origin: for right-infinite words
 * s is the word itself, for left-infinite words s starts at the word's last
 * digit). The finite side is s_1..s_k; extensions range over {a,b}-words, and
 * the extremal extension values are attained at a^inf and b^inf, so two exact
 * comparisons decide the verdict.
 */
inline CutSite classify_one_sided_cut(const DigitStream& s, long k, SideContext ctx) {
  if (k < 1) fail(errc::out_of_range, "cut position must be >= 1");
  std::vector<Int> rev;
  rev.reserve(k);
  for (long i = k; i >= 1; --i) rev.push_back(s.at(i));
  Mat2 M = word_matrix(rev);
  QuadraticSurd vinf = s.full_value_from(k + 1);
  QuadraticSurd inf_part = (ctx == SideContext::right_infinite) ? vinf : vinf.reciprocal();
  QuadraticSurd threshold = QuadraticSurd(3) - inf_part;

  auto moebius = [&](const QuadraticSurd& t) {
    QuadraticSurd num = QuadraticSurd(M.p) * t + QuadraticSurd(M.pp);
    QuadraticSurd den = QuadraticSurd(M.q) * t + QuadraticSurd(M.qp);
    QuadraticSurd full = num / den;  // [s_k; s_{k-1}, ..., s_1, t]
    return (ctx == SideContext::right_infinite) ? full.reciprocal() : full;
  };
  int c1 = surd_cmp(moebius(detail::tail_all_b()), threshold);
  int c2 = surd_cmp(moebius(detail::tail_all_a()), threshold);
  Verdict v = (c1 <= 0 && c2 <= 0)  ? Verdict::good
              : (c1 > 0 && c2 > 0) ? Verdict::bad
                                   : Verdict::indeterminate;

  // the cut's own value, with the finite side unextended
  QuadraticSurd finite_part = (ctx == SideContext::right_infinite)
                                  ? QuadraticSurd(make_rat(M.q, M.p))
                                  : QuadraticSurd(make_rat(M.p, M.q));
  return CutSite{k, v, inf_part + finite_part, false};
}

enum class CutContext {
  alpha_power_beta_left,     // ...alpha alpha beta, read leftward
  alphabeta_periodic_left,   // ...(alpha beta)(alpha beta)
  alpha_beta_power_right,    // alpha beta beta ...
  alphabeta_periodic_right,  // (alpha beta)(alpha beta)...
};

/**
 * Scans all cut positions within the horizon of the named one-sided infinite
 * word and returns the indeterminate sites, plus the 2|2a... site for right
 * words whose first two letters are aa.
 */
inline std::vector<CutSite> find_indeterminate_cuts(CutContext ctx, const AlphabetPair& p,
                                                    long horizon) {
  const long min_h = static_cast<long>(digits(p.product()).size());
  if (horizon < min_h)
    fail(errc::horizon_too_small,
         "horizon must cover digits(alpha beta) = " + std::to_string(min_h));

  DigitStream s;
  SideContext side;
  auto revdig = [](const Word& w) {
    auto d = digits(w);
    std::reverse(d.begin(), d.end());
    return d;
  };
  switch (ctx) {
    case CutContext::alpha_power_beta_left:
      s.pre = revdig(p.beta);
      s.per = revdig(p.alpha);
      side = SideContext::left_infinite;
      break;
    case CutContext::alphabeta_periodic_left:
      s.per = revdig(p.product());
      side = SideContext::left_infinite;
      break;
    case CutContext::alpha_beta_power_right:
      s.pre = digits(p.alpha);
      s.per = digits(p.beta);
      side = SideContext::right_infinite;
      break;
    case CutContext::alphabeta_periodic_right:
      s.per = digits(p.product());
      side = SideContext::right_infinite;
      break;
  }

  std::vector<CutSite> sites;
  for (long k = 1; k <= horizon; ++k) {
    CutSite site = classify_one_sided_cut(s, k, side);
    bool starts_aa = side == SideContext::right_infinite && s.at(1) == 2 && s.at(2) == 2 &&
                     s.at(3) == 2 && s.at(4) == 2;
    if (k == 1 && starts_aa) {
      site.two_two_a = true;
      sites.push_back(site);
    } else if (site.verdict == Verdict::indeterminate) {
      sites.push_back(site);
    }
  }
  return sites;
}

/// Largest extension value [0; ext...] for which the cut at position k stays
/// good: the cut's lambda equals inf_part + (q + q' u)/(p + p' u) with
/// u = [0; ext], so the bound solves the Moebius equation against 3 exactly.
inline QuadraticSurd critical_extension_bound(const DigitStream& s, long k, SideContext ctx) {
  std::vector<Int> rev;
  rev.reserve(k);
  for (long i = k; i >= 1; --i) rev.push_back(s.at(i));
  Mat2 M = word_matrix(rev);
  QuadraticSurd vinf = s.full_value_from(k + 1);
  QuadraticSurd inf_part = (ctx == SideContext::right_infinite) ? vinf : vinf.reciprocal();
  QuadraticSurd thr = QuadraticSurd(3) - inf_part;
  // right context: lambda(u) = inf_part + (M.q + M.qp u)/(M.p + M.pp u);
  // left context:  lambda(u) = inf_part + (M.p + M.pp u)/(M.q + M.qp u).
  if (ctx == SideContext::right_infinite)
    return (QuadraticSurd(M.q) - QuadraticSurd(M.p) * thr) /
           (QuadraticSurd(M.pp) * thr - QuadraticSurd(M.qp));
  return (QuadraticSurd(M.p) - QuadraticSurd(M.q) * thr) /
         (QuadraticSurd(M.qp) * thr - QuadraticSurd(M.pp));
}

/// The binding mirror site: the deepest indeterminate cut within the horizon.
/// This is the unique factorization Theorem-style side conditions refer to; a
/// shallower boundary site, when present, has a weaker goodness condition.
inline CutSite binding_mirror(CutContext ctx, const AlphabetPair& p, long horizon) {
  auto sites = find_indeterminate_cuts(ctx, p, horizon);
  for (auto it = sites.rbegin(); it != sites.rend(); ++it)
    if (it->verdict == Verdict::indeterminate) return *it;
  fail(errc::horizon_too_small, "no indeterminate site within the horizon");
}

/// Markov value of the bi-infinite periodic word w^inf: max over the cut
/// positions of one minimal period, with the attaining positions (0-based
/// digit index before which the cut sits).
struct PeriodicMarkovValue {
  QuadraticSurd value;
  std::vector<long> positions;
};

inline PeriodicMarkovValue markov_value_cuts(const Word& w) {
  if (w.empty()) fail(errc::empty_word, "markov value of the empty word");
  // reduce to the primitive period so cut positions are not double counted
  Word prim = w;
  for (size_t len = 1; len < w.size(); ++len) {
    if (w.size() % len != 0) continue;
    bool tiles = true;
    for (size_t i = len; i < w.size() && tiles; ++i) tiles = w[i] == w[i % len];
    if (tiles) {
      prim = Word(w.letters.substr(0, len));
      break;
    }
  }
  std::vector<Int> D = digits(prim);
  const long L = static_cast<long>(D.size());
  PeriodicMarkovValue out{QuadraticSurd(0), {}};
  QuadraticSurd gamma = purely_periodic_value(D);
  for (long j = 0; j < L; ++j) {
    // cut before digit j: value = gamma_j - conj(gamma_j)
    QuadraticSurd val = gamma - gamma.galois_conjugate();
    int cmp = out.positions.empty() ? 1 : surd_cmp(val, out.value);
    if (cmp > 0) {
      out.value = val;
      out.positions.assign(1, j);
    } else if (cmp == 0) {
      out.positions.push_back(j);
    }
    gamma = (gamma - QuadraticSurd(D[j])).reciprocal();  // shift to the next cut
  }
  return out;
}

inline QuadraticSurd markov_value_periodic(const Word& w) { return markov_value_cuts(w).value; }

/// Exact endpoints of the cylinder I(omega) in [0,1]; size = hi - lo
/// = 1/(q_n (q_n + q_{n-1})).
struct Cylinder {
  Rat lo, hi;
  Rat size() const { return hi - lo; }
};

inline Cylinder cylinder(const std::vector<Int>& prefix) {
  if (prefix.empty()) fail(errc::empty_word, "cylinder of empty prefix");
  Int pm1 = 1, qm1 = 0, p = 0, q = 1;  // convergents of [0; ...]
  for (const Int& d : prefix) {
    Int p2 = d * p + pm1, q2 = d * q + qm1;
    pm1 = p;
    qm1 = q;
    p = p2;
    q = q2;
  }
  Rat a = make_rat(p, q);
  Rat b = make_rat(p + pm1, q + qm1);
  if (a < b) return {a, b};
  return {b, a};
}

struct Block {
  int digit;
  long count;
};

/// Even-blocks decomposition 1^{e_1} 2^{f_1} ... (all even) or
/// 2^{f_1} 1^{e_1} ... (f_1 odd, rest even); failure is a value, not an
/// exception, and carries the position where the violation is detected.
struct EvenBlocksResult {
  bool ok = false;
  long fail_position = 0;  // 1-based, set when !ok
  bool leading_odd_twos = false;
  std::vector<Block> blocks;
};

inline EvenBlocksResult even_blocks(const std::vector<Int>& s) {
  EvenBlocksResult out;
  if (s.empty()) {
    out.fail_position = 1;
    return out;
  }
  long i = 0;
  const long n = static_cast<long>(s.size());
  bool first = true;
  while (i < n) {
    if (s[i] != 1 && s[i] != 2) {
      out.fail_position = i + 1;
      out.blocks.clear();
      return out;
    }
    int d = static_cast<int>(s[i].get_si());
    long j = i;
    while (j < n && s[j] == d) ++j;
    long count = j - i;
    if (count % 2 != 0) {
      if (first && d == 2) {
        out.leading_odd_twos = true;
      } else {
        out.fail_position = j + 1;  // where the odd block closes
        out.blocks.clear();
        return out;
      }
    }
    out.blocks.push_back({d, count});
    first = false;
    i = j;
  }
  out.ok = true;
  return out;
}

}  // namespace markov

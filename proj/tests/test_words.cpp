#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "markov/words.hpp"

using namespace markov;

namespace {

Word w(const char* s) { return Word(std::string(s)); }

std::vector<Int> digs(std::initializer_list<long> xs) {
  std::vector<Int> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Stern-Brocot walk to mu/nu (|w|_b / |w|_a); independent oracle for the tree
// correspondence.
AlphabetPair stern_brocot_node(long mu, long nu) {
  AlphabetPair p;
  long lb = 0, la = 1, rb = 1, ra = 0;  // left 0/1, right 1/0 as b-count/a-count
  for (;;) {
    long mb = lb + rb, ma = la + ra;
    if (mu * ma == nu * mb) return p;
    if (mu * ma < nu * mb) {
      p = apply_exterior(ExtOp::Vbar, p);
      rb = mb;
      ra = ma;
    } else {
      p = apply_exterior(ExtOp::Ubar, p);
      lb = mb;
      la = ma;
    }
  }
}

}  // namespace

TEST_CASE("inner substitutions") {
  CHECK(apply_inner(InnerOp::U, w("ab")) == w("abb"));
  CHECK(apply_inner(InnerOp::V, w("ab")) == w("aab"));
  CHECK(apply_inner(InnerOp::U, apply_inner(InnerOp::V, w("a"))) == w("ab"));
}

TEST_CASE("exterior operators") {
  AlphabetPair root;
  AlphabetPair u = apply_exterior(ExtOp::Ubar, root);
  CHECK(u.alpha == w("ab"));
  CHECK(u.beta == w("b"));
  AlphabetPair uv = apply_exterior(ExtOp::Vbar, u);
  CHECK(uv.alpha == w("ab"));
  CHECK(uv.beta == w("abb"));
  CHECK(apply_exterior(ExtOp::Vbar, u).product() == w("ababb"));
}

TEST_CASE("renormalization: exterior path equals reversed inner composition") {
  for (int len = 1; len <= 9; ++len) {
    for (long mask = 0; mask < (1L << len); ++mask) {
      std::vector<ExtOp> path;
      for (int i = 0; i < len; ++i)
        path.push_back((mask >> i) & 1 ? ExtOp::Vbar : ExtOp::Ubar);
      AlphabetPair exterior = node_at(path);
      Word ia = letter_a(), ib = letter_b();
      for (int i = len - 1; i >= 0; --i) {
        InnerOp op = path[i] == ExtOp::Ubar ? InnerOp::U : InnerOp::V;
        ia = apply_inner(op, ia);
        ib = apply_inner(op, ib);
      }
      REQUIRE(exterior.alpha == ia);
      REQUIRE(exterior.beta == ib);
    }
  }
  // the full length <= 12 sweep runs in the acceptance suite
}

TEST_CASE("christoffel words") {
  CHECK(christoffel(1, 2) == w("aab"));
  CHECK(christoffel(1, 1) == w("ab"));
  CHECK(christoffel(2, 3) == w("aabab"));
  CHECK(christoffel(2, 1) == w("abb"));
  CHECK_THROWS_AS(christoffel(2, 4), error);

  // christoffel(mu, nu) = alpha*beta at the Stern-Brocot node, mu+nu <= 20
  for (long mu = 1; mu + 1 <= 20; ++mu)
    for (long nu = 1; mu + nu <= 20; ++nu) {
      if (gcd(Int(mu), Int(nu)) != 1 || (mu == 1 && nu == 1)) continue;
      AlphabetPair node = stern_brocot_node(mu, nu);
      CHECK(node.product() == christoffel(mu, nu));
    }
  CHECK(stern_brocot_node(1, 1).product() == christoffel(1, 1));
}

TEST_CASE("balance") {
  CHECK_FALSE(is_balanced(w("aabb")));
  CHECK(is_balanced(w("abab")));
  CHECK(is_balanced(w("aabab")));
  CHECK(is_balanced(w("")));
  CHECK(is_balanced(w("a")));
}

TEST_CASE("mechanical words") {
  MechanicalSpec half{QuadraticSurd(make_rat(1, 2)), MechanicalVariant::floor};
  CHECK(mechanical_prefix(half, 6) == w("ababab"));

  MechanicalSpec zero{QuadraticSurd(0), MechanicalVariant::floor};
  CHECK(mechanical_prefix(zero, 4) == w("aaaa"));

  // xi = (sqrt5-1)/2: floors computed exactly; frozen from the floor oracle
  MechanicalSpec golden{QuadraticSurd::make(-1, 1, 2, 5), MechanicalVariant::floor};
  CHECK(mechanical_prefix(golden, 8) == w("ababbaba"));

  MechanicalSpec bad{QuadraticSurd(2), MechanicalVariant::floor};
  CHECK_THROWS_AS(mechanical_prefix(bad, 3), error);

  // balanced for all tested slopes and n <= 60
  std::vector<QuadraticSurd> slopes = {
      QuadraticSurd(make_rat(1, 3)), QuadraticSurd(make_rat(2, 5)),
      QuadraticSurd::make(-1, 1, 2, 5), QuadraticSurd::make(-1, 1, 1, 2),
      QuadraticSurd::make(3, -1, 2, 3)};
  for (const auto& xi : slopes) {
    for (auto variant : {MechanicalVariant::floor, MechanicalVariant::skew}) {
      MechanicalSpec spec{xi, variant};
      CHECK(is_balanced(mechanical_prefix(spec, 60)));
    }
  }
}

TEST_CASE("skew mechanical words") {
  MechanicalSpec spec{QuadraticSurd(make_rat(1, 2)), MechanicalVariant::skew};
  Word sw = mechanical_prefix(spec, 7);
  CHECK(sw[0] == 'a');
  CHECK(is_balanced(sw));
}

TEST_CASE("limit words along exterior paths") {
  std::vector<ExtOp> uv;
  for (int i = 0; i < 6; ++i) {
    uv.push_back(ExtOp::Ubar);
    uv.push_back(ExtOp::Vbar);
  }
  CHECK(limit_prefix(uv, LimitSide::alpha, 5) == w("ababb"));

  CHECK_THROWS_AS(limit_prefix({ExtOp::Ubar}, LimitSide::alpha, 5), error);
  CHECK(limit_prefix({ExtOp::Ubar}, LimitSide::alpha, 1) == w("a"));

  // path realizing xi's continued fraction reproduces the mechanical word
  for (const char* cf_text : {"[0; 2, (1)]", "[0; (2)]", "[0; 3, (1, 2)]"}) {
    ContinuedFraction x = ContinuedFraction::parse(cf_text);
    QuadraticSurd xi = cf_value(x);
    auto path = path_for_slope(xi, 40);
    Word lim = limit_prefix(path, LimitSide::alpha, 60);
    MechanicalSpec spec{xi, MechanicalVariant::floor};
    CHECK(lim == mechanical_prefix(spec, 60));
  }
}

TEST_CASE("digit views") {
  CHECK(digits(w("ab")) == digs({2, 2, 1, 1}));
  auto dec = word_of_digits(digs({2, 1, 1, 2, 2}));
  CHECK(dec.stripped_leading_two);
  CHECK(dec.word == w("ba"));
  CHECK_THROWS_AS(word_of_digits(digs({1, 2, 1})), error);
  auto rt = word_of_digits(digits(w("abbab")));
  CHECK_FALSE(rt.stripped_leading_two);
  CHECK(rt.word == w("abbab"));
}

TEST_CASE("word identities hold on the tree") {
  CHECK(verify_identities(node_at({ExtOp::Ubar})).all_ok);  // (ab, b)
  CHECK(verify_identities(node_at({ExtOp::Vbar})).all_ok);  // (a, ab)
  for (const auto& node : tree_nodes(7)) {
    auto rep = verify_identities(node);
    if (!rep.all_ok) {
      for (const auto& c : rep.checks)
        if (c.status == IdentityStatus::fail) UNSCOPED_INFO(c.name);
    }
    REQUIRE(rep.all_ok);
  }
}

TEST_CASE("subword complexity") {
  Word p = w("abab");
  std::vector<Int> dseq = digits(p.pow(6));
  CHECK(subword_complexity(dseq, 4) == 4);

  std::vector<Int> ones(30, Int(1));
  CHECK(subword_complexity(ones, 3) == 1);
}

TEST_CASE("alpha prefix / beta suffix monotonicity") {
  std::mt19937 rng(5150);
  for (int iter = 0; iter < 50; ++iter) {
    AlphabetPair p;
    for (int step = 0; step < 10; ++step) {
      ExtOp op = rng() % 2 ? ExtOp::Ubar : ExtOp::Vbar;
      AlphabetPair q = apply_exterior(op, p);
      CHECK(q.alpha.letters.compare(0, p.alpha.size(), p.alpha.letters) == 0);
      CHECK(q.beta.letters.compare(q.beta.size() - p.beta.size(), p.beta.size(),
                                   p.beta.letters) == 0);
      CHECK(q.alpha[0] == 'a');
      CHECK(q.beta[q.beta.size() - 1] == 'b');
      p = q;
    }
  }
}

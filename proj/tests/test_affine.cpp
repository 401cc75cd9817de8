#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "adkdv/affine.hpp"
#include "adkdv/rng.hpp"

using namespace adkdv;

namespace {

AffineWord W(int n, std::vector<int> letters) { return AffineWord(n, std::move(letters)); }

// Brute-force minimal length: enumerate all words up to the given length and
// find the shortest spelling of p. Independent of the window length formula.
int min_word_length_bfs(const AffinePermutation& p, int max_len) {
  const int n = p.rank();
  std::vector<AffinePermutation> frontier{AffinePermutation::identity(n)};
  if (p.is_identity()) return 0;
  std::set<std::vector<long long>> seen{frontier[0].window()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffinePermutation> next;
    for (const auto& q : frontier)
      for (int i = 0; i < n; ++i) {
        AffinePermutation r = q.mul_gen_right(i);
        if (r == p) return len;
        if (seen.insert(r.window()).second) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return -1;
}

// Random reduced word of the requested length (letters chosen so the window
// length grows at each step).
AffineWord random_reduced_word(int n, int len, Rng& rng) {
  while (true) {
    std::vector<int> letters;
    AffinePermutation p = AffinePermutation::identity(n);
    long long plen = 0;
    bool stuck = false;
    while (static_cast<int>(letters.size()) < len) {
      std::vector<int> ok;
      for (int i = 0; i < n; ++i)
        if (coxeter_length(p.mul_gen_right(i)) == plen + 1) ok.push_back(i);
      if (ok.empty()) { stuck = true; break; }
      int pick = ok[rng.uniform_u64(ok.size())];
      letters.push_back(pick);
      p = p.mul_gen_right(pick);
      ++plen;
    }
    if (!stuck) return AffineWord(n, std::move(letters));
  }
}

}  // namespace

TEST_CASE("word_to_perm on basic words") {
  CHECK(word_to_perm(W(3, {})).window() == std::vector<long long>{1, 2, 3});
  CHECK(word_to_perm(W(3, {1})).window() == std::vector<long long>{2, 1, 3});

  // s1 s2 s1 s0: compose the integer action letter by letter.
  AffinePermutation p = word_to_perm(W(3, {1, 2, 1, 0}));
  CHECK(p.window() == std::vector<long long>{-2, 2, 6});
  CHECK(coxeter_length(p) == 4);
  CHECK(min_word_length_bfs(p, 6) == 4);  // no shorter expression exists
}

TEST_CASE("action on integers is n-periodic") {
  AffinePermutation p = word_to_perm(W(4, {0, 1, 2, 3, 2, 1}));
  for (long long a = -9; a <= 9; ++a) CHECK(p.act(a + 4) == p.act(a) + 4);
  CHECK(p.compose(p.inverse()).is_identity());
}

TEST_CASE("coxeter_length basics") {
  CHECK(coxeter_length(AffinePermutation::identity(3)) == 0);
  CHECK(coxeter_length(word_to_perm(W(3, {0}))) == 1);
  Rng rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform_u64(2));
    AffineWord w = random_reduced_word(n, 5, rng);
    AffinePermutation p = word_to_perm(w);
    CHECK(coxeter_length(p) == min_word_length_bfs(p, 7));
  }
}

TEST_CASE("is_reduced") {
  CHECK_FALSE(is_reduced(W(3, {1, 1})));
  CHECK(is_reduced(W(3, {1, 0})));
  CHECK(is_reduced(W(3, {1, 0, 1, 2})));

  // Every prefix of a reduced word is reduced.
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    AffineWord w = random_reduced_word(3, 8, rng);
    for (int len = 0; len <= w.size(); ++len) CHECK(is_reduced(w.prefix(len)));
  }

  // Length never exceeds the letter count; equality iff reduced.
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> letters;
    for (int i = 0; i < 6; ++i) letters.push_back(rng.uniform_int(0, 3));
    AffineWord w(4, letters);
    long long len = coxeter_length(word_to_perm(w));
    CHECK(len <= w.size());
    CHECK(is_reduced(w) == (len == w.size()));
  }
}

TEST_CASE("rho_shift") {
  CHECK(rho_shift(W(3, {1, 2, 1, 0}), 1) == W(3, {2, 0, 2, 1}));
  CHECK(rho_shift(W(3, {1, 2, 1, 0}), 2) == W(3, {0, 1, 0, 2}));
  AffineWord w = W(3, {1, 2, 1, 0});
  CHECK(rho_shift(w, 3) == w);

  // word_to_perm(rho_shift(w,t)) equals the rho^t-conjugate element, and
  // glide offsets are preserved.
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform_u64(2));
    AffineWord v = random_reduced_word(n, 6, rng);
    int t = rng.uniform_int(0, n - 1);
    CHECK(word_to_perm(rho_shift(v, t)) == word_to_perm(v).rho(t));
    auto k1 = glide_offset(v);
    auto k2 = glide_offset(rho_shift(v, t));
    CHECK(k1.has_value() == k2.has_value());
    if (k1 && k2) CHECK(*k1 == *k2);
  }
}

TEST_CASE("glide_offset on the worked examples") {
  CHECK(glide_offset(W(3, {1, 2, 1, 0})) == 0);
  CHECK(glide_offset(W(3, {1, 0})) == 2);
  CHECK(glide_offset(W(3, {2, 0})) == 1);
  CHECK_FALSE(glide_offset(W(3, {1})).has_value());
  CHECK(glide_offset(W(3, {})) == 0);
}

TEST_CASE("product_identity_words") {
  SUBCASE("rank 3 instance") {
    Glide u(W(3, {1, 2, 1, 0})), v(W(3, {1, 0}));
    auto [vu, other] = product_identity_words(u, v);
    CHECK(vu == W(3, {1, 0, 1, 2, 1, 0}));
    CHECK(other == W(3, {0, 1, 0, 2, 1, 0}));
  }
  SUBCASE("identity times identity") {
    Glide e(W(3, {}));
    auto [a, b] = product_identity_words(e, e);
    CHECK(a.empty());
    CHECK(b.empty());
  }
  SUBCASE("rank 4 instance evaluates to equal windows") {
    Glide u(W(4, {0, 1, 2, 3, 2, 1})), v(W(4, {3, 2, 1}));
    auto [vu, other] = product_identity_words(u, v);
    CHECK(word_to_perm(vu) == word_to_perm(other));
    CHECK(is_reduced(other));
  }
  SUBCASE("rejects non-reduced products") {
    Glide u(W(3, {2, 1})), v(W(3, {1, 2}));
    CHECK_THROWS_AS(product_identity_words(u, v), NotReducedError);
  }
}

TEST_CASE("inversion_coords") {
  SUBCASE("identity") {
    InversionCoords mc = inversion_coords(AffinePermutation::identity(4));
    for (long long v : mc.m) CHECK(v == 0);
  }
  SUBCASE("single letters pin the sign convention") {
    // s1: wire 2 crosses wire 1 from above, so m_12 = +1.
    InversionCoords mc = inversion_coords(word_to_perm(W(3, {1})));
    CHECK(mc.at(1, 2) == 1);
    CHECK(mc.at(1, 3) == 0);
    CHECK(mc.at(2, 3) == 0);
    // s0: wire 1 crosses wire 3 from above at the back of the cylinder.
    InversionCoords m0 = inversion_coords(word_to_perm(W(3, {0})));
    CHECK(m0.at(1, 3) == -1);
    CHECK(m0.at(1, 2) == 0);
  }
  SUBCASE("sign convention matches crossing directions in diagrams") {
    // At every crossing of a reduced word, the class of the upper wire must
    // agree with the sign of m_ij for the pair that crosses.
    Rng rng(19);
    for (int trial = 0; trial < 30; ++trial) {
      int n = 3 + static_cast<int>(rng.uniform_u64(2));
      AffineWord w = random_reduced_word(n, 6, rng);
      InversionCoords mc = inversion_coords(word_to_perm(w));
      AffinePermutation g = AffinePermutation::identity(n);
      for (int p = 0; p < w.size(); ++p) {
        int q = w.letter(p);
        long long lo = g.act(q), hi = g.act(q + 1);
        int cl = g.wire_class(lo), cu = g.wire_class(hi);
        int i = std::min(cl, cu), j = std::max(cl, cu);
        long long mij = mc.at(i, j);
        CHECK(mij != 0);
        CHECK((cu == j) == (mij > 0));
        g = g.mul_gen_right(q);
      }
    }
  }
  SUBCASE("sum of |m_ij| is the length") {
    Rng rng(23);
    for (int trial = 0; trial < 20; ++trial) {
      AffineWord w = random_reduced_word(4, 7, rng);
      InversionCoords mc = inversion_coords(word_to_perm(w));
      long long total = 0;
      for (long long v : mc.m) total += std::llabs(v);
      CHECK(total == w.size());
    }
  }
  SUBCASE("(vu)^{-1} vs u^{-1} sign agreement") {
    AffinePermutation vu = word_to_perm(W(3, {1, 0, 1, 2, 1, 0}));
    AffinePermutation u = word_to_perm(W(3, {1, 2, 1, 0}));
    InversionCoords a = inversion_coords(vu.inverse());
    InversionCoords b = inversion_coords(u.inverse());
    for (size_t k = 0; k < a.m.size(); ++k) {
      if (a.m[k] > 0) CHECK(b.m[k] > 0);
      if (a.m[k] < 0) CHECK(b.m[k] < 0);
    }
  }
}

TEST_CASE("weak_order_leq") {
  AffinePermutation id = AffinePermutation::identity(3);
  AffinePermutation s1 = word_to_perm(W(3, {1}));
  AffinePermutation s1s2 = word_to_perm(W(3, {1, 2}));
  CHECK(weak_order_leq(id, s1s2));
  CHECK(weak_order_leq(s1, s1s2));
  CHECK_FALSE(weak_order_leq(s1s2, s1));

  SUBCASE("carrier-free instance: (vu)^{-1} <= (u^2)^{-1}") {
    AffinePermutation vu = word_to_perm(W(3, {1, 0, 1, 2, 1, 0}));
    AffinePermutation uu = word_to_perm(W(3, {1, 2, 1, 0, 1, 2, 1, 0}));
    CHECK(weak_order_leq(vu.inverse(), uu.inverse()));
  }

  SUBCASE("partial order on a random sample") {
    Rng rng(31);
    std::vector<AffinePermutation> sample;
    for (int trial = 0; trial < 12; ++trial)
      sample.push_back(word_to_perm(random_reduced_word(3, 1 + trial % 5, rng)));
    for (const auto& a : sample) {
      CHECK(weak_order_leq(a, a));
      for (const auto& b : sample) {
        if (weak_order_leq(a, b) && weak_order_leq(b, a)) CHECK(a == b);
        for (const auto& c : sample)
          if (weak_order_leq(a, b) && weak_order_leq(b, c)) CHECK(weak_order_leq(a, c));
      }
    }
  }
}

TEST_CASE("reduced_word_of recovers elements") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng.uniform_u64(3));
    AffineWord w = random_reduced_word(n, 1 + static_cast<int>(rng.uniform_u64(8)), rng);
    AffinePermutation p = word_to_perm(w);
    AffineWord r = reduced_word_of(p);
    CHECK(word_to_perm(r) == p);
    CHECK(r.size() == coxeter_length(p));
  }
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(AffineWord(2, {0, 1}), InvalidInputError);
  CHECK_THROWS_AS(AffineWord(3, {3}), InvalidInputError);
  CHECK_THROWS_AS(AffinePermutation({1, 2, 4}), InvalidInputError);  // bad sum
  CHECK_THROWS_AS(AffinePermutation({1, 4, 1}), InvalidInputError);  // congruent entries
  CHECK_THROWS_AS(Glide(W(3, {1, 1})), NotReducedError);
  CHECK_THROWS_AS(Glide(W(3, {1})), NotGlideError);
}

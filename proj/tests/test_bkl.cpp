#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidkit/bkl.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/word.hpp"

using namespace braid;

namespace {

braid_word random_word(int n, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  braid_word w;
  w.n = n;
  for (int i = 0; i < len; ++i) w.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
  return w;
}

long long catalan(int n) {
  // C_n = binom(2n, n) / (n + 1)
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

TEST_CASE("band canonical factor recognition") {
  CHECK(bkl_is_simple(perm::identity(4)));
  CHECK(bkl_is_simple(bkl_delta_perm(4)));
  CHECK(bkl_is_delta(bkl_delta_perm(4)));
  CHECK_FALSE(bkl_is_delta(perm::identity(4)));
  // a single band a_{t,s} is simple
  CHECK(bkl_is_simple(band_perm(4, 3, 1)));
  // the half twist here is the nested pairing (1 4)(2 3), which is non-crossing
  CHECK(bkl_is_simple(delta_perm(4)));
  // a descending 3-cycle is not a band canonical factor
  CHECK_FALSE(bkl_is_simple(perm_of(braid_word(4, {1, 2}))));
  // crossing bands are rejected: {1,3} and {2,4}
  perm crossing = compose(band_perm(4, 3, 1), band_perm(4, 4, 2));
  CHECK_FALSE(bkl_is_simple(crossing));
}

TEST_CASE("canonical factor counts are Catalan numbers") {
  for (int n = 2; n <= 7; ++n)
    CHECK(static_cast<long long>(enumerate_canonical_factors(n).size()) == catalan(n));
}

TEST_CASE("band word of a simple factor round trips") {
  for (int n : {3, 4, 5}) {
    for (const perm& p : enumerate_canonical_factors(n)) {
      band_word bw = band_word_of_simple(p, n);
      CHECK(static_cast<int>(bw.letters.size()) == bkl_simple_len(p));
      for (const band_letter& a : bw.letters) CHECK(a.sign == 1);
      CHECK(perm_of(band_to_artin(bw)) == p);
    }
  }
}

TEST_CASE("delta and its powers") {
  CHECK(perm_of(band_to_artin(bkl_delta_word(4))) == bkl_delta_perm(4));
  CHECK(bkl_simple_len(bkl_delta_perm(5)) == 4);
  // delta^n = Delta^2 in B_n
  for (int n : {3, 4, 5}) {
    braid_word d;
    d.n = n;
    for (int k = 0; k < n; ++k) d = concat(d, band_to_artin(bkl_delta_word(n)));
    gnf lhs = left_normal_form(d);
    CHECK(lhs.delta == 2);
    CHECK(lhs.factors.empty());
  }
}

TEST_CASE("single letter normal forms") {
  // a positive band is delta^0 with one factor
  bnf x = bkl_normal_form(band_word(4, {{3, 1, 1}}));
  CHECK(x.delta == 0);
  REQUIRE(x.factors.size() == 1);
  CHECK(x.factors[0] == band_perm(4, 3, 1));

  // a negative band is delta^{-1} followed by one factor
  bnf y = bkl_normal_form(band_word(4, {{3, 1, -1}}));
  CHECK(y.delta == -1);
  REQUIRE(y.factors.size() == 1);
  CHECK(y.factors[0] == compose(bkl_delta_perm(4), band_perm(4, 3, 1).inv()));
  CHECK(bkl_is_simple(y.factors[0]));
}

TEST_CASE("band normal form invariants") {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    braid_word w = random_word(5, 16, rng);
    bnf x = bkl_normal_form(artin_to_band(w));
    for (const perm& p : x.factors) {
      CHECK(bkl_is_simple(p));
      CHECK_FALSE(p.is_identity());
      CHECK_FALSE(bkl_is_delta(p));
    }
    for (std::size_t i = 0; i + 1 < x.factors.size(); ++i) {
      // left weighted: nothing of the next factor completes the previous one
      perm c = bkl_right_complement(x.factors[i]);
      CHECK(bkl_meet(c, x.factors[i + 1]).is_identity());
    }
    // round trip through the Artin presentation preserves the braid
    CHECK(left_normal_form(band_to_artin(to_band_word(x))) == left_normal_form(w));
    // and the band normal form itself is a fixed point
    bnf again = bkl_normal_form(to_band_word(x));
    CHECK(again.delta == x.delta);
    CHECK(again.factors == x.factors);
  }
}

TEST_CASE("band normal form is a class invariant") {
  std::mt19937_64 rng(22);
  for (int it = 0; it < 100; ++it) {
    braid_word w = random_word(5, 10, rng);
    // pad with a relator and cancelling pair
    braid_word w2 = concat(braid_word(5, {2, 3, 2, -3, -2, -3}), concat(w, braid_word(5, {4, -4})));
    bnf a = bkl_normal_form(artin_to_band(w));
    bnf b = bkl_normal_form(artin_to_band(w2));
    CHECK(a.delta == b.delta);
    CHECK(a.factors == b.factors);
  }
}

TEST_CASE("band serialization and lengths") {
  bnf e = bkl_normal_form(band_word(4, {}));
  CHECK(bkl_serialize(e) == "B4 band: d^0");
  CHECK(bkl_length(e) == 0);
  bnf d = bkl_normal_form(bkl_delta_word(4));
  CHECK(d.delta == 1);
  CHECK(d.factors.empty());
  CHECK(bkl_length(d) == 3);

  std::mt19937_64 rng(23);
  for (int it = 0; it < 200; ++it) {
    braid_word w = random_word(6, 12, rng);
    bnf x = bkl_normal_form(artin_to_band(w));
    CHECK(reduced_bkl_length(x) <= bkl_length(x));
    CHECK(reduced_bkl_length(x) >= 0);
    std::string s = bkl_serialize(x);
    CHECK(s.find("  ") == std::string::npos);
    CHECK(s.back() != ' ');
  }
}

TEST_CASE("band lengths never exceed Artin-generator counterparts scaled") {
  // sanity: band length of a positive Artin letter is 1
  bnf x = bkl_normal_form(artin_to_band(braid_word(4, {2})));
  CHECK(bkl_length(x) == 1);
  bnf y = bkl_normal_form(artin_to_band(braid_word(4, {-2})));
  CHECK(bkl_length(y) == 3 + 2);  // delta^{-1} plus a length-2 factor
}

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <map>
#include <random>

#include "braidkit/protocols.hpp"
#include "braidkit/rng.hpp"

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

}  // namespace

TEST_CASE("commutator key exchange agrees on both sides") {
  aag_params params;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto rng = make_stream(9001, "keygen", seed);
    aag_instance inst = aag_keygen(params, rng);
    gnf ka = aag_shared(party::alice, inst);
    gnf kb = aag_shared(party::bob, inst);
    CHECK(serialize(ka) == serialize(kb));
    // the key really is the commutator of the secrets
    braid_word direct = concat(concat(inst.alice_secret, inst.bob_secret),
                               concat(inverse(inst.alice_secret), inverse(inst.bob_secret)));
    CHECK(ka == left_normal_form(direct));
  }
}

TEST_CASE("commutator key exchange degenerate cases") {
  std::mt19937_64 rng(61);
  aag_params params;
  aag_instance inst = aag_keygen(params, rng);
  // equal secrets commute: K is trivial
  inst.bob_factors = inst.alice_factors;
  inst.bob_secret = inst.alice_secret;
  inst.bob_transcript = inst.alice_transcript;
  gnf k = aag_shared(party::alice, inst);
  CHECK(k.delta == 0);
  CHECK(k.factors.empty());
  CHECK(aag_shared(party::bob, inst) == k);

  // generators all powers of one letter: everything commutes
  aag_instance ab;
  ab.n = 8;
  ab.generators = {braid_word(8, {1}), braid_word(8, {1, 1}), braid_word(8, {-1}),
                   braid_word(8, {1, 1, 1})};
  std::uniform_int_distribution<int> pick(1, 4), sgn(0, 1);
  for (int i = 0; i < 5; ++i) {
    ab.alice_factors.push_back(sgn(rng) ? pick(rng) : -pick(rng));
    ab.bob_factors.push_back(sgn(rng) ? pick(rng) : -pick(rng));
  }
  ab.alice_secret = detail::product_of_factors(ab.generators, ab.alice_factors, 8);
  ab.bob_secret = detail::product_of_factors(ab.generators, ab.bob_factors, 8);
  ab.alice_transcript = detail::conjugate_transcript(ab.generators, ab.alice_secret);
  ab.bob_transcript = detail::conjugate_transcript(ab.generators, ab.bob_secret);
  gnf kk = aag_shared(party::alice, ab);
  CHECK(kk.factors.empty());
  CHECK(kk.delta == 0);

  // out-of-range factor rejected
  CHECK_THROWS_AS(detail::product_of_factors(ab.generators, {5}, 8), parse_error);
  CHECK_THROWS_AS(detail::product_of_factors(ab.generators, {0}, 8), parse_error);
}

TEST_CASE("commuting-subgroup key exchange agrees on both sides") {
  ko_params params;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto rng = make_stream(9002, "keygen", seed);
    ko_instance inst = ko_keygen(params, rng);
    gnf ka = ko_shared(party::alice, inst);
    gnf kb = ko_shared(party::bob, inst);
    CHECK(serialize(ka) == serialize(kb));
    // the lower and upper secrets commute
    braid_word comm = concat(concat(inst.s, inst.r), concat(inverse(inst.s), inverse(inst.r)));
    gnf c = left_normal_form(comm);
    CHECK(c.delta == 0);
    CHECK(c.factors.empty());
  }
  std::mt19937_64 odd_rng(1);
  CHECK_THROWS_AS(ko_keygen(ko_params{.n = 7}, odd_rng), parse_error);
}

TEST_CASE("commuting-subgroup degenerate cases") {
  std::mt19937_64 rng(62);
  ko_params params;
  ko_instance inst = ko_keygen(params, rng);
  // trivial alice secret: the key is bob's published conjugate
  inst.s = braid_word(8, {});
  inst.p1 = left_normal_form(inst.p);
  CHECK(ko_shared(party::alice, inst) == inst.p2);
  CHECK(ko_shared(party::bob, inst) == inst.p2);

  // central public braid: the key is p itself
  ko_instance c = ko_keygen(params, rng);
  c.p = concat(delta_word(8), delta_word(8));
  c.p1 = left_normal_form(concat(concat(c.s, c.p), inverse(c.s)));
  c.p2 = left_normal_form(concat(concat(c.r, c.p), inverse(c.r)));
  CHECK(ko_shared(party::alice, c) == left_normal_form(c.p));
  CHECK(ko_shared(party::bob, c) == left_normal_form(c.p));

  // range validation
  ko_instance bad = inst;
  bad.s = braid_word(8, {5});
  CHECK_THROWS_AS(ko_check_ranges(bad), parse_error);
  bad = inst;
  bad.r = braid_word(8, {1});
  CHECK_THROWS_AS(ko_check_ranges(bad), parse_error);
}

TEST_CASE("hash-XOR encryption round trips") {
  ko_params params;
  std::uniform_int_distribution<int> byte(0, 255);
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = make_stream(9003, "keygen", seed);
    ko_instance inst = ko_keygen(params, rng);
    std::vector<std::uint8_t> msg(32);
    for (auto& b : msg) b = static_cast<std::uint8_t>(byte(rng));
    ko_ciphertext ct = ko_encrypt(msg, inst.p, inst.p1, params, rng);
    CHECK(ko_decrypt(inst.s, ct) == msg);
    // zero message yields the keystream itself, and flipping one bit of the
    // ciphertext flips exactly that message bit
    std::vector<std::uint8_t> zero(32, 0);
    ko_ciphertext cz = ko_encrypt(zero, inst.p, inst.p1, params, rng);
    CHECK(ko_decrypt(inst.s, cz) == std::vector<std::uint8_t>(32, 0));
    ko_ciphertext tam = ct;
    tam.c[5] ^= 0x10;
    std::vector<std::uint8_t> want = msg;
    want[5] ^= 0x10;
    CHECK(ko_decrypt(inst.s, tam) == want);
  }
}

TEST_CASE("hash is a function of the braid, not the word") {
  std::mt19937_64 rng(63);
  for (int it = 0; it < 100; ++it) {
    braid_word w = random_word(6, 12, rng);
    braid_word w2 = concat(braid_word(6, {2, 3, 2, -3, -2, -3}), concat(w, braid_word(6, {5, -5})));
    CHECK(braid_hash(left_normal_form(w)) == braid_hash(left_normal_form(w2)));
  }
}

TEST_CASE("challenge-response authentication") {
  ko_params params;
  std::uniform_int_distribution<int> byte(0, 255);
  int honest = 0, rejected = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto rng = make_stream(9004, "keygen", seed);
    key_distribution sd;
    sd.length = params.secret_len;
    braid_word b = draw_key(params.n, sd, index_range::all, rng);
    braid_word s = draw_key(params.n, sd, index_range::lower, rng);
    sdg_transcript t = sdg_authenticate(b, s, params, rng);
    if (t.accepted) ++honest;
    std::array<std::uint8_t, 32> junk{};
    for (auto& x : junk) x = static_cast<std::uint8_t>(byte(rng));
    sdg_transcript f = sdg_authenticate(b, s, params, rng, &junk);
    if (!f.accepted) ++rejected;
  }
  CHECK(honest == 200);
  CHECK(rejected == 200);
}

TEST_CASE("trivial challenge still accepts") {
  // r = empty challenge degenerates to comparing hashes of b' computed two ways
  std::mt19937_64 rng(64);
  braid_word b = random_word(8, 10, rng);
  braid_word s = braid_word(8, {1, 2, -3});
  gnf b1 = left_normal_form(concat(concat(s, b), inverse(s)));
  auto lhs = braid_hash(left_normal_form(concat(concat(s, b), inverse(s))));
  CHECK(lhs == braid_hash(b1));
}

TEST_CASE("shifted conjugacy basics") {
  // empty left operand: x * y = d(y) . s1
  braid_word y(4, {1, -3, 2});
  braid_word got = shifted_star(braid_word(4, {}), y);
  braid_word want(5, {2, -4, 3, 1});
  CHECK(words_equal(got, want));
  // shift raises every index by one
  CHECK(shift_up(braid_word(4, {1, -3, 2})) == braid_word(5, {2, -4, 3}));
}

TEST_CASE("left self-distributive law") {
  std::mt19937_64 rng(65);
  for (int it = 0; it < 500; ++it) {
    braid_word r = random_word(6, 6, rng);
    braid_word s = random_word(6, 6, rng);
    braid_word p = random_word(6, 6, rng);
    braid_word lhs = shifted_star(r, shifted_star(s, p));
    braid_word rhs = shifted_star(shifted_star(r, s), shifted_star(r, p));
    CHECK(words_equal(lhs, rhs));
  }
}

TEST_CASE("shifted conjugacy authentication") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto rng = make_stream(9005, "keygen", seed);
    key_distribution kd;
    kd.length = 6;
    braid_word p = draw_key(6, kd, index_range::all, rng);
    braid_word s = draw_key(6, kd, index_range::all, rng);
    for (int c : {0, 1}) {
      dehornoy_round honest = dehornoy_auth(p, s, c, rng);
      CHECK(honest.accepted);
      braid_word junk = draw_key(6, kd, index_range::all, rng);
      dehornoy_round forged = dehornoy_auth(p, s, c, rng, &junk);
      CHECK_FALSE(forged.accepted);
    }
  }
}

TEST_CASE("uniform key distribution frequencies") {
  auto rng = make_stream(9006, "corpus", 0);
  key_distribution kd;
  kd.length = 100000;
  braid_word w = draw_key(8, kd, index_range::all, rng);
  REQUIRE(w.size() == 100000);
  std::map<int, int> freq;
  for (int l : w.letters) ++freq[l];
  // 14 signed letters, each expected at N/14 within 3 sigma
  double expect = 100000.0 / 14.0;
  double sigma = std::sqrt(100000.0 * (1.0 / 14.0) * (13.0 / 14.0));
  CHECK(freq.size() == 14);
  for (auto& [l, c] : freq) CHECK(std::abs(c - expect) < 3 * sigma + 1);
}

TEST_CASE("markov key distribution favors neighbors") {
  auto rng = make_stream(9006, "corpus", 1);
  key_distribution kd;
  kd.mode = key_distribution::kind::markov;
  kd.beta = 4.0;
  kd.length = 200000;
  braid_word w = draw_key(8, kd, index_range::all, rng);
  // per-letter transition ratio: an adjacent index should appear about beta
  // times as often as a specific non-adjacent one after any given index
  std::map<std::pair<int, int>, double> trans;
  std::map<int, double> total;
  for (std::size_t i = 1; i < w.letters.size(); ++i) {
    int a = std::abs(w.letters[i - 1]), b = std::abs(w.letters[i]);
    trans[{a, b}] += 1;
    total[a] += 1;
  }
  for (int i = 2; i <= 6; ++i) {  // interior indices have both neighbors
    double adj = (trans[{i, i - 1}] + trans[{i, i + 1}]) / 2.0;
    double non = 0;
    int cnt = 0;
    for (int j = 1; j <= 7; ++j)
      if (std::abs(j - i) > 1) {
        non += trans[{i, j}];
        ++cnt;
      }
    non /= cnt;
    double ratio = adj / non;
    CHECK(ratio > 3.0);
    CHECK(ratio < 5.0);
  }
  // constraint validation
  auto rng2 = make_stream(9006, "corpus", 2);
  CHECK_THROWS_AS(draw_key(2, kd, index_range::lower, rng2), parse_error);
  key_distribution zero;
  zero.length = 0;
  CHECK(draw_key(8, zero, index_range::all, rng2).letters.empty());
}

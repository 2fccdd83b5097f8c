#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/hash.hpp"
#include "braidkit/keydist.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/word.hpp"

namespace braid {

inline void append_word_letters(braid_word& acc, const braid_word& w) {
  acc.letters.insert(acc.letters.end(), w.letters.begin(), w.letters.end());
}

// view a word on fewer strands inside a larger braid group
inline braid_word embed(const braid_word& w, int n) {
  if (n < w.n) throw parse_error("embed: cannot lower the strand count");
  braid_word r = w;
  r.n = n;
  return r;
}

// ---- commutator key exchange ----

struct aag_params {
  int n = 8;
  int m = 4;           // number of public generators
  int gen_len = 5;     // letters per public generator
  int secret_len = 5;  // factors per secret (over the public generators)
  key_distribution dist;
};

struct aag_instance {
  int n = 0;
  std::vector<braid_word> generators;
  // secrets as signed indices into `generators` (sign = exponent), kept
  // because the shared-key computation needs the factorization
  std::vector<int> alice_factors;
  std::vector<int> bob_factors;
  braid_word alice_secret;
  braid_word bob_secret;
  // conjugates g_i -> own_secret g_i own_secret^{-1}, published in normal form
  std::vector<gnf> alice_transcript;
  std::vector<gnf> bob_transcript;
};

namespace detail {

inline braid_word product_of_factors(const std::vector<braid_word>& gens,
                                     const std::vector<int>& factors, int n) {
  braid_word w;
  w.n = n;
  for (int f : factors) {
    std::size_t i = static_cast<std::size_t>(std::abs(f) - 1);
    if (f == 0 || i >= gens.size()) throw parse_error("secret references an unknown generator");
    append_word_letters(w, f > 0 ? gens[i] : inverse(gens[i]));
  }
  return w;
}

inline std::vector<gnf> conjugate_transcript(const std::vector<braid_word>& gens,
                                             const braid_word& secret) {
  std::vector<gnf> t;
  t.reserve(gens.size());
  for (const braid_word& g : gens)
    t.push_back(left_normal_form(concat(concat(secret, g), inverse(secret))));
  return t;
}

}  // namespace detail

inline aag_instance aag_keygen(const aag_params& p, std::mt19937_64& rng) {
  if (p.m < 1) throw parse_error("aag: need at least one public generator");
  if (p.secret_len < 1) throw parse_error("aag: secrets must be nonempty");
  aag_instance inst;
  inst.n = p.n;
  key_distribution gd = p.dist;
  gd.length = p.gen_len;
  for (int i = 0; i < p.m; ++i) inst.generators.push_back(draw_key(p.n, gd, index_range::all, rng));
  // secret factor walk over alphabet indices 1..m
  std::vector<int> alphabet;
  for (int i = 1; i <= p.m; ++i) alphabet.push_back(i);
  key_distribution sd = p.dist;
  sd.length = p.secret_len;
  inst.alice_factors = draw_letters(sd, alphabet, rng);
  inst.bob_factors = draw_letters(sd, alphabet, rng);
  inst.alice_secret = detail::product_of_factors(inst.generators, inst.alice_factors, p.n);
  inst.bob_secret = detail::product_of_factors(inst.generators, inst.bob_factors, p.n);
  inst.alice_transcript = detail::conjugate_transcript(inst.generators, inst.alice_secret);
  inst.bob_transcript = detail::conjugate_transcript(inst.generators, inst.bob_secret);
  return inst;
}

enum class party { alice, bob };

// shared key K = a b a^{-1} b^{-1}, computed by each side from its own secret
// factorization and the other side's published conjugates only
inline gnf aag_shared(party side, const aag_instance& inst) {
  gnf k = make_gnf(inst.n, 0, {});
  if (side == party::alice) {
    // K = a * (b a^{-1} b^{-1}) = a * prod_{j=k..1} (b g_{i_j} b^{-1})^{-e_j}
    k = nf_mul(k, left_normal_form(inst.alice_secret));
    for (auto it = inst.alice_factors.rbegin(); it != inst.alice_factors.rend(); ++it) {
      const gnf& t = inst.bob_transcript[static_cast<std::size_t>(std::abs(*it) - 1)];
      k = nf_mul(k, *it > 0 ? nf_inv(t) : t);
    }
  } else {
    // K = (a b a^{-1}) * b^{-1} = prod_{j=1..k} (a g_{i_j} a^{-1})^{e_j} * b^{-1}
    for (int f : inst.bob_factors) {
      const gnf& t = inst.alice_transcript[static_cast<std::size_t>(std::abs(f) - 1)];
      k = nf_mul(k, f > 0 ? t : nf_inv(t));
    }
    k = nf_mul(k, nf_inv(left_normal_form(inst.bob_secret)));
  }
  return k;
}

// ---- commuting-subgroup key exchange ----

struct ko_params {
  int n = 8;  // must be even
  int public_len = 20;
  int secret_len = 10;
  key_distribution dist;
};

struct ko_instance {
  int n = 0;
  braid_word p;       // public base braid
  braid_word s;       // Alice: letters with index < n/2
  braid_word r;       // Bob: letters with index > n/2
  gnf p1;             // published NF(s p s^{-1})
  gnf p2;             // published NF(r p r^{-1})
};

inline void ko_check_ranges(const ko_instance& inst) {
  for (int l : inst.s.letters)
    if (std::abs(l) >= inst.n / 2) throw parse_error("ko: alice letter out of the lower range");
  for (int l : inst.r.letters)
    if (std::abs(l) <= inst.n / 2) throw parse_error("ko: bob letter out of the upper range");
}

inline ko_instance ko_keygen(const ko_params& p, std::mt19937_64& rng) {
  if (p.n % 2 != 0) throw parse_error("ko: strand count must be even");
  ko_instance inst;
  inst.n = p.n;
  key_distribution pd = p.dist;
  pd.length = p.public_len;
  inst.p = draw_key(p.n, pd, index_range::all, rng);
  key_distribution sd = p.dist;
  sd.length = p.secret_len;
  inst.s = draw_key(p.n, sd, index_range::lower, rng);
  inst.r = draw_key(p.n, sd, index_range::upper, rng);
  ko_check_ranges(inst);
  inst.p1 = left_normal_form(concat(concat(inst.s, inst.p), inverse(inst.s)));
  inst.p2 = left_normal_form(concat(concat(inst.r, inst.p), inverse(inst.r)));
  return inst;
}

// K = s r p r^{-1} s^{-1}; Alice uses p2, Bob uses p1
inline gnf ko_shared(party side, const ko_instance& inst) {
  if (side == party::alice) return nf_conj(inst.p2, inverse(inst.s));
  return nf_conj(inst.p1, inverse(inst.r));
}

// ---- hash-XOR encryption on top of the key exchange ----

struct ko_ciphertext {
  gnf p2;                         // sender's half of the exchange
  std::vector<std::uint8_t> c;    // message XOR keystream
};

inline ko_ciphertext ko_encrypt(const std::vector<std::uint8_t>& msg, const braid_word& p,
                                const gnf& p1, const ko_params& params, std::mt19937_64& rng) {
  key_distribution rd = params.dist;
  rd.length = params.secret_len;
  braid_word r = draw_key(params.n, rd, index_range::upper, rng);
  ko_ciphertext ct;
  ct.p2 = left_normal_form(concat(concat(r, p), inverse(r)));
  gnf k = nf_conj(p1, inverse(r));
  std::vector<std::uint8_t> ks = braid_keystream(k, msg.size());
  ct.c = msg;
  for (std::size_t i = 0; i < ct.c.size(); ++i) ct.c[i] ^= ks[i];
  return ct;
}

inline std::vector<std::uint8_t> ko_decrypt(const braid_word& s, const ko_ciphertext& ct) {
  gnf k = nf_conj(ct.p2, inverse(s));
  std::vector<std::uint8_t> ks = braid_keystream(k, ct.c.size());
  std::vector<std::uint8_t> m = ct.c;
  for (std::size_t i = 0; i < m.size(); ++i) m[i] ^= ks[i];
  return m;
}

// ---- challenge-response authentication over the commuting subgroups ----

struct sdg_transcript {
  gnf challenge;                     // NF(r b r^{-1})
  std::array<std::uint8_t, 32> response;
  bool accepted = false;
};

// public (b, b') with b' = NF(s b s^{-1}); honest response H(s x s^{-1})
inline sdg_transcript sdg_authenticate(const braid_word& b, const braid_word& s,
                                       const ko_params& params, std::mt19937_64& rng,
                                       const std::array<std::uint8_t, 32>* forged = nullptr) {
  gnf b1 = left_normal_form(concat(concat(s, b), inverse(s)));
  key_distribution rd = params.dist;
  rd.length = params.secret_len;
  braid_word r = draw_key(params.n, rd, index_range::upper, rng);
  sdg_transcript t;
  t.challenge = left_normal_form(concat(concat(r, b), inverse(r)));
  t.response = forged ? *forged : braid_hash(nf_conj(t.challenge, inverse(s)));
  auto expected = braid_hash(nf_conj(b1, inverse(r)));
  t.accepted = (t.response == expected);
  return t;
}

// ---- shifted conjugacy ----

// shift every strand index up by one
inline braid_word shift_up(const braid_word& w) {
  braid_word r;
  r.n = w.n + 1;
  r.letters.reserve(w.letters.size());
  for (int l : w.letters) r.letters.push_back(l > 0 ? l + 1 : l - 1);
  return r;
}

// x * y = x . d(y) . s1 . d(x)^{-1}, living one strand above the inputs
inline braid_word shifted_star(const braid_word& x, const braid_word& y) {
  int n = std::max(x.n, y.n) + 1;
  braid_word r = embed(shift_up(embed(x, n - 1)), n);
  braid_word out = embed(x, n);
  append_word_letters(out, embed(shift_up(embed(y, n - 1)), n));
  out.letters.push_back(1);
  append_word_letters(out, inverse(r));
  return free_reduce(out);
}

inline bool words_equal(const braid_word& a, const braid_word& b) {
  int n = std::max(a.n, b.n);
  return left_normal_form(embed(a, n)) == left_normal_form(embed(b, n));
}

struct dehornoy_round {
  int challenge = 0;
  bool accepted = false;
};

// Fiat-Shamir round: public (p, p1 = s * p); commitment (x = r * p, x1 = r * p1);
// challenge 0 reveals r, challenge 1 reveals y = r * s and the verifier checks
// x1 = y * x (the left self-distributive law makes the honest case pass)
inline dehornoy_round dehornoy_auth(const braid_word& p, const braid_word& s, int challenge,
                                    std::mt19937_64& rng, const braid_word* forged = nullptr) {
  key_distribution rd;
  rd.length = 8;
  braid_word r = draw_key(std::max(p.n, s.n), rd, index_range::all, rng);
  braid_word p1 = shifted_star(s, p);
  braid_word x = shifted_star(r, p);
  braid_word x1 = shifted_star(r, p1);
  dehornoy_round round;
  round.challenge = challenge;
  if (challenge == 0) {
    const braid_word& rr = forged ? *forged : r;
    round.accepted = words_equal(x, shifted_star(rr, p)) && words_equal(x1, shifted_star(rr, p1));
  } else {
    braid_word y = forged ? *forged : shifted_star(r, s);
    round.accepted = words_equal(x1, shifted_star(y, x));
  }
  return round;
}

}  // namespace braid

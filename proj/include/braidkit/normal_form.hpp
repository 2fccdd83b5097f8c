#pragma once

#include <deque>
#include <sstream>
#include <string>
#include <vector>

#include "braidkit/simple.hpp"
#include "braidkit/word.hpp"

namespace braid {

// left-weighted Garside normal form: Delta^delta * P_1 ... P_k
struct gnf {
  int n = 2;
  long long delta = 0;
  std::vector<perm> factors;

  long long inf() const { return delta; }
  long long sup() const { return delta + static_cast<long long>(factors.size()); }
  long long len() const { return static_cast<long long>(factors.size()); }

  bool operator==(const gnf& o) const {
    return n == o.n && delta == o.delta && factors == o.factors;
  }
  bool operator!=(const gnf& o) const { return !(*this == o); }
  bool operator<(const gnf& o) const {
    if (n != o.n) return n < o.n;
    if (delta != o.delta) return delta < o.delta;
    return factors < o.factors;
  }
};

// left-weighted test: the complement of u meets v trivially
inline bool is_left_weighted(const perm& u, const perm& v) {
  return simple_meet(right_complement(u), v).is_identity();
}

// slide the prefix s = D(u) ^ v from the second factor to the first
inline std::pair<perm, perm> local_sliding(const perm& u, const perm& v) {
  perm s = simple_meet(right_complement(u), v);
  return {compose(u, s), compose(s.inv(), v)};
}

// left-weight a factor sequence in place and absorb Delta/unit factors
inline void normalize(gnf& x) {
  auto& f = x.factors;
  if (f.size() > 1) {
    // worklist over junctions: re-examine neighbors of every junction that moved
    std::vector<char> queued(f.size() - 1, 1);
    std::deque<std::size_t> work;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) work.push_back(i);
    while (!work.empty()) {
      std::size_t i = work.front();
      work.pop_front();
      queued[i] = 0;
      perm s = simple_meet(right_complement(f[i]), f[i + 1]);
      if (s.is_identity()) continue;
      f[i] = compose(f[i], s);
      f[i + 1] = compose(s.inv(), f[i + 1]);
      if (i > 0 && !queued[i - 1]) {
        queued[i - 1] = 1;
        work.push_back(i - 1);
      }
      if (!queued[i]) {
        queued[i] = 1;
        work.push_back(i);
      }
      if (i + 2 < f.size() && !queued[i + 1]) {
        queued[i + 1] = 1;
        work.push_back(i + 1);
      }
    }
  }
  // leading Delta factors raise the power; trailing units vanish
  std::size_t lead = 0;
  while (lead < f.size() && is_delta(f[lead])) ++lead;
  x.delta += static_cast<long long>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
  for (const perm& p : f)
    check_invariant(!p.is_identity() && !is_delta(p), "normalize: unit/Delta factor survived");
}

// apply tau (conjugation by Delta^k) to every factor; tau is an involution
inline void tau_factors(std::vector<perm>& fs, long long k) {
  if (((k % 2) + 2) % 2 == 0) return;
  for (perm& p : fs) p = tau_simple(p);
}

inline gnf make_gnf(int n, long long delta, std::vector<perm> factors) {
  gnf x;
  x.n = n;
  x.delta = delta;
  x.factors = std::move(factors);
  normalize(x);
  return x;
}

// the simple B_i with sigma_i^{-1} = Delta^{-1} B_i
inline perm negative_letter_complement(int n, int i) {
  // B_i = Delta sigma_i^{-1}: permutation j -> s_i(w0(j))
  return compose(delta_perm(n), perm::transposition(n, i - 1));
}

inline gnf left_normal_form(const braid_word& w) {
  gnf x;
  x.n = w.n;
  // pack runs of positive letters into maximal simple factors as we go
  perm cur = perm::identity(w.n);
  auto flush = [&] {
    if (!cur.is_identity()) {
      x.factors.push_back(cur);
      cur = perm::identity(w.n);
    }
  };
  for (int k : w.letters) {
    if (k > 0) {
      perm ext = compose(cur, perm::transposition(w.n, k - 1));
      if (ext.inversions() == cur.inversions() + 1) {
        cur = std::move(ext);
      } else {
        flush();
        cur = perm::transposition(w.n, k - 1);
      }
    } else {
      // x * sigma_i^{-1} = Delta^{-1} tau(x) * B_i
      flush();
      x.delta -= 1;
      tau_factors(x.factors, 1);
      x.factors.push_back(negative_letter_complement(w.n, -k));
    }
  }
  flush();
  normalize(x);
  return x;
}

inline braid_word to_word(const gnf& x) {
  braid_word w;
  w.n = x.n;
  const braid_word d = delta_word(x.n);
  if (x.delta >= 0) {
    for (long long r = 0; r < x.delta; ++r)
      w.letters.insert(w.letters.end(), d.letters.begin(), d.letters.end());
  } else {
    const braid_word di = inverse(d);
    for (long long r = 0; r < -x.delta; ++r)
      w.letters.insert(w.letters.end(), di.letters.begin(), di.letters.end());
  }
  for (const perm& p : x.factors) {
    braid_word pw = word_of_simple(p, x.n);
    w.letters.insert(w.letters.end(), pw.letters.begin(), pw.letters.end());
  }
  return w;
}

// canonical serialization, bit-exact (feeds the protocol hash):
// "Bn: D^r | p1 | p2 | ..." with one-line permutations, 1-based images
inline std::string serialize(const gnf& x) {
  std::ostringstream out;
  out << 'B' << x.n << ": D^" << x.delta;
  for (const perm& p : x.factors) {
    out << " |";
    for (int v : p.img) out << ' ' << (v + 1);
  }
  return out.str();
}

inline gnf nf_mul(const gnf& a, const gnf& b) {
  check_invariant(a.n == b.n, "nf_mul: strand counts differ");
  gnf r;
  r.n = a.n;
  r.delta = a.delta + b.delta;
  r.factors = a.factors;
  tau_factors(r.factors, b.delta);
  r.factors.insert(r.factors.end(), b.factors.begin(), b.factors.end());
  normalize(r);
  return r;
}

// (Delta^d P_1 ... P_k)^{-1} = Delta^{-d-k} tau^{d+k}(D(P_k)) tau^{d+k+1}(D(P_{k-1})) ...
// using P^{-1} = D(P) Delta^{-1} and Delta^{-1} A = tau(A) Delta^{-1}
inline gnf nf_inv(const gnf& a) {
  gnf r;
  r.n = a.n;
  long long k = static_cast<long long>(a.factors.size());
  r.delta = -a.delta - k;
  r.factors.reserve(a.factors.size());
  long long twist = a.delta + k;
  for (auto it = a.factors.rbegin(); it != a.factors.rend(); ++it, ++twist) {
    perm q = right_complement(*it);
    if (((twist % 2) + 2) % 2 != 0) q = tau_simple(q);
    r.factors.push_back(std::move(q));
  }
  normalize(r);
  return r;
}

// normal form of v^{-1} x v
inline gnf nf_conj(const gnf& x, const braid_word& v) {
  gnf vn = left_normal_form(v);
  return nf_mul(nf_mul(nf_inv(vn), x), vn);
}

// conjugate an element held in normal form by a single signed letter, cheaply
inline gnf nf_conj_letter(const gnf& x, int letter) {
  gnf g;
  g.n = x.n;
  if (letter > 0) {
    g.factors.push_back(perm::transposition(x.n, letter - 1));
  } else {
    g.delta = -1;
    g.factors.push_back(negative_letter_complement(x.n, -letter));
  }
  gnf gi;
  gi.n = x.n;
  if (letter > 0) {
    gi.delta = -1;
    gi.factors.push_back(negative_letter_complement(x.n, letter));
  } else {
    gi.factors.push_back(perm::transposition(x.n, -letter - 1));
  }
  return nf_mul(nf_mul(gi, x), g);
}

// right-weighted form: P_k ... P_1 Delta^delta, stored in word order
struct rnf {
  int n = 2;
  long long delta = 0;
  std::vector<perm> factors;  // word order, leftmost first
};

// right normal form via the word-reversal anti-automorphism
inline rnf right_normal_form(const braid_word& w) {
  braid_word rev = w;
  std::reverse(rev.letters.begin(), rev.letters.end());
  gnf g = left_normal_form(rev);
  rnf r;
  r.n = w.n;
  r.delta = g.delta;
  for (auto it = g.factors.rbegin(); it != g.factors.rend(); ++it)
    r.factors.push_back(it->inv());
  return r;
}

inline braid_word to_word(const rnf& x) {
  braid_word w;
  w.n = x.n;
  for (const perm& p : x.factors) {
    braid_word pw = word_of_simple(p, x.n);
    w.letters.insert(w.letters.end(), pw.letters.begin(), pw.letters.end());
  }
  const braid_word d = delta_word(x.n);
  const braid_word di = inverse(d);
  const braid_word& block = (x.delta >= 0) ? d : di;
  for (long long r = 0; r < std::llabs(x.delta); ++r)
    w.letters.insert(w.letters.end(), block.letters.begin(), block.letters.end());
  return w;
}

inline long long delta_letter_count(int n) { return 1LL * n * (n - 1) / 2; }

// |r|*|Delta| + sum |P_i|, counted in Artin letters
inline long long garside_length(const gnf& x) {
  long long s = std::llabs(x.delta) * delta_letter_count(x.n);
  for (const perm& p : x.factors) s += p.inversions();
  return s;
}

// subtract twice the first min(r,k) factor lengths when the power is -r < 0
inline long long reduced_garside_length(const gnf& x) {
  long long g = garside_length(x);
  if (x.delta >= 0) return g;
  long long r = -x.delta;
  long long m = std::min<long long>(r, static_cast<long long>(x.factors.size()));
  for (long long i = 0; i < m; ++i) g -= 2LL * x.factors[static_cast<std::size_t>(i)].inversions();
  return g;
}

inline long long garside_length(const braid_word& w) { return garside_length(left_normal_form(w)); }
inline long long reduced_garside_length(const braid_word& w) {
  return reduced_garside_length(left_normal_form(w));
}

// all n! simples; cap guards accidental blowups
inline std::vector<perm> enumerate_simples(int n, int cap = 7) {
  if (n > cap) {
    long long est = 1;
    for (int i = 2; i <= n; ++i) est *= i;
    throw parse_error("enumeration cap " + std::to_string(cap) + " exceeded; n=" +
                      std::to_string(n) + " would enumerate " + std::to_string(est) + " simples");
  }
  return all_perms(n);
}

}  // namespace braid

#pragma once

#include <string>
#include <vector>

#include "braidkit/normal_form.hpp"
#include "braidkit/word.hpp"

namespace braid {

// Band-generator (BKL) Garside structure. Canonical factors are the divisors
// of delta_n = a_{n,n-1}...a_{2,1}; they correspond to permutations whose
// cycles are ascending on non-crossing blocks, Catalan-many in total.

inline perm bkl_delta_perm(int n) {
  perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = (i + 1) % n;
  return p;
}

// permutation of the band generator a_{ts} (1-based t > s)
inline perm band_perm(int n, int t, int s) { return perm::swap_of(n, t - 1, s - 1); }

// each cycle, read from its smallest element, must step upward through the
// sorted block; blocks must be pairwise non-crossing
inline bool bkl_is_simple(const perm& p) {
  const int n = p.size();
  std::vector<int> block(n, -1);
  int nblocks = 0;
  for (int i = 0; i < n; ++i) {
    if (block[i] != -1) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      block[j] = nblocks;
      cyc.push_back(j);
      j = p.img[j];
    } while (j != i);
    ++nblocks;
    std::vector<int> sorted = cyc;
    std::sort(sorted.begin(), sorted.end());
    // ascending cycle: p maps sorted[k] to sorted[k+1], last back to first
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      int expect = sorted[(k + 1) % sorted.size()];
      if (p.img[sorted[k]] != expect) return false;
    }
  }
  // non-crossing scan with a stack of open blocks
  std::vector<int> rem(nblocks, 0);
  for (int i = 0; i < n; ++i) ++rem[block[i]];
  std::vector<bool> open(nblocks, false);
  std::vector<int> stack;
  for (int i = 0; i < n; ++i) {
    int b = block[i];
    if (!open[b]) {
      open[b] = true;
      stack.push_back(b);
    } else {
      while (!stack.empty() && stack.back() != b) {
        if (rem[stack.back()] > 0) return false;  // crossing
        stack.pop_back();
      }
      if (stack.empty()) return false;
    }
    --rem[b];
    while (!stack.empty() && rem[stack.back()] == 0) stack.pop_back();
  }
  return true;
}

// band-letter length of a canonical factor: n minus the number of cycles
inline int bkl_simple_len(const perm& p) {
  const int n = p.size();
  std::vector<bool> seen(n, false);
  int cycles = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p.img[j]) seen[j] = true;
  }
  return n - cycles;
}

inline bool bkl_is_delta(const perm& p) { return p == bkl_delta_perm(p.size()); }

inline perm bkl_quotient(const perm& r, const perm& p) { return compose(r.inv(), p); }

// prefix order on canonical factors
inline bool bkl_le(const perm& r, const perm& p) {
  perm c = bkl_quotient(r, p);
  return bkl_is_simple(c) && bkl_simple_len(r) + bkl_simple_len(c) == bkl_simple_len(p);
}

inline perm bkl_right_complement(const perm& p) {
  return compose(p.inv(), bkl_delta_perm(p.size()));
}

// conjugation by delta^k
inline perm bkl_tau_simple(const perm& p, long long k) {
  const int n = p.size();
  long long r = ((k % n) + n) % n;
  perm d = bkl_delta_perm(n), di = d.inv(), dk = perm::identity(n);
  for (long long i = 0; i < r; ++i) dk = compose(dk, d);
  return compose(dk, compose(p, dk.inv()));
}

inline perm bkl_meet(const perm& p, const perm& q) {
  const int n = p.size();
  perm s = perm::identity(n);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int t = 2; t <= n && !grew; ++t)
      for (int ss = 1; ss < t && !grew; ++ss) {
        perm c = compose(s, band_perm(n, t, ss));
        if (!bkl_is_simple(c) || bkl_simple_len(c) != bkl_simple_len(s) + 1) continue;
        if (bkl_le(c, p) && bkl_le(c, q)) {
          s = std::move(c);
          grew = true;
        }
      }
  }
  return s;
}

// BKL canonical form: delta^delta * A_1 ... A_k
struct bnf {
  int n = 2;
  long long delta = 0;
  std::vector<perm> factors;

  bool operator==(const bnf& o) const {
    return n == o.n && delta == o.delta && factors == o.factors;
  }
  bool operator!=(const bnf& o) const { return !(*this == o); }
};

inline void bkl_normalize(bnf& x) {
  auto& f = x.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      perm s = bkl_meet(bkl_right_complement(f[i]), f[i + 1]);
      if (!s.is_identity()) {
        f[i] = compose(f[i], s);
        f[i + 1] = compose(s.inv(), f[i + 1]);
        changed = true;
      }
    }
  }
  std::size_t lead = 0;
  while (lead < f.size() && bkl_is_delta(f[lead])) ++lead;
  x.delta += static_cast<long long>(lead);
  f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(lead));
  while (!f.empty() && f.back().is_identity()) f.pop_back();
}

inline bnf bkl_normal_form(const band_word& w) {
  bnf x;
  x.n = w.n;
  for (const auto& l : w.letters) {
    perm a = band_perm(w.n, l.t, l.s);
    if (l.sign > 0) {
      x.factors.push_back(a);
    } else {
      // x * a^{-1} = delta^{-1} (delta x delta^{-1}) * (delta a^{-1})
      x.delta -= 1;
      for (perm& p : x.factors) p = bkl_tau_simple(p, 1);
      // B with B*a = delta: B(j) = a^{-1}(delta(j))
      x.factors.push_back(compose(bkl_delta_perm(w.n), a.inv()));
    }
  }
  bkl_normalize(x);
  return x;
}

// decompose a canonical factor into band letters (per ascending cycle)
inline band_word band_word_of_simple(const perm& p, int n) {
  band_word w;
  w.n = n;
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (seen[i] || p.img[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<int> cyc;
    for (int j = i; !seen[j]; j = p.img[j]) {
      seen[j] = true;
      cyc.push_back(j);
    }
    std::sort(cyc.begin(), cyc.end());
    for (std::size_t k = cyc.size() - 1; k >= 1; --k)
      w.letters.push_back({cyc[k] + 1, cyc[k - 1] + 1, 1});
  }
  return w;
}

inline band_word to_band_word(const bnf& x) {
  band_word w;
  w.n = x.n;
  const band_word d = bkl_delta_word(x.n);
  auto push = [&w](const band_word& b, bool invert) {
    if (!invert) {
      w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    } else {
      for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
        w.letters.push_back({it->t, it->s, -it->sign});
    }
  };
  for (long long r = 0; r < std::llabs(x.delta); ++r) push(d, x.delta < 0);
  for (const perm& p : x.factors) push(band_word_of_simple(p, x.n), false);
  return w;
}

inline std::string bkl_serialize(const bnf& x) {
  std::ostringstream out;
  out << 'B' << x.n << " band: d^" << x.delta;
  for (const perm& p : x.factors) {
    out << " |";
    for (int v : p.img) out << ' ' << (v + 1);
  }
  return out.str();
}

// |j|*(n-1) + sum of factor band lengths
inline long long bkl_length(const bnf& x) {
  long long s = std::llabs(x.delta) * (x.n - 1);
  for (const perm& p : x.factors) s += bkl_simple_len(p);
  return s;
}

inline long long reduced_bkl_length(const bnf& x) {
  long long g = bkl_length(x);
  if (x.delta >= 0) return g;
  long long r = -x.delta;
  long long m = std::min<long long>(r, static_cast<long long>(x.factors.size()));
  for (long long i = 0; i < m; ++i) g -= 2LL * bkl_simple_len(x.factors[static_cast<std::size_t>(i)]);
  return g;
}

// an Artin word maps to band letters via sigma_i = a_{i+1,i}
inline band_word artin_to_band(const braid_word& w) {
  band_word b;
  b.n = w.n;
  for (int k : w.letters) b.letters.push_back({std::abs(k) + 1, std::abs(k), k > 0 ? 1 : -1});
  return b;
}

inline long long bkl_length(const braid_word& w) { return bkl_length(bkl_normal_form(artin_to_band(w))); }
inline long long reduced_bkl_length(const braid_word& w) {
  return reduced_bkl_length(bkl_normal_form(artin_to_band(w)));
}

inline std::vector<perm> enumerate_canonical_factors(int n, int cap = 7) {
  std::vector<perm> out;
  for (const perm& p : enumerate_simples(n, cap))
    if (bkl_is_simple(p)) out.push_back(p);
  return out;
}

}  // namespace braid

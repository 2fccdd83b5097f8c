#pragma once

#include <set>
#include <vector>

#include "braidkit/permutation.hpp"
#include "braidkit/word.hpp"

namespace braid {

// Simple elements (permutation braids) are represented by their permutations.
// The identity permutation is the unit braid, the order-reversing one is Delta_n.

inline perm delta_perm(int n) {
  perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = n - 1 - i;
  return p;
}

inline bool is_delta(const perm& p) { return p == delta_perm(p.size()); }

// canonical positive word for a permutation braid: repeatedly emit the
// smallest descent; each inversion is crossed exactly once
inline braid_word word_of_simple(const perm& p, int n) {
  braid_word w;
  w.n = n;
  std::vector<int> a = p.img;
  for (;;) {
    int d = -1;
    for (int i = 0; i + 1 < n; ++i)
      if (a[i] > a[i + 1]) {
        d = i;
        break;
      }
    if (d < 0) break;
    std::swap(a[d], a[d + 1]);
    w.letters.push_back(d + 1);
  }
  return w;
}

// S(P): indices i (1-based) with P = sigma_i * positive
inline std::set<int> starting_set(const perm& p) {
  std::set<int> s;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p.img[i] > p.img[i + 1]) s.insert(i + 1);
  return s;
}

// F(P): indices i with P = positive * sigma_i
inline std::set<int> finishing_set(const perm& p) { return starting_set(p.inv()); }

// tau(P) = Delta^{-1} P Delta
inline perm tau_simple(const perm& p) {
  const perm w0 = delta_perm(p.size());
  return compose(w0, compose(p, w0));
}

// right complement: the simple D(P) with P * D(P) = Delta
inline perm right_complement(const perm& p) {
  return compose(p.inv(), delta_perm(p.size()));
}

// left complement: the simple L(P) with L(P) * P = Delta
inline perm left_complement(const perm& p) {
  return compose(delta_perm(p.size()), p.inv());
}

// the permutation C with braid(R) * braid(C) = braid(P) on the permutation level
inline perm simple_quotient(const perm& r, const perm& p) { return compose(r.inv(), p); }

// prefix order on simples: R <= P iff the complement word lengths add up
inline bool simple_le(const perm& r, const perm& p) {
  return r.inversions() + simple_quotient(r, p).inversions() == p.inversions();
}

// largest common prefix of two simples: greedily peel atoms that start both
// quotients (an atom starts a simple exactly at a descent of its image row,
// and length additivity is then automatic)
inline perm simple_meet(const perm& p, const perm& q) {
  const int n = p.size();
  std::vector<int> u = p.img, w = q.img;  // the quotients s^{-1}p and s^{-1}q
  bool grew = true;
  while (grew) {
    grew = false;
    for (int a = 0; a + 1 < n; ++a) {
      if (u[a] > u[a + 1] && w[a] > w[a + 1]) {
        std::swap(u[a], u[a + 1]);
        std::swap(w[a], w[a + 1]);
        grew = true;
      }
    }
  }
  // s = p * u^{-1} (the peeled prefix)
  perm uq;
  uq.img = std::move(u);
  perm s = compose(p, uq.inv());
  return s;
}

}  // namespace braid

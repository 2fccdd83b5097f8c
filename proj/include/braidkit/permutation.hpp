#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "braidkit/errors.hpp"

namespace braid {

// permutation of {0,...,n-1}; img[i] is the image of i
struct perm {
  std::vector<int> img;

  perm() = default;
  explicit perm(std::vector<int> im) : img(std::move(im)) {}

  static perm identity(int n) {
    perm p;
    p.img.resize(n);
    std::iota(p.img.begin(), p.img.end(), 0);
    return p;
  }

  // adjacent transposition swapping i and i+1 (0-based)
  static perm transposition(int n, int i) {
    perm p = identity(n);
    std::swap(p.img[i], p.img[i + 1]);
    return p;
  }

  // arbitrary transposition swapping a and b (0-based)
  static perm swap_of(int n, int a, int b) {
    perm p = identity(n);
    std::swap(p.img[a], p.img[b]);
    return p;
  }

  int size() const { return static_cast<int>(img.size()); }
  int operator()(int i) const { return img[i]; }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (img[i] != i) return false;
    return true;
  }

  perm inv() const {
    perm q;
    q.img.resize(img.size());
    for (int i = 0; i < size(); ++i) q.img[img[i]] = i;
    return q;
  }

  int inversions() const {
    int n = size(), c = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (img[i] > img[j]) ++c;
    return c;
  }

  bool operator==(const perm& o) const { return img == o.img; }
  bool operator!=(const perm& o) const { return !(*this == o); }
  bool operator<(const perm& o) const { return img < o.img; }

  // dense packing usable as a hash/set key for n <= 16
  std::uint64_t key() const {
    std::uint64_t k = 0;
    for (int v : img) k = (k << 4) | static_cast<std::uint64_t>(v);
    return k;
  }
};

// apply a, then b: compose(a,b)(i) = b(a(i))
inline perm compose(const perm& a, const perm& b) {
  perm r;
  r.img.resize(a.img.size());
  for (int i = 0; i < a.size(); ++i) r.img[i] = b.img[a.img[i]];
  return r;
}

// enumerate all n! permutations in lexicographic order
inline std::vector<perm> all_perms(int n) {
  std::vector<perm> out;
  perm p = perm::identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.img.begin(), p.img.end()));
  return out;
}

}  // namespace braid

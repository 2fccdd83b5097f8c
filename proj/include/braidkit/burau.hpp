#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include "braidkit/word.hpp"

namespace braid {

// single-variable integer Laurent polynomial, finitely supported, exact
struct laurent {
  std::map<int, long long> c;  // exponent -> coefficient, no zeros stored

  laurent() = default;
  static laurent mono(long long coeff, int exp) {
    laurent p;
    if (coeff != 0) p.c[exp] = coeff;
    return p;
  }
  static laurent one() { return mono(1, 0); }

  bool is_zero() const { return c.empty(); }
  bool operator==(const laurent& o) const { return c == o.c; }

  laurent& operator+=(const laurent& o) {
    for (auto& [e, v] : o.c) {
      long long s = (c[e] += v);
      if (s == 0) c.erase(e);
    }
    return *this;
  }
  friend laurent operator+(laurent a, const laurent& b) { return a += b; }
  friend laurent operator*(const laurent& a, const laurent& b) {
    laurent r;
    for (auto& [e1, v1] : a.c)
      for (auto& [e2, v2] : b.c) {
        long long s = (r.c[e1 + e2] += v1 * v2);
        if (s == 0) r.c.erase(e1 + e2);
      }
    return r;
  }

  std::string str() const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [e, v] : c) {
      if (!first) out << (v >= 0 ? "+" : "");
      out << v << "t^" << e;
      first = false;
    }
    return out.str();
  }
};

// square matrix over Laurent polynomials
struct laurent_matrix {
  int size = 0;
  std::vector<laurent> a;  // row-major

  explicit laurent_matrix(int s = 0) : size(s), a(static_cast<std::size_t>(s) * s) {}
  laurent& at(int i, int j) { return a[static_cast<std::size_t>(i) * size + j]; }
  const laurent& at(int i, int j) const { return a[static_cast<std::size_t>(i) * size + j]; }

  static laurent_matrix identity(int s) {
    laurent_matrix m(s);
    for (int i = 0; i < s; ++i) m.at(i, i) = laurent::one();
    return m;
  }
  bool operator==(const laurent_matrix& o) const { return size == o.size && a == o.a; }

  friend laurent_matrix operator*(const laurent_matrix& x, const laurent_matrix& y) {
    laurent_matrix r(x.size);
    for (int i = 0; i < x.size; ++i)
      for (int k = 0; k < x.size; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < x.size; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return r;
  }
};

// generator image C_i(t): identity except row i with entries t, -t, 1
// at columns i-1, i, i+1 (1-based; truncated at the edges)
inline laurent_matrix burau_gen(int n, int i, int sign) {
  laurent_matrix m = laurent_matrix::identity(n - 1);
  int r = i - 1;  // 0-based row
  if (sign > 0) {
    if (r - 1 >= 0) m.at(r, r - 1) = laurent::mono(1, 1);
    m.at(r, r) = laurent::mono(-1, 1);
    if (r + 1 < n - 1) m.at(r, r + 1) = laurent::one();
  } else {
    // closed-form inverse: row i holds 1, -t^{-1}, t^{-1}
    if (r - 1 >= 0) m.at(r, r - 1) = laurent::one();
    m.at(r, r) = laurent::mono(-1, -1);
    if (r + 1 < n - 1) m.at(r, r + 1) = laurent::mono(1, -1);
  }
  return m;
}

inline laurent_matrix reduced_burau(const braid_word& w) {
  laurent_matrix m = laurent_matrix::identity(w.n - 1);
  for (int k : w.letters) m = m * burau_gen(w.n, std::abs(k), k > 0 ? 1 : -1);
  return m;
}

// ---- modular evaluation ----

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a % p, p - 2, p); }

struct mod_matrix {
  int size = 0;
  std::uint64_t p = 0;
  std::vector<std::uint64_t> a;

  mod_matrix(int s, std::uint64_t mod) : size(s), p(mod), a(static_cast<std::size_t>(s) * s, 0) {}
  std::uint64_t& at(int i, int j) { return a[static_cast<std::size_t>(i) * size + j]; }
  std::uint64_t at(int i, int j) const { return a[static_cast<std::size_t>(i) * size + j]; }

  static mod_matrix identity(int s, std::uint64_t mod) {
    mod_matrix m(s, mod);
    for (int i = 0; i < s; ++i) m.at(i, i) = 1;
    return m;
  }
  bool operator==(const mod_matrix& o) const {
    return size == o.size && p == o.p && a == o.a;
  }
  friend mod_matrix operator*(const mod_matrix& x, const mod_matrix& y) {
    mod_matrix r(x.size, x.p);
    for (int i = 0; i < x.size; ++i)
      for (int k = 0; k < x.size; ++k) {
        if (!x.at(i, k)) continue;
        for (int j = 0; j < x.size; ++j)
          r.at(i, j) = (r.at(i, j) + mulmod(x.at(i, k), y.at(k, j), x.p)) % x.p;
      }
    return r;
  }
};

// C_i(t) evaluated at a residue
inline mod_matrix burau_gen_mod(int n, int i, int sign, std::uint64_t t, std::uint64_t p) {
  mod_matrix m = mod_matrix::identity(n - 1, p);
  int r = i - 1;
  if (sign > 0) {
    if (r - 1 >= 0) m.at(r, r - 1) = t % p;
    m.at(r, r) = (p - t % p) % p;
    if (r + 1 < n - 1) m.at(r, r + 1) = 1;
  } else {
    std::uint64_t ti = invmod(t, p);
    if (r - 1 >= 0) m.at(r, r - 1) = 1;
    m.at(r, r) = (p - ti) % p;
    if (r + 1 < n - 1) m.at(r, r + 1) = ti;
  }
  return m;
}

inline mod_matrix reduced_burau_mod(const braid_word& w, std::uint64_t t, std::uint64_t p) {
  mod_matrix m = mod_matrix::identity(w.n - 1, p);
  for (int k : w.letters) m = m * burau_gen_mod(w.n, std::abs(k), k > 0 ? 1 : -1, t, p);
  return m;
}

// colored Burau image, held in evaluated form only: labels t_j ride the
// strands; the under-crossing strand's label feeds C_{i}(t_{j_r})
inline std::pair<perm, mod_matrix> colored_burau_eval(const braid_word& w,
                                                     const std::vector<std::uint64_t>& taus,
                                                     std::uint64_t p) {
  if (static_cast<int>(taus.size()) != w.n) throw parse_error("colored Burau: need n labels");
  for (std::uint64_t t : taus)
    if (t % p == 0) throw parse_error("colored Burau: labels must be invertible mod p");
  std::vector<int> label(static_cast<std::size_t>(w.n));  // label index at each position
  for (int i = 0; i < w.n; ++i) label[static_cast<std::size_t>(i)] = i;
  mod_matrix m = mod_matrix::identity(w.n - 1, p);
  for (int k : w.letters) {
    int i = std::abs(k);
    int under = (k > 0) ? i - 1 : i;  // 0-based position of the under-crossing strand
    std::uint64_t t = taus[static_cast<std::size_t>(label[static_cast<std::size_t>(under)])];
    m = m * burau_gen_mod(w.n, i, k > 0 ? 1 : -1, t, p);
    std::swap(label[static_cast<std::size_t>(i - 1)], label[static_cast<std::size_t>(i)]);
  }
  return {perm_of(w), m};
}

}  // namespace braid

#pragma once

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/permutation.hpp"

namespace braid {

// word in the signed Artin generators of B_n: letter k means sigma_|k|^(sign k)
struct braid_word {
  int n = 2;
  std::vector<int> letters;

  braid_word() = default;
  braid_word(int n_, std::vector<int> ls) : n(n_), letters(std::move(ls)) { validate(); }

  void validate() const {
    if (n < 2) throw parse_error("braid word needs n >= 2");
    for (int k : letters)
      if (k == 0 || std::abs(k) >= n)
        throw parse_error("letter index out of range for B_" + std::to_string(n));
  }

  std::size_t size() const { return letters.size(); }
  bool operator==(const braid_word& o) const { return n == o.n && letters == o.letters; }
};

inline braid_word concat(const braid_word& a, const braid_word& b) {
  if (a.n != b.n) throw parse_error("concat: strand counts differ");
  braid_word r = a;
  r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
  return r;
}

// delete all xx^{-1} patterns, cascading
inline braid_word free_reduce(const braid_word& w) {
  braid_word r;
  r.n = w.n;
  for (int k : w.letters) {
    if (!r.letters.empty() && r.letters.back() == -k)
      r.letters.pop_back();
    else
      r.letters.push_back(k);
  }
  return r;
}

// reverse the order of the letters and flip every sign
inline braid_word inverse(const braid_word& w) {
  braid_word r;
  r.n = w.n;
  r.letters.assign(w.letters.rbegin(), w.letters.rend());
  for (int& k : r.letters) k = -k;
  return r;
}

// the automorphism tau: sigma_i -> sigma_{n-i}; equals conjugation by Delta
inline braid_word shift_tau(const braid_word& w) {
  braid_word r = w;
  for (int& k : r.letters) k = (k > 0) ? (w.n - k) : -(w.n + k);
  return r;
}

// induced permutation (sign-blind homomorphism onto S_n);
// perm_of(uv) = compose(perm_of(u), perm_of(v))
inline perm perm_of(const braid_word& w) {
  perm p = perm::identity(w.n);
  for (int k : w.letters) {
    int i = std::abs(k) - 1;
    for (int& v : p.img) {
      if (v == i)
        v = i + 1;
      else if (v == i + 1)
        v = i;
    }
  }
  return p;
}

// sum of letter signs; a conjugacy invariant
inline long long exponent_sum(const braid_word& w) {
  long long s = 0;
  for (int k : w.letters) s += (k > 0) ? 1 : -1;
  return s;
}

// band generator a_{ts}^{sign} with 1 <= s < t <= n
struct band_letter {
  int t = 2, s = 1, sign = 1;
};

struct band_word {
  int n = 2;
  std::vector<band_letter> letters;

  band_word() = default;
  band_word(int n_, std::vector<band_letter> ls) : n(n_), letters(std::move(ls)) { validate(); }

  void validate() const {
    if (n < 2) throw parse_error("band word needs n >= 2");
    for (const auto& l : letters)
      if (!(1 <= l.s && l.s < l.t && l.t <= n) || (l.sign != 1 && l.sign != -1))
        throw parse_error("band letter out of range for B_" + std::to_string(n));
  }
};

// a_{ts} = (sigma_{t-1} ... sigma_{s+1}) sigma_s (sigma_{s+1}^{-1} ... sigma_{t-1}^{-1})
inline braid_word band_to_artin(const band_word& b) {
  braid_word r;
  r.n = b.n;
  for (const auto& l : b.letters) {
    std::vector<int> expand;
    for (int j = l.t - 1; j >= l.s + 1; --j) expand.push_back(j);
    expand.push_back(l.s);
    for (int j = l.s + 1; j <= l.t - 1; ++j) expand.push_back(-j);
    if (l.sign < 0) {
      std::reverse(expand.begin(), expand.end());
      for (int& k : expand) k = -k;
    }
    r.letters.insert(r.letters.end(), expand.begin(), expand.end());
  }
  return r;
}

// delta_n = a_{n,n-1} a_{n-1,n-2} ... a_{2,1} = sigma_{n-1} ... sigma_1
inline band_word bkl_delta_word(int n) {
  band_word d;
  d.n = n;
  for (int t = n; t >= 2; --t) d.letters.push_back({t, t - 1, 1});
  return d;
}

inline braid_word delta_word(int n) {
  braid_word r;
  r.n = n;
  for (int k = n - 1; k >= 1; --k)
    for (int i = 1; i <= k; ++i) r.letters.push_back(i);
  return r;
}

// text format: "Bn: 1 -3 2"
inline braid_word parse_word(const std::string& text) {
  std::istringstream in(text);
  std::string head;
  if (!(in >> head) || head.size() < 3 || head[0] != 'B' || head.back() != ':')
    throw parse_error("expected header like \"B4:\"");
  int n = 0;
  try {
    n = std::stoi(head.substr(1, head.size() - 2));
  } catch (...) {
    throw parse_error("bad strand count in header");
  }
  std::vector<int> letters;
  std::string tok;
  while (in >> tok) {
    try {
      letters.push_back(std::stoi(tok));
    } catch (...) {
      throw parse_error("bad letter: " + tok);
    }
  }
  return braid_word(n, std::move(letters));
}

inline std::string format_word(const braid_word& w) {
  std::ostringstream out;
  out << 'B' << w.n << ':';
  for (int k : w.letters) out << ' ' << k;
  return out.str();
}

// text format: "Bn band: +(t,s) -(t,s)"
inline band_word parse_band_word(const std::string& text) {
  std::istringstream in(text);
  std::string head, kw;
  if (!(in >> head >> kw) || head.size() < 2 || head[0] != 'B' || kw != "band:")
    throw parse_error("expected header like \"B4 band:\"");
  int n = 0;
  try {
    n = std::stoi(head.substr(1));
  } catch (...) {
    throw parse_error("bad strand count in header");
  }
  std::vector<band_letter> letters;
  std::string tok;
  while (in >> tok) {
    int sign = 1;
    std::size_t i = 0;
    if (tok[i] == '+' || tok[i] == '-') sign = (tok[i++] == '+') ? 1 : -1;
    int t = 0, s = 0;
    if (i >= tok.size() || tok[i] != '(' || tok.back() != ')' ||
        std::sscanf(tok.c_str() + i, "(%d,%d)", &t, &s) != 2)
      throw parse_error("bad band token: " + tok);
    letters.push_back({t, s, sign});
  }
  return band_word(n, std::move(letters));
}

inline std::string format_band_word(const band_word& b) {
  std::ostringstream out;
  out << 'B' << b.n << " band:";
  for (const auto& l : b.letters)
    out << ' ' << (l.sign > 0 ? '+' : '-') << '(' << l.t << ',' << l.s << ')';
  return out.str();
}

}  // namespace braid

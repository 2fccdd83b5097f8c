#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "braidkit/burau.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/word.hpp"

namespace braid {

constexpr long long kDefaultHandleBudget = 10'000'000;

// A sigma_i-handle is sigma_i^e w_0 sigma_{i+1}^d w_1 ... sigma_{i+1}^d w_m sigma_i^{-e}
// where the w_r contain no sigma_j^{+-1} with j <= i+1 and all interior
// sigma_{i+1} letters share one sign d. Reduction deletes the outer pair and
// replaces each sigma_{i+1}^{+-1} with sigma_{i+1}^{-e} sigma_i^{+-1} sigma_{i+1}^{e}.
//
// Strategy (fixed for reproducibility): the handle with the leftmost closing
// letter is reduced first; this is the leftmost innermost handle.
struct handle_stats {
  long long steps = 0;
};

inline braid_word handle_reduce(const braid_word& w, long long budget = kDefaultHandleBudget,
                                handle_stats* stats = nullptr) {
  std::vector<int> ls = free_reduce(w).letters;
  long long steps = 0;
  for (;;) {
    // find the handle whose closing position is smallest
    int open = -1, close = -1;
    std::vector<int> last_pos(static_cast<std::size_t>(w.n), -1);  // last occurrence per index
    for (int k = 0; k < static_cast<int>(ls.size()) && close < 0; ++k) {
      int idx = std::abs(ls[static_cast<std::size_t>(k)]);
      int j = last_pos[static_cast<std::size_t>(idx)];
      if (j >= 0 && ls[static_cast<std::size_t>(j)] == -ls[static_cast<std::size_t>(k)]) {
        // candidate pair; check the interior condition
        bool ok = true;
        int dsign = 0;
        for (int q = j + 1; q < k && ok; ++q) {
          int a = std::abs(ls[static_cast<std::size_t>(q)]);
          if (a == idx + 1) {
            int sg = ls[static_cast<std::size_t>(q)] > 0 ? 1 : -1;
            if (dsign == 0)
              dsign = sg;
            else if (dsign != sg)
              ok = false;
          } else if (a <= idx + 1) {
            ok = false;
          }
        }
        if (ok) {
          open = j;
          close = k;
        }
      }
      last_pos[static_cast<std::size_t>(idx)] = k;
    }
    if (close < 0) break;
    if (++steps > budget) throw budget_error("handle reduction budget exhausted");
    int e = ls[static_cast<std::size_t>(open)] > 0 ? 1 : -1;
    int i = std::abs(ls[static_cast<std::size_t>(open)]);
    std::vector<int> next(ls.begin(), ls.begin() + open);
    for (int q = open + 1; q < close; ++q) {
      int l = ls[static_cast<std::size_t>(q)];
      if (std::abs(l) == i + 1) {
        next.push_back(-e * (i + 1));
        next.push_back(l > 0 ? i : -i);
        next.push_back(e * (i + 1));
      } else {
        next.push_back(l);
      }
    }
    next.insert(next.end(), ls.begin() + close + 1, ls.end());
    braid_word tmp;
    tmp.n = w.n;
    tmp.letters = std::move(next);
    ls = free_reduce(tmp).letters;
  }
  if (stats) stats->steps = steps;
  braid_word out;
  out.n = w.n;
  out.letters = std::move(ls);
  return out;
}

enum class eq_method { normal_form, handle, fingerprint };

// one fingerprint run: reduced Burau at fixed random points mod a 62-bit prime
constexpr std::uint64_t kFingerprintPrime = 4611686018427387847ULL;  // 2^62 - 57

struct eq_options {
  long long handle_budget = kDefaultHandleBudget;
  int fingerprint_points = 2;
  std::uint64_t fingerprint_seed = 0x9e3779b97f4a7c15ULL;
};

inline bool equal(const braid_word& a, const braid_word& b, eq_method method,
                  const eq_options& opt = {}) {
  if (a.n != b.n) throw parse_error("equal: strand counts differ");
  switch (method) {
    case eq_method::normal_form:
      return left_normal_form(a) == left_normal_form(b);
    case eq_method::handle:
      return handle_reduce(concat(a, inverse(b)), opt.handle_budget).letters.empty();
    case eq_method::fingerprint: {
      // one-sided: unequal fingerprints prove inequality; equality is "probably"
      std::uint64_t state = opt.fingerprint_seed;
      for (int k = 0; k < opt.fingerprint_points; ++k) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        std::uint64_t t = 2 + state % (kFingerprintPrime - 3);
        if (!(reduced_burau_mod(a, t, kFingerprintPrime) ==
              reduced_burau_mod(b, t, kFingerprintPrime)))
          return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace braid

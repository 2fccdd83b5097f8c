#pragma once

#include <random>
#include <vector>

#include "braidkit/errors.hpp"
#include "braidkit/word.hpp"

namespace braid {

// how random key words are drawn: independent letters, or a walk that favors
// neighbors of the previous index by a multiplicative weight
struct key_distribution {
  enum class kind { uniform, markov };
  kind mode = kind::uniform;
  int length = 10;
  double beta = 4.0;  // per-letter weight multiplier for adjacent indices
};

// which generator indices a key may use
enum class index_range { all, lower, upper };

inline std::vector<int> allowed_indices(int n, index_range r) {
  std::vector<int> idx;
  switch (r) {
    case index_range::all:
      for (int i = 1; i < n; ++i) idx.push_back(i);
      break;
    case index_range::lower:
      for (int i = 1; i < n / 2; ++i) idx.push_back(i);
      break;
    case index_range::upper:
      for (int i = n / 2 + 1; i < n; ++i) idx.push_back(i);
      break;
  }
  if (idx.empty()) throw parse_error("key distribution: empty index range");
  return idx;
}

// draw signed letters over the given index list; in markov mode the weight of
// index j after index i is beta when |i - j| = 1, otherwise 1; signs uniform
inline std::vector<int> draw_letters(const key_distribution& dist, const std::vector<int>& indices,
                                     std::mt19937_64& rng) {
  if (indices.empty()) throw parse_error("key distribution: empty index list");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(dist.length));
  std::uniform_int_distribution<int> sgn(0, 1);
  std::uniform_int_distribution<std::size_t> pick(0, indices.size() - 1);
  int prev = 0;
  for (int k = 0; k < dist.length; ++k) {
    int idx;
    if (dist.mode == key_distribution::kind::uniform || prev == 0) {
      idx = indices[pick(rng)];
    } else {
      std::vector<double> w(indices.size());
      for (std::size_t j = 0; j < indices.size(); ++j)
        w[j] = (std::abs(indices[j] - prev) == 1) ? dist.beta : 1.0;
      std::discrete_distribution<std::size_t> d(w.begin(), w.end());
      idx = indices[d(rng)];
    }
    letters.push_back(sgn(rng) ? idx : -idx);
    prev = idx;
  }
  return letters;
}

inline braid_word draw_key(int n, const key_distribution& dist, index_range range,
                           std::mt19937_64& rng) {
  braid_word w;
  w.n = n;
  w.letters = draw_letters(dist, allowed_indices(n, range), rng);
  return w;
}

}  // namespace braid

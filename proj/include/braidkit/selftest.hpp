#pragma once

// Self-contained acceptance suite: twelve checks covering normal forms, summit
// sets, the word problem, representations, protocols, and attacks. Each check
// carries a wall-clock budget; a check passes only if its condition holds AND
// it finishes inside the budget. One line of output per check.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "braidkit/attacks.hpp"
#include "braidkit/bkl.hpp"
#include "braidkit/burau.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/protocols.hpp"
#include "braidkit/rng.hpp"
#include "braidkit/word.hpp"
#include "braidkit/word_problem.hpp"

namespace braid::selftest {

struct check_result {
  std::string name;
  bool ok = false;
  double ms = 0;
  double budget_ms = 0;
  std::string note;
};

namespace detail {

inline braid_word random_word(int n, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  braid_word w;
  w.n = n;
  for (int i = 0; i < len; ++i) w.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
  return w;
}

inline braid_word wconj(const braid_word& x, const braid_word& v) {
  return free_reduce(concat(concat(inverse(v), x), v));
}

// the published two-generator pair whose commutator collapses to two letters
inline std::pair<braid_word, braid_word> two_letter_commutator_pair() {
  return {braid_word(75, {-39, 12, 7, -3, -1, 70, 25, -24}),
          braid_word(75, {42, -56, 8, -18, 19, 73, -33, -22})};
}

template <class F>
check_result timed(const std::string& name, double budget_ms, F&& body) {
  check_result r;
  r.name = name;
  r.budget_ms = budget_ms;
  auto t0 = std::chrono::steady_clock::now();
  try {
    r.ok = body(r.note);
  } catch (const std::exception& e) {
    r.ok = false;
    r.note = std::string("exception: ") + e.what();
  }
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (r.ok && r.ms > budget_ms) {
    r.ok = false;
    r.note = "over time budget";
  }
  return r;
}

}  // namespace detail

// 1. the three-letter worked example normalizes to the exact published string
inline check_result check_worked_example() {
  // warm-up outside the timed body so the 1 ms budget measures the algorithm
  (void)left_normal_form(braid_word(4, {1, -3, 2}));
  return detail::timed("worked example normal form", 1.0, [](std::string& note) {
    gnf x = left_normal_form(braid_word(4, {1, -3, 2}));
    note = serialize(x);
    return serialize(x) == "B4: D^-1 | 3 4 2 1 | 3 1 2 4";
  });
}

// 2. showcase element: 6 ultra summit elements in two cycling orbits of 3
//    (second orbit = tau of the first), and 22 super summit elements
inline check_result check_showcase_summit_sets() {
  return detail::timed("showcase ultra/super summit sets", 10000.0, [](std::string& note) {
    braid_word x(4, {1, 3, 2, 1, 1, 2, 2, 1, 3});
    std::vector<braid_word> orbit1 = {
        braid_word(4, {1, 3, 2, 1, 1, 2, 2, 1, 3}),
        braid_word(4, {1, 2, 2, 1, 3, 1, 3, 2, 1}),
        braid_word(4, {2, 1, 3, 1, 3, 2, 1, 1, 2}),
    };
    std::vector<braid_word> orbit2 = {
        braid_word(4, {3, 1, 2, 3, 3, 2, 2, 3, 1}),
        braid_word(4, {3, 2, 2, 3, 1, 3, 1, 2, 3}),
        braid_word(4, {2, 3, 1, 3, 1, 2, 3, 3, 2}),
    };
    std::set<std::string> o1, o2, all;
    for (const braid_word& w : orbit1) o1.insert(serialize(left_normal_form(w)));
    for (const braid_word& w : orbit2) o2.insert(serialize(left_normal_form(w)));
    all.insert(o1.begin(), o1.end());
    all.insert(o2.begin(), o2.end());
    if (all.size() != 6) return false;

    summit_graph gu = compute_summit_graph(x, summit_kind::uss);
    if (gu.vertices.size() != 6) {
      note = "uss size " + std::to_string(gu.vertices.size());
      return false;
    }
    std::set<std::string> got;
    for (const auto& v : gu.vertices) got.insert(serialize(v.element));
    if (got != all) {
      note = "uss vertex set differs from the published lists";
      return false;
    }
    // each listed orbit is closed under cycling and has period three
    for (const auto& [orb, set] : {std::pair{orbit1, &o1}, std::pair{orbit2, &o2}}) {
      for (const braid_word& w : orb) {
        gnf y = left_normal_form(w);
        gnf c1 = cycle(y), c2 = cycle(c1), c3 = cycle(c2);
        if (c3 != y) {
          note = "cycling period is not three";
          return false;
        }
        std::set<std::string> seen{serialize(y), serialize(c1), serialize(c2)};
        if (seen != *set) {
          note = "cycling orbit differs from the listed orbit";
          return false;
        }
      }
    }
    // the two orbits are exchanged by tau
    std::set<std::string> tau1;
    for (const braid_word& w : orbit1) tau1.insert(serialize(left_normal_form(shift_tau(w))));
    if (tau1 != o2) {
      note = "tau does not exchange the orbits";
      return false;
    }
    summit_graph gs = compute_summit_graph(x, summit_kind::sss);
    note = "uss 6, sss " + std::to_string(gs.vertices.size());
    return gs.vertices.size() == 22;
  });
}

// 3. sliding-circuit count of the dual fundamental element: 2^{n-2} - 2
inline check_result check_sliding_circuits_of_delta() {
  return detail::timed("sliding circuits of the dual twist", 60000.0, [](std::string& note) {
    conj_options opt;
    opt.bruteforce_cap = 10;
    for (int n = 4; n <= 10; ++n) {
      braid_word d;
      d.n = n;
      for (int i = n - 1; i >= 1; --i) d.letters.push_back(i);
      summit_graph g = compute_summit_graph(d, summit_kind::sc, opt);
      long long want = (1LL << (n - 2)) - 2;
      if (static_cast<long long>(g.vertices.size()) != want) {
        note = "n=" + std::to_string(n) + ": got " + std::to_string(g.vertices.size()) +
               ", want " + std::to_string(want);
        return false;
      }
    }
    return true;
  });
}

// 4. the super summit set of Delta_4 sigma_1^2 is the single element Delta_4 sigma_1 sigma_3
inline check_result check_delta_sigma_squared() {
  return detail::timed("super summit set of twist times sigma_1^2", 1000.0,
                       [](std::string& note) {
    braid_word x = concat(delta_word(4), braid_word(4, {1, 1}));
    summit_graph g = compute_summit_graph(x, summit_kind::sss);
    if (g.vertices.size() != 1) {
      note = "size " + std::to_string(g.vertices.size());
      return false;
    }
    gnf want = left_normal_form(concat(delta_word(4), braid_word(4, {1, 3})));
    note = serialize(g.vertices[0].element);
    return g.vertices[0].element == want;
  });
}

// 5. the ultra summit set of a single generator is all the generators
inline check_result check_uss_of_generator() {
  return detail::timed("ultra summit set of one generator", 10000.0, [](std::string& note) {
    for (int n = 3; n <= 8; ++n) {
      summit_graph g = compute_summit_graph(braid_word(n, {1}), summit_kind::uss);
      std::set<std::string> want;
      for (int i = 1; i < n; ++i) want.insert(serialize(left_normal_form(braid_word(n, {i}))));
      std::set<std::string> got;
      for (const auto& v : g.vertices) got.insert(serialize(v.element));
      if (got != want) {
        note = "n=" + std::to_string(n) + ": " + std::to_string(g.vertices.size()) + " vertices";
        return false;
      }
    }
    return true;
  });
}

// 6. factor enumeration: Catalan counts for band factors, n! for permutation braids
inline check_result check_factor_counts() {
  return detail::timed("canonical factor counts", 30000.0, [](std::string& note) {
    const long long catalan[] = {0, 0, 0, 5, 14, 42};
    for (int n = 3; n <= 5; ++n)
      if (static_cast<long long>(enumerate_canonical_factors(n).size()) != catalan[n]) {
        note = "band factor count wrong at n=" + std::to_string(n);
        return false;
      }
    long long fact = 1;
    for (int n = 2; n <= 6; ++n) {
      fact = 1;
      for (int i = 2; i <= n; ++i) fact *= i;
      if (static_cast<long long>(enumerate_simples(n).size()) != fact) {
        note = "simple count wrong at n=" + std::to_string(n);
        return false;
      }
    }
    return true;
  });
}

// 7. handle reduction: the relator pad collapses to the empty word, and the
//    published commutator instance collapses to a two-letter word
inline check_result check_handle_reduction() {
  return detail::timed("handle reduction landmarks", 1000.0, [](std::string& note) {
    braid_word t = handle_reduce(braid_word(3, {1, 2, 1, -2, -1, -2}));
    if (!t.letters.empty()) {
      note = "relator word did not vanish";
      return false;
    }
    auto [a1, a2] = detail::two_letter_commutator_pair();
    braid_word c = free_reduce(concat(concat(inverse(a2), inverse(a1)), concat(a2, a1)));
    braid_word r = handle_reduce(c);
    note = std::to_string(r.letters.size()) + " letters after reduction";
    return left_normal_form(r) == left_normal_form(braid_word(75, {7, -8}));
  });
}

// 8. relation and homomorphism suite across the representations
inline check_result check_relations_and_homomorphisms() {
  return detail::timed("relation and homomorphism suite", 60000.0, [](std::string& note) {
    // Artin relations under normal-form equality
    const int n = 6;
    for (int i = 1; i < n; ++i)
      for (int j = i + 2; j < n; ++j)
        if (left_normal_form(braid_word(n, {i, j})) != left_normal_form(braid_word(n, {j, i}))) {
          note = "far commutation failed";
          return false;
        }
    for (int i = 1; i + 1 < n; ++i)
      if (left_normal_form(braid_word(n, {i, i + 1, i})) !=
          left_normal_form(braid_word(n, {i + 1, i, i + 1}))) {
        note = "braid relation failed";
        return false;
      }
    // band relations under band normal-form equality
    const int bn = 5;
    auto bnf_eq = [&](const band_word& u, const band_word& v) {
      return bkl_serialize(bkl_normal_form(u)) == bkl_serialize(bkl_normal_form(v));
    };
    for (int t = 2; t <= bn; ++t)
      for (int s = 1; s < t; ++s)
        for (int r = 2; r <= bn; ++r)
          for (int q = 1; q < r; ++q) {
            long long side = 1LL * (t - r) * (t - q) * (s - r) * (s - q);
            if (side > 0 &&
                !bnf_eq(band_word(bn, {{t, s, 1}, {r, q, 1}}),
                        band_word(bn, {{r, q, 1}, {t, s, 1}}))) {
              note = "band commutation failed";
              return false;
            }
          }
    for (int t = 3; t <= bn; ++t)
      for (int s = 2; s < t; ++s)
        for (int r = 1; r < s; ++r) {
          band_word u(bn, {{t, s, 1}, {s, r, 1}});
          band_word v(bn, {{t, r, 1}, {t, s, 1}});
          band_word w(bn, {{s, r, 1}, {t, r, 1}});
          if (!bnf_eq(u, v) || !bnf_eq(v, w)) {
            note = "band triangle relation failed";
            return false;
          }
        }
    // reduced Burau: multiplicativity and the braid-relation identity
    std::mt19937_64 rng = make_stream(8101, "selftest", 0);
    for (int it = 0; it < 30; ++it) {
      braid_word u = detail::random_word(4, 8, rng), v = detail::random_word(4, 8, rng);
      if (!(reduced_burau(concat(u, v)) == reduced_burau(u) * reduced_burau(v))) {
        note = "Burau multiplicativity failed";
        return false;
      }
    }
    for (int i = 1; i + 1 < 4; ++i) {
      if (!(reduced_burau(braid_word(4, {i, i + 1, i})) ==
            reduced_burau(braid_word(4, {i + 1, i, i + 1})))) {
        note = "Burau braid relation failed";
        return false;
      }
      if (!(reduced_burau(braid_word(4, {i, -i})) == laurent_matrix::identity(3))) {
        note = "Burau inverse failed";
        return false;
      }
    }
    // colored Burau group law at five random evaluation tuples
    const std::uint64_t p = 1000003;
    for (int it = 0; it < 5; ++it) {
      const int cn = 5;
      std::vector<std::uint64_t> taus;
      for (int i = 0; i < cn; ++i) taus.push_back(2 + rng() % (p - 2));
      braid_word u = detail::random_word(cn, 8, rng), v = detail::random_word(cn, 8, rng);
      auto [au, mu] = colored_burau_eval(u, taus, p);
      auto [auv, muv] = colored_burau_eval(concat(u, v), taus, p);
      perm ainv = au.inv();
      std::vector<std::uint64_t> moved(taus.size());
      for (int j = 0; j < cn; ++j)
        moved[static_cast<std::size_t>(j)] = taus[static_cast<std::size_t>(ainv(j))];
      auto [av, mv] = colored_burau_eval(v, moved, p);
      if (auv != compose(au, av) || !(muv == mu * mv)) {
        note = "colored Burau group law failed";
        return false;
      }
    }
    // left self-distributivity of shifted conjugacy on 500 random triples
    for (int it = 0; it < 500; ++it) {
      braid_word a = detail::random_word(4, 3, rng);
      braid_word b = detail::random_word(4, 3, rng);
      braid_word c = detail::random_word(4, 3, rng);
      braid_word lhs = shifted_star(a, shifted_star(b, c));
      braid_word rhs = shifted_star(shifted_star(a, b), shifted_star(a, c));
      if (!words_equal(lhs, rhs)) {
        note = "self-distributive law failed at triple " + std::to_string(it);
        return false;
      }
    }
    return true;
  });
}

// 9. protocol correctness over 1000 seeded runs per scheme
inline check_result check_protocols() {
  return detail::timed("protocol correctness", 300000.0, [](std::string& note) {
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto rng = make_stream(8201, "keygen", seed);
      aag_params ap;
      aag_instance ai = aag_keygen(ap, rng);
      if (aag_shared(party::alice, ai) != aag_shared(party::bob, ai)) {
        note = "commutator exchange disagreed at seed " + std::to_string(seed);
        return false;
      }
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto rng = make_stream(8202, "keygen", seed);
      ko_params kp;
      ko_instance ki = ko_keygen(kp, rng);
      if (ko_shared(party::alice, ki) != ko_shared(party::bob, ki)) {
        note = "commuting-subgroup exchange disagreed at seed " + std::to_string(seed);
        return false;
      }
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto rng = make_stream(8203, "keygen", seed);
      ko_params kp;
      ko_instance ki = ko_keygen(kp, rng);
      std::vector<std::uint8_t> msg(32);
      for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
      ko_ciphertext ct = ko_encrypt(msg, ki.p, ki.p1, kp, rng);
      if (ko_decrypt(ki.s, ct) != msg) {
        note = "round trip failed at seed " + std::to_string(seed);
        return false;
      }
    }
    // authentication: honest runs accept, random responses reject
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto rng = make_stream(8204, "keygen", seed);
      ko_params kp;
      key_distribution bd;
      bd.length = kp.public_len;
      braid_word b = draw_key(kp.n, bd, index_range::all, rng);
      key_distribution sd;
      sd.length = kp.secret_len;
      braid_word s = draw_key(kp.n, sd, index_range::lower, rng);
      if (!sdg_authenticate(b, s, kp, rng).accepted) {
        note = "honest challenge-response rejected at seed " + std::to_string(seed);
        return false;
      }
      std::array<std::uint8_t, 32> junk{};
      for (auto& x : junk) x = static_cast<std::uint8_t>(rng());
      if (sdg_authenticate(b, s, kp, rng, &junk).accepted) {
        note = "random response accepted at seed " + std::to_string(seed);
        return false;
      }
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      auto rng = make_stream(8205, "keygen", seed);
      braid_word pb = detail::random_word(6, 6, rng);
      braid_word sk = detail::random_word(6, 4, rng);
      int challenge = static_cast<int>(seed % 2);
      if (!dehornoy_auth(pb, sk, challenge, rng).accepted) {
        note = "honest shifted-conjugacy round rejected at seed " + std::to_string(seed);
        return false;
      }
      braid_word junk = detail::random_word(6, 8, rng);
      if (dehornoy_auth(pb, sk, challenge, rng, &junk).accepted) {
        note = "forged shifted-conjugacy round accepted at seed " + std::to_string(seed);
        return false;
      }
    }
    return true;
  });
}

// 10. attack suite: degeneration identities, beam-width monotonicity,
//     success re-verification, and the commutator peak extension
inline check_result check_attacks() {
  return detail::timed("attack suite", 900000.0, [](std::string& note) {
    auto same = [](const attack_report& a, const attack_report& b) {
      return a.success == b.success && a.steps == b.steps && a.trace == b.trace &&
             a.recovered == b.recovered;
    };
    auto instance_for = [](std::uint64_t seed, int vlen) {
      auto rng = make_stream(8301, "attack", seed);
      std::vector<braid_word> bases;
      for (int i = 0; i < 4; ++i) bases.push_back(detail::random_word(8, 12, rng));
      braid_word v = detail::random_word(8, vlen, rng);
      return make_instance(8, v, bases);
    };
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      attack_instance inst = instance_for(seed, 6);
      attack_report a = lba_basic(inst, length_fn::reduced_garside);
      if (!same(a, lba_lookahead(inst, length_fn::reduced_garside, 1)) ||
          !same(a, lba_memory(inst, length_fn::reduced_garside, 1, false))) {
        note = "degeneration trace mismatch at seed " + std::to_string(seed);
        return false;
      }
      if (a.success && !verify_conjugator(inst, a.recovered)) {
        note = "greedy success did not re-verify";
        return false;
      }
    }
    int wins4 = 0, wins16 = 0, wins64 = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      attack_instance inst = instance_for(seed, 8);
      for (auto [m, wins] : {std::pair{4, &wins4}, std::pair{16, &wins16}, std::pair{64, &wins64}}) {
        attack_report r = lba_memory(inst, length_fn::reduced_garside, m, true);
        if (r.success) {
          if (!verify_conjugator(inst, r.recovered)) {
            note = "beam success did not re-verify";
            return false;
          }
          ++*wins;
        }
      }
    }
    note = "beam wins " + std::to_string(wins4) + "/" + std::to_string(wins16) + "/" +
           std::to_string(wins64) + " of 200";
    if (!(wins16 >= wins4 && wins64 >= wins16)) return false;
    auto [a1, a2] = detail::two_letter_commutator_pair();
    std::vector<braid_word> ext = peak_extend({a1, a2});
    std::string want = serialize(left_normal_form(braid_word(75, {7, -8})));
    for (const braid_word& g : ext)
      if (serialize(left_normal_form(g)) == want) return true;
    note = "peak extension misses the two-letter commutator";
    return false;
  });
}

// 11. conjugacy solver ground truth: constructed positives with verified
//     witnesses, exponent-sum-distinct negatives
inline check_result check_conjugacy_ground_truth() {
  return detail::timed("conjugacy solver ground truth", 300000.0, [](std::string& note) {
    std::mt19937_64 rng = make_stream(8401, "selftest", 1);
    std::vector<perm> simples = all_perms(5);
    std::uniform_int_distribution<std::size_t> pick(1, simples.size() - 1);  // skip identity
    std::uniform_int_distribution<int> klen(1, 4);
    for (int it = 0; it < 200; ++it) {
      // canonical length at most four by construction
      braid_word x;
      x.n = 5;
      int k = klen(rng);
      for (int i = 0; i < k; ++i) {
        braid_word f = word_of_simple(simples[pick(rng)], 5);
        x.letters.insert(x.letters.end(), f.letters.begin(), f.letters.end());
      }
      braid_word v = detail::random_word(5, 5, rng);
      braid_word y = detail::wconj(x, v);
      auto w = conjugacy_search(x, y, summit_kind::uss);
      if (!w || left_normal_form(detail::wconj(x, *w)) != left_normal_form(y)) {
        note = "constructed pair " + std::to_string(it) + " not recovered";
        return false;
      }
    }
    for (int it = 0; it < 200; ++it) {
      braid_word x = detail::random_word(5, 6, rng);
      braid_word y = detail::random_word(5, 7, rng);
      while (exponent_sum(y) == exponent_sum(x)) y = detail::random_word(5, 7, rng);
      if (conjugacy_decide(x, y, summit_kind::uss)) {
        note = "exponent-sum-distinct pair decided conjugate";
        return false;
      }
    }
    return true;
  });
}

// 12. oracle equivalences against exhaustive enumeration of the simples
inline check_result check_oracle_equivalences() {
  return detail::timed("exhaustive oracle equivalences", 120000.0, [](std::string& note) {
    // descent sets: membership in the starting set means the atom is a prefix,
    // membership in the finishing set means the atom is a suffix
    for (int n : {4, 5}) {
      for (const perm& p : all_perms(n)) {
        std::set<int> s, f;
        for (int i = 1; i < n; ++i) {
          perm a = perm::transposition(n, i - 1);
          if (simple_le(a, p)) s.insert(i);
          perm suffix = compose(p, a.inv());
          if (suffix.inversions() + 1 == p.inversions()) f.insert(i);
        }
        if (starting_set(p) != s || finishing_set(p) != f) {
          note = "descent set mismatch at n=" + std::to_string(n);
          return false;
        }
      }
    }
    // meet: the unique maximal common prefix over all simples of B_4
    std::vector<perm> s4 = all_perms(4);
    for (const perm& p : s4)
      for (const perm& q : s4) {
        perm best = perm::identity(4);
        for (const perm& c : s4)
          if (simple_le(c, p) && simple_le(c, q) && simple_le(best, c)) best = c;
        if (simple_meet(p, q) != best) {
          note = "meet mismatch";
          return false;
        }
      }
    // minimal conjugators: the pruned walk equals the direct filter
    std::mt19937_64 rng = make_stream(8501, "selftest", 2);
    conj_options opt;
    for (int it = 0; it < 10; ++it) {
      braid_word w = detail::random_word(4, 8, rng);
      for (summit_kind k : {summit_kind::sss, summit_kind::uss, summit_kind::sc}) {
        conj_witness cw = send_to_kind(w, k);
        braid::detail::class_invariants inv{cw.element.inf(), cw.element.sup()};
        std::vector<perm> keep;
        for (const perm& s : s4) {
          if (s.is_identity()) continue;
          if (braid::detail::kind_member(conj_by_simple(cw.element, s), k, inv, opt))
            keep.push_back(s);
        }
        std::vector<perm> minimal;
        for (const perm& s : keep) {
          bool dominated = false;
          for (const perm& t : keep)
            if (t != s && simple_le(t, s)) dominated = true;
          if (!dominated) minimal.push_back(s);
        }
        std::sort(minimal.begin(), minimal.end());
        if (minimal_conjugators(cw.element, k, inv, opt) != minimal) {
          note = "minimal conjugator mismatch";
          return false;
        }
      }
    }
    return true;
  });
}

inline std::vector<check_result> run_all() {
  return {
      check_worked_example(),          check_showcase_summit_sets(),
      check_sliding_circuits_of_delta(), check_delta_sigma_squared(),
      check_uss_of_generator(),        check_factor_counts(),
      check_handle_reduction(),        check_relations_and_homomorphisms(),
      check_protocols(),               check_attacks(),
      check_conjugacy_ground_truth(),  check_oracle_equivalences(),
  };
}

// prints one line per check; returns the number of failures
inline int run(std::ostream& out) {
  int failures = 0;
  int idx = 0;
  for (const check_result& r : run_all()) {
    ++idx;
    out << (r.ok ? "PASS" : "FAIL") << "  " << std::setw(2) << idx << "  " << r.name << "  ("
        << std::fixed << std::setprecision(1) << r.ms << " ms, budget "
        << std::setprecision(0) << r.budget_ms << " ms)";
    if (!r.note.empty()) out << "  -- " << r.note;
    out << "\n";
    if (!r.ok) ++failures;
  }
  return failures;
}

}  // namespace braid::selftest

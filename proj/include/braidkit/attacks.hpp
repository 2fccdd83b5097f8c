#pragma once

#include <algorithm>
#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "braidkit/bkl.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/word.hpp"

namespace braid {

// ---- length functions ----

enum class length_fn { garside, reduced_garside, bkl, reduced_bkl };

inline const char* length_fn_name(length_fn f) {
  switch (f) {
    case length_fn::garside: return "gar";
    case length_fn::reduced_garside: return "redgar";
    case length_fn::bkl: return "bkl";
    case length_fn::reduced_bkl: return "redbkl";
  }
  return "?";
}

inline std::optional<length_fn> length_fn_from_name(const std::string& s) {
  if (s == "gar") return length_fn::garside;
  if (s == "redgar") return length_fn::reduced_garside;
  if (s == "bkl") return length_fn::bkl;
  if (s == "redbkl") return length_fn::reduced_bkl;
  return std::nullopt;
}

inline long long word_length(const gnf& x, length_fn f) {
  switch (f) {
    case length_fn::garside: return garside_length(x);
    case length_fn::reduced_garside: return reduced_garside_length(x);
    case length_fn::bkl:
    case length_fn::reduced_bkl: {
      bnf b = bkl_normal_form(artin_to_band(to_word(x)));
      return f == length_fn::bkl ? bkl_length(b) : reduced_bkl_length(b);
    }
  }
  return 0;
}

// ---- instances ----

// recover v with w_i = v^{-1} u_i v; the conjugator is a word over the given
// generator list (single Artin letters when the list is empty)
struct attack_instance {
  int n = 0;
  std::vector<std::pair<braid_word, braid_word>> pairs;  // (u_i, w_i)
  std::vector<braid_word> generators;                    // conjugator alphabet
  braid_word truth;                                      // for scoring only
};

inline std::vector<braid_word> artin_alphabet(int n) {
  std::vector<braid_word> gens;
  for (int i = 1; i < n; ++i) gens.push_back(braid_word(n, {i}));
  return gens;
}

// candidate conjugator moves in a fixed order: list order, positive before
// inverse, so that runs replay deterministically
inline std::vector<braid_word> candidate_moves(const attack_instance& inst) {
  std::vector<braid_word> gens =
      inst.generators.empty() ? artin_alphabet(inst.n) : inst.generators;
  std::vector<braid_word> moves;
  for (const braid_word& g : gens) {
    moves.push_back(g);
    moves.push_back(inverse(g));
  }
  return moves;
}

inline attack_instance make_instance(int n, const braid_word& v,
                                     const std::vector<braid_word>& bases,
                                     std::vector<braid_word> generators = {}) {
  attack_instance inst;
  inst.n = n;
  inst.truth = v;
  inst.generators = std::move(generators);
  for (const braid_word& u : bases)
    inst.pairs.emplace_back(u, free_reduce(concat(concat(inverse(v), u), v)));
  return inst;
}

struct attack_report {
  bool success = false;
  long long steps = 0;
  std::vector<long long> trace;  // total tuple length after each committed move
  double ms = 0;
  braid_word recovered;
};

// never trust the search: a success flag must re-verify every pair
inline bool verify_conjugator(const attack_instance& inst, const braid_word& v) {
  for (const auto& [u, w] : inst.pairs)
    if (left_normal_form(concat(concat(inverse(v), u), v)) != left_normal_form(w)) return false;
  return true;
}

namespace detail {

struct lba_state {
  std::vector<gnf> tuple;   // current conjugates of the w_i
  braid_word applied;       // g_k ... g_1 with tuple_i = applied w_i applied^{-1}
  long long length = 0;
};

inline long long tuple_length(const std::vector<gnf>& tuple, length_fn f) {
  long long total = 0;
  for (const gnf& x : tuple) total += word_length(x, f);
  return total;
}

inline std::string tuple_key(const std::vector<gnf>& tuple) {
  std::string k;
  for (const gnf& x : tuple) {
    k += serialize(x);
    k += ';';
  }
  return k;
}

// conjugate every tuple entry as g t g^{-1} (guessing g as the last letter of v)
inline lba_state apply_move(const lba_state& s, const braid_word& g, length_fn f) {
  lba_state next;
  next.tuple.reserve(s.tuple.size());
  braid_word ginv = inverse(g);
  for (const gnf& x : s.tuple) next.tuple.push_back(nf_conj(x, ginv));
  next.applied = concat(g, s.applied);
  next.applied = free_reduce(next.applied);
  next.length = tuple_length(next.tuple, f);
  return next;
}

inline lba_state initial_state(const attack_instance& inst, length_fn f) {
  lba_state s;
  s.applied.n = inst.n;
  for (const auto& [u, w] : inst.pairs) s.tuple.push_back(left_normal_form(w));
  s.length = tuple_length(s.tuple, f);
  return s;
}

inline std::string target_key(const attack_instance& inst) {
  std::vector<gnf> t;
  for (const auto& [u, w] : inst.pairs) t.push_back(left_normal_form(u));
  return tuple_key(t);
}

inline attack_report finish(const attack_instance& inst, const lba_state& s, bool hit,
                            attack_report rep,
                            std::chrono::steady_clock::time_point t0) {
  if (hit) {
    // tuple = applied w applied^{-1} and w = v^{-1} u v, so reaching u means
    // applied itself conjugates u to w
    rep.recovered = free_reduce(s.applied);
    rep.success = verify_conjugator(inst, rep.recovered);
  }
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace detail

// greedy descent: commit the shortest single-move successor while it strictly
// improves the total length
inline attack_report lba_basic(const attack_instance& inst, length_fn f) {
  auto t0 = std::chrono::steady_clock::now();
  std::vector<braid_word> moves = candidate_moves(inst);
  std::string target = detail::target_key(inst);
  detail::lba_state cur = detail::initial_state(inst, f);
  attack_report rep;
  rep.trace.push_back(cur.length);
  if (detail::tuple_key(cur.tuple) == target) return detail::finish(inst, cur, true, rep, t0);
  for (;;) {
    // a child that reaches the public left-hand tuple wins outright, even when
    // another child ties it on length
    std::optional<detail::lba_state> best;
    bool hit = false;
    for (const braid_word& g : moves) {
      detail::lba_state next = detail::apply_move(cur, g, f);
      if (detail::tuple_key(next.tuple) == target) {
        cur = std::move(next);
        hit = true;
        break;
      }
      if (!best || next.length < best->length) best = std::move(next);
    }
    if (hit) {
      ++rep.steps;
      rep.trace.push_back(cur.length);
      return detail::finish(inst, cur, true, rep, t0);
    }
    if (!best || best->length >= cur.length) break;
    cur = std::move(*best);
    ++rep.steps;
    rep.trace.push_back(cur.length);
  }
  return detail::finish(inst, cur, detail::tuple_key(cur.tuple) == target, rep, t0);
}

// evaluate all move sequences of the given depth, then commit only the first
// letter of the best sequence; depth 1 reproduces the greedy descent exactly
inline attack_report lba_lookahead(const attack_instance& inst, length_fn f, int depth) {
  if (depth < 1) throw parse_error("lookahead depth must be at least 1");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<braid_word> moves = candidate_moves(inst);
  std::string target = detail::target_key(inst);
  detail::lba_state cur = detail::initial_state(inst, f);
  attack_report rep;
  rep.trace.push_back(cur.length);
  if (detail::tuple_key(cur.tuple) == target) return detail::finish(inst, cur, true, rep, t0);
  for (;;) {
    // single-move target scan first, so a tie on length never hides a finish
    bool hit = false;
    for (const braid_word& g : moves) {
      detail::lba_state next = detail::apply_move(cur, g, f);
      if (detail::tuple_key(next.tuple) == target) {
        cur = std::move(next);
        hit = true;
        break;
      }
    }
    if (hit) {
      ++rep.steps;
      rep.trace.push_back(cur.length);
      return detail::finish(inst, cur, true, rep, t0);
    }
    // depth-first over sequences, remembering the best terminal length and the
    // first letter that leads to it
    long long best_len = -1;
    std::size_t best_first = 0;
    auto explore = [&](auto&& self, const detail::lba_state& s, int d, std::size_t first) -> void {
      if (d == 0) {
        if (best_len < 0 || s.length < best_len) {
          best_len = s.length;
          best_first = first;
        }
        return;
      }
      for (std::size_t i = 0; i < moves.size(); ++i)
        self(self, detail::apply_move(s, moves[i], f), d - 1, d == depth ? i : first);
    };
    explore(explore, cur, depth, 0);
    if (best_len < 0 || best_len >= cur.length) break;
    cur = detail::apply_move(cur, moves[best_first], f);
    ++rep.steps;
    rep.trace.push_back(cur.length);
  }
  return detail::finish(inst, cur, detail::tuple_key(cur.tuple) == target, rep, t0);
}

// beam search of the given width over conjugator prefixes; dedup drops tuples
// that have been seen before; width 1 without dedup matches the greedy descent
inline attack_report lba_memory(const attack_instance& inst, length_fn f, int memory, bool dedup) {
  if (memory < 1) throw parse_error("memory width must be at least 1");
  auto t0 = std::chrono::steady_clock::now();
  std::vector<braid_word> moves = candidate_moves(inst);
  std::string target = detail::target_key(inst);
  attack_report rep;
  std::vector<detail::lba_state> beam{detail::initial_state(inst, f)};
  rep.trace.push_back(beam[0].length);
  if (detail::tuple_key(beam[0].tuple) == target) return detail::finish(inst, beam[0], true, rep, t0);
  std::set<std::string> seen;
  if (dedup) seen.insert(detail::tuple_key(beam[0].tuple));
  long long incumbent = beam[0].length;
  for (;;) {
    std::vector<detail::lba_state> children;
    for (const detail::lba_state& s : beam)
      for (const braid_word& g : moves) {
        detail::lba_state next = detail::apply_move(s, g, f);
        if (detail::tuple_key(next.tuple) == target) {
          ++rep.steps;
          rep.trace.push_back(next.length);
          return detail::finish(inst, next, true, rep, t0);
        }
        if (dedup && !seen.insert(detail::tuple_key(next.tuple)).second) continue;
        children.push_back(std::move(next));
      }
    if (children.empty()) break;
    std::stable_sort(children.begin(), children.end(),
                     [](const auto& a, const auto& b) { return a.length < b.length; });
    if (static_cast<int>(children.size()) > memory)
      children.resize(static_cast<std::size_t>(memory));
    if (children.front().length >= incumbent) break;
    incumbent = children.front().length;
    beam = std::move(children);
    ++rep.steps;
    rep.trace.push_back(beam.front().length);
  }
  return detail::finish(inst, beam.front(), detail::tuple_key(beam.front().tuple) == target, rep,
                        t0);
}

// extend a generator list with all pairwise conjugates g_i^{g_j} and
// commutators [g_i, g_j] = g_i^{-1} g_j^{-1} g_i g_j, deduplicated by normal form
inline std::vector<braid_word> peak_extend(const std::vector<braid_word>& gens) {
  std::vector<braid_word> out;
  std::set<std::string> seen;
  auto push = [&](const braid_word& w) {
    gnf x = left_normal_form(w);
    if (x.delta == 0 && x.factors.empty()) return;  // drop the identity
    if (seen.insert(serialize(x)).second) out.push_back(free_reduce(w));
  };
  for (const braid_word& g : gens) push(g);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (i == j) continue;
      // g_i conjugated by g_j
      push(concat(concat(inverse(gens[j]), gens[i]), gens[j]));
      push(concat(concat(inverse(gens[i]), inverse(gens[j])), concat(gens[i], gens[j])));
    }
  return out;
}

// summit-set heuristic: send both sides of the first pair to super summit
// representatives, look for one permutation braid connecting them, and verify
// the composed conjugator against every pair
inline attack_report hs_attack(const attack_instance& inst, const conj_options& opt = {}) {
  auto t0 = std::chrono::steady_clock::now();
  attack_report rep;
  if (inst.pairs.empty()) throw parse_error("hs_attack: need at least one pair");
  if (inst.n > opt.bruteforce_cap)
    throw parse_error("hs_attack: strand count exceeds the brute-force cap");
  const auto& [u, w] = inst.pairs.front();
  conj_witness su = send_to_sss(u, opt);
  conj_witness sw = send_to_sss(w, opt);
  if (su.element.inf() == sw.element.inf() && su.element.sup() == sw.element.sup()) {
    for (const perm& p : all_perms(inst.n)) {
      ++rep.steps;
      gnf cand = p.is_identity() ? su.element : conj_by_simple(su.element, p);
      if (cand != sw.element) continue;
      // v = c_u P c_w^{-1} maps u to w by conjugation
      braid_word v = su.conj;
      detail::append_word(v, word_of_simple(p, inst.n));
      detail::append_word(v, inverse(sw.conj));
      v = free_reduce(v);
      if (verify_conjugator(inst, v)) {
        rep.recovered = v;
        rep.success = true;
        break;
      }
    }
  }
  rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace braid

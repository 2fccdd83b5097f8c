#pragma once

#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "braidkit/normal_form.hpp"
#include "braidkit/word.hpp"

namespace braid {

enum class summit_kind { sss, uss, rsss, sc };

inline const char* kind_name(summit_kind k) {
  switch (k) {
    case summit_kind::sss: return "sss";
    case summit_kind::uss: return "uss";
    case summit_kind::rsss: return "rsss";
    case summit_kind::sc: return "sc";
  }
  return "?";
}

struct conj_options {
  int bruteforce_cap = 8;          // max n for minimal-conjugator search
  long long vertex_budget = 200000;  // summit-graph size guard
  long long iteration_cap = 100000;  // trajectory length guard
};

// initial factor iota(x) = tau^{-p}(x_1); final factor phi(x) = x_r;
// for canonical length 0: iota = unit, phi = Delta
inline perm initial_factor(const gnf& x) {
  if (x.factors.empty()) return perm::identity(x.n);
  perm p = x.factors.front();
  if (((x.delta % 2) + 2) % 2 != 0) p = tau_simple(p);
  return p;
}

inline perm final_factor(const gnf& x) {
  if (x.factors.empty()) return delta_perm(x.n);
  return x.factors.back();
}

// c(x) = Delta^p x_2 ... x_r tau^{-p}(x_1); conjugation by iota(x)
inline gnf cycle(const gnf& x) {
  if (x.factors.empty()) return x;
  std::vector<perm> fs(x.factors.begin() + 1, x.factors.end());
  perm first = x.factors.front();
  if (((x.delta % 2) + 2) % 2 != 0) first = tau_simple(first);
  fs.push_back(first);
  return make_gnf(x.n, x.delta, std::move(fs));
}

// d(x) = x_r Delta^p x_1 ... x_{r-1} = Delta^p tau^p(x_r) x_1 ... x_{r-1};
// conjugation by phi(x)^{-1}
inline gnf decycle(const gnf& x) {
  if (x.factors.empty()) return x;
  std::vector<perm> fs;
  perm last = x.factors.back();
  if (((x.delta % 2) + 2) % 2 != 0) last = tau_simple(last);
  fs.push_back(last);
  fs.insert(fs.end(), x.factors.begin(), x.factors.end() - 1);
  return make_gnf(x.n, x.delta, std::move(fs));
}

// p(x) = iota(x^{-1}) ^ iota(x), using iota(x^{-1}) = D(phi(x))
inline perm preferred_prefix(const gnf& x) {
  if (x.factors.empty()) return perm::identity(x.n);
  return simple_meet(right_complement(final_factor(x)), initial_factor(x));
}

// s(x) = p(x)^{-1} x p(x)
inline gnf cyclic_sliding(const gnf& x) {
  perm p = preferred_prefix(x);
  if (p.is_identity()) return x;
  return nf_conj(x, word_of_simple(p, x.n));
}

// rigid: rotating tau^{-p}(x_1) to the end keeps every junction left-weighted
inline bool is_rigid(const gnf& x) {
  if (x.factors.empty()) return true;  // convention for ell = 0
  return preferred_prefix(x).is_identity();
}

struct conj_witness {
  gnf element;
  braid_word conj;  // v with NF(v^{-1} seed v) = element
};

namespace detail {

inline void append_word(braid_word& acc, const braid_word& w) {
  acc.letters.insert(acc.letters.end(), w.letters.begin(), w.letters.end());
}

// conjugator of one cycling step: iota(x)
inline braid_word cycle_conjugator(const gnf& x) {
  return word_of_simple(initial_factor(x), x.n);
}

// conjugator of one decycling step: phi(x)^{-1}
inline braid_word decycle_conjugator(const gnf& x) {
  return inverse(word_of_simple(final_factor(x), x.n));
}

}  // namespace detail

// iterate cycling to maximize inf, then decycling to minimize sup, with
// trajectory-repeat detection as the stopping rule for each phase
inline conj_witness send_to_sss(const braid_word& w, const conj_options& opt = {}) {
  gnf x = left_normal_form(w);
  braid_word conj;
  conj.n = w.n;
  long long iters = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    std::set<std::string> seen;
    while (seen.insert(serialize(x)).second) {
      if (++iters > opt.iteration_cap) throw budget_error("send_to_sss: iteration cap exceeded");
      long long before = x.inf();
      braid_word c = detail::cycle_conjugator(x);
      x = cycle(x);
      detail::append_word(conj, c);
      if (x.inf() > before) {
        seen.clear();
        changed = true;
      }
    }
    seen.clear();
    while (seen.insert(serialize(x)).second) {
      if (++iters > opt.iteration_cap) throw budget_error("send_to_sss: iteration cap exceeded");
      long long before = x.sup();
      braid_word c = detail::decycle_conjugator(x);
      x = decycle(x);
      detail::append_word(conj, c);
      if (x.sup() < before) {
        seen.clear();
        changed = true;
      }
    }
  }
  return {x, free_reduce(conj)};
}

// iterate an operator with trajectory recording; return the first element of
// the terminal loop together with the accumulated conjugator
template <typename Op, typename ConjOf>
inline conj_witness orbit_entry(gnf x, braid_word conj, Op op, ConjOf conj_of,
                                const conj_options& opt) {
  std::map<std::string, std::size_t> index;
  std::vector<gnf> traj;
  std::vector<braid_word> conjs;
  for (;;) {
    std::string key = serialize(x);
    auto it = index.find(key);
    if (it != index.end()) {
      return {traj[it->second], free_reduce(conjs[it->second])};
    }
    if (static_cast<long long>(traj.size()) > opt.iteration_cap)
      throw budget_error("orbit trajectory exceeded iteration cap");
    index.emplace(std::move(key), traj.size());
    traj.push_back(x);
    conjs.push_back(conj);
    braid_word c = conj_of(x);
    x = op(x);
    detail::append_word(conj, c);
    conj = free_reduce(conj);
  }
}

inline conj_witness send_to_uss(const braid_word& w, const conj_options& opt = {}) {
  conj_witness s = send_to_sss(w, opt);
  return orbit_entry(
      s.element, s.conj, [](const gnf& y) { return cycle(y); },
      [](const gnf& y) { return detail::cycle_conjugator(y); }, opt);
}

inline conj_witness send_to_sc(const braid_word& w, const conj_options& opt = {}) {
  gnf x = left_normal_form(w);
  braid_word conj;
  conj.n = w.n;
  return orbit_entry(
      x, conj, [](const gnf& y) { return cyclic_sliding(y); },
      [](const gnf& y) { return word_of_simple(preferred_prefix(y), y.n); }, opt);
}

// SC is contained in RSSS, so a sliding-circuit element represents RSSS too
inline conj_witness send_to_rsss(const braid_word& w, const conj_options& opt = {}) {
  return send_to_sc(w, opt);
}

namespace detail {

// does iterating `op` from z return to z (i.e. z lies on the terminal loop)?
template <typename Op>
inline bool returns_to_self(const gnf& z, Op op, const conj_options& opt) {
  std::set<std::string> seen;
  gnf t = op(z);
  long long iters = 0;
  while (t != z) {
    if (++iters > opt.iteration_cap) throw budget_error("periodicity probe exceeded cap");
    if (!seen.insert(serialize(t)).second) return false;
    t = op(t);
  }
  return true;
}

struct class_invariants {
  long long summit_inf = 0;
  long long summit_sup = 0;
};

inline bool kind_member(const gnf& z, summit_kind kind, const class_invariants& inv,
                        const conj_options& opt) {
  if (z.inf() != inv.summit_inf || z.sup() != inv.summit_sup) return false;
  switch (kind) {
    case summit_kind::sss:
      return true;
    case summit_kind::uss:
      return returns_to_self(z, [](const gnf& y) { return cycle(y); }, opt);
    case summit_kind::rsss:
      return returns_to_self(z, [](const gnf& y) { return cycle(y); }, opt) &&
             returns_to_self(z, [](const gnf& y) { return decycle(y); }, opt);
    case summit_kind::sc:
      return returns_to_self(z, [](const gnf& y) { return cyclic_sliding(y); }, opt);
  }
  return false;
}

}  // namespace detail

// conjugate y by a simple s, exactly
inline gnf conj_by_simple(const gnf& y, const perm& s) {
  return nf_conj(y, word_of_simple(s, y.n));
}

namespace detail {

// right lcm of two simples (simples form a lattice between the unit and Delta)
inline perm simple_join(const perm& u, const perm& v) {
  // w >= u iff D(w) is a suffix of D(u); suffixes mirror prefixes under inverse
  perm du = right_complement(u), dv = right_complement(v);
  perm m = simple_meet(du.inv(), dv.inv()).inv();  // largest common suffix
  return compose(delta_perm(u.size()), m.inv());
}

// u \ v: the simple c with u c = join(u, v)
inline perm simple_lquo(const perm& u, const perm& v) {
  return compose(u.inv(), simple_join(u, v));
}

// Minimal super-summit conjugator above a given simple, by forced extensions.
// With y = Delta^p P_1...P_l left-weighted and q = p + l:
//   inf(x^{-1} y x) >= p  iff  tau^p(x) <= P_1...P_l x
//   sup(x^{-1} y x) <= q  iff  tau^q(x) <= Q_1...Q_l x,  Q_j = tau^{q+j-1}(D(P_{l+1-j}))
// If a condition tau^r(x) <= V x fails, every solution above x also sits above
// x * ((V x) \ tau^r(x)), so repeatedly appending that complement converges to
// the unique minimal solution (Delta always qualifies, bounding the climb).
struct summit_closure {
  int n;
  long long p, q;
  std::vector<perm> pf, qf;

  explicit summit_closure(const gnf& y) : n(y.n), p(y.inf()), q(y.sup()) {
    pf = y.factors;
    long long twist = q;
    for (auto it = y.factors.rbegin(); it != y.factors.rend(); ++it, ++twist) {
      perm c = right_complement(*it);
      if (((twist % 2) + 2) % 2 != 0) c = tau_simple(c);
      qf.push_back(c);
    }
  }

  // ((F_1...F_m x) \ tau^r(x)); the condition holds exactly when this is trivial
  perm deficiency(const std::vector<perm>& fs, long long r, const perm& x) const {
    perm s = (((r % 2) + 2) % 2 != 0) ? tau_simple(x) : x;
    for (const perm& f : fs) s = simple_lquo(f, s);
    return simple_lquo(x, s);
  }

  // least simple above x whose conjugate keeps the inf/sup of y
  perm phi(perm x) const {
    const long long guard = 2 + 1LL * n * (n - 1) / 2;
    for (long long it = 0; it <= guard; ++it) {
      perm e1 = deficiency(pf, p, x);
      perm e2 = deficiency(qf, q, x);
      if (e1.is_identity() && e2.is_identity()) return x;
      x = compose(x, simple_join(e1, e2));
    }
    throw invariant_error("summit closure did not converge");
  }
};

}  // namespace detail

// All nontrivial simples s, minimal under the prefix order, with s^{-1} y s in
// the kind-set. The walk visits only closures phi(.) of simples (every
// kind-set is contained in the super summit set, so every qualifying simple is
// its own closure), pruning the cone above every member already found; this is
// output-equivalent to filtering all n! simples (Delta always qualifies, so
// every chain terminates).
inline std::vector<perm> minimal_conjugators(const gnf& y, summit_kind kind,
                                             const detail::class_invariants& inv,
                                             const conj_options& opt = {}) {
  const int n = y.n;
  if (n > opt.bruteforce_cap)
    throw parse_error("minimal_conjugators: n=" + std::to_string(n) +
                      " exceeds brute-force cap " + std::to_string(opt.bruteforce_cap));
  // the closure shortcut is only sound when y realizes the summit inf/sup
  const bool summit_rep = (y.inf() == inv.summit_inf && y.sup() == inv.summit_sup);
  detail::summit_closure cl(y);
  std::vector<perm> results;
  std::deque<perm> frontier;
  std::unordered_set<std::uint64_t> visited;
  for (int i = 0; i + 1 < n; ++i) {
    perm a = perm::transposition(n, i);
    if (summit_rep) a = cl.phi(a);
    if (visited.insert(a.key()).second) frontier.push_back(a);
  }
  while (!frontier.empty()) {
    perm s = std::move(frontier.front());
    frontier.pop_front();
    bool dominated = false;
    for (const perm& m : results)
      if (m != s && simple_le(m, s)) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    if (detail::kind_member(conj_by_simple(y, s), kind, inv, opt)) {
      results.push_back(s);
      continue;
    }
    for (int i = 0; i + 1 < n; ++i) {
      perm c = compose(s, perm::transposition(n, i));
      if (c.inversions() != s.inversions() + 1) continue;
      if (summit_rep) c = cl.phi(c);
      if (visited.insert(c.key()).second) frontier.push_back(c);
    }
  }
  // closure jumps can surface a larger member before a smaller one, so filter
  std::vector<perm> minimal;
  for (const perm& s : results) {
    bool dominated = false;
    for (const perm& m : results)
      if (m != s && simple_le(m, s)) dominated = true;
    if (!dominated) minimal.push_back(s);
  }
  std::sort(minimal.begin(), minimal.end());
  return minimal;
}

struct summit_edge {
  std::size_t from = 0;
  perm label;
  std::size_t to = 0;
};

struct summit_vertex {
  gnf element;
  braid_word witness;  // v with NF(v^{-1} seed v) = element
};

struct summit_graph {
  summit_kind kind = summit_kind::sss;
  gnf seed;  // normal form of the input element
  std::vector<summit_vertex> vertices;
  std::vector<summit_edge> edges;
  std::map<std::string, std::size_t> index;  // serialization -> vertex id
};

// budget overflow during closure search; carries the partial graph (the
// unexplored frontier is every vertex at index >= frontier_from)
struct vertex_budget_error : budget_error {
  summit_graph partial;
  std::size_t frontier_from = 0;
  vertex_budget_error(summit_graph g, std::size_t from)
      : budget_error("summit graph vertex budget exceeded"),
        partial(std::move(g)),
        frontier_from(from) {}
};

inline conj_witness send_to_kind(const braid_word& w, summit_kind kind,
                                 const conj_options& opt = {}) {
  switch (kind) {
    case summit_kind::sss: return send_to_sss(w, opt);
    case summit_kind::uss: return send_to_uss(w, opt);
    case summit_kind::rsss: return send_to_rsss(w, opt);
    case summit_kind::sc: return send_to_sc(w, opt);
  }
  throw invariant_error("send_to_kind: bad kind");
}

// closure search: conjugate every vertex by each of its minimal conjugators
// until no new elements appear; stop early if `stop_at` shows up
inline summit_graph compute_summit_graph(const braid_word& w, summit_kind kind,
                                         const conj_options& opt = {},
                                         const std::string* stop_at = nullptr) {
  summit_graph g;
  g.kind = kind;
  g.seed = left_normal_form(w);
  conj_witness start = send_to_kind(w, kind, opt);
  detail::class_invariants inv{start.element.inf(), start.element.sup()};
  g.vertices.push_back({start.element, start.conj});
  g.index.emplace(serialize(start.element), 0);
  if (stop_at && g.index.count(*stop_at)) return g;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    gnf y = g.vertices[v].element;  // copy: vertex storage may reallocate
    for (const perm& s : minimal_conjugators(y, kind, inv, opt)) {
      gnf z = conj_by_simple(y, s);
      std::string key = serialize(z);
      auto it = g.index.find(key);
      std::size_t to;
      if (it == g.index.end()) {
        if (static_cast<long long>(g.vertices.size()) >= opt.vertex_budget)
          throw vertex_budget_error(g, v);
        braid_word wit = g.vertices[v].witness;
        detail::append_word(wit, word_of_simple(s, y.n));
        to = g.vertices.size();
        g.vertices.push_back({z, free_reduce(wit)});
        g.index.emplace(std::move(key), to);
      } else {
        to = it->second;
      }
      g.edges.push_back({v, s, to});
      if (stop_at && serialize(z) == *stop_at) return g;
    }
  }
  return g;
}

// exact decision via summit-set construction; search returns a witness
inline std::optional<braid_word> conjugacy_search(const braid_word& xw, const braid_word& yw,
                                                 summit_kind kind, const conj_options& opt = {}) {
  if (xw.n != yw.n) throw parse_error("conjugacy: strand counts differ");
  conj_witness ywit = send_to_kind(yw, kind, opt);
  conj_witness xwit = send_to_kind(xw, kind, opt);
  if (xwit.element.inf() != ywit.element.inf() || xwit.element.sup() != ywit.element.sup())
    return std::nullopt;
  std::string target = serialize(ywit.element);
  summit_graph g = compute_summit_graph(xw, kind, opt, &target);
  auto it = g.index.find(target);
  if (it == g.index.end()) return std::nullopt;
  // v^{-1} x v = y with v = (witness to target) * (y's witness)^{-1}
  braid_word v = g.vertices[it->second].witness;
  detail::append_word(v, inverse(ywit.conj));
  return free_reduce(v);
}

inline bool conjugacy_decide(const braid_word& xw, const braid_word& yw, summit_kind kind,
                             const conj_options& opt = {}) {
  return conjugacy_search(xw, yw, kind, opt).has_value();
}

}  // namespace braid

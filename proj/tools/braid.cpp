// Command-line front end: normal forms, word problem, conjugacy and summit
// graphs, protocol simulation, attack benchmarking, corpus generation, and the
// built-in acceptance suite.
//
// Exit codes: 0 success, 1 negative answer (wp/conj), 2 budget exceeded or
// indeterminate, 64 usage/parse error, 70 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "braidkit/attacks.hpp"
#include "braidkit/bkl.hpp"
#include "braidkit/conjugacy.hpp"
#include "braidkit/keydist.hpp"
#include "braidkit/normal_form.hpp"
#include "braidkit/protocols.hpp"
#include "braidkit/rng.hpp"
#include "braidkit/selftest.hpp"
#include "braidkit/word.hpp"
#include "braidkit/word_problem.hpp"

namespace {

constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct config {
  int n = 8;
  std::uint64_t seed = 0;
  std::string dist = "uniform";
  long long vertex_budget = 200000;
  long long handle_budget = braid::kDefaultHandleBudget;
};

// optional JSON config file named by BRAIDKIT_CONFIG supplies flag defaults
config load_config() {
  config c;
  const char* path = std::getenv("BRAIDKIT_CONFIG");
  if (!path || !*path) return c;
  std::ifstream in(path);
  if (!in) throw braid::parse_error(std::string("cannot open config file ") + path);
  nlohmann::json j;
  in >> j;
  c.n = j.value("n", c.n);
  c.seed = j.value("seed", c.seed);
  c.dist = j.value("dist", c.dist);
  c.vertex_budget = j.value("vertex_budget", c.vertex_budget);
  c.handle_budget = j.value("handle_budget", c.handle_budget);
  if (c.n < 2 || c.vertex_budget <= 0 || c.handle_budget <= 0)
    throw braid::parse_error("config: n must be >= 2 and budgets positive");
  return c;
}

braid::key_distribution parse_dist(const std::string& s, int length) {
  braid::key_distribution d;
  d.length = length;
  if (s == "uniform") return d;
  if (s.rfind("markov", 0) == 0) {
    d.mode = braid::key_distribution::kind::markov;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
      try {
        d.beta = std::stod(s.substr(colon + 1));
      } catch (const std::exception&) {
        throw braid::parse_error("bad markov weight in --dist " + s);
      }
      if (d.beta <= 0) throw braid::parse_error("markov weight must be positive");
    }
    return d;
  }
  throw braid::parse_error("unknown distribution " + s + " (want uniform or markov[:beta])");
}

// seed selection: a file of integers, an inclusive range lo-hi / lo..hi,
// or a single seed
std::vector<std::uint64_t> parse_seeds(const std::string& spec) {
  std::ifstream f(spec);
  std::vector<std::uint64_t> seeds;
  if (f) {
    std::uint64_t s;
    while (f >> s) seeds.push_back(s);
    if (seeds.empty()) throw braid::parse_error("seed file " + spec + " holds no integers");
    return seeds;
  }
  auto dash = spec.find("..");
  std::size_t skip = 2;
  if (dash == std::string::npos) {
    dash = spec.find('-', 1);
    skip = 1;
  }
  try {
    if (dash == std::string::npos) return {std::stoull(spec)};
    std::uint64_t lo = std::stoull(spec.substr(0, dash));
    std::uint64_t hi = std::stoull(spec.substr(dash + skip));
    if (hi < lo) throw braid::parse_error("empty seed range " + spec);
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  } catch (const braid::parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw braid::parse_error("bad seed list " + spec);
  }
}

// run one job per seed on up to `jobs` threads; rows come back in seed order
template <class F>
std::vector<std::string> run_seeded(const std::vector<std::uint64_t>& seeds, int jobs, F&& job) {
  std::vector<std::string> rows(seeds.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < seeds.size(); ++i) rows[i] = job(seeds[i]);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1))
        rows[i] = job(seeds[i]);
    });
  for (auto& th : pool) th.join();
  return rows;
}

std::string perm_images(const braid::perm& p) {
  std::ostringstream out;
  for (int i = 0; i < p.size(); ++i) {
    if (i) out << ' ';
    out << p.img[static_cast<std::size_t>(i)] + 1;
  }
  return out.str();
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

// ---- subcommand bodies ----

int cmd_nf(const std::string& text) {
  if (text.find("band:") != std::string::npos) {
    braid::bnf x = braid::bkl_normal_form(braid::parse_band_word(text));
    std::cout << braid::bkl_serialize(x) << "\n";
  } else {
    std::cout << braid::serialize(braid::left_normal_form(braid::parse_word(text))) << "\n";
  }
  return 0;
}

int cmd_wp(const std::string& a_text, const std::string& b_text, const std::string& method,
           long long budget) {
  braid::braid_word a = braid::parse_word(a_text);
  braid::braid_word b =
      b_text.empty() ? braid::braid_word(a.n, {}) : braid::parse_word(b_text);
  braid::eq_options opt;
  opt.handle_budget = budget;
  if (method == "nf") {
    bool eq = braid::equal(a, b, braid::eq_method::normal_form, opt);
    std::cout << (eq ? "equal" : "unequal") << "\n";
    return eq ? 0 : 1;
  }
  if (method == "handle") {
    bool eq = braid::equal(a, b, braid::eq_method::handle, opt);
    std::cout << (eq ? "equal" : "unequal") << "\n";
    return eq ? 0 : 1;
  }
  if (method == "burau") {
    // one-sided: distinct fingerprints prove inequality, equal ones do not
    bool match = braid::equal(a, b, braid::eq_method::fingerprint, opt);
    std::cout << (match ? "indeterminate (fingerprints match)" : "unequal") << "\n";
    return match ? kExitBudget : 1;
  }
  throw braid::parse_error("unknown --method " + method + " (want nf, handle, or burau)");
}

int cmd_conj(const std::string& x_text, const std::string& y_text, const std::string& kind_name,
             const std::string& graph_file, long long vertex_budget, int cap) {
  braid::summit_kind kind;
  if (kind_name == "sss") kind = braid::summit_kind::sss;
  else if (kind_name == "uss") kind = braid::summit_kind::uss;
  else if (kind_name == "rsss") kind = braid::summit_kind::rsss;
  else if (kind_name == "sc") kind = braid::summit_kind::sc;
  else throw braid::parse_error("unknown --kind " + kind_name);
  braid::conj_options opt;
  opt.vertex_budget = vertex_budget;
  opt.bruteforce_cap = cap;
  braid::braid_word x = braid::parse_word(x_text);
  if (!y_text.empty()) {
    braid::braid_word y = braid::parse_word(y_text);
    auto v = braid::conjugacy_search(x, y, kind, opt);
    if (!v) {
      std::cout << "not conjugate\n";
      return 1;
    }
    std::cout << "conjugate by " << braid::format_word(*v) << "\n";
    return 0;
  }
  braid::summit_graph g = braid::compute_summit_graph(x, kind, opt);
  std::cout << kind_name << " vertices: " << g.vertices.size()
            << ", edges: " << g.edges.size() << "\n";
  if (!graph_file.empty()) {
    std::ofstream out(graph_file);
    if (!out) throw braid::parse_error("cannot open " + graph_file + " for writing");
    for (const braid::summit_edge& e : g.edges)
      out << braid::serialize(g.vertices[e.from].element) << '\t' << perm_images(e.label) << '\t'
          << braid::serialize(g.vertices[e.to].element) << '\n';
  }
  return 0;
}

int cmd_protocol(const std::string& scheme, int n, std::uint64_t master_seed,
                 const std::string& dist, int runs, int jobs, const std::string& out_path) {
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < runs; ++i) seeds.push_back(master_seed + static_cast<std::uint64_t>(i));
  auto job = [&](std::uint64_t seed) {
    auto rng = braid::make_stream(seed, "keygen");
    auto t0 = std::chrono::steady_clock::now();
    bool agree = false;
    if (scheme == "aag") {
      braid::aag_params p;
      p.n = n;
      p.dist = parse_dist(dist, p.gen_len);
      braid::aag_instance inst = braid::aag_keygen(p, rng);
      agree = braid::aag_shared(braid::party::alice, inst) ==
              braid::aag_shared(braid::party::bob, inst);
    } else if (scheme == "ko" || scheme == "ko-enc") {
      braid::ko_params p;
      p.n = n;
      p.dist = parse_dist(dist, p.secret_len);
      braid::ko_instance inst = braid::ko_keygen(p, rng);
      if (scheme == "ko") {
        agree = braid::ko_shared(braid::party::alice, inst) ==
                braid::ko_shared(braid::party::bob, inst);
      } else {
        std::vector<std::uint8_t> msg(32);
        for (auto& b : msg) b = static_cast<std::uint8_t>(rng());
        braid::ko_ciphertext ct = braid::ko_encrypt(msg, inst.p, inst.p1, p, rng);
        agree = braid::ko_decrypt(inst.s, ct) == msg;
      }
    } else if (scheme == "sdg") {
      braid::ko_params p;
      p.n = n;
      p.dist = parse_dist(dist, p.secret_len);
      braid::key_distribution bd = p.dist;
      bd.length = p.public_len;
      braid::braid_word b = braid::draw_key(p.n, bd, braid::index_range::all, rng);
      braid::key_distribution sd = p.dist;
      sd.length = p.secret_len;
      braid::braid_word s = braid::draw_key(p.n, sd, braid::index_range::lower, rng);
      agree = braid::sdg_authenticate(b, s, p, rng).accepted;
    } else if (scheme == "shifted") {
      braid::key_distribution kd = parse_dist(dist, 6);
      braid::braid_word p = braid::draw_key(n, kd, braid::index_range::all, rng);
      braid::braid_word s = braid::draw_key(n, kd, braid::index_range::all, rng);
      agree = braid::dehornoy_auth(p, s, static_cast<int>(seed % 2), rng).accepted;
    } else {
      throw braid::parse_error("unknown --scheme " + scheme);
    }
    std::ostringstream row;
    row << seed << ',' << scheme << ',' << n << ',' << (agree ? 1 : 0) << ',' << std::fixed
        << std::setprecision(3) << ms_since(t0);
    return row.str();
  };
  std::vector<std::string> rows = run_seeded(seeds, jobs, job);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw braid::parse_error("cannot open " + out_path + " for writing");
    out = &file;
  }
  *out << "seed,scheme,n,agree,ms\n";
  for (const std::string& r : rows) *out << r << "\n";
  return 0;
}

int cmd_attack(const std::string& attack, const std::string& length_name, int memory, int depth,
               bool dedup, bool peaks, const std::string& seeds_spec, const std::string& out_path,
               int n, int pairs, int base_len, int vlen, int jobs) {
  auto lf = braid::length_fn_from_name(length_name);
  if (!lf) throw braid::parse_error("unknown --length " + length_name);
  std::vector<std::uint64_t> seeds = parse_seeds(seeds_spec);
  auto job = [&](std::uint64_t seed) {
    auto rng = braid::make_stream(seed, "attack");
    std::vector<braid::braid_word> bases;
    std::uniform_int_distribution<int> idx(1, n - 1);
    std::uniform_int_distribution<int> sgn(0, 1);
    auto rand_word = [&](int len) {
      braid::braid_word w;
      w.n = n;
      for (int i = 0; i < len; ++i) w.letters.push_back(sgn(rng) ? idx(rng) : -idx(rng));
      return w;
    };
    for (int i = 0; i < pairs; ++i) bases.push_back(rand_word(base_len));
    braid::braid_word v = rand_word(vlen);
    braid::attack_instance inst = braid::make_instance(n, v, bases);
    if (peaks) inst.generators = braid::peak_extend(braid::artin_alphabet(n));
    braid::attack_report rep;
    if (attack == "lba") rep = braid::lba_basic(inst, *lf);
    else if (attack == "lba-look") rep = braid::lba_lookahead(inst, *lf, depth);
    else if (attack == "lba-mem") rep = braid::lba_memory(inst, *lf, memory, dedup);
    else if (attack == "hs") rep = braid::hs_attack(inst);
    else throw braid::parse_error("unknown --attack " + attack);
    std::ostringstream row;
    row << seed << ',' << attack << ',' << length_name << ',' << n << ','
        << (rep.success ? 1 : 0) << ',' << rep.steps << ',' << std::fixed << std::setprecision(3)
        << rep.ms;
    return row.str();
  };
  std::vector<std::string> rows = run_seeded(seeds, jobs, job);
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw braid::parse_error("cannot open " + out_path + " for writing");
    out = &file;
  }
  *out << "seed,attack,length,n,success,steps,ms\n";
  for (const std::string& r : rows) *out << r << "\n";
  return 0;
}

int cmd_gen(int n, int count, int len, const std::string& dist, std::uint64_t seed) {
  braid::key_distribution d = parse_dist(dist, len);
  for (int i = 0; i < count; ++i) {
    auto rng = braid::make_stream(seed, "corpus", static_cast<std::uint64_t>(i));
    std::cout << braid::format_word(braid::draw_key(n, d, braid::index_range::all, rng)) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    config cfg = load_config();

    CLI::App app{"braid: Garside normal forms, conjugacy search, braid-group "
                 "protocols, and attacks"};
    app.require_subcommand(1);

    // nf
    std::string nf_word;
    auto* nf = app.add_subcommand("nf", "print the canonical normal form of a word");
    nf->add_option("word", nf_word, "braid word, e.g. \"B4: 1 -3 2\" or \"B4 band: (2,1)\"")
        ->required();

    // wp
    std::string wp_a, wp_b, wp_method = "nf";
    long long wp_budget = cfg.handle_budget;
    auto* wp = app.add_subcommand("wp", "decide whether two words are equal");
    wp->add_option("word", wp_a, "first word")->required();
    wp->add_option("other", wp_b, "second word (identity when omitted)");
    wp->add_option("--method", wp_method, "nf, handle, or burau");
    wp->add_option("--budget", wp_budget, "handle-reduction step budget");

    // conj
    std::string cj_x, cj_y, cj_kind = "uss", cj_graph;
    long long cj_budget = cfg.vertex_budget;
    int cj_cap = 8;
    auto* cj = app.add_subcommand("conj", "summit sets and conjugacy decision");
    cj->add_option("word", cj_x, "element whose summit set to compute")->required();
    cj->add_option("other", cj_y, "second element: decide conjugacy and print a witness");
    cj->add_option("--kind", cj_kind, "sss, uss, rsss, or sc");
    cj->add_option("--emit-graph", cj_graph, "write the edge list to this file");
    cj->add_option("--budget-vertices", cj_budget, "abort past this many vertices");
    cj->add_option("--cap", cj_cap, "strand cap for the conjugator search");

    // protocol
    std::string pr_scheme, pr_dist = cfg.dist, pr_out;
    int pr_n = cfg.n, pr_runs = 1, pr_jobs = 1;
    std::uint64_t pr_seed = cfg.seed;
    auto* pr = app.add_subcommand("protocol", "simulate a key-exchange or authentication scheme");
    pr->add_option("--scheme", pr_scheme, "aag, ko, ko-enc, sdg, or shifted")->required();
    pr->add_option("--n", pr_n, "strand count");
    pr->add_option("--seed", pr_seed, "master seed of the first run");
    pr->add_option("--dist", pr_dist, "uniform or markov[:beta]");
    pr->add_option("--runs", pr_runs, "number of seeded runs");
    pr->add_option("--jobs", pr_jobs, "worker threads");
    pr->add_option("--out", pr_out, "write CSV here instead of stdout");

    // attack
    std::string at_name, at_len = "redgar", at_seeds = "0", at_out;
    int at_mem = 16, at_depth = 2, at_n = cfg.n, at_pairs = 4, at_base = 12, at_vlen = 6,
        at_jobs = 1;
    bool at_dedup = false, at_peaks = false;
    auto* at = app.add_subcommand("attack", "benchmark an attack over seeded instances");
    at->add_option("--attack", at_name, "lba, lba-mem, lba-look, or hs")->required();
    at->add_option("--length", at_len, "gar, redgar, bkl, or redbkl");
    at->add_option("--memory", at_mem, "beam width for lba-mem");
    at->add_option("--depth", at_depth, "lookahead depth for lba-look");
    at->add_flag("--dedup", at_dedup, "drop repeated tuples in lba-mem");
    at->add_flag("--peaks", at_peaks, "extend the alphabet with conjugates and commutators");
    at->add_option("--seeds", at_seeds, "seed file, inclusive range lo..hi, or one seed");
    at->add_option("--out", at_out, "write CSV here instead of stdout");
    at->add_option("--n", at_n, "strand count");
    at->add_option("--pairs", at_pairs, "conjugate pairs per instance");
    at->add_option("--base-len", at_base, "letters per base word");
    at->add_option("--vlen", at_vlen, "letters in the hidden conjugator");
    at->add_option("--jobs", at_jobs, "worker threads");

    // gen
    int gn_n = cfg.n, gn_count = 10, gn_len = 10;
    std::string gn_dist = cfg.dist;
    std::uint64_t gn_seed = cfg.seed;
    auto* gn = app.add_subcommand("gen", "emit a corpus of random braid words");
    gn->add_option("--n", gn_n, "strand count");
    gn->add_option("--count", gn_count, "number of words");
    gn->add_option("--len", gn_len, "letters per word");
    gn->add_option("--dist", gn_dist, "uniform or markov[:beta]");
    gn->add_option("--seed", gn_seed, "master seed");

    auto* st = app.add_subcommand("selftest", "run the acceptance suite");

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e);
    } catch (const CLI::ParseError& e) {
      app.exit(e);
      return kExitUsage;
    }

    if (nf->parsed()) return cmd_nf(nf_word);
    if (wp->parsed()) return cmd_wp(wp_a, wp_b, wp_method, wp_budget);
    if (cj->parsed()) return cmd_conj(cj_x, cj_y, cj_kind, cj_graph, cj_budget, cj_cap);
    if (pr->parsed())
      return cmd_protocol(pr_scheme, pr_n, pr_seed, pr_dist, pr_runs, pr_jobs, pr_out);
    if (at->parsed())
      return cmd_attack(at_name, at_len, at_mem, at_depth, at_dedup, at_peaks, at_seeds, at_out,
                        at_n, at_pairs, at_base, at_vlen, at_jobs);
    if (gn->parsed()) return cmd_gen(gn_n, gn_count, gn_len, gn_dist, gn_seed);
    if (st->parsed()) return braid::selftest::run(std::cout) == 0 ? 0 : 1;
    return kExitUsage;
  } catch (const braid::budget_error& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const braid::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const braid::invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

#include "trinet/worddyn.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

#include "trinet/catalog.hpp"
#include "trinet/iso.hpp"

namespace trinet {

const Rule& cyclic_doubling_rule_for_checks() {
  static const Rule r = cyclic_doubling_rule();
  return r;
}

const Rule& golden_growth_rule_for_checks() {
  static const Rule r = golden_growth_rule();
  return r;
}

// ---- golden arithmetic ----

namespace {

std::int64_t isqrt64(std::int64_t x) {
  if (x < 0) throw std::invalid_argument("isqrt of negative value");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r > 0 && r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

std::int64_t floor_phi(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("floor_phi needs n >= 0");
  // 5 n^2 must stay in range; good for n up to ~1.9e9.
  return (n + isqrt64(5 * n * n)) / 2;
}

std::int64_t ceil_div_phi_sq(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("ceil_div_phi_sq needs m >= 0");
  if (m == 0) return 0;
  return 2 * m - floor_phi(m);
}

int last_tag_bit(std::int64_t i) {
  return static_cast<int>(floor_phi(i + 1) - floor_phi(i) - 1);
}

// ---- word primitives ----

std::string s_step(const std::string& w) {
  if (w.size() < 2) throw std::invalid_argument("s_step needs a word of length >= 2");
  const char first = w.front(), back = w.back();
  const std::string x = w.substr(1, w.size() - 2);
  if (first == 'A' && back == 'A') return x + "ABA";
  if (first == 'A' && back == 'B') return "BA" + x;
  if (first == 'B' && back == 'A') return "ABA" + x;
  throw std::invalid_argument("s_step has no case for a BxB word");
}

std::string tag_step(const std::string& k) {
  if (k.empty()) throw std::invalid_argument("tag_step needs a nonempty word");
  const std::string head = k.back() == '0' ? "01" : "011";
  return head + k.substr(0, k.size() - 1);
}

std::string omega(const std::string& w) {
  std::string out;
  out.reserve(w.size() * 2);
  for (char ch : w) out += (ch == '0') ? "01" : "011";
  return out;
}

std::string subst_z(int n) {
  std::string z = "0";
  for (int i = 0; i < n; ++i) z = omega(z);
  return z;
}

std::string mu(const std::string& bits) {
  std::string out;
  out.reserve(bits.size() * 2);
  for (char ch : bits) out += (ch == '0') ? "AB" : "A";
  return out;
}

std::string tog(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("tog of the empty word");
  std::string out = w;
  auto flip = [](char ch) { return ch == '0' ? '1' : '0'; };
  out.front() = flip(out.front());
  out.back() = flip(out.back());
  return out;
}

std::string rev_word(std::string w) {
  std::reverse(w.begin(), w.end());
  return w;
}

char last(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("last of the empty word");
  return w.back();
}

std::string drop_left(const std::string& w) {
  if (w.empty()) throw std::invalid_argument("drop_left of the empty word");
  return w.substr(1);
}

std::int64_t gamma_time(std::int64_t T) {
  // 2 + 2T + 2|{i<T: last(K(i))=1}|; the indicator telescopes to
  // floor(T phi) - T, leaving 2 + 2 floor(T phi).
  if (T < 0) throw std::invalid_argument("gamma_time needs T >= 0");
  return 2 + 2 * floor_phi(T);
}

// ---- engine-facing verifiers ----

std::string jseq(const SystemState& state) {
  std::string out;
  VertexId v = state.writer;
  bool red_next = true;
  const int cap = 2 * state.graph.vertex_count() + 2;
  do {
    auto s = state.graph.surroundings(v);
    out.push_back(s ? surroundings_char(*s) : '?');
    v = state.graph.neighbor(v, red_next ? Color::Red : Color::Blue);
    red_next = !red_next;
    if (static_cast<int>(out.size()) > cap)
      throw std::runtime_error("alternating red/blue walk failed to close");
  } while (v != state.writer || !red_next);
  return out;
}

CheckReport lemma1_check(int t_max, const Rule& rule) {
  CheckReport rep{"lemma1", "T in [1, " + std::to_string(t_max) + "]", true, ""};
  SystemState state = cube_state();
  std::string block;  // (bgr0)^{T+1}
  for (std::int64_t t = 0; t <= 2 * static_cast<std::int64_t>(t_max) + 1; ++t) {
    if (t >= 2) {
      const std::int64_t T = t / 2;
      block.clear();
      for (std::int64_t i = 0; i <= T; ++i) block += "bgr0";
      const std::string expect = (t % 2 == 0) ? block : "00" + block;
      if (t % 2 == 0 || T >= 1) {
        const std::string got = jseq(state);
        if (got != expect) {
          rep.pass = false;
          rep.counterexample = "t=" + std::to_string(t) + " J=" + got + " expected " + expect;
          return rep;
        }
      }
    }
    step(state, rule);
  }
  return rep;
}

ColoredTrinet simultaneous_replace(const ColoredTrinet& g,
                                   const std::function<bool(Surroundings)>& pred) {
  std::vector<VertexId> targets;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto s = g.surroundings(v);
    if (s && pred(*s)) targets.push_back(v);
  }
  ColoredTrinet out = g;
  for (VertexId v : targets) out.expand(v);  // ids below the old count are stable
  return out;
}

CheckReport theorem1_check(int n_max) {
  CheckReport rep{"theorem1", "n in [2, " + std::to_string(n_max) + "]", true, ""};
  const Rule& rule = cyclic_doubling_rule_for_checks();
  SystemState state = cube_state();
  auto rb_pred = [](Surroundings s) { return s == Surroundings::Red || s == Surroundings::Blue; };

  std::vector<ColoredTrinet> snaps;  // snapshot at 2^n - 2 for n = 2..n_max+1
  for (int n = 2; n <= n_max + 1; ++n) {
    const std::int64_t target = (std::int64_t{1} << n) - 2;
    while (state.time < target) step(state, rule);
    snaps.push_back(state.graph);
  }
  for (int n = 2; n <= n_max; ++n) {
    const ColoredTrinet replaced = simultaneous_replace(snaps[static_cast<std::size_t>(n - 2)],
                                                        rb_pred);
    if (!unrooted_iso(replaced, snaps[static_cast<std::size_t>(n - 1)])) {
      rep.pass = false;
      rep.counterexample = "n=" + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

namespace {

std::int64_t zeta(std::int64_t x, std::int64_t y) { return std::min(x + 2 * y, 2 * x); }

}  // namespace

SystemState hstate(std::int64_t T) {
  if (T < 2) throw std::invalid_argument("hstate needs T >= 2");
  int n = 1;
  while ((std::int64_t{1} << (n + 1)) - 2 <= T) ++n;
  const std::int64_t t = T - ((std::int64_t{1} << n) - 2);
  const std::int64_t M = (std::int64_t{1} << (n + 1)) + 2 * t;  // labels 0..M-1
  auto id = [](std::int64_t lbl) { return static_cast<VertexId>(lbl + 4); };

  ColoredTrinet g = ColoredTrinet::with_vertices(static_cast<int>(M + 4));
  // Red: {-1,-4}, {-3,-2} and {i, i+1 mod M} for odd i.
  g.link(id(-1), id(-4), Color::Red);
  g.link(id(-3), id(-2), Color::Red);
  for (std::int64_t i = 1; i < M; i += 2) g.link(id(i), id((i + 1) % M), Color::Red);
  // Blue: {-4,-3}, {-2,-1} and {i, i+1} for even i.
  g.link(id(-4), id(-3), Color::Blue);
  g.link(id(-2), id(-1), Color::Blue);
  for (std::int64_t i = 0; i < M; i += 2) g.link(id(i), id(i + 1), Color::Blue);
  // Green: the four legacy spokes, the doubling chords, and one chord per
  // completed update of the current traversal.
  g.link(id(-4), id(0), Color::Green);
  g.link(id(-3), id(zeta(std::int64_t{1} << (n - 1), t)), Color::Green);
  g.link(id(-2), id(zeta(std::int64_t{1} << n, t)), Color::Green);
  g.link(id(-1), id(zeta((std::int64_t{1} << (n + 1)) - (std::int64_t{1} << (n - 1)), t)),
         Color::Green);
  for (int alpha = 0; alpha <= n - 2; ++alpha)
    for (std::int64_t beta = 0; beta < (std::int64_t{1} << (n - alpha - 1)); ++beta) {
      const std::int64_t base = (std::int64_t{1} << (alpha + 2)) * beta + (std::int64_t{1} << alpha);
      g.link(id(zeta(base, t)), id(zeta(base + (std::int64_t{1} << (alpha + 1)), t)), Color::Green);
    }
  for (std::int64_t m = 0; m < t; ++m) g.link(id(4 * m + 1), id(4 * m + 3), Color::Green);

  return SystemState{std::move(g), id(4 * t + 1), T};
}

CheckReport hstate_check(std::int64_t t_max) {
  CheckReport rep{"hstate", "T in [2, " + std::to_string(t_max) + "]", true, ""};
  const Rule& rule = cyclic_doubling_rule_for_checks();
  SystemState state = cube_state();
  while (state.time < 2) step(state, rule);
  for (std::int64_t T = 2; T <= t_max; ++T) {
    const SystemState closed = hstate(T);
    if (closed.graph.invariant_violation() ||
        !rooted_iso(closed.graph, closed.writer, state.graph, state.writer)) {
      rep.pass = false;
      rep.counterexample = "T=" + std::to_string(T);
      return rep;
    }
    step(state, rule);
  }
  return rep;
}

CheckReport lemma2_check(int t_max) {
  CheckReport rep{"lemma2", "T in [0, " + std::to_string(t_max) + "]", true, ""};
  std::string s = "AA";
  std::int64_t s_time = 0;
  std::string K = "0";
  auto advance_to = [&](std::int64_t target) {
    while (s_time < target) {
      s = s_step(s);
      ++s_time;
    }
  };
  for (int T = 0; T <= t_max; ++T) {
    const std::int64_t g = gamma_time(T);
    const std::string muk = mu(K);
    advance_to(g);
    bool ok = s == "B" + muk + "A";
    if (ok) {
      advance_to(g + 1);
      ok = s == "ABA" + muk;
    }
    if (ok && last(K) == '1') {
      advance_to(g + 2);
      ok = s == "BA" + muk + "BA";
      if (ok) {
        advance_to(g + 3);
        ok = s == "ABAA" + muk + "B";
      }
    }
    if (!ok) {
      rep.pass = false;
      rep.counterexample = "T=" + std::to_string(T);
      return rep;
    }
    K = tag_step(K);
  }
  return rep;
}

CheckReport lemma3_check(int n_max) {
  CheckReport rep{"lemma3", "n in [1, " + std::to_string(n_max) + "]", true, ""};
  std::vector<std::string> z{subst_z(0)};
  for (int n = 1; n <= n_max + 1; ++n) z.push_back(omega(z.back()));
  for (int n = 1; n <= n_max; ++n) {
    std::string rhs = z[static_cast<std::size_t>(n)];
    for (int k = n; k >= 1; --k) rhs += z[static_cast<std::size_t>(k)];
    rhs += '1';
    if (z[static_cast<std::size_t>(n + 1)] != rhs) {
      rep.pass = false;
      rep.counterexample = "n=" + std::to_string(n);
      return rep;
    }
  }
  return rep;
}

CheckReport lemma4_check(int sequences, unsigned seed) {
  CheckReport rep{"lemma4", std::to_string(sequences) + " random {01,011} sequences", true, ""};
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, 24);
  std::uniform_int_distribution<int> pick(0, 1);
  for (int trial = 0; trial < sequences; ++trial) {
    const int m = len_dist(rng);
    std::vector<std::string> words;
    for (int i = 0; i < m; ++i) words.push_back(pick(rng) ? "011" : "01");
    std::string lhs, rhs;
    for (const auto& w : words) lhs += tog(w);
    rhs = drop_left(words.front());
    for (int i = 1; i < m; ++i) rhs += words[static_cast<std::size_t>(i)];
    rhs += '0';
    if (lhs != rhs) {
      rep.pass = false;
      rep.counterexample = "trial " + std::to_string(trial);
      return rep;
    }
  }
  return rep;
}

CheckReport lemma5_check(int n_max) {
  CheckReport rep{"lemma5", "n in [1, " + std::to_string(n_max) + "]", true, ""};
  std::string z = subst_z(1);
  for (int n = 1; n <= n_max; ++n) {
    if (tog(z) != rev_word(z) || z.front() != '0' || last(z) != '1') {
      rep.pass = false;
      rep.counterexample = "n=" + std::to_string(n);
      return rep;
    }
    z = omega(z);
  }
  return rep;
}

CheckReport lemma6_check(std::int64_t i_max) {
  CheckReport rep{"lemma6", "i in [0, " + std::to_string(i_max) + "]", true, ""};
  // Literal tag system on a deque so each update is O(1).
  std::deque<char> K{'0'};
  // Z-limit prefix long enough to read i_max bits.
  std::string z = "0";
  while (static_cast<std::int64_t>(z.size()) <= i_max) z = omega(z);
  for (std::int64_t i = 0; i <= i_max; ++i) {
    const int from_tag = K.back() - '0';
    const int from_limit = z[static_cast<std::size_t>(i)] - '0';
    const int from_formula = last_tag_bit(i);
    if (from_tag != from_limit || from_tag != from_formula) {
      rep.pass = false;
      rep.counterexample = "i=" + std::to_string(i) + " tag=" + std::to_string(from_tag) +
                           " limit=" + std::to_string(from_limit) +
                           " formula=" + std::to_string(from_formula);
      return rep;
    }
    const char consumed = K.back();
    K.pop_back();
    if (consumed == '0') {
      K.push_front('1');
      K.push_front('0');
    } else {
      K.push_front('1');
      K.push_front('1');
      K.push_front('0');
    }
  }
  return rep;
}

std::int64_t theorem2_count(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("theorem2_count needs t >= 0");
  return 8 + 2 * ceil_div_phi_sq(t / 2) + 2 * ((t + 1) / 2);
}

Surroundings corollary2_type(std::int64_t t) {
  if (t < 0) throw std::invalid_argument("corollary2_type needs t >= 0");
  if (t == 0 || t == 1) return Surroundings::None;
  if (t % 2 == 0) return Surroundings::Blue;
  // Odd t >= 3: type 0 exactly when (t-3)/2 = floor((n+1) phi) + n for some n.
  const std::int64_t q = (t - 3) / 2;
  std::int64_t lo = 0, hi = q;
  while (lo <= hi) {
    const std::int64_t n = lo + (hi - lo) / 2;
    const std::int64_t f = floor_phi(n + 1) + n;
    if (f == q) return Surroundings::None;
    if (f < q)
      lo = n + 1;
    else
      hi = n - 1;
  }
  return Surroundings::Red;
}

CheckReport theorem2_check(std::int64_t t_max) {
  CheckReport rep{"theorem2", "t in [0, " + std::to_string(t_max) + "]", true, ""};
  std::int64_t blues = 0, nones = 0;
  for (std::int64_t t = 0; t <= t_max; ++t) {
    const std::int64_t counted = 8 + 2 * blues + 2 * nones;
    if (theorem2_count(t) != counted) {
      rep.pass = false;
      rep.counterexample = "t=" + std::to_string(t) + " closed=" +
                           std::to_string(theorem2_count(t)) + " counted=" +
                           std::to_string(counted);
      return rep;
    }
    const Surroundings s = corollary2_type(t);
    blues += s == Surroundings::Blue;
    nones += s == Surroundings::None;
  }
  return rep;
}

BounceReport bounce_conjecture_check(int n_max, const Rule& rule,
                                     const std::function<bool(Surroundings)>& pred) {
  BounceReport out;
  auto family = [&](bool additive) {
    std::vector<BounceOutcome> results;
    SystemState state = cube_state();
    std::int64_t horizon = 0;
    std::vector<std::pair<std::int64_t, ColoredTrinet>> snaps;
    auto time_at = [&](int n) {
      const std::int64_t base = std::int64_t{1} << (n + 2);
      return additive ? base + n - 1 : base - n - 1;
    };
    for (int n = 0; n <= n_max + 1; ++n) horizon = std::max(horizon, time_at(n));
    std::vector<std::int64_t> wanted;
    for (int n = 0; n <= n_max + 1; ++n) wanted.push_back(time_at(n));
    while (state.time <= horizon) {
      if (std::find(wanted.begin(), wanted.end(), state.time) != wanted.end())
        snaps.emplace_back(state.time, state.graph);
      step(state, rule);
    }
    auto graph_at = [&](std::int64_t t) -> const ColoredTrinet* {
      for (const auto& [time, g] : snaps)
        if (time == t) return &g;
      return nullptr;
    };
    for (int n = 0; n <= n_max; ++n) {
      const std::int64_t from = time_at(n);
      const std::int64_t to = time_at(n + 1);
      const ColoredTrinet* gfrom = graph_at(from);
      const ColoredTrinet* gto = graph_at(to);
      bool matched = false;
      if (gfrom && gto && from >= 0) matched = unrooted_iso(simultaneous_replace(*gfrom, pred), *gto);
      results.push_back(BounceOutcome{n, from, to, matched});
    }
    return results;
  };
  out.additive = family(true);
  out.subtractive = family(false);
  return out;
}

}  // namespace trinet

#include <doctest.h>

#include <cstdint>
#include <deque>
#include <string>

#include "trinet/catalog.hpp"
#include "trinet/iso.hpp"
#include "trinet/worddyn.hpp"

using namespace trinet;

TEST_CASE("track word updates follow the three cases") {
  CHECK(s_step("AA") == "ABA");
  CHECK(s_step("ABA") == "BABA");
  CHECK(s_step("BABA") == "ABAAB");  // the listed s(3)
  CHECK(s_step("AAB") == "BAA");     // AxB rotates without growth
  CHECK(s_step("AAB").size() == 3);
  CHECK_THROWS(s_step("B"));
  CHECK_THROWS(s_step("BAB"));
}

TEST_CASE("tag system listing") {
  std::string k = "0";
  CHECK((k = tag_step(k)) == "01");
  CHECK((k = tag_step(k)) == "0110");
  CHECK((k = tag_step(k)) == "01011");
  // Length grows by 1 or 2 per step.
  for (int i = 0; i < 50; ++i) {
    const std::size_t before = k.size();
    k = tag_step(k);
    CHECK(k.size() >= before + 1);
    CHECK(k.size() <= before + 2);
  }
}

TEST_CASE("substitution system listing") {
  CHECK(subst_z(0) == "0");
  CHECK(subst_z(1) == "01");
  CHECK(subst_z(2) == "01011");
  CHECK(subst_z(3) == "0101101011011");
}

TEST_CASE("word utilities") {
  CHECK(mu("01") == "ABA");
  CHECK(mu("0") == "AB");
  CHECK(tog("01") == "10");  // the lemma's base case
  CHECK(tog("011") == "110");
  CHECK(tog("01") == drop_left("01") + "0");
  CHECK(rev_word(rev_word("0110101")) == "0110101");
  CHECK(last("0110") == '0');
  CHECK_THROWS(tog(""));
  CHECK_THROWS(last(""));
}

TEST_CASE("golden integer arithmetic against a rational-interval oracle") {
  // Consecutive Fibonacci ratios straddle phi from alternating sides, so
  // F(80)/F(79) < phi < F(81)/F(80). When both rational bounds agree on a
  // floor, the value is certified without any irrational arithmetic.
  std::int64_t f79 = 1, f80 = 1;
  for (int i = 2; i <= 80; ++i) {
    const std::int64_t next = f79 + f80;
    f79 = f80;
    f80 = next;
  }
  const std::int64_t f81 = f79 + f80;
  auto floor_ratio = [](std::int64_t n, std::int64_t p, std::int64_t q) {
    return static_cast<std::int64_t>((static_cast<__int128>(n) * p) / q);
  };
  for (std::int64_t n : {1, 2, 3, 5, 10, 100, 1234, 99999, 1000000}) {
    const std::int64_t lo = floor_ratio(n, f80, f79);
    const std::int64_t hi = floor_ratio(n, f81, f80);
    REQUIRE(lo == hi);  // interval tight enough to certify
    CHECK(floor_phi(n) == lo);
  }
  CHECK(floor_phi(0) == 0);
  CHECK(floor_phi(1) == 1);
  CHECK(floor_phi(2) == 3);
  CHECK(floor_phi(3) == 4);
  CHECK(floor_phi(4) == 6);

  // ceil(m / phi^2) via the same intervals: 1/phi^2 = 2 - phi lies between
  // 2 - F(81)/F(80) and 2 - F(80)/F(79); m(2 - phi) is irrational, so its
  // ceiling is the shared floor plus one.
  for (std::int64_t m : {1, 2, 3, 7, 50, 777, 99999}) {
    const std::int64_t floor_lo = floor_ratio(m, 2 * f80 - f81, f80);
    const std::int64_t floor_hi = floor_ratio(m, 2 * f79 - f80, f79);
    REQUIRE(floor_lo == floor_hi);
    CHECK(ceil_div_phi_sq(m) == floor_lo + 1);
  }
  CHECK(ceil_div_phi_sq(0) == 0);
}

TEST_CASE("gamma closed form matches the literal tag system") {
  CHECK(gamma_time(0) == 2);
  CHECK(gamma_time(1) == 4);  // last(K(0)) = 0
  std::deque<char> k{'0'};
  std::int64_t ones = 0;
  for (std::int64_t T = 0; T <= 10'000; ++T) {
    CHECK(gamma_time(T) == 2 + 2 * T + 2 * ones);
    // strictly increasing with steps of 2 or 4
    const std::int64_t gap = gamma_time(T + 1) - gamma_time(T);
    CHECK((gap == 2 || gap == 4));
    ones += k.back() == '1';
    const char c = k.back();
    k.pop_back();
    if (c == '0') {
      k.push_front('1');
      k.push_front('0');
    } else {
      k.push_front('1');
      k.push_front('1');
      k.push_front('0');
    }
  }
}

TEST_CASE("positions of ones follow the Beatty sequence") {
  // Index of the T-th 1 in the limit word is floor((T+1) phi): 1, 3, 4, 6, 8...
  std::string z = subst_z(10);
  std::vector<std::int64_t> ones;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(z.size()); ++i)
    if (z[static_cast<std::size_t>(i)] == '1') ones.push_back(i);
  REQUIRE(ones.size() >= 5);
  CHECK(ones[0] == 1);
  CHECK(ones[1] == 3);
  CHECK(ones[2] == 4);
  CHECK(ones[3] == 6);
  CHECK(ones[4] == 8);
  for (std::size_t T = 0; T < std::min<std::size_t>(ones.size(), 500); ++T)
    CHECK(ones[T] == floor_phi(static_cast<std::int64_t>(T) + 1));
}

TEST_CASE("lemma checks pass on short ranges") {
  CHECK(lemma2_check(300).pass);
  CHECK(lemma3_check(10).pass);
  CHECK(lemma4_check(200).pass);
  CHECK(lemma5_check(10).pass);
  CHECK(lemma6_check(20'000).pass);
}

TEST_CASE("jseq on the cube is all zeros") {
  CHECK(jseq(cube_state()) == "0000");
}

TEST_CASE("surroundings words along the doubling run") {
  SystemState state = cube_state();
  const Rule rule = cyclic_doubling_rule();
  step(state, rule);
  step(state, rule);
  CHECK(jseq(state) == "bgr0bgr0");  // J(2)
  step(state, rule);
  CHECK(jseq(state) == "00bgr0bgr0");  // J(3)
  CHECK(lemma1_check(100).pass);
  // The writer of the doubling rule only ever sees types b and 0, so a
  // perturbed red clause changes nothing; perturbing the blue clause is the
  // effective negative control.
  Rule red_perturbed = cyclic_doubling_rule();
  red_perturbed.action(Surroundings::Red) =
      Action{RewriteKind::Keep, MoveWord{Color::Red, Color::Blue}, {}};
  CHECK(lemma1_check(100, red_perturbed).pass);
  Rule broken = cyclic_doubling_rule();
  broken.action(Surroundings::Blue) =
      Action{RewriteKind::Expand, MoveWord{Color::Blue, Color::Red}, {}};
  CHECK(!lemma1_check(100, broken).pass);
}

TEST_CASE("simultaneous replacement basics") {
  const ColoredTrinet cube = make_cube();
  const ColoredTrinet same = simultaneous_replace(cube, [](Surroundings) { return false; });
  CHECK(same == cube);
  const ColoredTrinet all = simultaneous_replace(cube, [](Surroundings s) {
    return s == Surroundings::None;
  });
  CHECK(all.vertex_count() == 8 + 2 * 8);
  CHECK(!all.invariant_violation());
}

TEST_CASE("doubling rule satisfies the replacement theorem for small n") {
  const CheckReport rep = theorem1_check(5);
  CHECK(rep.pass);
  // Wrong predicate is a negative control.
  SystemState state = cube_state();
  const Rule rule = cyclic_doubling_rule();
  while (state.time < 2) step(state, rule);
  const ColoredTrinet g2 = state.graph;
  while (state.time < 6) step(state, rule);
  const ColoredTrinet wrong =
      simultaneous_replace(g2, [](Surroundings s) { return s == Surroundings::Green; });
  CHECK(!unrooted_iso(wrong, state.graph));
}

TEST_CASE("closed-form state small cases") {
  const SystemState h2 = hstate(2);
  CHECK(h2.graph.vertex_count() == 12);
  CHECK(h2.writer == hstate_id_of_label(1));
  CHECK(!h2.graph.invariant_violation());
  const SystemState h3 = hstate(3);
  CHECK(h3.graph.vertex_count() == 14);
  CHECK(h3.writer == hstate_id_of_label(5));
  CHECK_THROWS(hstate(1));
  // Growth per update is exactly two vertices.
  for (std::int64_t T = 2; T <= 40; ++T)
    CHECK(hstate(T).graph.vertex_count() == 8 + 2 * T);
  CHECK(hstate_check(150).pass);
  // Negative control: shifting the writer off its closed-form label breaks
  // the rooted correspondence.
  SystemState sim = cube_state();
  const Rule rule = cyclic_doubling_rule();
  while (sim.time < 7) step(sim, rule);
  SystemState h7 = hstate(7);
  h7.writer = h7.graph.neighbor(h7.writer, Color::Red);
  CHECK(!rooted_iso(h7.graph, h7.writer, sim.graph, sim.writer));
}

TEST_CASE("golden closed form counts") {
  CHECK(theorem2_count(0) == 8);
  CHECK(theorem2_count(1) == 10);
  CHECK(theorem2_count(2) == 12);
  for (std::int64_t t = 1; t <= 5'000; ++t) {
    const std::int64_t gap = theorem2_count(t) - theorem2_count(t - 1);
    CHECK((gap == 0 || gap == 2));
  }
  CHECK(theorem2_check(10'000).pass);
}

TEST_CASE("type sequence closed form") {
  CHECK(corollary2_type(0) == Surroundings::None);
  CHECK(corollary2_type(1) == Surroundings::None);
  CHECK(corollary2_type(2) == Surroundings::Blue);
  // {h >= 2 : type 0} enumerated two ways.
  std::vector<std::int64_t> by_scan;
  for (std::int64_t t = 2; t <= 10'000; ++t)
    if (corollary2_type(t) == Surroundings::None) by_scan.push_back(t);
  std::vector<std::int64_t> by_formula;
  for (std::int64_t n = 0;; ++n) {
    const std::int64_t h = 3 + 2 * floor_phi(n + 1) + 2 * n;
    if (h > 10'000) break;
    by_formula.push_back(h);
  }
  CHECK(by_scan == by_formula);
}

TEST_CASE("golden rule simulation matches the closed form") {
  // The strongest cross-check in the module: the transcribed rule must
  // reproduce both the type sequence and the count formula, step by step.
  SystemState state = cube_state();
  const Rule rule = golden_growth_rule();
  for (std::int64_t t = 0; t <= 3'000; ++t) {
    CHECK(state.graph.vertex_count() == theorem2_count(t));
    const auto s = state.graph.surroundings(state.writer);
    REQUIRE(s.has_value());
    CHECK(*s == corollary2_type(t));
    step(state, rule);
  }
}

TEST_CASE("golden rule track word matches the iterated s system") {
  SystemState state = cube_state();
  const Rule rule = golden_growth_rule();
  std::string s = "AA";
  for (int t = 0; t <= 400; ++t) {
    // Read the track word from the graph: kinds of X[r], X[rbr], ... around
    // the alternating cycle; A when the type is 0, B when it is green.
    std::string got;
    VertexId v = state.graph.neighbor(state.writer, Color::Red);
    for (;;) {
      const auto type = state.graph.surroundings(v);
      REQUIRE(type.has_value());
      got.push_back(*type == Surroundings::None ? 'A' : 'B');
      v = state.graph.walk(v, MoveWord{Color::Blue, Color::Red});
      if (v == state.graph.neighbor(state.writer, Color::Red)) break;
    }
    CHECK(got == s);
    step(state, rule);
    s = s_step(s);
  }
}

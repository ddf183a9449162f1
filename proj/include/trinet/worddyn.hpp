#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "trinet/graph.hpp"
#include "trinet/rule.hpp"
#include "trinet/system.hpp"

namespace trinet {

// One-dimensional word systems and the mechanical verifiers that tie them to
// the rewriting engine. Words are plain strings over small alphabets:
// {r,b,g,0} for surroundings sequences, {A,B} for the track word, {0,1} for
// the tag and substitution systems.

struct CheckReport {
  std::string name;
  std::string range;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

// Catalog bridges, so verifiers can default to the rules they certify.
const Rule& cyclic_doubling_rule_for_checks();
const Rule& golden_growth_rule_for_checks();

// ---- exact golden-ratio integer arithmetic ----

// floor(n * phi) for n >= 0, computed as (n + isqrt(5 n^2)) / 2. Exact: since
// sqrt(5 n^2) is irrational for n >= 1, flooring the integer square root
// first cannot cross an integer boundary.
std::int64_t floor_phi(std::int64_t n);

// ceil(m / phi^2) for m >= 0 via 1/phi^2 = 2 - phi, so the value is
// 2 m - floor(m phi) for m >= 1 and 0 for m = 0.
std::int64_t ceil_div_phi_sq(std::int64_t m);

// last(K(i)) under the tag system below, via the Beatty-difference formula
// floor((i+1) phi) - floor(i phi) - 1.
int last_tag_bit(std::int64_t i);

// ---- word primitives ----

// One update of the track word: AxA -> xABA, AxB -> BAx, BxA -> ABAx.
// Throws std::invalid_argument for |w| < 2 or a BxB word, which never arises
// from the AA start.
std::string s_step(const std::string& w);

// One update of the boundary tag system: x0 -> 01x, x1 -> 011x.
std::string tag_step(const std::string& k);

// n-fold parallel substitution 0 -> 01, 1 -> 011 applied to "0".
std::string subst_z(int n);
std::string omega(const std::string& w);  // one parallel substitution pass

std::string mu(const std::string& bits);  // 0 -> AB, 1 -> A
std::string tog(const std::string& w);    // flip first and last bits
std::string rev_word(std::string w);
char last(const std::string& w);
std::string drop_left(const std::string& w);  // the L operator

// s-time: gamma(T) = 2 + 2T + 2|{i < T : last(K(i)) = 1}|, reduced with the
// closed form to 2 + 2 floor(T phi).
std::int64_t gamma_time(std::int64_t T);

// ---- verifiers ----

// Walks the alternating red/blue cycle from the writer and returns the word
// of surroundings types met along it (even positions via (rb)^k, odd via
// r(br)^k). '?' marks an undefined (multi-linked) type; never produced by the
// canonical space.
std::string jseq(const SystemState& state);

// Asserts J(2T) = (bgr0)^{T+1} and J(2T+1) = 00(bgr0)^{T+1} for T in
// [1, t_max] while simulating `rule` (the doubling rule by default) from the
// cube.
CheckReport lemma1_check(int t_max, const Rule& rule = cyclic_doubling_rule_for_checks());

// Expands every vertex satisfying `pred` in one pass; selection is computed
// on the input graph.
ColoredTrinet simultaneous_replace(const ColoredTrinet& g,
                                   const std::function<bool(Surroundings)>& pred);

// For n in [2, n_max]: replacing every type-r/b vertex of the step-(2^n - 2)
// network simultaneously yields the step-(2^{n+1} - 2) network.
CheckReport theorem1_check(int n_max);

// The closed-form state for the doubling rule at time T >= 2, built on
// labels {-4, ..., 2^{n+1} + 2t - 1} shifted into dense ids by +4; the writer
// sits at label 4t + 1.
SystemState hstate(std::int64_t T);
// Dense id of the vertex carrying closed-form label `lbl`.
inline VertexId hstate_id_of_label(std::int64_t lbl) { return static_cast<VertexId>(lbl + 4); }

// Rooted isomorphism (writer to writer) between hstate(T) and the simulated
// doubling rule for every T in [2, t_max].
CheckReport hstate_check(std::int64_t t_max);

// Word identities s(gamma(T)) = B mu(K(T)) A etc. for T in [0, t_max].
CheckReport lemma2_check(int t_max);
// Z(n+1) = Z(n) Z(n) Z(n-1) ... Z(1) 1 for n in [1, n_max].
CheckReport lemma3_check(int n_max);
// tog(a1)...(am) = L(a1) a2 ... am 0 over random {01,011} sequences.
CheckReport lemma4_check(int sequences, unsigned seed = 12345);
// tog(Z(n)) = rev(Z(n)) for n in [1, n_max].
CheckReport lemma5_check(int n_max);
// last(K(i)) = limit-word bit = Beatty difference, for i in [0, i_max].
CheckReport lemma6_check(std::int64_t i_max);

// Exact vertex count of the golden rule at time t.
std::int64_t theorem2_count(std::int64_t t);

// The writer's surroundings type at time t under the golden rule, from the
// closed form: blue at positive even times, none at t in {0,1} and at
// t = 3 + 2 floor((n+1) phi) + 2n, red otherwise.
Surroundings corollary2_type(std::int64_t t);

// theorem2_count(t) == 8 + 2 #{i<t: type b} + 2 #{i<t: type 0} with types
// from corollary2_type, for all t in [0, t_max].
CheckReport theorem2_check(std::int64_t t_max);

// Exploratory (report-only): does simultaneous replacement under `pred` map
// the state at one conjectured traversal time to the next? Evaluates both
// time families 2^{n+2}+n-1 and 2^{n+2}-n-1 for n in [0, n_max].
struct BounceOutcome {
  int n;
  std::int64_t from_time, to_time;
  bool matched;
};
struct BounceReport {
  std::vector<BounceOutcome> additive;     // times 2^{n+2} + n - 1
  std::vector<BounceOutcome> subtractive;  // times 2^{n+2} - n - 1
};
BounceReport bounce_conjecture_check(int n_max, const Rule& rule,
                                     const std::function<bool(Surroundings)>& pred);

}  // namespace trinet

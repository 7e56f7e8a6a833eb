#pragma once

// Shared fixtures and test-only reference implementations. The reference
// code here deliberately avoids the library's own algorithms wherever it
// serves as ground truth.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "raag/conjugacy.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/growth.hpp"
#include "raag/io.hpp"
#include "raag/oracle.hpp"
#include "raag/piling.hpp"
#include "raag/twisted.hpp"
#include "raag/word.hpp"

namespace testutil {

using namespace raag;

// The running 4-vertex example: [a1,a4] = [a2,a3] = [a2,a4] = 1.
inline DefiningGraph example_graph() {
  return DefiningGraph({"a1", "a2", "a3", "a4"}, {{0, 3}, {1, 2}, {1, 3}});
}

// phi: a2 -> a2^-1, a4 -> a4^-1.
inline LengthPreservingAut example_inversion(const DefiningGraph& g) {
  return validate_aut(g, {0, 1, 2, 3}, {1, -1, 1, -1});
}

// phi: a1 <-> a3, a2 <-> a4.
inline LengthPreservingAut example_swap(const DefiningGraph& g) {
  return validate_aut(g, {2, 3, 0, 1}, {1, 1, 1, 1});
}

inline Word w(const DefiningGraph& g, const std::string& text) {
  return parse_word(g, text);
}

using Rng = std::mt19937_64;

inline Word random_word(const DefiningGraph& g, std::size_t len, Rng& rng) {
  std::uniform_int_distribution<int> vertex(0, g.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  Word out{&g, {}};
  out.letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    out.letters.push_back({vertex(rng), coin(rng) ? 1 : -1});
  return out;
}

inline DefiningGraph random_graph(int min_r, int max_r, Rng& rng) {
  std::uniform_int_distribution<int> size(min_r, max_r);
  std::uniform_real_distribution<double> prob(0.0, 1.0);
  int r = size(rng);
  std::vector<std::string> names;
  for (int i = 0; i < r; ++i) names.push_back("v" + std::to_string(i));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j)
      if (prob(rng) < 0.5) edges.emplace_back(i, j);
  return DefiningGraph(std::move(names), edges);
}

/// Applies `moves` random relator moves: adjacent commuting swaps, free
/// insertions, and free deletions. The result represents the same element.
inline Word shuffle_word(const Word& input, int moves, Rng& rng) {
  const DefiningGraph& g = *input.graph;
  std::vector<Letter> letters = input.letters;
  std::uniform_int_distribution<int> kind(0, 2);
  std::uniform_int_distribution<int> vertex(0, g.size() - 1);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int step = 0; step < moves; ++step) {
    int which = kind(rng);
    if (which == 0 && letters.size() >= 2) {  // commuting swap
      std::uniform_int_distribution<std::size_t> pos(0, letters.size() - 2);
      std::size_t i = pos(rng);
      if (letters[i].vertex != letters[i + 1].vertex &&
          g.adjacent(letters[i].vertex, letters[i + 1].vertex))
        std::swap(letters[i], letters[i + 1]);
    } else if (which == 1) {  // free insertion
      std::uniform_int_distribution<std::size_t> pos(0, letters.size());
      std::size_t i = pos(rng);
      Letter x{vertex(rng), coin(rng) ? 1 : -1};
      letters.insert(letters.begin() + i, {x, x.inverse()});
    } else if (letters.size() >= 2) {  // free deletion
      std::uniform_int_distribution<std::size_t> pos(0, letters.size() - 2);
      std::size_t i = pos(rng);
      if (letters[i].vertex == letters[i + 1].vertex &&
          letters[i].sign == -letters[i + 1].sign)
        letters.erase(letters.begin() + i, letters.begin() + i + 2);
    }
  }
  return Word{&g, std::move(letters)};
}

/// Swaps one adjacent non-commuting pair of distinct vertices, which
/// always changes the element. Returns nothing if no such pair exists.
inline std::optional<Word> perturb_word(const Word& input, Rng& rng) {
  const DefiningGraph& g = *input.graph;
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i + 1 < input.size(); ++i)
    if (input[i].vertex != input[i + 1].vertex &&
        !g.adjacent(input[i].vertex, input[i + 1].vertex))
      candidates.push_back(i);
  if (candidates.empty()) return std::nullopt;
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  std::size_t i = candidates[pick(rng)];
  Word out = input;
  std::swap(out.letters[i], out.letters[i + 1]);
  return out;
}

// ---- test-only reference piling construction (independent of raag::Piling)

struct RefPiling {
  std::vector<std::vector<int>> stacks;
};

inline RefPiling ref_build(const DefiningGraph& g, const Word& word) {
  RefPiling p{std::vector<std::vector<int>>(g.size())};
  for (const Letter& x : word.letters) {
    auto& st = p.stacks[x.vertex];
    if (!st.empty() && st.back() == -x.sign) {
      st.pop_back();
      for (int j = 0; j < g.size(); ++j)
        if (j != x.vertex && !g.adjacent(j, x.vertex)) p.stacks[j].pop_back();
    } else {
      st.push_back(x.sign);
      for (int j = 0; j < g.size(); ++j)
        if (j != x.vertex && !g.adjacent(j, x.vertex)) p.stacks[j].push_back(0);
    }
  }
  return p;
}

inline bool ref_matches(const RefPiling& a, const Piling& b) {
  for (int v = 0; v < b.stack_count(); ++v) {
    const auto& st = b.stack(v);
    if (a.stacks[v].size() != st.size()) return false;
    for (std::size_t i = 0; i < st.size(); ++i)
      if (a.stacks[v][i] != st[i]) return false;
  }
  return true;
}

// ---- independent conjugacy-class ground truth at desk scale

inline std::string word_key(const Word& word) {
  std::string s;
  for (const Letter& x : word.letters)
    s += std::to_string(x.vertex) + (x.sign > 0 ? "+" : "-");
  return s;
}

inline std::string normal_key(const Word& word) {
  return word_key(extract_normal_word(build_piling(word)));
}

/// All elements conjugate to `seed` with length <= cap, reached by
/// single-letter conjugations with at most `depth` steps. Witnesses
/// compose, so this is the bound-`depth` conjugator search organized
/// breadth-first.
inline std::set<std::string> conjugation_orbit(const Word& seed, std::size_t cap,
                                               int depth) {
  const DefiningGraph& g = *seed.graph;
  Word start = extract_normal_word(build_piling(seed));
  std::set<std::string> seen{word_key(start)};
  std::deque<std::pair<Word, int>> frontier{{start, 0}};
  while (!frontier.empty()) {
    auto [current, d] = std::move(frontier.front());
    frontier.pop_front();
    if (d == depth) continue;
    for (int v = 0; v < g.size(); ++v)
      for (int sign : {1, -1}) {
        Word x{&g, {{v, sign}}};
        Word next = extract_normal_word(
            build_piling(x.inverse().concat(current).concat(x)));
        if (next.size() > cap) continue;
        if (seen.insert(word_key(next)).second) frontier.push_back({next, d + 1});
      }
  }
  return seen;
}

/// Twisted analogue: closure under w -> nf(phi(x)^-1 w x).
inline std::set<std::string> twisted_orbit(const Word& seed,
                                           const LengthPreservingAut& phi,
                                           std::size_t cap, int depth) {
  const DefiningGraph& g = *seed.graph;
  Word start = extract_normal_word(build_piling(seed));
  std::set<std::string> seen{word_key(start)};
  std::deque<std::pair<Word, int>> frontier{{start, 0}};
  while (!frontier.empty()) {
    auto [current, d] = std::move(frontier.front());
    frontier.pop_front();
    if (d == depth) continue;
    for (int v = 0; v < g.size(); ++v)
      for (int sign : {1, -1}) {
        Word x{&g, {{v, sign}}};
        Word next = extract_normal_word(build_piling(
            apply_aut(phi, x, 1).inverse().concat(current).concat(x)));
        if (next.size() > cap) continue;
        if (seen.insert(word_key(next)).second) frontier.push_back({next, d + 1});
      }
  }
  return seen;
}

// ---- independent counting oracles for growth tables

/// Conjugacy classes of the free group F_{r} of length exactly n:
/// cyclically reduced necklaces over 2r letters up to rotation.
inline long long necklace_count(int rank, int n) {
  if (n == 0) return 1;
  const int radix = 2 * rank;
  auto inverse_of = [](int code) { return code % 2 == 0 ? code + 1 : code - 1; };
  std::set<std::string> canonical;
  std::vector<int> digits(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      if (digits[(i + 1) % n] == inverse_of(digits[i])) ok = false;
    if (ok) {
      std::string best;
      for (int rot = 0; rot < n; ++rot) {
        std::string s;
        for (int i = 0; i < n; ++i)
          s.push_back(static_cast<char>('a' + digits[(rot + i) % n]));
        if (best.empty() || s < best) best = s;
      }
      canonical.insert(best);
    }
    int pos = n - 1;
    while (pos >= 0 && digits[pos] == radix - 1) digits[pos--] = 0;
    if (pos < 0) break;
    ++digits[pos];
  }
  return static_cast<long long>(canonical.size());
}

/// Brute-force base-order shortlex minimum of the shuffle class of the
/// reduced form (smallest generators first), independent of extraction.
inline Word base_shortlex_min(const Word& u) {
  Word reduced = oracle::oracle_reduce(u);
  const DefiningGraph& g = *u.graph;
  auto less_base = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i].base_rank() != b[i].base_rank())
        return a[i].base_rank() < b[i].base_rank();
    return false;
  };
  std::set<std::string> seen{word_key(reduced)};
  std::deque<std::vector<Letter>> frontier{reduced.letters};
  Word best = reduced;
  while (!frontier.empty()) {
    std::vector<Letter> current = std::move(frontier.front());
    frontier.pop_front();
    Word cur{u.graph, current};
    if (less_base(cur, best)) best = cur;
    for (std::size_t i = 0; i + 1 < current.size(); ++i)
      if (current[i].vertex != current[i + 1].vertex &&
          g.adjacent(current[i].vertex, current[i + 1].vertex)) {
        std::vector<Letter> next = current;
        std::swap(next[i], next[i + 1]);
        Word nw{u.graph, next};
        if (seen.insert(word_key(nw)).second) frontier.push_back(std::move(next));
      }
  }
  return best;
}

/// Lattice points of Z^r with 1-norm exactly n.
inline long long zr_sphere_count(int r, int n) {
  if (n == 0) return 1;
  auto binom = [](long long a, long long b) {
    if (b < 0 || b > a) return 0LL;
    long long result = 1;
    for (long long i = 0; i < b; ++i) result = result * (a - i) / (i + 1);
    return result;
  };
  long long total = 0;
  for (int k = 1; k <= std::min(r, n); ++k)
    total += binom(r, k) * (1LL << k) * binom(n - 1, k - 1);
  return total;
}

}  // namespace testutil

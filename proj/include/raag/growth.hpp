#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/piling.hpp"
#include "raag/twisted.hpp"
#include "raag/word.hpp"

namespace raag {

/// c(0), c(1), ..., one coefficient per row of the emitted table. The
/// tables are finite empirical truncations; nothing about the analytic
/// nature of the full series follows from them.
struct GrowthTable {
  std::vector<long long> coefficients;
  std::string metric_note;
};

struct GrowthBudget {
  int max_length = 12;
  std::size_t max_nodes = 5000000;
};

/// Conjugacy growth of A_Gamma over X: enumerate normal-form geodesics of
/// length <= N depth-first (the normal-form language is prefix closed),
/// key each by its conjugacy class, and tally classes by minimal length.
inline GrowthTable raag_conj_growth(const DefiningGraph& g, int max_length,
                                    GrowthBudget budget = {}) {
  if (max_length < 0 || max_length > budget.max_length)
    throw BudgetExceeded("growth length budget is " + std::to_string(budget.max_length));
  std::map<std::string, int> class_min;
  std::size_t nodes = 0;

  auto record = [&](const Word& w) {
    std::string key = class_key(w).to_string();
    auto [it, fresh] = class_min.emplace(key, static_cast<int>(w.size()));
    if (!fresh) it->second = std::min(it->second, static_cast<int>(w.size()));
  };

  Word current{&g, {}};
  record(current);
  // iterative DFS over normal prefixes
  std::vector<int> digits;
  const int radix = 2 * g.size();
  auto word_of = [&](const std::vector<int>& ds) {
    Word w{&g, {}};
    for (int d : ds) w.letters.push_back({d / 2, d % 2 == 0 ? 1 : -1});
    return w;
  };
  digits.push_back(0);
  while (!digits.empty()) {
    bool descend = false;
    if (digits.back() < radix) {
      Word w = word_of(digits);
      if (extract_normal_word(build_piling(w)) == w) {
        if (++nodes > budget.max_nodes)
          throw BudgetExceeded("growth node budget exceeded");
        record(w);
        if (static_cast<int>(digits.size()) < max_length) {
          digits.push_back(0);
          descend = true;
        }
      }
    }
    if (!descend) {
      while (!digits.empty() && ++digits.back() >= radix) digits.pop_back();
    }
  }

  GrowthTable table;
  table.coefficients.assign(max_length + 1, 0);
  for (const auto& [key, min_len] : class_min)
    if (min_len <= max_length) ++table.coefficients[min_len];
  table.metric_note = "generating set X = V(Gamma)^+-";
  return table;
}

namespace detail {

inline std::string ext_key(const ExtElement& e) {
  std::string s;
  for (const Letter& x : e.base.letters)
    s += std::to_string(x.vertex) + (x.sign > 0 ? "+" : "-");
  s += "|t^" + std::to_string(e.texp);
  return s;
}

/// Conjugacy-class key of (u, a) in A_phi: a together with the set of
/// minimal twisted class-set representatives of phi^k(u) under phi^a,
/// over all k. Two elements are conjugate iff their keys coincide.
inline std::string ext_class_key(const ExtElement& e,
                                 std::map<std::string, std::string>& cache,
                                 std::size_t budget) {
  const LengthPreservingAut& phi = *e.aut;
  LengthPreservingAut phi_a = phi.power(e.texp);
  std::set<std::string> reps;
  for (int k = 0; k < phi.order(); ++k) {
    Word image = apply_aut(phi, e.base, k);
    std::string cache_key = detail::ext_key({e.aut, image, e.texp});
    auto it = cache.find(cache_key);
    if (it == cache.end()) {
      Word rep = twisted_class_set(image, phi_a, budget).min_rep;
      std::string s;
      for (const Letter& x : rep.letters)
        s += std::to_string(x.vertex) + (x.sign > 0 ? "+" : "-");
      it = cache.emplace(cache_key, std::move(s)).first;
    }
    reps.insert(it->second);
  }
  std::string key = "t^" + std::to_string(e.texp) + ":";
  for (const auto& r : reps) key += r + ";";
  return key;
}

}  // namespace detail

/// Ball of radius `max_length` in A_phi over X and t^+-, as element -> BFS
/// depth, with deterministic canonical element keys.
inline std::map<std::string, std::pair<ExtElement, int>> ext_ball(
    const LengthPreservingAut& phi, int radius, std::size_t max_nodes) {
  const DefiningGraph& g = *phi.graph();
  std::vector<ExtElement> generators;
  for (int v = 0; v < g.size(); ++v)
    for (int sign : {1, -1})
      generators.push_back(ext_element(phi, Word{&g, {{v, sign}}}, 0));
  generators.push_back(ext_element(phi, Word{&g, {}}, 1));
  generators.push_back(ext_element(phi, Word{&g, {}}, -1));

  std::map<std::string, std::pair<ExtElement, int>> ball;
  std::deque<std::string> frontier;
  ExtElement id = ext_identity(phi);
  std::string id_key = detail::ext_key(id);
  ball.emplace(id_key, std::make_pair(id, 0));
  frontier.push_back(id_key);
  while (!frontier.empty()) {
    std::string key = std::move(frontier.front());
    frontier.pop_front();
    auto [elem, depth] = ball.at(key);
    if (depth == radius) continue;
    for (const ExtElement& s : generators) {
      ExtElement next = ext_multiply(elem, s);
      std::string nkey = detail::ext_key(next);
      if (ball.find(nkey) != ball.end()) continue;
      if (ball.size() >= max_nodes) throw BudgetExceeded("extension ball budget exceeded");
      ball.emplace(nkey, std::make_pair(next, depth + 1));
      frontier.push_back(nkey);
    }
  }
  return ball;
}

/// Conjugacy growth of A_phi over X and t^+-: BFS ball of radius N,
/// partitioned by conjugacy-class keys. Classes whose minimum within the
/// ball is N could not be distinguished from classes merely touching the
/// boundary, so the table reports rows 0..N-1 only.
inline GrowthTable ext_conj_growth(const LengthPreservingAut& phi, int max_length,
                                   GrowthBudget budget = {},
                                   std::size_t twisted_budget = default_twisted_budget) {
  if (max_length < 1 || max_length > budget.max_length)
    throw BudgetExceeded("growth length budget is " + std::to_string(budget.max_length));
  auto ball = ext_ball(phi, max_length, budget.max_nodes);
  std::map<std::string, std::string> rep_cache;
  std::map<std::string, int> class_min;
  for (const auto& [key, entry] : ball) {
    const auto& [elem, depth] = entry;
    std::string ckey = detail::ext_class_key(elem, rep_cache, twisted_budget);
    auto [it, fresh] = class_min.emplace(ckey, depth);
    if (!fresh) it->second = std::min(it->second, depth);
  }
  GrowthTable table;
  table.coefficients.assign(max_length, 0);
  for (const auto& [key, min_len] : class_min)
    if (min_len < max_length) ++table.coefficients[min_len];
  table.metric_note = "generating set X union {t, t^-1}; rows 0.." +
                      std::to_string(max_length - 1) +
                      " (interior of the radius-" + std::to_string(max_length) + " ball)";
  return table;
}

}  // namespace raag

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "raag/conjugacy.hpp"
#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/piling.hpp"
#include "raag/word.hpp"

namespace raag {

inline constexpr std::size_t default_twisted_budget = 200000;

/// One phi-cyclic permutation of a piling. Moving a bottom tile to the
/// top applies phi^-1 to the moved letter; moving a top tile to the
/// bottom applies phi. `cancelled` marks moves whose added tile cancelled
/// against an existing one, shortening the piling.
struct PhiMove {
  TileRef moved;
  int to_vertex;
  int to_sign;
  End to_end;
  bool cancelled;
};

/// All single-tile phi-cyclic permutations of p, in both directions.
/// With the identity automorphism these are exactly the plain cyclic
/// permutations.
inline std::vector<std::pair<PhiMove, Piling>> phi_tile_moves(
    const Piling& p, const LengthPreservingAut& phi) {
  std::vector<std::pair<PhiMove, Piling>> moves;
  for (const TileRef& t : bottom_tiles(p)) {
    int to_vertex = phi.inv_perm(t.vertex);
    int to_sign = t.sign * phi.sign(to_vertex);
    Piling q = p;
    q.remove_tile_inplace(t);
    bool cancelled = q.add_tile_inplace(to_vertex, to_sign, End::Top);
    moves.push_back({{t, to_vertex, to_sign, End::Top, cancelled}, std::move(q)});
  }
  for (const TileRef& t : top_tiles(p)) {
    int to_vertex = phi.perm(t.vertex);
    int to_sign = t.sign * phi.sign(t.vertex);
    Piling q = p;
    q.remove_tile_inplace(t);
    bool cancelled = q.add_tile_inplace(to_vertex, to_sign, End::Bottom);
    moves.push_back({{t, to_vertex, to_sign, End::Bottom, cancelled}, std::move(q)});
  }
  return moves;
}

/// One step of phi-cyclic reduction: if some stack i ends with sign e and
/// stack perm(i) starts with the sign that cancels after applying phi,
/// remove the top tile of i and the bottom tile of perm(i). Returns the
/// shorter piling, or nothing if no step applies. Specializes to plain
/// cyclic reduction for fixed vertices and to same-sign bottom/top
/// removal for inverted ones.
inline std::optional<Piling> phi_reduction_step_general(
    const Piling& p, const LengthPreservingAut& phi) {
  for (int i = 0; i < p.stack_count(); ++i) {
    const auto& top_stack = p.stack(i);
    if (top_stack.empty() || top_stack.back() == 0) continue;
    int eps = top_stack.back() > 0 ? 1 : -1;
    int j = phi.perm(i);
    int needed = -eps * phi.sign(i);
    const auto& bottom_stack = p.stack(j);
    if (bottom_stack.empty() || bottom_stack.front() != static_cast<Bead>(needed))
      continue;
    if (i == j && top_stack.size() < 2) continue;  // a single bead is one tile
    Piling q = p;
    q.remove_tile_inplace({i, End::Top, eps});
    q.remove_tile_inplace({j, End::Bottom, needed});
    return q;
  }
  return std::nullopt;
}

/// phi-cyclic reduction for compositions of inversions: removes matching
/// same-sign bottom/top pairs on inverted stacks and opposite-sign pairs
/// elsewhere, until neither applies. With the identity automorphism this
/// coincides with cyclic_reduce.
inline Piling phi_cyclic_reduce_inversions(const Piling& p,
                                           const LengthPreservingAut& phi) {
  if (!phi.is_inversion_only())
    throw NotInversionAut("phi_cyclic_reduce_inversions needs perm = id");
  Piling q = p;
  while (auto next = phi_reduction_step_general(q, phi)) q = std::move(*next);
  return q;
}

/// The closure D(v) of v's piling under phi-cyclic permutations at
/// minimal length, plus its shortlex-inverse-minimal normal word.
struct TwistedClassSet {
  std::vector<Piling> pilings;  // sorted by encoding
  Word min_rep;
  std::size_t nodes_expanded = 0;
  std::size_t restarts = 0;
};

/// Breadth-first closure of pi*(v) under phi_tile_moves. Whenever a
/// successor is strictly shorter, the closure restarts from it; the
/// stabilized set is move-closed with all members of equal minimal
/// length. Throws ResourceExhausted when `budget` nodes are exceeded.
inline TwistedClassSet twisted_class_set(const Word& v,
                                         const LengthPreservingAut& phi,
                                         std::size_t budget = default_twisted_budget) {
  TwistedClassSet out;
  Piling start = build_piling(v);
  while (auto next = phi_reduction_step_general(start, phi)) {
    start = std::move(*next);
    ++out.restarts;
  }

  std::map<std::string, Piling> seen;
  std::deque<std::string> frontier;
  bool have_min = false;

  auto seed = [&](Piling p) {
    seen.clear();
    frontier.clear();
    have_min = false;
    std::string key = p.encode();
    frontier.push_back(key);
    seen.emplace(std::move(key), std::move(p));
  };
  seed(std::move(start));

  while (!frontier.empty()) {
    std::string key = std::move(frontier.front());
    frontier.pop_front();
    const Piling& x = seen.at(key);
    ++out.nodes_expanded;
    const long long level = x.length();
    Word candidate = extract_normal_word(x);
    if (!have_min || compare_shortlex_inv(candidate, out.min_rep) < 0) {
      out.min_rep = std::move(candidate);
      have_min = true;
    }
    bool restarted = false;
    auto successors = phi_tile_moves(x, phi);  // x dangles once seed() runs
    for (auto& [move, q] : successors) {
      if (q.length() < level) {
        Piling shorter = std::move(q);
        while (auto next = phi_reduction_step_general(shorter, phi))
          shorter = std::move(*next);
        seed(std::move(shorter));
        ++out.restarts;
        restarted = true;
        break;
      }
      std::string qkey = q.encode();
      if (seen.find(qkey) != seen.end()) continue;
      if (seen.size() >= budget)
        throw ResourceExhausted("twisted class-set budget of " +
                                std::to_string(budget) + " pilings exceeded");
      frontier.push_back(qkey);
      seen.emplace(std::move(qkey), std::move(q));
    }
    if (restarted) continue;
  }
  out.pilings.reserve(seen.size());
  for (auto& [key, p] : seen) out.pilings.push_back(std::move(p));
  return out;
}

/// Twisted conjugacy for compositions of inversions, in linear time:
/// phi-cyclically reduce both pilings, factor into non-split components
/// (inversion moves never change support), transform each factor to a
/// pyramidal piling by phi-cyclic permutations, and compare the extracted
/// phi-cyclic normal forms up to phi-cyclic permutation.
inline bool tcp_inversions(const Word& u, const Word& v,
                           const LengthPreservingAut& phi) {
  if (!phi.is_inversion_only())
    throw NotInversionAut("tcp_inversions needs perm = id");
  if (!same_graph(u.graph, v.graph)) throw GraphMismatch("words over different graphs");
  Piling p = phi_cyclic_reduce_inversions(build_piling(u), phi);
  Piling q = phi_cyclic_reduce_inversions(build_piling(v), phi);
  if (p.length() != q.length()) return false;
  if (p.empty()) return true;
  std::vector<Piling> fp = detail::factor_components(p);
  std::vector<Piling> fq = detail::factor_components(q);
  if (fp.size() != fq.size()) return false;
  std::map<VertexSet, const Piling*> by_support;
  for (const Piling& f : fq) by_support[f.support()] = &f;
  auto mover = [&phi](int vertex, int sign) {
    return std::pair<int, int>{vertex, sign * phi.sign(vertex)};
  };
  for (const Piling& f : fp) {
    auto it = by_support.find(f.support());
    if (it == by_support.end()) return false;
    const Piling& g = *it->second;
    if (f.length() != g.length()) return false;
    Word wf = detail::extract_cyclic_word(detail::to_pyramidal_with(f, mover));
    Word wg = detail::extract_cyclic_word(detail::to_pyramidal_with(g, mover));
    if (!phi_cyclic_match(wf, wg, phi)) return false;
  }
  return true;
}

/// Twisted conjugacy for any length-preserving automorphism: the linear
/// inversion algorithm when perm = id, otherwise comparison of the
/// minimal representatives of the two class-set closures.
inline bool tcp(const Word& u, const Word& v, const LengthPreservingAut& phi,
                std::size_t budget = default_twisted_budget) {
  if (!same_graph(u.graph, v.graph)) throw GraphMismatch("words over different graphs");
  if (phi.is_inversion_only()) return tcp_inversions(u, v, phi);
  TwistedClassSet a = twisted_class_set(u, phi, budget);
  TwistedClassSet b = twisted_class_set(v, phi, budget);
  return a.min_rep == b.min_rep;
}

}  // namespace raag

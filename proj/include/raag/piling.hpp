#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// Stack entry: +1, -1 or 0.
using Bead = std::int8_t;

enum class End { Bottom, Top };

/// A +- bead at one end of a stack, together with the 0-beads of its tile
/// (which sit at the same end of every non-commuting stack).
struct TileRef {
  int vertex;
  End end;
  int sign;
  bool operator==(const TileRef&) const = default;
};

/// Support of a piling and the components of the induced subgraph of the
/// complement graph. Non-split iff exactly one component.
struct DeltaSubgraph {
  VertexSet support;
  std::vector<VertexSet> components;
  bool non_split() const { return components.size() == 1; }
};

/// Canonical representation of a RAAG element: one bead stack per vertex,
/// read bottom to top. Two words represent the same group element iff
/// their pilings are equal stackwise. All public operations are pure;
/// pilings never hold a removable +- or -+ pair on any stack.
class Piling {
 public:
  explicit Piling(const DefiningGraph* graph)
      : graph_(graph), stacks_(graph->size()), weight_(graph->size(), 0) {}

  const DefiningGraph& graph() const { return *graph_; }
  const DefiningGraph* graph_ptr() const { return graph_; }
  const std::deque<Bead>& stack(int v) const { return stacks_[v]; }
  int stack_count() const { return static_cast<int>(stacks_.size()); }

  /// Number of +- beads; the geodesic length of the element.
  long long length() const { return length_; }
  /// Number of +- beads on stack v.
  int weight(int v) const { return weight_[v]; }
  bool empty() const { return length_ == 0; }

  bool operator==(const Piling& other) const {
    return same_graph(graph_, other.graph_) && stacks_ == other.stacks_;
  }

  VertexSet support() const {
    VertexSet s;
    for (int v = 0; v < stack_count(); ++v)
      if (weight_[v] > 0) s.push_back(v);
    return s;
  }

  /// One char per bead plus a stack separator; injective on pilings over a
  /// fixed graph. Used as a visited-set key.
  std::string encode() const {
    std::string out;
    out.reserve(total_beads() + stacks_.size());
    for (const auto& st : stacks_) {
      for (Bead b : st) out.push_back(b > 0 ? '+' : (b < 0 ? '-' : '0'));
      out.push_back('|');
    }
    return out;
  }

  /// One line per stack, bottom to top, e.g. "a2: + 0".
  std::string debug_render() const {
    std::string out;
    for (int v = 0; v < stack_count(); ++v) {
      out += graph_->name(v);
      out += ':';
      for (Bead b : stacks_[v]) {
        out += ' ';
        out += (b > 0 ? '+' : (b < 0 ? '-' : '0'));
      }
      out += '\n';
    }
    return out;
  }

  std::size_t total_beads() const {
    std::size_t n = 0;
    for (const auto& st : stacks_) n += st.size();
    return n;
  }

  // -- in-place primitives; the pure operations below copy then mutate --

  /// The three cases of the defining construction: cancellation when the
  /// stack ends with the opposite sign, otherwise push the bead and a 0 on
  /// every non-commuting stack.
  void push_letter_inplace(Letter x) { add_tile_inplace(x.vertex, x.sign, End::Top); }

  /// Returns true if the added tile cancelled against an existing one
  /// (the piling got shorter instead of longer).
  bool add_tile_inplace(int vertex, int sign, End end) {
    auto& st = stacks_[vertex];
    if (end == End::Top) {
      if (!st.empty() && st.back() == static_cast<Bead>(-sign)) {
        remove_tile_inplace({vertex, End::Top, -sign});
        return true;
      }
      st.push_back(static_cast<Bead>(sign));
      for (int j : graph_->nonstar(vertex)) stacks_[j].push_back(0);
    } else {
      if (!st.empty() && st.front() == static_cast<Bead>(-sign)) {
        remove_tile_inplace({vertex, End::Bottom, -sign});
        return true;
      }
      st.push_front(static_cast<Bead>(sign));
      for (int j : graph_->nonstar(vertex)) stacks_[j].push_front(0);
    }
    ++length_;
    ++weight_[vertex];
    return false;
  }

  void remove_tile_inplace(const TileRef& t) {
    auto& st = stacks_[t.vertex];
    if (t.end == End::Bottom) {
      if (st.empty() || st.front() == 0 || st.front() != static_cast<Bead>(t.sign))
        throw NoSuchTile("no bottom tile with that sign at \"" + graph_->name(t.vertex) + "\"");
      st.pop_front();
      for (int j : graph_->nonstar(t.vertex)) {
        if (stacks_[j].empty() || stacks_[j].front() != 0)
          throw BlockedTile("bottom tile at \"" + graph_->name(t.vertex) + "\" is blocked");
        stacks_[j].pop_front();
      }
    } else {
      if (st.empty() || st.back() == 0 || st.back() != static_cast<Bead>(t.sign))
        throw NoSuchTile("no top tile with that sign at \"" + graph_->name(t.vertex) + "\"");
      st.pop_back();
      for (int j : graph_->nonstar(t.vertex)) {
        if (stacks_[j].empty() || stacks_[j].back() != 0)
          throw BlockedTile("top tile at \"" + graph_->name(t.vertex) + "\" is blocked");
        stacks_[j].pop_back();
      }
    }
    --length_;
    --weight_[t.vertex];
  }

 private:
  const DefiningGraph* graph_;
  std::vector<std::deque<Bead>> stacks_;
  std::vector<int> weight_;
  long long length_ = 0;
};

inline Piling push_letter(const Piling& p, Letter x) {
  Piling q = p;
  q.push_letter_inplace(x);
  return q;
}

inline Piling build_piling(const Word& w) {
  Piling p(w.graph);
  for (const Letter& x : w.letters) p.push_letter_inplace(x);
  return p;
}

inline bool piling_equal(const Piling& p, const Piling& q) {
  if (!same_graph(p.graph_ptr(), q.graph_ptr()))
    throw GraphMismatch("pilings over different graphs");
  return p == q;
}

inline std::vector<TileRef> bottom_tiles(const Piling& p) {
  std::vector<TileRef> tiles;
  for (int v = 0; v < p.stack_count(); ++v) {
    const auto& st = p.stack(v);
    if (!st.empty() && st.front() != 0)
      tiles.push_back({v, End::Bottom, st.front() > 0 ? 1 : -1});
  }
  return tiles;
}

inline std::vector<TileRef> top_tiles(const Piling& p) {
  std::vector<TileRef> tiles;
  for (int v = 0; v < p.stack_count(); ++v) {
    const auto& st = p.stack(v);
    if (!st.empty() && st.back() != 0)
      tiles.push_back({v, End::Top, st.back() > 0 ? 1 : -1});
  }
  return tiles;
}

inline Piling remove_tile(const Piling& p, const TileRef& t) {
  Piling q = p;
  q.remove_tile_inplace(t);
  return q;
}

inline Piling add_tile(const Piling& p, int vertex, int sign, End end) {
  Piling q = p;
  q.add_tile_inplace(vertex, sign, end);
  return q;
}

namespace detail {

/// Greedy geodesic extraction: repeatedly emit a bottom tile, largest
/// vertex first or smallest vertex first.
inline Word extract_greedy(const Piling& p, bool largest_first) {
  Piling q = p;
  Word out{q.graph_ptr(), {}};
  out.letters.reserve(static_cast<std::size_t>(q.length()));
  std::set<int> bottoms;
  for (const TileRef& t : bottom_tiles(q)) bottoms.insert(t.vertex);
  while (!bottoms.empty()) {
    int v = largest_first ? *bottoms.rbegin() : *bottoms.begin();
    int sign = q.stack(v).front() > 0 ? 1 : -1;
    out.letters.push_back({v, sign});
    q.remove_tile_inplace({v, End::Bottom, sign});
    auto refresh = [&](int j) {
      const auto& st = q.stack(j);
      if (!st.empty() && st.front() != 0)
        bottoms.insert(j);
      else
        bottoms.erase(j);
    };
    refresh(v);
    for (int j : q.graph().nonstar(v)) refresh(j);
  }
  return out;
}

}  // namespace detail

/// The geodesic representative minimal under the inverse shortlex order:
/// repeatedly emit the bottom tile whose generator is largest in the base
/// order (each vertex has at most one bottom tile, so the largest
/// supported bottom vertex wins).
inline Word extract_normal_word(const Piling& p) {
  return detail::extract_greedy(p, true);
}

namespace detail {

/// The geodesic representative preferring the smallest generator first
/// (the base-order shortlex minimum of the shuffle class). Used for the
/// cyclic words of pyramidal pilings: the pyramid vertex is the largest
/// supported index, so its letters are emitted only when forced, which is
/// what keeps every rotation of the extracted word extraction-normal.
/// With the largest-first extraction that rotation property fails
/// (5-vertex counterexamples exist), so conjugacy matching uses this one.
inline Word extract_cyclic_word(const Piling& p) { return extract_greedy(p, false); }

}  // namespace detail

namespace detail {

inline bool stack_cyclically_reducible(const std::deque<Bead>& st) {
  return st.size() >= 2 && st.front() != 0 && st.back() != 0 &&
         st.front() == -st.back();
}

}  // namespace detail

inline bool is_cyclically_reduced(const Piling& p) {
  for (int v = 0; v < p.stack_count(); ++v)
    if (detail::stack_cyclically_reducible(p.stack(v))) return false;
  return true;
}

/// Removes matching opposite-sign bottom/top tile pairs until no stack
/// starts and ends with opposite signs. The result is conjugate to the
/// input's element.
inline Piling cyclic_reduce(const Piling& p) {
  Piling q = p;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int v = 0; v < q.stack_count(); ++v) {
      while (detail::stack_cyclically_reducible(q.stack(v))) {
        int top_sign = q.stack(v).back() > 0 ? 1 : -1;
        q.remove_tile_inplace({v, End::Top, top_sign});
        q.remove_tile_inplace({v, End::Bottom, -top_sign});
        changed = true;
      }
    }
  }
  return q;
}

/// Support of p and the connected components of the complement graph
/// restricted to it (computed directly on non-adjacency).
inline DeltaSubgraph delta_subgraph(const Piling& p) {
  DeltaSubgraph out;
  out.support = p.support();
  const DefiningGraph& g = p.graph();
  std::vector<char> in_s(g.size(), 0), seen(g.size(), 0);
  for (int v : out.support) in_s[v] = 1;
  for (int start : out.support) {
    if (seen[start]) continue;
    VertexSet comp;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (int w = 0; w < g.size(); ++w)
        if (in_s[w] && !seen[w] && w != v && !g.adjacent(v, w)) {
          seen[w] = 1;
          queue.push(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  return out;
}

namespace detail {

/// Factorisation along the components of Delta(p), with no reducedness
/// requirement (the twisted pipeline factors phi-cyclically reduced
/// pilings, which need not be plainly cyclically reduced).
inline std::vector<Piling> factor_components(const Piling& p) {
  DeltaSubgraph delta = delta_subgraph(p);
  if (delta.components.empty()) return {};
  if (delta.components.size() == 1) return {p};
  std::vector<int> comp_of(p.stack_count(), -1);
  for (std::size_t c = 0; c < delta.components.size(); ++c)
    for (int v : delta.components[c]) comp_of[v] = static_cast<int>(c);
  Word w = extract_normal_word(p);
  std::vector<Word> parts(delta.components.size(), Word{p.graph_ptr(), {}});
  for (const Letter& x : w.letters) parts[comp_of[x.vertex]].push_back(x);
  std::vector<Piling> factors;
  factors.reserve(parts.size());
  for (const Word& part : parts) factors.push_back(build_piling(part));
  return factors;
}

}  // namespace detail

/// One piling per component of Delta(p), built from the subsequence of
/// the normal word supported on that component. Letters in distinct
/// components commute, so concatenating the factors rebuilds p.
inline std::vector<Piling> factor_nonsplit(const Piling& p) {
  if (!is_cyclically_reduced(p))
    throw NotCyclicallyReduced("factor_nonsplit needs a cyclically reduced piling");
  return detail::factor_components(p);
}

namespace detail {

inline int max_supported_vertex(const Piling& p) {
  for (int v = p.stack_count() - 1; v >= 0; --v)
    if (p.weight(v) > 0) return v;
  return -1;
}

/// Pyramidal: the largest supported stack starts with a +- bead and every
/// other stack is empty or starts with 0, i.e. the unique bottom tile
/// sits at the largest supported vertex.
inline bool is_pyramidal(const Piling& p, int v0) {
  if (v0 < 0) return false;
  const auto& st = p.stack(v0);
  if (st.empty() || st.front() == 0) return false;
  for (int v = 0; v < p.stack_count(); ++v) {
    if (v == v0) continue;
    const auto& other = p.stack(v);
    if (!other.empty() && other.front() != 0) return false;
  }
  return true;
}

template <class MoveFn>
void move_bottom_to_top(Piling& q, int v, MoveFn mover) {
  int sign = q.stack(v).front() > 0 ? 1 : -1;
  q.remove_tile_inplace({v, End::Bottom, sign});
  auto [tv, ts] = mover(v, sign);
  if (q.add_tile_inplace(tv, ts, End::Top))
    throw Error("unexpected cancellation while building a pyramidal piling");
}

/// Greedy pyramidal search: repeatedly move the bottom tile of a
/// non-maximal vertex to the top, farthest from v0 in the complement
/// graph first, giving up after r * (length + 1) moves.
template <class MoveFn>
std::optional<Piling> to_pyramidal_greedy(const Piling& p, int v0, MoveFn mover) {
  if (is_pyramidal(p, v0)) return p;
  const DefiningGraph& g = p.graph();
  std::vector<int> dist(g.size(), -1);
  {
    std::vector<char> in_s(g.size(), 0);
    for (int v : p.support()) in_s[v] = 1;
    std::queue<int> queue;
    queue.push(v0);
    dist[v0] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      for (int w = 0; w < g.size(); ++w)
        if (in_s[w] && dist[w] < 0 && w != v && !g.adjacent(v, w)) {
          dist[w] = dist[v] + 1;
          queue.push(w);
        }
    }
  }
  Piling q = p;
  long long budget = static_cast<long long>(g.size()) * (p.length() + 1);
  while (budget-- > 0) {
    int best = -1;
    for (const TileRef& t : bottom_tiles(q)) {
      if (t.vertex == v0) continue;
      if (best < 0 || dist[t.vertex] > dist[best] ||
          (dist[t.vertex] == dist[best] && t.vertex > best))
        best = t.vertex;
    }
    if (best < 0) return is_pyramidal(q, v0) ? std::optional<Piling>(q) : std::nullopt;
    move_bottom_to_top(q, best, mover);
    if (is_pyramidal(q, v0)) return q;
  }
  return std::nullopt;
}

/// Exhaustive search over the cyclic-permutation closure; guaranteed to
/// reach a pyramidal piling for non-split cyclically reduced input.
template <class MoveFn>
Piling to_pyramidal_bfs(const Piling& p, int v0, MoveFn mover) {
  if (is_pyramidal(p, v0)) return p;
  std::unordered_set<std::string> visited;
  std::queue<Piling> frontier;
  visited.insert(p.encode());
  frontier.push(p);
  while (!frontier.empty()) {
    Piling x = std::move(frontier.front());
    frontier.pop();
    std::vector<Piling> successors;
    for (const TileRef& t : bottom_tiles(x)) {
      Piling y = x;
      move_bottom_to_top(y, t.vertex, mover);
      successors.push_back(std::move(y));
    }
    for (const TileRef& t : top_tiles(x)) {
      Piling y = x;
      y.remove_tile_inplace({t.vertex, End::Top, t.sign});
      auto [tv, ts] = mover(t.vertex, t.sign);
      if (y.add_tile_inplace(tv, ts, End::Bottom))
        throw Error("unexpected cancellation while building a pyramidal piling");
      successors.push_back(std::move(y));
    }
    for (Piling& y : successors) {
      if (!visited.insert(y.encode()).second) continue;
      if (is_pyramidal(y, v0)) return y;
      frontier.push(std::move(y));
    }
  }
  throw Error("no pyramidal piling found in the closure");  // unreachable
}

/// Transforms a non-split piling into a pyramidal one using cyclic
/// permutations whose moved tile is relabelled by `mover(vertex, sign)`
/// (identity for plain permutations, the sign flip for inversion
/// automorphisms).
template <class MoveFn>
Piling to_pyramidal_with(const Piling& p, MoveFn mover) {
  DeltaSubgraph delta = delta_subgraph(p);
  if (!delta.non_split())
    throw NotNonSplit("to_pyramidal needs a non-split piling");
  const int v0 = max_supported_vertex(p);
  if (auto q = to_pyramidal_greedy(p, v0, mover)) return std::move(*q);
  return to_pyramidal_bfs(p, v0, mover);
}

}  // namespace detail

/// Pyramidal form of a non-split cyclically reduced piling, reached by
/// plain cyclic permutations.
inline Piling to_pyramidal(const Piling& p) {
  if (!is_cyclically_reduced(p))
    throw NotCyclicallyReduced("to_pyramidal needs a cyclically reduced piling");
  return detail::to_pyramidal_with(
      p, [](int v, int s) { return std::pair<int, int>{v, s}; });
}

}  // namespace raag

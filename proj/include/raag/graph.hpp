#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "raag/errors.hpp"

namespace raag {

/// Sorted set of vertex indices.
using VertexSet = std::vector<int>;

/// Finite simple graph with ordered, named vertices. Vertex i is the
/// i-th generator in the base order s_1 < s_1^-1 < ... < s_r < s_r^-1.
/// Immutable after construction.
class DefiningGraph {
 public:
  DefiningGraph(std::vector<std::string> vertices,
                const std::vector<std::pair<int, int>>& edges)
      : names_(std::move(vertices)) {
    const int r = static_cast<int>(names_.size());
    if (r < 1) throw Error("graph needs at least one vertex");
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (names_[i] == names_[j])
          throw Error("duplicate vertex name \"" + names_[i] + "\"");
    adj_.assign(static_cast<std::size_t>(r) * r, 0);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= r || v < 0 || v >= r)
        throw UnknownVertex("edge endpoint out of range");
      if (u == v) throw Error("self-loop on vertex \"" + names_[u] + "\"");
      adj_[static_cast<std::size_t>(u) * r + v] = 1;
      adj_[static_cast<std::size_t>(v) * r + u] = 1;
    }
    nonstar_.resize(r);
    links_.resize(r);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < r; ++j) {
        if (j == i) continue;
        if (adjacent(i, j))
          links_[i].push_back(j);
        else
          nonstar_[i].push_back(j);
      }
    }
  }

  int size() const { return static_cast<int>(names_.size()); }

  bool adjacent(int i, int j) const {
    return adj_[static_cast<std::size_t>(i) * names_.size() + j] != 0;
  }

  const std::string& name(int v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of a named vertex.
  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (names_[i] == name) return i;
    throw UnknownVertex("unknown vertex \"" + name + "\"");
  }

  /// Vertices that do not commute with v (complement of St(v)).
  const std::vector<int>& nonstar(int v) const { return nonstar_.at(v); }

  /// Lk(v): the neighbours of v.
  const std::vector<int>& link_of(int v) const { return links_.at(v); }

  bool operator==(const DefiningGraph& other) const {
    return names_ == other.names_ && adj_ == other.adj_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::vector<int>> nonstar_;
  std::vector<std::vector<int>> links_;
};

/// Two graph handles denote the same presentation.
inline bool same_graph(const DefiningGraph* a, const DefiningGraph* b) {
  return a == b || (a != nullptr && b != nullptr && *a == *b);
}

inline DefiningGraph complement(const DefiningGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (!g.adjacent(i, j)) edges.emplace_back(i, j);
  return DefiningGraph(g.names(), edges);
}

inline VertexSet link(const DefiningGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw UnknownVertex("vertex index out of range");
  return g.link_of(v);
}

/// Partition of s into the connected components of the subgraph of g
/// induced by s. Components come out sorted by smallest member.
inline std::vector<VertexSet> connected_components(const DefiningGraph& g,
                                                   const VertexSet& s) {
  std::vector<char> in_s(g.size(), 0), seen(g.size(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.size()) throw UnknownVertex("vertex index out of range");
    in_s[v] = 1;
  }
  std::vector<VertexSet> components;
  VertexSet order = s;
  std::sort(order.begin(), order.end());
  for (int start : order) {
    if (seen[start]) continue;
    VertexSet comp;
    std::queue<int> queue;
    queue.push(start);
    seen[start] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop();
      comp.push_back(v);
      for (int w = 0; w < g.size(); ++w) {
        if (!in_s[w] || seen[w] || !g.adjacent(v, w)) continue;
        seen[w] = 1;
        queue.push(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

/// Length-preserving automorphism of A_Gamma: a signed vertex permutation.
/// Acts on letters by s_i^e -> perm(i)^(e*sign(i)). This is the only
/// automorphism representation; anything not of this shape is rejected
/// at validation.
class LengthPreservingAut {
 public:
  LengthPreservingAut(const DefiningGraph* graph, std::vector<int> perm,
                      std::vector<int> sign)
      : graph_(graph), perm_(std::move(perm)), sign_(std::move(sign)) {
    const int r = graph_->size();
    if (static_cast<int>(perm_.size()) != r || static_cast<int>(sign_.size()) != r)
      throw Error("automorphism arrays must match vertex count");
    std::vector<char> hit(r, 0);
    for (int v : perm_) {
      if (v < 0 || v >= r || hit[v]) throw Error("perm is not a bijection");
      hit[v] = 1;
    }
    for (int s : sign_)
      if (s != 1 && s != -1) throw Error("signs must be +1 or -1");
    for (int i = 0; i < r; ++i)
      for (int j = i + 1; j < r; ++j)
        if (graph_->adjacent(i, j) != graph_->adjacent(perm_[i], perm_[j]))
          throw AdjacencyViolation(
              "permutation does not preserve adjacency between \"" +
              graph_->name(i) + "\" and \"" + graph_->name(j) + "\"");
    inv_perm_.resize(r);
    for (int i = 0; i < r; ++i) inv_perm_[perm_[i]] = i;
    build_power_tables();
  }

  const DefiningGraph* graph() const { return graph_; }
  int order() const { return order_; }
  int perm(int v) const { return perm_[v]; }
  int inv_perm(int v) const { return inv_perm_[v]; }
  int sign(int v) const { return sign_[v]; }

  bool is_identity() const {
    for (int i = 0; i < graph_->size(); ++i)
      if (perm_[i] != i || sign_[i] != 1) return false;
    return true;
  }

  /// perm == id, i.e. a composition of inversions (possibly none).
  bool is_inversion_only() const {
    for (int i = 0; i < graph_->size(); ++i)
      if (perm_[i] != i) return false;
    return true;
  }

  /// Vertex image under phi^k; k may be negative.
  int vertex_image(int v, int k) const { return perm_pow_[reduce(k)][v]; }

  /// Sign picked up by the letter s_v^e under phi^k (multiply into e).
  int sign_image(int v, int k) const { return sign_pow_[reduce(k)][v]; }

  LengthPreservingAut power(int a) const {
    a = reduce(a);
    std::vector<int> p(graph_->size()), s(graph_->size());
    for (int i = 0; i < graph_->size(); ++i) {
      p[i] = perm_pow_[a][i];
      s[i] = sign_pow_[a][i];
    }
    return LengthPreservingAut(graph_, std::move(p), std::move(s));
  }

  int reduce(int k) const {
    k %= order_;
    return k < 0 ? k + order_ : k;
  }

 private:
  void build_power_tables() {
    const int r = graph_->size();
    // Order: lcm over cycles of (cycle length, doubled when the sign
    // product around the cycle is -1).
    std::vector<char> seen(r, 0);
    long long order = 1;
    for (int i = 0; i < r; ++i) {
      if (seen[i]) continue;
      int len = 0, sprod = 1, v = i;
      do {
        seen[v] = 1;
        sprod *= sign_[v];
        v = perm_[v];
        ++len;
      } while (v != i);
      long long cycle_order = (sprod == 1) ? len : 2LL * len;
      order = std::lcm(order, cycle_order);
      if (order > 1000000) throw Error("automorphism order too large");
    }
    order_ = static_cast<int>(order);
    perm_pow_.assign(order_, std::vector<int>(r));
    sign_pow_.assign(order_, std::vector<int>(r));
    for (int i = 0; i < r; ++i) {
      perm_pow_[0][i] = i;
      sign_pow_[0][i] = 1;
    }
    for (int k = 1; k < order_; ++k)
      for (int i = 0; i < r; ++i) {
        perm_pow_[k][i] = perm_[perm_pow_[k - 1][i]];
        sign_pow_[k][i] = sign_pow_[k - 1][i] * sign_[perm_pow_[k - 1][i]];
      }
  }

  const DefiningGraph* graph_;
  std::vector<int> perm_, inv_perm_;
  std::vector<int> sign_;
  int order_ = 1;
  std::vector<std::vector<int>> perm_pow_;
  std::vector<std::vector<int>> sign_pow_;
};

/// Validates a signed permutation as an automorphism of A_Gamma and
/// computes its order. Throws AdjacencyViolation if perm is not a graph
/// automorphism.
inline LengthPreservingAut validate_aut(const DefiningGraph& g,
                                        std::vector<int> perm,
                                        std::vector<int> sign) {
  return LengthPreservingAut(&g, std::move(perm), std::move(sign));
}

inline LengthPreservingAut identity_aut(const DefiningGraph& g) {
  std::vector<int> perm(g.size()), sign(g.size(), 1);
  std::iota(perm.begin(), perm.end(), 0);
  return LengthPreservingAut(&g, std::move(perm), std::move(sign));
}

}  // namespace raag

#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/piling.hpp"
#include "raag/word.hpp"

namespace raag {
namespace oracle {

// Intentionally naive brute-force ground truth for the decision
// procedures. Shipped with the library so the CLI can certify answers at
// small scale.

namespace detail {

inline std::string encode_word(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (const Letter& x : w.letters)
    s.push_back(static_cast<char>('A' + x.base_rank()));
  return s;
}

/// All words of length <= bound in lexicographic (length, code) order,
/// fed to `visit` until it returns true. Returns the accepted word.
template <class Visit>
std::optional<Word> enumerate_words(const DefiningGraph& g, int bound, Visit visit) {
  Word w{&g, {}};
  // depth-first over letters, emitting each prefix exactly once per length
  for (int len = 0; len <= bound; ++len) {
    std::vector<int> digits(len, 0);
    const int radix = 2 * g.size();
    while (true) {
      w.letters.clear();
      for (int d : digits) w.letters.push_back({d / 2, d % 2 == 0 ? 1 : -1});
      if (visit(w)) return w;
      int pos = len - 1;
      while (pos >= 0 && digits[pos] == radix - 1) digits[pos--] = 0;
      if (pos < 0) break;
      ++digits[pos];
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Decides u = v in A_Gamma by breadth-first search over commutation
/// swaps and free insertions/deletions, with intermediate words bounded
/// by max length + 2.
inline bool oracle_shuffle_equal(const Word& u, const Word& v,
                                 std::size_t node_cap = 2000000) {
  if (u.size() > 12 || v.size() > 12)
    throw BoundExceeded("oracle_shuffle_equal handles lengths up to 12");
  const DefiningGraph& g = *u.graph;
  if (2 * g.size() > 50) throw BoundExceeded("oracle_shuffle_equal handles small graphs");
  const std::size_t cap = std::max(u.size(), v.size()) + 2;
  std::string target = detail::encode_word(v);
  std::set<std::string> seen;
  std::deque<std::string> frontier;
  std::string start = detail::encode_word(u);
  if (start == target) return true;
  seen.insert(start);
  frontier.push_back(start);
  auto decode_vertex = [](char c) { return (c - 'A') / 2; };
  auto inverse_of = [](char c) {
    int code = c - 'A';
    return static_cast<char>('A' + (code % 2 == 0 ? code + 1 : code - 1));
  };
  auto offer = [&](std::string next) {
    if (next == target) return true;
    if (seen.size() >= node_cap)
      throw BoundExceeded("oracle_shuffle_equal node cap exceeded");
    if (seen.insert(next).second) frontier.push_back(std::move(next));
    return false;
  };
  while (!frontier.empty()) {
    std::string w = std::move(frontier.front());
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      int a = decode_vertex(w[i]), b = decode_vertex(w[i + 1]);
      if (a != b && g.adjacent(a, b)) {
        std::string next = w;
        std::swap(next[i], next[i + 1]);
        if (offer(std::move(next))) return true;
      }
      if (w[i + 1] == inverse_of(w[i])) {
        std::string next = w.substr(0, i) + w.substr(i + 2);
        if (offer(std::move(next))) return true;
      }
    }
    if (w.size() + 2 <= cap) {
      for (std::size_t i = 0; i <= w.size(); ++i)
        for (int code = 0; code < 2 * g.size(); ++code) {
          char c = static_cast<char>('A' + code);
          std::string next = w.substr(0, i);
          next += c;
          next += inverse_of(c);
          next += w.substr(i);
          if (offer(std::move(next))) return true;
        }
    }
  }
  return false;
}

/// Searches all w with l(w) <= bound for w^-1 u w = v (equality via
/// pilings); returns the first witness in (length, code) order. A miss is
/// not a proof of non-conjugacy.
inline std::optional<Word> oracle_conjugate(const Word& u, const Word& v, int bound) {
  Piling pv = build_piling(v);
  return detail::enumerate_words(*u.graph, bound, [&](const Word& w) {
    return build_piling(w.inverse().concat(u).concat(w)) == pv;
  });
}

/// Searches all w with l(w) <= bound for phi(w)^-1 u w = v.
inline std::optional<Word> oracle_twisted_conjugate(const Word& u, const Word& v,
                                                    const LengthPreservingAut& phi,
                                                    int bound) {
  Piling pv = build_piling(v);
  return detail::enumerate_words(*u.graph, bound, [&](const Word& w) {
    return build_piling(apply_aut(phi, w, 1).inverse().concat(u).concat(w)) == pv;
  });
}

/// Reduces a word to a geodesic without pilings: repeatedly deletes a
/// pair s^e ... s^-e whose gap commutes with s.
inline Word oracle_reduce(const Word& u) {
  std::vector<Letter> w = u.letters;
  const DefiningGraph& g = *u.graph;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      for (std::size_t j = i + 1; j < w.size() && !changed; ++j) {
        if (w[j].vertex == w[i].vertex) {
          if (w[j].sign == -w[i].sign) {
            bool clear = true;
            for (std::size_t k = i + 1; k < j; ++k)
              if (!g.adjacent(w[k].vertex, w[i].vertex)) {
                clear = false;
                break;
              }
            if (clear) {
              w.erase(w.begin() + j);
              w.erase(w.begin() + i);
              changed = true;
            }
          }
          if (!changed) break;  // same-vertex same-sign blocks the gap
        } else if (!g.adjacent(w[j].vertex, w[i].vertex)) {
          break;
        }
      }
    }
  }
  return Word{u.graph, std::move(w)};
}

/// The shortlex-inverse minimum of u's shuffle class, by exhaustive
/// enumeration of adjacent commuting swaps on the reduced form.
inline Word oracle_shortlex_min(const Word& u) {
  Word reduced = oracle_reduce(u);
  if (reduced.size() > 8)
    throw BoundExceeded("oracle_shortlex_min handles reduced lengths up to 8");
  const DefiningGraph& g = *u.graph;
  std::set<std::string> seen;
  std::deque<std::vector<Letter>> frontier;
  seen.insert(detail::encode_word(reduced));
  frontier.push_back(reduced.letters);
  Word best = reduced;
  while (!frontier.empty()) {
    std::vector<Letter> w = std::move(frontier.front());
    frontier.pop_front();
    Word cur{u.graph, w};
    if (compare_shortlex_inv(cur, best) < 0) best = cur;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i].vertex != w[i + 1].vertex && g.adjacent(w[i].vertex, w[i + 1].vertex)) {
        std::vector<Letter> next = w;
        std::swap(next[i], next[i + 1]);
        Word nw{u.graph, next};
        if (seen.insert(detail::encode_word(nw)).second) frontier.push_back(std::move(next));
      }
    }
  }
  return best;
}

}  // namespace oracle
}  // namespace raag

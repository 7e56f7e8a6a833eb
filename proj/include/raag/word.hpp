#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "raag/errors.hpp"
#include "raag/graph.hpp"

namespace raag {

/// A signed generator s_v^sign.
struct Letter {
  int vertex;
  int sign;  // +1 or -1

  /// Position in the base order s_1 < s_1^-1 < s_2 < s_2^-1 < ...
  int base_rank() const { return 2 * vertex + (sign < 0 ? 1 : 0); }

  Letter inverse() const { return {vertex, -sign}; }
  bool operator==(const Letter&) const = default;
};

/// A word over X = V(Gamma)^+-, not necessarily reduced.
struct Word {
  const DefiningGraph* graph = nullptr;
  std::vector<Letter> letters;

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  const Letter& operator[](std::size_t i) const { return letters[i]; }

  void push_back(Letter x) { letters.push_back(x); }

  Word inverse() const {
    Word out{graph, {}};
    out.letters.reserve(size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it)
      out.letters.push_back(it->inverse());
    return out;
  }

  Word concat(const Word& other) const {
    if (!same_graph(graph, other.graph)) throw GraphMismatch("words over different graphs");
    Word out = *this;
    out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
    return out;
  }

  Word subword(std::size_t from, std::size_t to) const {
    Word out{graph, {letters.begin() + from, letters.begin() + to}};
    return out;
  }

  bool operator==(const Word& other) const { return letters == other.letters; }
};

/// Shortlex comparison induced by the inverse order <=^-1 on letters
/// (x <=^-1 y iff y <= x in the base order): shorter words first, equal
/// lengths letterwise with the base-largest letter ranking smallest.
inline std::strong_ordering compare_shortlex_inv(const Word& u, const Word& v) {
  if (u.size() != v.size())
    return u.size() < v.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  for (std::size_t i = 0; i < u.size(); ++i) {
    int ru = u[i].base_rank(), rv = v[i].base_rank();
    if (ru != rv)  // larger base rank is smaller under <=^-1
      return ru > rv ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline Letter apply_aut(const LengthPreservingAut& phi, Letter x, int k = 1) {
  return {phi.vertex_image(x.vertex, k), x.sign * phi.sign_image(x.vertex, k)};
}

/// Letterwise image of w under phi^k. Length-preserving; k may be negative.
inline Word apply_aut(const LengthPreservingAut& phi, const Word& w, int k = 1) {
  Word out{w.graph, {}};
  out.letters.reserve(w.size());
  for (const Letter& x : w.letters) out.letters.push_back(apply_aut(phi, x, k));
  return out;
}

/// phi-cyclic permutation of w at split i with power k:
///   w' = phi^k(x_{i+1} ... x_n) . phi^{k-1}(x_1 ... x_i).
inline Word phi_cyclic_permute_word(const Word& w, const LengthPreservingAut& phi,
                                    std::size_t i, int k) {
  if (i > w.size()) throw Error("split position out of range");
  Word out{w.graph, {}};
  out.letters.reserve(w.size());
  for (std::size_t j = i; j < w.size(); ++j)
    out.letters.push_back(apply_aut(phi, w[j], k));
  for (std::size_t j = 0; j < i; ++j)
    out.letters.push_back(apply_aut(phi, w[j], k - 1));
  return out;
}

namespace detail {

/// KMP search of `needle` in `haystack` over letter base ranks.
/// Returns the first match offset, or npos.
inline std::size_t find_subword(const std::vector<Letter>& haystack,
                                const std::vector<Letter>& needle) {
  const std::size_t n = needle.size();
  if (n == 0) return 0;
  if (haystack.size() < n) return std::string::npos;
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1, k = 0; i < n; ++i) {
    while (k > 0 && !(needle[i] == needle[k])) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  for (std::size_t i = 0, k = 0; i < haystack.size(); ++i) {
    while (k > 0 && !(haystack[i] == needle[k])) k = fail[k - 1];
    if (haystack[i] == needle[k]) ++k;
    if (k == n) return i + 1 - n;
  }
  return std::string::npos;
}

}  // namespace detail

/// True iff v equals some phi-cyclic permutation of u. One linear-time
/// substring search of v inside the doubled word phi^k(u).phi^{k-1}(u)
/// per power k; the length-n window at offset i is exactly
/// phi^k(u[i:]).phi^{k-1}(u[:i]).
inline bool phi_cyclic_match(const Word& u, const Word& v,
                             const LengthPreservingAut& phi) {
  if (u.size() != v.size()) throw LengthMismatch("phi_cyclic_match needs equal lengths");
  if (u.empty()) return true;
  for (int k = 0; k < phi.order(); ++k) {
    Word doubled = apply_aut(phi, u, k).concat(apply_aut(phi, u, k - 1));
    if (detail::find_subword(doubled.letters, v.letters) != std::string::npos)
      return true;
  }
  return false;
}

}  // namespace raag

#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "raag/errors.hpp"
#include "raag/piling.hpp"
#include "raag/word.hpp"

namespace raag {

namespace detail {

/// Booth's least-rotation algorithm over arbitrary integer ranks.
/// Returns the start index of the minimal rotation.
inline std::size_t least_rotation_index(const std::vector<int>& ranks) {
  const std::size_t n = ranks.size();
  if (n == 0) return 0;
  std::vector<int> s(ranks);
  s.insert(s.end(), ranks.begin(), ranks.end());
  std::vector<std::ptrdiff_t> fail(s.size(), -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < s.size(); ++j) {
    int sj = s[j];
    std::ptrdiff_t i = fail[j - k - 1];
    while (i != -1 && sj != s[k + i + 1]) {
      if (sj < s[k + i + 1]) k = j - i - 1;
      i = fail[i];
    }
    if (sj != s[k + i + 1]) {
      if (sj < s[k]) k = j;
      fail[j - k] = -1;
    } else {
      fail[j - k] = i + 1;
    }
  }
  return k % n;
}

/// Rank under the inverse letter order <=^-1 (smaller value = earlier).
inline std::vector<int> inverse_order_ranks(const Word& w) {
  std::vector<int> ranks;
  ranks.reserve(w.size());
  for (const Letter& x : w.letters) ranks.push_back(-x.base_rank());
  return ranks;
}

inline Word rotate_word(const Word& w, std::size_t start) {
  Word out{w.graph, {}};
  out.letters.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    out.letters.push_back(w[(start + i) % w.size()]);
  return out;
}

}  // namespace detail

/// Minimal rotation of w under the <=^-1 letter order, in linear time.
inline Word minimal_rotation(const Word& w) {
  if (w.empty()) return w;
  return detail::rotate_word(w, detail::least_rotation_index(detail::inverse_order_ranks(w)));
}

/// True iff v is a plain rotation of u (substring search in u.u).
inline bool cyclic_match(const Word& u, const Word& v) {
  if (u.size() != v.size()) throw LengthMismatch("cyclic_match needs equal lengths");
  if (u.empty()) return true;
  Word doubled = u.concat(u);
  return detail::find_subword(doubled.letters, v.letters) != std::string::npos;
}

/// Canonical key of a conjugacy class: per non-split factor, the support
/// and the minimal rotation of its cyclic normal form, sorted by support.
struct ClassKey {
  std::vector<std::pair<VertexSet, Word>> factors;

  bool operator==(const ClassKey& other) const {
    if (factors.size() != other.factors.size()) return false;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].first != other.factors[i].first) return false;
      if (!(factors[i].second == other.factors[i].second)) return false;
    }
    return true;
  }

  std::string to_string() const {
    std::string out;
    for (const auto& [support, rotation] : factors) {
      out += '{';
      for (int v : support) {
        out += std::to_string(v);
        out += ',';
      }
      out += "}:";
      for (const Letter& x : rotation.letters) {
        out += std::to_string(x.vertex);
        out += x.sign > 0 ? '+' : '-';
      }
      out += ';';
    }
    return out;
  }
};

namespace detail {

/// Cyclic normal form of a non-split cyclically reduced piling: the
/// smallest-first word of its pyramidal form. Conjugate factors yield
/// rotations of one another.
inline Word cyclic_normal_form(const Piling& factor) {
  return extract_cyclic_word(to_pyramidal(factor));
}

}  // namespace detail

inline ClassKey class_key(const Word& u) {
  Piling reduced = cyclic_reduce(build_piling(u));
  ClassKey key;
  for (const Piling& factor : factor_nonsplit(reduced))
    key.factors.emplace_back(factor.support(),
                             minimal_rotation(detail::cyclic_normal_form(factor)));
  std::sort(key.factors.begin(), key.factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return key;
}

/// Decides u ~ v in A_Gamma: cyclically reduce both pilings, factor into
/// non-split pieces, match factors by support, and compare cyclic normal
/// forms up to rotation.
inline bool conjugate(const Word& u, const Word& v) {
  if (!same_graph(u.graph, v.graph)) throw GraphMismatch("words over different graphs");
  Piling p = cyclic_reduce(build_piling(u));
  Piling q = cyclic_reduce(build_piling(v));
  if (p.length() != q.length()) return false;
  std::vector<Piling> fp = factor_nonsplit(p);
  std::vector<Piling> fq = factor_nonsplit(q);
  if (fp.size() != fq.size()) return false;
  std::map<VertexSet, const Piling*> by_support;
  for (const Piling& f : fq) by_support[f.support()] = &f;
  for (const Piling& f : fp) {
    auto it = by_support.find(f.support());
    if (it == by_support.end()) return false;
    const Piling& g = *it->second;
    if (f.length() != g.length()) return false;
    if (!cyclic_match(detail::cyclic_normal_form(f), detail::cyclic_normal_form(g)))
      return false;
  }
  return true;
}

}  // namespace raag

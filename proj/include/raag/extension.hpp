#pragma once

#include <utility>

#include "raag/errors.hpp"
#include "raag/graph.hpp"
#include "raag/piling.hpp"
#include "raag/twisted.hpp"
#include "raag/word.hpp"

namespace raag {

/// Element v.t^l of the cyclic extension A_phi = A_Gamma x|_phi Z/mZ,
/// with m = order(phi). The base word is kept in normal form.
struct ExtElement {
  const LengthPreservingAut* aut = nullptr;
  Word base;
  int texp = 0;
};

namespace detail {

inline void check_same_group(const ExtElement& g, const ExtElement& h) {
  if (g.aut == h.aut) return;
  if (g.aut == nullptr || h.aut == nullptr)
    throw GroupMismatch("extension elements over different groups");
  if (!same_graph(g.aut->graph(), h.aut->graph()))
    throw GroupMismatch("extension elements over different groups");
  for (int i = 0; i < g.aut->graph()->size(); ++i)
    if (g.aut->perm(i) != h.aut->perm(i) || g.aut->sign(i) != h.aut->sign(i))
      throw GroupMismatch("extension elements over different automorphisms");
}

inline Word normal_form(const Word& w) { return extract_normal_word(build_piling(w)); }

}  // namespace detail

inline ExtElement ext_identity(const LengthPreservingAut& phi) {
  return {&phi, Word{phi.graph(), {}}, 0};
}

inline ExtElement ext_element(const LengthPreservingAut& phi, const Word& base, int texp) {
  int m = phi.order();
  return {&phi, detail::normal_form(base), ((texp % m) + m) % m};
}

/// (u, a) . (v, b) = (u . phi^-a(v), a + b mod m), from the push-through
/// law t^a v = phi^-a(v) t^a.
inline ExtElement ext_multiply(const ExtElement& g, const ExtElement& h) {
  detail::check_same_group(g, h);
  const LengthPreservingAut& phi = *g.aut;
  Word base = g.base.concat(apply_aut(phi, h.base, -g.texp));
  return ext_element(phi, base, g.texp + h.texp);
}

inline ExtElement ext_inverse(const ExtElement& g) {
  const LengthPreservingAut& phi = *g.aut;
  return ext_element(phi, apply_aut(phi, g.base.inverse(), g.texp), -g.texp);
}

inline bool ext_equal(const ExtElement& g, const ExtElement& h) {
  detail::check_same_group(g, h);
  return g.texp == h.texp &&
         piling_equal(build_piling(g.base), build_piling(h.base));
}

/// Conjugacy in A_phi. Conjugating (u, a) by (w, k) gives
/// phi^k(w)^-1 . phi^k(u) . phi^{k-a}(w) . t^a, so (u, a) ~ (v, b) iff
/// a = b and phi^k(u) is phi^a-twisted conjugate to v for some k.
inline bool ext_conjugate(const ExtElement& g, const ExtElement& h,
                          std::size_t budget = default_twisted_budget) {
  detail::check_same_group(g, h);
  if (g.texp != h.texp) return false;
  const LengthPreservingAut& phi = *g.aut;
  LengthPreservingAut phi_a = phi.power(g.texp);
  for (int k = 0; k < phi.order(); ++k)
    if (tcp(apply_aut(phi, g.base, k), h.base, phi_a, budget)) return true;
  return false;
}

}  // namespace raag

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace raag;
using namespace testutil;

TEST_CASE("extension multiplication") {
  DefiningGraph g = example_graph();
  LengthPreservingAut inv = example_inversion(g);

  ExtElement u0 = ext_element(inv, w(g, "a1 a2"), 0);
  ExtElement v0 = ext_element(inv, w(g, "a3"), 0);
  CHECK(ext_equal(ext_multiply(u0, v0), ext_element(inv, w(g, "a1 a2 a3"), 0)));

  // t . a2 = phi^-1(a2) . t = a2^-1 . t
  ExtElement t = ext_element(inv, w(g, ""), 1);
  ExtElement a2 = ext_element(inv, w(g, "a2"), 0);
  CHECK(ext_equal(ext_multiply(t, a2), ext_element(inv, w(g, "a2^-1"), 1)));

  // t^m = 1
  CHECK(ext_equal(ext_multiply(t, t), ext_identity(inv)));
}

TEST_CASE("extension algebra laws") {
  Rng rng(163);
  DefiningGraph g = example_graph();
  LengthPreservingAut inv = example_inversion(g);
  LengthPreservingAut four = validate_aut(g, {2, 3, 0, 1}, {1, -1, 1, 1});
  std::vector<const LengthPreservingAut*> auts{&inv, &four};
  for (int trial = 0; trial < 500; ++trial) {
    const LengthPreservingAut& phi = *auts[trial % auts.size()];
    std::uniform_int_distribution<int> texp(0, phi.order() - 1);
    ExtElement a = ext_element(phi, random_word(g, trial % 6, rng), texp(rng));
    ExtElement b = ext_element(phi, random_word(g, trial % 6, rng), texp(rng));
    ExtElement c = ext_element(phi, random_word(g, trial % 6, rng), texp(rng));
    CHECK(ext_equal(ext_multiply(ext_multiply(a, b), c),
                    ext_multiply(a, ext_multiply(b, c))));
    CHECK(ext_equal(ext_multiply(a, ext_identity(phi)), a));
    CHECK(ext_equal(ext_multiply(ext_identity(phi), a), a));
    CHECK(ext_equal(ext_multiply(a, ext_inverse(a)), ext_identity(phi)));
    CHECK(ext_equal(ext_multiply(ext_inverse(a), a), ext_identity(phi)));
  }
}

TEST_CASE("extension inverse examples") {
  DefiningGraph g = example_graph();
  LengthPreservingAut inv = example_inversion(g);
  ExtElement u = ext_element(inv, w(g, "a1 a2"), 0);
  CHECK(ext_equal(ext_inverse(u), ext_element(inv, w(g, "a2^-1 a1^-1"), 0)));
  ExtElement t = ext_element(inv, w(g, ""), 1);
  CHECK(ext_equal(ext_inverse(t), t));  // t^-1 = t when m = 2
  CHECK(ext_equal(ext_multiply(t, ext_element(inv, w(g, "a2"), 0)),
                  ext_element(inv, w(g, "a2^-1"), 1)));
}

TEST_CASE("extension conjugacy") {
  DefiningGraph g = example_graph();
  LengthPreservingAut inv = example_inversion(g);

  // texp is a conjugacy invariant
  CHECK_FALSE(ext_conjugate(ext_element(inv, w(g, "a1"), 0),
                            ext_element(inv, w(g, "a1"), 1)));

  // twisting merges a and a^-1
  CHECK(ext_conjugate(ext_element(inv, w(g, "a2"), 0),
                      ext_element(inv, w(g, "a2^-1"), 0)));
  // but not a1 and a1^-1 (a1 is fixed by phi)
  CHECK_FALSE(ext_conjugate(ext_element(inv, w(g, "a1"), 0),
                            ext_element(inv, w(g, "a1^-1"), 0)));

  Rng rng(167);
  for (int trial = 0; trial < 500; ++trial) {
    std::uniform_int_distribution<int> texp(0, 1);
    ExtElement a = ext_element(inv, random_word(g, trial % 8, rng), texp(rng));
    ExtElement x = ext_element(inv, random_word(g, trial % 6, rng), texp(rng));
    ExtElement b = ext_multiply(ext_multiply(ext_inverse(x), a), x);
    CHECK(ext_conjugate(a, b));
  }
}

TEST_CASE("extension conjugacy with trivial automorphism is plain conjugacy") {
  Rng rng(173);
  DefiningGraph g = example_graph();
  LengthPreservingAut id = identity_aut(g);
  REQUIRE(id.order() == 1);
  for (int trial = 0; trial < 200; ++trial) {
    Word u = random_word(g, trial % 8, rng);
    Word v;
    if (trial % 2 == 0) {
      v = random_word(g, trial % 8, rng);
    } else {
      Word c = random_word(g, trial % 6, rng);
      v = c.inverse().concat(u).concat(c);
    }
    CHECK(ext_conjugate(ext_element(id, u, 0), ext_element(id, v, 0)) ==
          conjugate(u, v));
  }
}

TEST_CASE("extension conjugacy matches brute force on a small ball") {
  DefiningGraph g = example_graph();
  LengthPreservingAut inv = example_inversion(g);
  auto ball = ext_ball(inv, 2, 100000);

  // independent classification: orbit closure under conjugation by the
  // generators of A_phi
  std::vector<ExtElement> generators;
  for (int v = 0; v < g.size(); ++v)
    for (int sign : {1, -1})
      generators.push_back(ext_element(inv, Word{&g, {{v, sign}}}, 0));
  generators.push_back(ext_element(inv, w(g, ""), 1));

  auto elem_key = [](const ExtElement& e) {
    return word_key(e.base) + "|" + std::to_string(e.texp);
  };
  std::map<std::string, std::string> class_of;
  for (const auto& [key, entry] : ball) {
    const ExtElement& e = entry.first;
    if (class_of.count(elem_key(e))) continue;
    std::set<std::string> orbit{elem_key(e)};
    std::deque<std::pair<ExtElement, int>> frontier{{e, 0}};
    while (!frontier.empty()) {
      auto [cur, depth] = frontier.front();
      frontier.pop_front();
      if (depth == 8) continue;
      for (const ExtElement& s : generators) {
        ExtElement next = ext_multiply(ext_multiply(ext_inverse(s), cur), s);
        if (next.base.size() > 6) continue;
        if (orbit.insert(elem_key(next)).second) frontier.push_back({next, depth + 1});
      }
    }
    std::string rep = *orbit.begin();
    for (const std::string& member : orbit) {
      auto [it, fresh] = class_of.emplace(member, rep);
      CHECK(it->second == rep);
    }
  }

  std::vector<const ExtElement*> elems;
  for (const auto& [key, entry] : ball) elems.push_back(&entry.first);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j) {
      bool expected =
          class_of.at(elem_key(*elems[i])) == class_of.at(elem_key(*elems[j]));
      CHECK(ext_conjugate(*elems[i], *elems[j]) == expected);
    }
}

TEST_CASE("group mismatch is rejected") {
  DefiningGraph g = example_graph();
  DefiningGraph h({"b1", "b2"}, {});
  LengthPreservingAut pg = example_inversion(g);
  LengthPreservingAut ph = identity_aut(h);
  CHECK_THROWS_AS(ext_multiply(ext_identity(pg), ext_identity(ph)), GroupMismatch);
}

#pragma once

#include <cctype>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raag/errors.hpp"
#include "raag/extension.hpp"
#include "raag/graph.hpp"
#include "raag/word.hpp"

namespace raag {

/// Word syntax: whitespace- or '.'-separated tokens; each token is a
/// vertex name with an optional "^<integer>" suffix, expanded to
/// |integer| letters of the appropriate sign.
inline Word parse_word(const DefiningGraph& g, const std::string& text) {
  Word w{&g, {}};
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == '.') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '.')
      ++i;
    std::string token = text.substr(start, i - start);
    std::string name = token;
    long exponent = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      std::string exp_text = token.substr(caret + 1);
      char* end = nullptr;
      exponent = std::strtol(exp_text.c_str(), &end, 10);
      if (exp_text.empty() || end == nullptr || *end != '\0')
        throw ParseError("bad exponent", token, start);
    }
    int vertex;
    try {
      vertex = g.index_of(name);
    } catch (const UnknownVertex&) {
      throw ParseError("unknown generator", token, start);
    }
    int sign = exponent >= 0 ? 1 : -1;
    for (long k = 0; k < std::labs(exponent); ++k) w.letters.push_back({vertex, sign});
  }
  return w;
}

inline std::string print_word(const Word& w) {
  std::string out;
  for (const Letter& x : w.letters) {
    if (!out.empty()) out += ' ';
    out += w.graph->name(x.vertex);
    if (x.sign < 0) out += "^-1";
  }
  return out;
}

/// Graph JSON: {"vertices": ["a1", ...], "edges": [["a1","a4"], ...]}.
inline DefiningGraph graph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("graph JSON parse failure: " + std::string(e.what()), "", e.byte);
  }
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error("graph JSON needs a \"vertices\" array");
  std::vector<std::string> names = j["vertices"].get<std::vector<std::string>>();
  auto index_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    throw Error("edge endpoint \"" + name + "\" is not a vertex");
  };
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw Error("each edge must be a two-element array");
      edges.emplace_back(index_of(e[0].get<std::string>()),
                         index_of(e[1].get<std::string>()));
    }
  }
  return DefiningGraph(std::move(names), edges);
}

/// Automorphism JSON: {"map": {"a1": "a3", "a2": "a4^-1", ...}}; target
/// tokens are vertex names with an optional "^-1" suffix; omitted
/// vertices map to themselves.
inline LengthPreservingAut aut_from_json(const DefiningGraph& g, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("automorphism JSON parse failure: " + std::string(e.what()), "", e.byte);
  }
  std::vector<int> perm(g.size()), sign(g.size(), 1);
  for (int i = 0; i < g.size(); ++i) perm[i] = i;
  if (j.contains("map")) {
    for (const auto& [from, to] : j["map"].items()) {
      int source = g.index_of(from);
      std::string target = to.get<std::string>();
      int s = 1;
      if (target.size() > 3 && target.substr(target.size() - 3) == "^-1") {
        s = -1;
        target = target.substr(0, target.size() - 3);
      }
      perm[source] = g.index_of(target);
      sign[source] = s;
    }
  }
  return validate_aut(g, std::move(perm), std::move(sign));
}

/// Extension element syntax: "<word> ; t^<k>"; the t part is optional and
/// defaults to t^0.
inline ExtElement parse_ext_element(const LengthPreservingAut& phi,
                                    const std::string& text) {
  std::string word_part = text;
  int texp = 0;
  if (auto semi = text.find(';'); semi != std::string::npos) {
    word_part = text.substr(0, semi);
    std::string t_part = text.substr(semi + 1);
    std::size_t k = 0;
    while (k < t_part.size() && std::isspace(static_cast<unsigned char>(t_part[k]))) ++k;
    std::size_t token_start = semi + 1 + k;
    if (k >= t_part.size() || t_part[k] != 't')
      throw ParseError("expected t^<k> after ';'", t_part.substr(k), token_start);
    ++k;
    if (k < t_part.size() && t_part[k] == '^') {
      char* end = nullptr;
      texp = static_cast<int>(std::strtol(t_part.c_str() + k + 1, &end, 10));
      if (end == t_part.c_str() + k + 1)
        throw ParseError("bad t exponent", t_part.substr(k), token_start);
      k = end - t_part.c_str();
    } else {
      texp = 1;
    }
    while (k < t_part.size()) {
      if (!std::isspace(static_cast<unsigned char>(t_part[k])))
        throw ParseError("trailing input after t^<k>", t_part.substr(k), semi + 1 + k);
      ++k;
    }
  }
  return ext_element(phi, parse_word(*phi.graph(), word_part), texp);
}

inline std::string print_ext_element(const ExtElement& e) {
  return print_word(e.base) + " ; t^" + std::to_string(e.texp);
}

}  // namespace raag

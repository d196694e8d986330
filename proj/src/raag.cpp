#include "invmon/raag.hpp"

#include <algorithm>

#include "invmon/errors.hpp"

namespace invmon {

  SimpGraph::SimpGraph(Alphabet vertices,
                       std::vector<std::pair<std::string, std::string>> const& edges)
      : _vertices(std::move(vertices)),
        _adjacent(_vertices.size() * _vertices.size(), false) {
    for (auto const& [u, v] : edges) {
      auto i = vertex_index(u);
      auto j = vertex_index(v);
      if (i == j) {
        throw InvalidArgument("simplicial graphs have no loops: {" + u + ","
                              + v + "}");
      }
      _adjacent[i * size() + j] = true;
      _adjacent[j * size() + i] = true;
    }
  }

  bool SimpGraph::adjacent(std::string const& u, std::string const& v) const {
    return adjacent(vertex_index(u), vertex_index(v));
  }

  std::vector<std::pair<std::size_t, std::size_t>> SimpGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> result;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i + 1; j < size(); ++j) {
        if (adjacent(i, j)) {
          result.emplace_back(i, j);
        }
      }
    }
    return result;
  }

  std::size_t SimpGraph::vertex_index(std::string const& name) const {
    auto i = _vertices.index(name);
    if (!i) {
      throw UnknownVertex("'" + name + "' is not a vertex of the graph");
    }
    return *i;
  }

  void SimpGraph::validate(Word const& w) const {
    for (auto const& x : w) {
      (void) vertex_index(x.name);
    }
  }

  SimpGraph SimpGraph::path(std::size_t n) {
    if (n > 26) {
      throw InvalidArgument("path graphs are limited to 26 vertices");
    }
    std::vector<std::string>                         names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i) {
      names.emplace_back(1, static_cast<char>('a' + i));
      if (i > 0) {
        edges.emplace_back(names[i - 1], names[i]);
      }
    }
    return SimpGraph(Alphabet(names), edges);
  }

  SimpGraph p4() {
    return SimpGraph::path(4);
  }

  namespace {
    bool commute(SimpGraph const& g, Code x, Code y) {
      return x / 2 == y / 2 || g.adjacent(x / 2, y / 2);
    }

    // Cancel x ... x⁻¹ whenever every letter in between commutes with x.
    void shuffle_cancel(SimpGraph const& g, std::vector<Code>& w) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.size() && !changed; ++i) {
          for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (w[j] == inverse_code(w[i])) {
              w.erase(w.begin() + j);
              w.erase(w.begin() + i);
              changed = true;
              break;
            }
            if (!commute(g, w[i], w[j])) {
              break;
            }
          }
        }
      }
    }
  }  // namespace

  std::vector<Code> raag_normal_form_codes(SimpGraph const&         g,
                                           std::vector<Code> const& codes) {
    std::vector<Code> rest = codes;
    shuffle_cancel(g, rest);
    std::vector<Code> result;
    result.reserve(rest.size());
    while (!rest.empty()) {
      std::size_t best = rest.size();
      for (std::size_t p = 0; p < rest.size(); ++p) {
        bool movable = true;
        for (std::size_t q = 0; q < p && movable; ++q) {
          movable = commute(g, rest[q], rest[p]);
        }
        if (movable && (best == rest.size() || rest[p] < rest[best])) {
          best = p;
        }
      }
      result.push_back(rest[best]);
      rest.erase(rest.begin() + best);
    }
    return result;
  }

  NormalForm raag_normal_form(SimpGraph const& g, Word const& w) {
    g.validate(w);
    auto const& alphabet = g.vertices();
    return NormalForm{
        alphabet.decode(raag_normal_form_codes(g, alphabet.encode(w)))};
  }

  bool raag_equal(SimpGraph const& g, Word const& u, Word const& v) {
    return raag_normal_form(g, u) == raag_normal_form(g, v);
  }

  std::optional<Word> parabolic_membership(SimpGraph const&             g,
                                           std::set<std::string> const& delta,
                                           Word const&                  w) {
    for (auto const& name : delta) {
      (void) g.vertex_index(name);
    }
    auto nf = raag_normal_form(g, w);
    for (auto const& x : nf.word) {
      if (delta.count(x.name) == 0) {
        return std::nullopt;
      }
    }
    return std::move(nf.word);
  }

  SimpGraph induced_subgraph(SimpGraph const&             g,
                             std::set<std::string> const& delta) {
    for (auto const& name : delta) {
      (void) g.vertex_index(name);
    }
    std::vector<std::string> names;
    for (auto const& name : g.vertices().names()) {
      if (delta.count(name)) {
        names.push_back(name);
      }
    }
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < names.size(); ++i) {
      for (std::size_t j = i + 1; j < names.size(); ++j) {
        if (g.adjacent(names[i], names[j])) {
          edges.emplace_back(names[i], names[j]);
        }
      }
    }
    return SimpGraph(Alphabet(names), edges);
  }

}  // namespace invmon

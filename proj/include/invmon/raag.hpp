// Right-angled Artin groups A(Γ): canonical normal forms, the word problem
// and membership in parabolic subgroups A(Δ).

#ifndef INVMON_RAAG_HPP_
#define INVMON_RAAG_HPP_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "invmon/words.hpp"

namespace invmon {

  //! A finite simplicial graph. Vertex order is the declaration order of the
  //! alphabet.
  class SimpGraph {
   public:
    SimpGraph() = default;
    //! Throws InvalidArgument on loops and UnknownVertex on edges that leave
    //! the vertex set.
    SimpGraph(Alphabet vertices,
              std::vector<std::pair<std::string, std::string>> const& edges);

    [[nodiscard]] Alphabet const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _vertices.size();
    }
    [[nodiscard]] bool adjacent(std::size_t i, std::size_t j) const {
      return _adjacent[i * size() + j];
    }
    [[nodiscard]] bool adjacent(std::string const& u, std::string const& v) const;

    //! Edges as index pairs (i < j), sorted.
    [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    //! Throws UnknownVertex unless every letter of w is a vertex.
    void validate(Word const& w) const;

    //! Index of `name`; throws UnknownVertex.
    [[nodiscard]] std::size_t vertex_index(std::string const& name) const;

    //! Path graph on n vertices named a, b, c, ... (n ≤ 26).
    [[nodiscard]] static SimpGraph path(std::size_t n);

    bool operator==(SimpGraph const& that) const {
      return _vertices == that._vertices && _adjacent == that._adjacent;
    }

   private:
    Alphabet          _vertices;
    std::vector<bool> _adjacent;
  };

  //! The path a – b – c – d.
  [[nodiscard]] SimpGraph p4();

  //! The canonical representative of an element of A(Γ): the
  //! lexicographically least fully cancelled word among all words obtained by
  //! commuting adjacent letters joined by an edge. Signed letters are ordered
  //! by vertex order, with x before x⁻¹.
  struct NormalForm {
    Word word;

    bool operator==(NormalForm const&) const = default;
  };

  [[nodiscard]] NormalForm raag_normal_form(SimpGraph const& g, Word const& w);

  [[nodiscard]] bool raag_equal(SimpGraph const& g, Word const& u, Word const& v);

  //! Normal form of w if it lies in the parabolic subgroup A(Δ), that is if
  //! its normal form only uses letters of Δ; otherwise nullopt.
  [[nodiscard]] std::optional<Word> parabolic_membership(
      SimpGraph const&             g,
      std::set<std::string> const& delta,
      Word const&                  w);

  //! The subgraph induced by `delta`, with vertices in the order of g.
  [[nodiscard]] SimpGraph induced_subgraph(SimpGraph const&             g,
                                           std::set<std::string> const& delta);

  //! Normal forms over coded words (codes relative to g.vertices()).
  [[nodiscard]] std::vector<Code> raag_normal_form_codes(
      SimpGraph const&      g,
      std::vector<Code> const& codes);

}  // namespace invmon

#endif  // INVMON_RAAG_HPP_

// Birooted, involutive, edge-labelled graphs and Stallings-style folding.
//
// Edges are stored with positive labels only; an edge x --a--> y is also
// traversable as y --a⁻¹--> x. A WordGraph is always folded (deterministic on
// signed labels) and canonically numbered: vertices are numbered in
// breadth-first order from the start vertex, visiting neighbours in signed
// label order (a, a⁻¹, b, b⁻¹, ...). Two WordGraphs are therefore isomorphic
// as birooted labelled graphs iff they compare equal.

#ifndef INVMON_WORD_GRAPH_HPP_
#define INVMON_WORD_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invmon/words.hpp"

namespace invmon {

  using Vertex = std::uint32_t;

  inline constexpr Vertex undefined_vertex = static_cast<Vertex>(-1);

  //! An edge src --letter--> tgt with a positive letter index.
  struct Edge {
    Vertex      src;
    std::size_t letter;
    Vertex      tgt;

    auto operator<=>(Edge const&) const = default;
  };

  //! An arbitrary (possibly non-deterministic) birooted graph; the input of
  //! fold().
  struct RawGraph {
    std::size_t       num_letters  = 0;
    std::size_t       num_vertices = 1;
    std::vector<Edge> edges;
    Vertex            start = 0;
    Vertex            end   = 0;

    //! The linear graph spelling `codes` from vertex 0 to vertex |codes|.
    [[nodiscard]] static RawGraph linear(std::size_t              num_letters,
                                         std::span<Code const> codes);
  };

  class WordGraph {
   public:
    //! The one-vertex graph with start = end.
    explicit WordGraph(std::size_t num_letters = 0);

    [[nodiscard]] std::size_t num_letters() const noexcept {
      return _num_letters;
    }
    [[nodiscard]] std::size_t num_vertices() const noexcept {
      return _num_vertices;
    }
    [[nodiscard]] std::size_t num_edges() const noexcept;
    [[nodiscard]] Vertex      start() const noexcept {
      return _start;
    }
    [[nodiscard]] Vertex end() const noexcept {
      return _end;
    }

    //! Target of the edge leaving v with signed label c, or undefined_vertex.
    [[nodiscard]] Vertex target(Vertex v, Code c) const {
      return _table[v * 2 * _num_letters + c];
    }

    //! The vertex reached by reading `codes` from `from`, if the path exists.
    [[nodiscard]] std::optional<Vertex> read(Vertex                from,
                                             std::span<Code const> codes) const;

    //! True iff `codes` labels a path from start to end.
    [[nodiscard]] bool accepts(std::span<Code const> codes) const {
      auto v = read(_start, codes);
      return v && *v == _end;
    }

    //! Positive edges sorted by (src, letter).
    [[nodiscard]] std::vector<Edge> edges() const;

    [[nodiscard]] RawGraph to_raw() const;

    //! True iff the underlying undirected graph is a tree.
    [[nodiscard]] bool is_tree() const noexcept {
      return num_edges() + 1 == _num_vertices;
    }

    bool operator==(WordGraph const&) const = default;

   private:
    friend class FoldingEngine;

    std::size_t         _num_letters;
    std::size_t         _num_vertices;
    Vertex              _start;
    Vertex              _end;
    std::vector<Vertex> _table;  // _num_vertices x 2 * _num_letters
  };

  //! True iff there is a label-preserving graph morphism from `from` into
  //! `into` sending start to start and end to end.
  [[nodiscard]] bool has_morphism(WordGraph const& from, WordGraph const& into);

  //! Quotient of g identifying equally-labelled edges at a common vertex,
  //! to fixpoint, with roots mapped through the quotient.
  [[nodiscard]] WordGraph fold(RawGraph const& g);

  //! Working representation for incremental sewing and folding: a partial
  //! transition table with a union-find over vertices and a coincidence
  //! queue. Table entries may refer to merged vertices and are resolved
  //! through find() on every read.
  class FoldingEngine {
   public:
    explicit FoldingEngine(std::size_t num_letters);
    explicit FoldingEngine(WordGraph const& g);

    [[nodiscard]] std::size_t num_letters() const noexcept {
      return _num_letters;
    }
    //! Number of vertices that have not been merged away.
    [[nodiscard]] std::size_t num_alive() const noexcept {
      return _alive;
    }

    Vertex add_vertex();

    //! Add u --c--> v (and its reverse); conflicting edges are queued as
    //! coincidences. Call process() to restore determinism.
    void add_edge(Vertex u, Code c, Vertex v);

    //! Queue the identification of u and v.
    void identify(Vertex u, Vertex v);

    //! Process all queued coincidences.
    void process();

    [[nodiscard]] Vertex find(Vertex v);

    //! Follow label c from v; undefined_vertex if absent. Requires process().
    [[nodiscard]] Vertex target(Vertex v, Code c);

    //! Read as much of `codes` from `from` as possible; returns the vertex
    //! reached and the number of letters consumed.
    [[nodiscard]] std::pair<Vertex, std::size_t> read_prefix(
        Vertex                from,
        std::span<Code const> codes);

    //! Sew a path labelled `codes` from u to v, reusing existing edges along
    //! the longest readable prefix. Processes coincidences.
    void sew(Vertex u, std::span<Code const> codes, Vertex v);

    //! Canonical renumbering from `start`; only vertices reachable from
    //! start are kept.
    [[nodiscard]] WordGraph canonical(Vertex start, Vertex end);

   private:
    Vertex& slot(Vertex v, Code c) {
      return _table[static_cast<std::size_t>(v) * 2 * _num_letters + c];
    }
    void set_edge(Vertex u, Code c, Vertex v);

    std::size_t                         _num_letters;
    std::size_t                         _alive = 0;
    std::vector<Vertex>                 _table;
    std::vector<Vertex>                 _parent;
    std::vector<std::pair<Vertex, Vertex>> _queue;
  };

}  // namespace invmon

#endif  // INVMON_WORD_GRAPH_HPP_

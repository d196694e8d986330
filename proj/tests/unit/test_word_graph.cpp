#include <algorithm>
#include <random>

#include "catch_amalgamated.hpp"

#include "invmon/word_graph.hpp"

using namespace invmon;

namespace {
  std::vector<Code> codes(std::initializer_list<Code> cs) {
    return cs;
  }
}  // namespace

TEST_CASE("fold of linear graphs", "[word_graph]") {
  // a = 0, a⁻¹ = 1
  auto g = fold(RawGraph::linear(1, codes({0, 1})));
  CHECK(g.num_vertices() == 2);
  CHECK(g.is_tree());
  CHECK(g.start() == g.end());

  auto h = fold(RawGraph::linear(1, codes({0, 0, 1, 1})));
  CHECK(h.num_vertices() == 3);
  CHECK(h.num_edges() == 2);
  CHECK(h.start() == h.end());

  auto p = fold(RawGraph::linear(1, codes({0, 0})));
  CHECK(fold(p.to_raw()) == p);
}

TEST_CASE("fold identifies a cycle labelled by a loop", "[word_graph]") {
  RawGraph r;
  r.num_letters  = 1;
  r.num_vertices = 3;
  r.edges        = {{0, 0, 1}, {0, 0, 2}};
  auto g         = fold(r);
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 1);
}

TEST_CASE("reading and acceptance", "[word_graph]") {
  // a b⁻¹ over {a, b}
  auto g = fold(RawGraph::linear(2, codes({0, 3})));
  CHECK(g.accepts(codes({0, 3})));
  CHECK(g.accepts(codes({0, 3, 2, 1, 0, 3})));
  CHECK_FALSE(g.accepts(codes({0})));
  CHECK(g.read(g.start(), codes({2})) == std::nullopt);
}

TEST_CASE("fold is independent of the edge order", "[word_graph][property]") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    RawGraph r;
    r.num_letters  = 2;
    r.num_vertices = 2 + rng() % 8;
    for (std::size_t e = 0; e < 2 * r.num_vertices; ++e) {
      r.edges.push_back({static_cast<Vertex>(rng() % r.num_vertices),
                         rng() % 2,
                         static_cast<Vertex>(rng() % r.num_vertices)});
    }
    // Keep every vertex reachable from 0.
    for (Vertex v = 1; v < r.num_vertices; ++v) {
      r.edges.push_back({static_cast<Vertex>(rng() % v), rng() % 2, v});
    }
    r.end      = static_cast<Vertex>(rng() % r.num_vertices);
    auto first = fold(r);
    std::shuffle(r.edges.begin(), r.edges.end(), rng);
    CHECK(fold(r) == first);
  }
}

TEST_CASE("has_morphism", "[word_graph]") {
  auto small = fold(RawGraph::linear(2, codes({2})));           // b
  auto big   = fold(RawGraph::linear(2, codes({0, 1, 2})));     // a a⁻¹ b
  CHECK(has_morphism(small, big));
  CHECK_FALSE(has_morphism(big, small));
  CHECK(has_morphism(big, big));
}

TEST_CASE("folding engine sews and identifies", "[word_graph]") {
  FoldingEngine e(1);
  auto          root = e.add_vertex();
  std::vector<Code> aa{0, 0};
  e.sew(root, aa, root);
  auto g = e.canonical(root, root);
  // a a closes a loop of length 2 at the root.
  CHECK(g.num_vertices() == 2);
  CHECK(g.accepts(codes({0, 0, 0, 0})));
  CHECK(g.accepts(codes({1, 1})));

  FoldingEngine f(1);
  auto          x = f.add_vertex();
  auto          y = f.add_vertex();
  f.add_edge(x, 0, y);
  f.identify(x, y);
  f.process();
  CHECK(f.num_alive() == 1);
  CHECK(f.canonical(x, x).accepts(codes({0, 0, 1})));
}

#include "invmon/word_graph.hpp"


#include "invmon/errors.hpp"

namespace invmon {

  RawGraph RawGraph::linear(std::size_t num_letters, std::span<Code const> codes) {
    RawGraph g;
    g.num_letters  = num_letters;
    g.num_vertices = codes.size() + 1;
    g.start        = 0;
    g.end          = static_cast<Vertex>(codes.size());
    for (std::size_t i = 0; i < codes.size(); ++i) {
      auto const u = static_cast<Vertex>(i);
      auto const v = static_cast<Vertex>(i + 1);
      if (codes[i] & 1U) {
        g.edges.push_back({v, codes[i] / 2, u});
      } else {
        g.edges.push_back({u, codes[i] / 2, v});
      }
    }
    return g;
  }

  ////////////////////////////////////////////////////////////////////////
  // WordGraph
  ////////////////////////////////////////////////////////////////////////

  WordGraph::WordGraph(std::size_t num_letters)
      : _num_letters(num_letters),
        _num_vertices(1),
        _start(0),
        _end(0),
        _table(2 * num_letters, undefined_vertex) {}

  std::size_t WordGraph::num_edges() const noexcept {
    std::size_t result = 0;
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      for (std::size_t a = 0; a < _num_letters; ++a) {
        if (_table[v * 2 * _num_letters + 2 * a] != undefined_vertex) {
          ++result;
        }
      }
    }
    return result;
  }

  std::optional<Vertex> WordGraph::read(Vertex from,
                                        std::span<Code const> codes) const {
    Vertex v = from;
    for (auto c : codes) {
      if (c >= 2 * _num_letters) {
        return std::nullopt;
      }
      v = target(v, c);
      if (v == undefined_vertex) {
        return std::nullopt;
      }
    }
    return v;
  }

  std::vector<Edge> WordGraph::edges() const {
    std::vector<Edge> result;
    for (std::size_t v = 0; v < _num_vertices; ++v) {
      for (std::size_t a = 0; a < _num_letters; ++a) {
        auto w = _table[v * 2 * _num_letters + 2 * a];
        if (w != undefined_vertex) {
          result.push_back({static_cast<Vertex>(v), a, w});
        }
      }
    }
    return result;
  }

  RawGraph WordGraph::to_raw() const {
    RawGraph g;
    g.num_letters  = _num_letters;
    g.num_vertices = _num_vertices;
    g.edges        = edges();
    g.start        = _start;
    g.end          = _end;
    return g;
  }

  bool has_morphism(WordGraph const& from, WordGraph const& into) {
    if (from.num_letters() > into.num_letters()) {
      return false;
    }
    std::vector<Vertex> image(from.num_vertices(), undefined_vertex);
    std::vector<Vertex> stack{from.start()};
    image[from.start()] = into.start();
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Code c = 0; c < 2 * from.num_letters(); ++c) {
        Vertex w = from.target(v, c);
        if (w == undefined_vertex) {
          continue;
        }
        Vertex iw = into.target(image[v], c);
        if (iw == undefined_vertex) {
          return false;
        }
        if (image[w] == undefined_vertex) {
          image[w] = iw;
          stack.push_back(w);
        } else if (image[w] != iw) {
          return false;
        }
      }
    }
    return image[from.end()] == into.end();
  }

  WordGraph fold(RawGraph const& g) {
    if (g.num_vertices == 0 || g.start >= g.num_vertices
        || g.end >= g.num_vertices) {
      throw InvalidArgument("fold: roots must be vertices of the graph");
    }
    FoldingEngine engine(g.num_letters);
    for (std::size_t i = 0; i < g.num_vertices; ++i) {
      engine.add_vertex();
    }
    for (auto const& e : g.edges) {
      if (e.src >= g.num_vertices || e.tgt >= g.num_vertices
          || e.letter >= g.num_letters) {
        throw InvalidArgument("fold: edge out of range");
      }
      engine.add_edge(e.src, static_cast<Code>(2 * e.letter), e.tgt);
    }
    engine.process();
    return engine.canonical(g.start, g.end);
  }

  ////////////////////////////////////////////////////////////////////////
  // FoldingEngine
  ////////////////////////////////////////////////////////////////////////

  FoldingEngine::FoldingEngine(std::size_t num_letters)
      : _num_letters(num_letters) {}

  FoldingEngine::FoldingEngine(WordGraph const& g)
      : _num_letters(g.num_letters()),
        _alive(g.num_vertices()),
        _table(g._table),
        _parent(g.num_vertices()) {
    for (std::size_t v = 0; v < _parent.size(); ++v) {
      _parent[v] = static_cast<Vertex>(v);
    }
  }

  Vertex FoldingEngine::add_vertex() {
    auto const v = static_cast<Vertex>(_parent.size());
    _parent.push_back(v);
    _table.resize(_table.size() + 2 * _num_letters, undefined_vertex);
    ++_alive;
    return v;
  }

  Vertex FoldingEngine::find(Vertex v) {
    Vertex root = v;
    while (_parent[root] != root) {
      root = _parent[root];
    }
    while (_parent[v] != root) {
      Vertex next = _parent[v];
      _parent[v]  = root;
      v           = next;
    }
    return root;
  }

  void FoldingEngine::set_edge(Vertex u, Code c, Vertex v) {
    Vertex& fwd = slot(u, c);
    if (fwd == undefined_vertex) {
      fwd = v;
    } else if (Vertex x = find(fwd); x != v) {
      _queue.emplace_back(x, v);
    }
    Vertex& bwd = slot(v, inverse_code(c));
    if (bwd == undefined_vertex) {
      bwd = u;
    } else if (Vertex y = find(bwd); y != u) {
      _queue.emplace_back(y, u);
    }
  }

  void FoldingEngine::add_edge(Vertex u, Code c, Vertex v) {
    set_edge(find(u), c, find(v));
  }

  void FoldingEngine::identify(Vertex u, Vertex v) {
    _queue.emplace_back(u, v);
  }

  void FoldingEngine::process() {
    std::size_t const degree = 2 * _num_letters;
    while (!_queue.empty()) {
      auto [a, b] = _queue.back();
      _queue.pop_back();
      a = find(a);
      b = find(b);
      if (a == b) {
        continue;
      }
      Vertex const keep = std::min(a, b);
      Vertex const kill = std::max(a, b);
      _parent[kill]     = keep;
      --_alive;
      for (Code c = 0; c < degree; ++c) {
        Vertex t = slot(kill, c);
        if (t == undefined_vertex) {
          continue;
        }
        slot(kill, c) = undefined_vertex;
        t             = find(t);
        Vertex& mine  = slot(keep, c);
        if (mine == undefined_vertex) {
          mine = t;
        } else if (Vertex e = find(mine); e != t) {
          _queue.emplace_back(e, t);
        }
      }
    }
  }

  Vertex FoldingEngine::target(Vertex v, Code c) {
    Vertex t = slot(find(v), c);
    return t == undefined_vertex ? t : find(t);
  }

  std::pair<Vertex, std::size_t> FoldingEngine::read_prefix(
      Vertex                from,
      std::span<Code const> codes) {
    Vertex      v = find(from);
    std::size_t i = 0;
    for (; i < codes.size(); ++i) {
      Vertex t = target(v, codes[i]);
      if (t == undefined_vertex) {
        break;
      }
      v = t;
    }
    return {v, i};
  }

  void FoldingEngine::sew(Vertex u, std::span<Code const> codes, Vertex v) {
    if (codes.empty()) {
      identify(u, v);
      process();
      return;
    }
    auto [x, i] = read_prefix(u, codes.first(codes.size() - 1));
    for (; i + 1 < codes.size(); ++i) {
      Vertex y = add_vertex();
      add_edge(x, codes[i], y);
      x = y;
    }
    add_edge(x, codes.back(), v);
    process();
  }

  WordGraph FoldingEngine::canonical(Vertex start, Vertex end) {
    std::size_t const   degree = 2 * _num_letters;
    std::vector<Vertex> relabel(_parent.size(), undefined_vertex);
    std::vector<Vertex> order;
    start          = find(start);
    end            = find(end);
    relabel[start] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
      Vertex v = order[head];
      for (Code c = 0; c < degree; ++c) {
        Vertex t = target(v, c);
        if (t != undefined_vertex && relabel[t] == undefined_vertex) {
          relabel[t] = static_cast<Vertex>(order.size());
          order.push_back(t);
        }
      }
    }
    if (relabel[end] == undefined_vertex) {
      throw InvalidArgument("word graph is not connected: end unreachable");
    }
    WordGraph result(_num_letters);
    result._num_vertices = order.size();
    result._start        = 0;
    result._end          = relabel[end];
    result._table.assign(order.size() * degree, undefined_vertex);
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (Code c = 0; c < degree; ++c) {
        Vertex t = target(order[i], c);
        if (t != undefined_vertex) {
          result._table[i * degree + c] = relabel[t];
        }
      }
    }
    return result;
  }

}  // namespace invmon

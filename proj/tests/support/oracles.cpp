#include "oracles.hpp"

#include <numeric>

namespace invmon::oracle {

  std::pair<std::size_t, std::size_t> bicyclic_normal_form(Word const& w) {
    std::size_t m = 0, n = 0;
    for (auto const& x : w) {
      if (x.sign > 0) {
        ++n;
      } else if (n > 0) {
        --n;
      } else {
        ++m;
      }
    }
    return {m, n};
  }

  Word bicyclic_word(std::size_t m, std::size_t n) {
    return power(Letter("a", -1), static_cast<int>(m))
           * power(Letter("a"), static_cast<int>(n));
  }

  RaagClasses::RaagClasses(SimpGraph const& g, std::size_t max_length)
      : _graph(g), _max_length(max_length), _symbols(2 * g.size()) {
    std::size_t total = 0, layer = 1;
    for (std::size_t k = 0; k <= max_length; ++k) {
      _offset.push_back(total);
      total += layer;
      layer *= _symbols;
    }
    _parent.resize(total);
    std::iota(_parent.begin(), _parent.end(), 0);

    auto commute = [&](Code x, Code y) {
      return x / 2 == y / 2 || _graph.adjacent(x / 2, y / 2);
    };
    for (std::size_t i = 0; i < total; ++i) {
      auto w = word(i);
      for (std::size_t p = 0; p + 1 < w.size(); ++p) {
        if (w[p + 1] == inverse_code(w[p])) {
          auto shorter = w;
          shorter.erase(shorter.begin() + p, shorter.begin() + p + 2);
          unite(i, index(shorter));
        } else if (commute(w[p], w[p + 1])) {
          std::swap(w[p], w[p + 1]);
          unite(i, index(w));
          std::swap(w[p], w[p + 1]);
        }
      }
    }
  }

  std::size_t RaagClasses::index(std::vector<Code> const& w) const {
    std::size_t x = 0;
    for (auto c : w) {
      x = x * _symbols + c;
    }
    return _offset.at(w.size()) + x;
  }

  std::vector<Code> RaagClasses::word(std::size_t index) const {
    std::size_t k = 0;
    while (k + 1 < _offset.size() && _offset[k + 1] <= index) {
      ++k;
    }
    std::size_t       x = index - _offset[k];
    std::vector<Code> w(k);
    for (std::size_t p = k; p-- > 0;) {
      w[p] = static_cast<Code>(x % _symbols);
      x /= _symbols;
    }
    return w;
  }

  std::size_t RaagClasses::find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  void RaagClasses::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x != y) {
      _parent[std::max(x, y)] = static_cast<std::uint32_t>(std::min(x, y));
    }
  }

  std::size_t RaagClasses::class_of(std::vector<Code> const& w) {
    return find(index(w));
  }

  bool RaagClasses::equal(std::vector<Code> const& u,
                          std::vector<Code> const& v) {
    return class_of(u) == class_of(v);
  }

  std::set<int> finite_submonoid(FiniteGroup const& h, std::vector<int> const& w) {
    std::set<int> result{0};
    bool          grew = true;
    while (grew) {
      grew = false;
      for (int x : std::set<int>(result)) {
        for (int y : w) {
          grew = result.insert(h.mul(x, y)).second || grew;
        }
      }
    }
    return result;
  }

  Word random_word(Alphabet const& a, std::size_t length, std::mt19937& rng) {
    std::uniform_int_distribution<Code> pick(0, static_cast<Code>(2 * a.size() - 1));
    std::vector<Code>                   codes(length);
    for (auto& c : codes) {
      c = pick(rng);
    }
    return a.decode(codes);
  }

  std::vector<Word> all_words(Alphabet const& a, std::size_t n) {
    std::vector<std::vector<Code>> layer{{}};
    std::vector<Word>              result{Word()};
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::vector<Code>> next;
      for (auto const& w : layer) {
        for (Code c = 0; c < 2 * a.size(); ++c) {
          next.push_back(w);
          next.back().push_back(c);
          result.push_back(a.decode(next.back()));
        }
      }
      layer = std::move(next);
    }
    return result;
  }

}  // namespace invmon::oracle

#include "invmon/munn.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "invmon/errors.hpp"

namespace invmon {

  MunnTree munn_tree(Alphabet const& alphabet, Word const& w) {
    auto const codes = alphabet.encode(w);
    return MunnTree{alphabet, fold(RawGraph::linear(alphabet.size(), codes))};
  }

  MunnTree munn_tree(Word const& w) {
    return munn_tree(Alphabet::of({w}), w);
  }

  bool fim_equal(Word const& u, Word const& v) {
    auto const alphabet = Alphabet::of({u, v});
    return munn_tree(alphabet, u).graph == munn_tree(alphabet, v).graph;
  }

  bool fim_leq(Word const& u, Word const& v) {
    auto const alphabet = Alphabet::of({u, v});
    return has_morphism(munn_tree(alphabet, v).graph,
                        munn_tree(alphabet, u).graph);
  }

  namespace {
    // Words are packed one code per char so that std::string provides
    // hashing and factor manipulation.
    using Packed = std::string;

    char inv(char c) {
      return static_cast<char>(c ^ 1);
    }

    // Is x[i, i + 2L) of the form w w⁻¹?
    bool is_idempotent_pair(Packed const& x, std::size_t i, std::size_t L) {
      for (std::size_t k = 0; k < L; ++k) {
        if (x[i + L + k] != inv(x[i + L - 1 - k])) {
          return false;
        }
      }
      return true;
    }

    template <typename Visit>
    void for_each_vagner_neighbour(Packed const& x,
                                   std::size_t   radius,
                                   Visit&&       visit) {
      std::size_t const n = x.size();
      // w w⁻¹ w -> w
      for (std::size_t L = 1; 3 * L <= n; ++L) {
        for (std::size_t i = 0; i + 3 * L <= n; ++i) {
          if (is_idempotent_pair(x, i, L)
              && x.compare(i + 2 * L, L, x, i, L) == 0) {
            visit(x.substr(0, i + L) + x.substr(i + 3 * L));
          }
        }
      }
      // w -> w w⁻¹ w
      for (std::size_t L = 1; L <= n && n + 2 * L <= radius; ++L) {
        for (std::size_t i = 0; i + L <= n; ++i) {
          Packed y = x.substr(0, i + L);
          for (std::size_t k = 0; k < L; ++k) {
            y.push_back(inv(x[i + L - 1 - k]));
          }
          y.append(x, i, L);
          y.append(x, i + L, Packed::npos);
          visit(y);
        }
      }
      // w w⁻¹ u u⁻¹ <-> u u⁻¹ w w⁻¹
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t L = 1; i + 2 * L <= n; ++L) {
          if (!is_idempotent_pair(x, i, L)) {
            continue;
          }
          for (std::size_t M = 1; i + 2 * L + 2 * M <= n; ++M) {
            if (!is_idempotent_pair(x, i + 2 * L, M)) {
              continue;
            }
            Packed y = x.substr(0, i);
            y.append(x, i + 2 * L, 2 * M);
            y.append(x, i, 2 * L);
            y.append(x, i + 2 * L + 2 * M, Packed::npos);
            if (y != x) {
              visit(y);
            }
          }
        }
      }
    }

    Packed pack(std::vector<Code> const& codes) {
      Packed result;
      for (auto c : codes) {
        result.push_back(static_cast<char>(c));
      }
      return result;
    }
  }  // namespace

  bool vagner_oracle(Word const& u,
                     Word const& v,
                     std::size_t radius,
                     std::size_t guard) {
    auto const alphabet = Alphabet::of({u, v});
    if (alphabet.size() > 60) {
      throw InvalidArgument("vagner_oracle: alphabet too large");
    }
    Packed const source = pack(alphabet.encode(u));
    Packed const target = pack(alphabet.encode(v));
    if (source == target) {
      return true;
    }
    if (source.size() > radius || target.size() > radius) {
      return false;
    }
    std::unordered_set<Packed> seen{source};
    std::vector<Packed>        frontier{source};
    bool                       found = false;
    while (!frontier.empty() && !found) {
      std::vector<Packed> next;
      for (auto const& x : frontier) {
        for_each_vagner_neighbour(x, radius, [&](Packed y) {
          if (found || y.size() > radius) {
            return;
          }
          if (y == target) {
            found = true;
            return;
          }
          if (seen.insert(y).second) {
            if (seen.size() > guard) {
              throw BudgetExceeded("vagner_oracle: closure exceeds "
                                   + std::to_string(guard) + " words");
            }
            next.push_back(std::move(y));
          }
        });
        if (found) {
          break;
        }
      }
      frontier = std::move(next);
    }
    return found;
  }

  std::vector<std::vector<Code>> vagner_closure(Alphabet const& alphabet,
                                                Word const&     u,
                                                std::size_t     radius,
                                                std::size_t     guard) {
    if (alphabet.size() > 60) {
      throw InvalidArgument("vagner_closure: alphabet too large");
    }
    Packed const source = pack(alphabet.encode(u));
    std::unordered_set<Packed> seen{source};
    std::vector<Packed>        frontier{source};
    while (!frontier.empty()) {
      std::vector<Packed> next;
      for (auto const& x : frontier) {
        for_each_vagner_neighbour(x, radius, [&](Packed y) {
          if (y.size() <= radius && seen.insert(y).second) {
            if (seen.size() > guard) {
              throw BudgetExceeded("vagner_closure: closure exceeds "
                                   + std::to_string(guard) + " words");
            }
            next.push_back(std::move(y));
          }
        });
      }
      frontier = std::move(next);
    }
    std::vector<std::vector<Code>> result;
    result.reserve(seen.size());
    for (auto const& x : seen) {
      result.emplace_back(x.begin(), x.end());
    }
    std::sort(result.begin(), result.end());
    return result;
  }

}  // namespace invmon

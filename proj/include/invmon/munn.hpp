// The word problem for the free inverse monoid FIM(A) via Munn trees, and a
// brute-force closure over the Vagner congruence used to cross-check it.

#ifndef INVMON_MUNN_HPP_
#define INVMON_MUNN_HPP_

#include <cstddef>

#include "invmon/word_graph.hpp"
#include "invmon/words.hpp"

namespace invmon {

  //! A Munn tree: the folded linear graph of a word, a birooted subtree of
  //! the Cayley graph of the free group. The alphabet fixes letter indices and
  //! therefore the canonical numbering.
  struct MunnTree {
    Alphabet  alphabet;
    WordGraph graph;

    bool operator==(MunnTree const&) const = default;
  };

  [[nodiscard]] MunnTree munn_tree(Alphabet const& alphabet, Word const& w);

  //! Munn tree over the alphabet of the letters occurring in w.
  [[nodiscard]] MunnTree munn_tree(Word const& w);

  //! [u] = [v] in FIM(A).
  [[nodiscard]] bool fim_equal(Word const& u, Word const& v);

  //! [u] ≤ [v] in the natural partial order of FIM(A): the Munn tree of v maps
  //! into the Munn tree of u by a root-preserving morphism.
  [[nodiscard]] bool fim_leq(Word const& u, Word const& v);

  inline constexpr std::size_t vagner_default_guard = 1'000'000;

  //! True iff v is reachable from u by replacing factors with the other side
  //! of a Vagner generating pair, (ww⁻¹w, w) or (ww⁻¹uu⁻¹, uu⁻¹ww⁻¹), through
  //! intermediate words of length at most `radius`. Sound; complete only for
  //! large enough radius. Throws BudgetExceeded when the closure exceeds
  //! `guard` words.
  [[nodiscard]] bool vagner_oracle(Word const& u,
                                   Word const& v,
                                   std::size_t radius,
                                   std::size_t guard = vagner_default_guard);

  //! Every word reachable from u as in vagner_oracle, as sorted code
  //! sequences over `alphabet`. Throws BudgetExceeded past `guard` words.
  [[nodiscard]] std::vector<std::vector<Code>> vagner_closure(
      Alphabet const& alphabet,
      Word const&     u,
      std::size_t     radius,
      std::size_t     guard = vagner_default_guard);

}  // namespace invmon

#endif  // INVMON_MUNN_HPP_

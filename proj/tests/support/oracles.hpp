// Brute-force reference implementations used only by the test suites.

#ifndef INVMON_TESTS_ORACLES_HPP_
#define INVMON_TESTS_ORACLES_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "invmon/freeprod.hpp"
#include "invmon/raag.hpp"
#include "invmon/words.hpp"

namespace invmon::oracle {

  //! (m, n) with w equal to (a⁻¹)^m a^n in Inv⟨a | aa⁻¹ = 1⟩, computed by
  //! deleting factors aa⁻¹.
  std::pair<std::size_t, std::size_t> bicyclic_normal_form(Word const& w);

  //! The word (a⁻¹)^m a^n.
  Word bicyclic_word(std::size_t m, std::size_t n);

  //! Connected components of the graph on all words over VΓ± of length at
  //! most `max_length`, joined by swapping adjacent commuting letters and by
  //! deleting adjacent xx⁻¹.
  class RaagClasses {
   public:
    RaagClasses(SimpGraph const& g, std::size_t max_length);

    [[nodiscard]] std::size_t max_length() const noexcept {
      return _max_length;
    }
    [[nodiscard]] std::size_t num_words() const noexcept {
      return _parent.size();
    }
    //! Index of a code word of length at most max_length.
    [[nodiscard]] std::size_t index(std::vector<Code> const& w) const;
    [[nodiscard]] std::vector<Code> word(std::size_t index) const;
    [[nodiscard]] std::size_t class_of(std::vector<Code> const& w);
    [[nodiscard]] bool equal(std::vector<Code> const& u,
                             std::vector<Code> const& v);

   private:
    std::size_t find(std::size_t x);
    void        unite(std::size_t x, std::size_t y);

    SimpGraph                _graph;
    std::size_t              _max_length;
    std::size_t              _symbols;
    std::vector<std::size_t> _offset;
    std::vector<std::uint32_t> _parent;
  };

  //! The submonoid of a finite group generated by `w`, by closure under
  //! right multiplication in the table.
  std::set<int> finite_submonoid(FiniteGroup const& h, std::vector<int> const& w);

  //! A uniformly random word of the given length over the alphabet.
  Word random_word(Alphabet const& a, std::size_t length, std::mt19937& rng);

  //! Every word over A± of length at most n, by length then code order.
  std::vector<Word> all_words(Alphabet const& a, std::size_t n);

}  // namespace invmon::oracle

#endif  // INVMON_TESTS_ORACLES_HPP_

// HNN extensions A(Γ, ψ) of right-angled Artin groups over isomorphisms of
// induced subgraphs, with Britton reduction deciding the word problem.
//
// Also provides the P₄ instance: Γ = a – b – c – d, ψ: a ↦ b, b ↦ c, c ↦ d,
// whose HNN extension is the one-relator group
//   Gp⟨a, t | a(tat⁻¹) = (tat⁻¹)a⟩,
// together with the embedding θ of A(P₄) into it.

#ifndef INVMON_HNN_HPP_
#define INVMON_HNN_HPP_

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "invmon/raag.hpp"
#include "invmon/words.hpp"

namespace invmon {

  struct HnnPresentation {
    SimpGraph                          base;
    std::set<std::string>              delta1;
    std::set<std::string>              delta2;
    std::map<std::string, std::string> psi;
    std::string                        stable = "t";

    //! Throws UnknownVertex, InvalidArgument or StableLetterClash unless psi is
    //! a bijection Δ₁ → Δ₂ that is an isomorphism of induced subgraphs and
    //! the stable letter is fresh.
    void validate() const;

    //! The letter ψ(x) for x ∈ Δ₁, or ψ⁻¹(x) for x ∈ Δ₂ when inverse is set.
    [[nodiscard]] std::string const& map(std::string const& x,
                                         bool               inverse) const;
  };

  [[nodiscard]] HnnPresentation p4_instance();

  //! g₀ t^{k₁} g₁ t^{k₂} … t^{k_n} g_n with each g_i a RAAG normal form and
  //! every k_i ≠ 0; no pinch t g t⁻¹ (g ∈ A(Δ₁)) or t⁻¹ g t (g ∈ A(Δ₂))
  //! remains.
  struct BrittonForm {
    struct Syllable {
      int        t_power;
      NormalForm g;

      bool operator==(Syllable const&) const = default;
    };

    NormalForm            head;
    std::vector<Syllable> tail;

    [[nodiscard]] bool has_stable_letter() const noexcept {
      return !tail.empty();
    }
    //! Number of stable letters, counted with multiplicity.
    [[nodiscard]] std::size_t stable_letter_count() const noexcept;

    //! The form as a word over VΓ ∪ {t}.
    [[nodiscard]] Word to_word(std::string const& stable) const;

    bool operator==(BrittonForm const&) const = default;
  };

  //! Repeatedly replaces the leftmost pinch t^ε g t^{-ε}, g t-free, by
  //! ψ^ε applied letterwise to the normal form of g.
  [[nodiscard]] BrittonForm britton_reduce(HnnPresentation const& h,
                                           Word const&            w);

  [[nodiscard]] bool hnn_is_trivial(HnnPresentation const& h, Word const& w);

  [[nodiscard]] bool hnn_equal(HnnPresentation const& h,
                               Word const&            u,
                               Word const&            v);

  //! Letterwise a ↦ a, b ↦ tat⁻¹, c ↦ t²at⁻², d ↦ t³at⁻³.
  [[nodiscard]] Word theta_embed(Word const& w);

  //! Is u trivial in Gp⟨a, z | azaz⁻¹a⁻¹za⁻¹z⁻¹ = 1⟩? Decided in A(P₄, ψ)
  //! with z read as the stable letter t.
  [[nodiscard]] bool one_relator_wp(Word const& u);

  //! azaz⁻¹a⁻¹za⁻¹z⁻¹.
  [[nodiscard]] Word one_relator_relator();

  //! The three A(P₄) relators ab a⁻¹b⁻¹, bc b⁻¹c⁻¹, cd c⁻¹d⁻¹.
  [[nodiscard]] std::vector<Word> p4_relators();

  //! [tat⁻¹, t²at⁻²] and [t²at⁻², t³at⁻³] written as words over {a, t}.
  [[nodiscard]] std::vector<Word> p4_conjugate_relators();

  struct EmbeddingReport {
    std::size_t              words_enumerated    = 0;
    std::size_t              normal_forms        = 0;
    std::size_t              nontrivial_checked  = 0;
    std::size_t              relators_checked    = 0;
    std::size_t              passed              = 0;
    std::size_t              failed              = 0;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept {
      return failed == 0;
    }
  };

  //! Checks that θ kills the A(P₄) relators and that every nontrivial
  //! normal form with at most `max_letters` letters has a nontrivial image.
  [[nodiscard]] EmbeddingReport verify_embedding_sample(std::size_t max_letters);

}  // namespace invmon

#endif  // INVMON_HNN_HPP_

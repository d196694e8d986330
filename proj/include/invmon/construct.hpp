// Compiles submonoid-membership queries in a group G = Gp⟨A | r₁, …, r_m⟩
// into word problems of the special inverse monoid
//   M = Inv⟨A, t | e·r₁ = 1, r₂ = 1, …, r_m = 1⟩,
//   e = e(a₁, …, a_n, tw₁t⁻¹, …, tw_kt⁻¹, a₁⁻¹, …, a_n⁻¹),
// where u ∈ ⟨w₁, …, w_k⟩ in G iff [tut⁻¹] is right invertible in M.

#ifndef INVMON_CONSTRUCT_HPP_
#define INVMON_CONSTRUCT_HPP_

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "invmon/presentation.hpp"
#include "invmon/stephen.hpp"
#include "invmon/words.hpp"

namespace invmon {

  struct ConstructionInstance {
    GroupPresentation group;
    std::vector<Word> wset;
    std::string       stable = "t";

    //! Throws InvalidArgument if there are no relators, UnknownLetter if a
    //! relator or element of W leaves A, StableLetterClash if t ∈ A.
    void validate() const;

    bool operator==(ConstructionInstance const&) const = default;
  };

  //! Decides triviality of a word in some group.
  using GroupWordProblem = std::function<bool(Word const&)>;

  //! The idempotent word e of the construction.
  [[nodiscard]] Word construction_idempotent(ConstructionInstance const& ci);

  [[nodiscard]] InvPresentation build_presentation(ConstructionInstance const& ci);

  //! The split form {e = 1, r_i = 1} and the expanded form {r_i = 1,
  //! aa⁻¹ = 1, a⁻¹a = 1, tw_jt⁻¹tw_j⁻¹t⁻¹ = 1}, in that order. Throws
  //! NotConstructionShape unless p == build_presentation(ci).
  [[nodiscard]] std::vector<InvPresentation> equivalent_presentations(
      InvPresentation const&      p,
      ConstructionInstance const& ci);

  inline constexpr char const* query_semantics
      = "u in T iff probe right invertible";

  struct QueryBundle {
    InvPresentation presentation;
    //! tut⁻¹.
    Word probe;
    //! (probe·probe⁻¹, ε) over the presentation.
    Relation    wp_instance;
    std::string semantics = query_semantics;
  };

  //! Throws UnknownLetter if u leaves A.
  [[nodiscard]] QueryBundle membership_query(ConstructionInstance const& ci,
                                             Word const&                 u);

  enum class CertificateStatus { valid, invalid };

  struct Certificate {
    CertificateStatus status = CertificateStatus::invalid;
    Word              u;
    //! 1-based indices into W.
    std::vector<std::size_t> factorization;
    //! u·(w_{j₁}⋯w_{j_l})⁻¹, freely reduced.
    Word residual;
  };

  //! Valid iff u·(w_{j₁}⋯w_{j_l})⁻¹ is trivial in G according to group_wp.
  //! Throws OracleMissing if group_wp is empty and InvalidArgument on an
  //! index outside 1..k.
  [[nodiscard]] Certificate forward_certificate(
      ConstructionInstance const&     ci,
      Word const&                     u,
      std::vector<std::size_t> const& factorization,
      GroupWordProblem const&         group_wp);

  //! Free reduction to ε.
  [[nodiscard]] GroupWordProblem free_group_wp();

  //! one_relator_wp for Gp⟨a, z | azaz⁻¹a⁻¹za⁻¹z⁻¹⟩.
  [[nodiscard]] GroupWordProblem headline_group_wp();

  //! A bundled oracle for ci.group: the free-group reducer if every relator
  //! freely reduces to ε, the one-relator solver for the headline group.
  //! Throws OracleMissing otherwise.
  [[nodiscard]] GroupWordProblem bundled_group_wp(GroupPresentation const& g);

  //! Triviality in G ∗ ⟨stable⟩ from triviality in G: trivial G-segments
  //! and zero t-exponents are deleted until the sequence is reduced.
  [[nodiscard]] GroupWordProblem free_product_wp(GroupWordProblem group_wp,
                                                 std::string      stable);

  //! A = {a, z}, relator azaz⁻¹a⁻¹za⁻¹z⁻¹, stable letter t.
  [[nodiscard]] ConstructionInstance headline_instance(std::vector<Word> wset);

  //! A = {a, z}, the single relator ε (so G is free), stable letter t.
  [[nodiscard]] ConstructionInstance free_instance(std::vector<Word> wset);

  struct ConsistencyEntry {
    Word    u;
    Word    v;
    Verdict verdict;
    //! Meaningful only when verdict is equal.
    bool images_equal;
  };

  struct ConsistencyReport {
    std::vector<ConsistencyEntry> entries;
    std::size_t                   violations = 0;

    [[nodiscard]] bool ok() const noexcept {
      return violations == 0;
    }
  };

  //! For each pair proved equal in p by stephen_equal, checks that u v⁻¹ is
  //! trivial in the maximal group image via max_group_wp. Throws
  //! OracleMissing if max_group_wp is empty.
  [[nodiscard]] ConsistencyReport max_group_consistency(
      InvPresentation const&                 p,
      std::vector<std::pair<Word, Word>> const& pairs,
      Budget const&                          budget,
      GroupWordProblem const&                max_group_wp);

}  // namespace invmon

#endif  // INVMON_CONSTRUCT_HPP_

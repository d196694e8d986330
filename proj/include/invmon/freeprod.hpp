// Free products H ∗ FG(t) with reduced-sequence normal forms, the
// homomorphism θ: H ∗ FG(t) → FG(t), bounded submonoid membership, and
// executable checks of the submonoid lemmas about
//   U = ⟨{t} ∪ H ∪ tHt⁻¹⟩,  V = ⟨H ∪ tHt⁻¹⟩,  S = ⟨{t} ∪ H ∪ tWt⁻¹⟩.

#ifndef INVMON_FREEPROD_HPP_
#define INVMON_FREEPROD_HPP_

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace invmon {

  //! An element of a factor group, encoded by its oracle: a one-entry vector
  //! holding the element id for finite groups, a freely reduced list of
  //! signed-letter codes for free groups.
  using HElement = std::vector<int>;

  //! Behavioural interface to a group H.
  class GroupOracle {
   public:
    virtual ~GroupOracle() = default;

    [[nodiscard]] virtual HElement identity() const = 0;
    [[nodiscard]] virtual HElement multiply(HElement const& x,
                                            HElement const& y) const = 0;
    [[nodiscard]] virtual HElement invert(HElement const& x) const = 0;
    [[nodiscard]] virtual bool     is_identity(HElement const& x) const {
      return x == identity();
    }
    //! Every element, identity first, if the group is finite; free groups
    //! return the elements of length at most `max_length`.
    [[nodiscard]] virtual std::vector<HElement> elements(
        std::size_t max_length = 0) const = 0;
    [[nodiscard]] virtual bool        is_finite() const = 0;
    [[nodiscard]] virtual std::string format(HElement const& x) const = 0;
  };

  //! A finite group given by its multiplication table; ids are row indices
  //! and id 0 is the identity.
  class FiniteGroup final : public GroupOracle {
   public:
    //! Throws InvalidArgument unless the table is a group table with
    //! identity 0 (closure, identity, inverses and associativity are checked).
    FiniteGroup(std::vector<std::vector<int>> table,
                std::vector<std::string>      names = {});

    [[nodiscard]] std::size_t order() const noexcept {
      return _table.size();
    }
    [[nodiscard]] int mul(int x, int y) const {
      return _table[x][y];
    }
    [[nodiscard]] HElement element(int id) const;
    [[nodiscard]] std::optional<int> id_of(std::string const& name) const;
    [[nodiscard]] std::vector<std::vector<int>> const& table() const noexcept {
      return _table;
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    [[nodiscard]] HElement identity() const override;
    [[nodiscard]] HElement multiply(HElement const& x,
                                    HElement const& y) const override;
    [[nodiscard]] HElement invert(HElement const& x) const override;
    [[nodiscard]] std::vector<HElement> elements(
        std::size_t max_length = 0) const override;
    [[nodiscard]] bool        is_finite() const override {
      return true;
    }
    [[nodiscard]] std::string format(HElement const& x) const override;

    //! Z/n with elements named 1, g, g^2, ...
    [[nodiscard]] static FiniteGroup cyclic(std::size_t n);
    //! S₃ as permutations of {0, 1, 2}.
    [[nodiscard]] static FiniteGroup symmetric3();

   private:
    std::vector<std::vector<int>> _table;
    std::vector<int>              _inverse;
    std::vector<std::string>      _names;
  };

  //! The free group on `rank` generators x0, x1, …
  class FreeGroupOracle final : public GroupOracle {
   public:
    explicit FreeGroupOracle(std::size_t rank) : _rank(rank) {}

    [[nodiscard]] std::size_t rank() const noexcept {
      return _rank;
    }
    //! The generator x_i (sign +1) or its inverse.
    [[nodiscard]] HElement generator(std::size_t i, bool inverse = false) const;

    [[nodiscard]] HElement identity() const override {
      return {};
    }
    [[nodiscard]] HElement multiply(HElement const& x,
                                    HElement const& y) const override;
    [[nodiscard]] HElement invert(HElement const& x) const override;
    [[nodiscard]] std::vector<HElement> elements(
        std::size_t max_length = 0) const override;
    [[nodiscard]] bool is_finite() const override {
      return false;
    }
    [[nodiscard]] std::string format(HElement const& x) const override;

   private:
    std::size_t _rank;
  };

  //! One syllable of a reduced sequence: a nonidentity element of H, or a
  //! nonzero power of t.
  struct Syllable {
    enum class Factor { h, t };

    Factor   factor  = Factor::h;
    HElement h       = {};
    int      t_power = 0;

    auto operator<=>(Syllable const&) const = default;
  };

  //! An element of H ∗ FG(t) as a reduced sequence; the empty sequence is
  //! the identity.
  struct FreeProdElement {
    std::vector<Syllable> syllables;

    auto operator<=>(FreeProdElement const&) const = default;
  };

  //! Number of syllables of the reduced sequence.
  [[nodiscard]] std::size_t fp_length(FreeProdElement const& x) noexcept;

  //! θ(x) ∈ FG(t) ≅ ℤ as the exponent of t: t ↦ t, h ↦ 1.
  [[nodiscard]] int theta_to_fgt(FreeProdElement const& x) noexcept;

  //! H ∗ FG(t) for a fixed factor oracle.
  class FreeProduct {
   public:
    explicit FreeProduct(std::shared_ptr<GroupOracle const> h);

    [[nodiscard]] GroupOracle const& factor() const noexcept {
      return *_h;
    }

    [[nodiscard]] FreeProdElement identity() const {
      return {};
    }
    [[nodiscard]] FreeProdElement from_h(HElement const& h) const;
    [[nodiscard]] FreeProdElement t_power(int k) const;
    //! t h t⁻¹.
    [[nodiscard]] FreeProdElement conjugate(HElement const& h) const;

    //! Concatenate and re-reduce at the seam.
    [[nodiscard]] FreeProdElement multiply(FreeProdElement const& x,
                                           FreeProdElement const& y) const;
    [[nodiscard]] FreeProdElement inverse(FreeProdElement const& x) const;
    //! True iff the syllables form a reduced sequence.
    [[nodiscard]] bool is_reduced(FreeProdElement const& x) const;

    [[nodiscard]] std::string format(FreeProdElement const& x) const;

   private:
    void push(std::vector<Syllable>& seq, Syllable s) const;

    std::shared_ptr<GroupOracle const> _h;
  };

  enum class Membership { yes, not_found };

  struct MembershipResult {
    Membership membership = Membership::not_found;
    //! 1-based generator indices whose product is the target (when yes).
    std::vector<std::size_t> factorization;
    //! Number of distinct elements visited.
    std::size_t visited = 0;
  };

  inline constexpr std::size_t default_frontier_cap = 1'000'000;

  //! Breadth-first search over products of at most `max_factors` generators.
  //! Yes is conclusive; not_found is inconclusive in general. When every
  //! generator has θ ≥ 0, products with θ above θ(g) are pruned, which is
  //! exact because θ can only grow along such products. Throws
  //! BudgetExceeded past `cap` visited elements.
  [[nodiscard]] MembershipResult submonoid_member_bounded(
      FreeProduct const&                  fp,
      std::vector<FreeProdElement> const& gens,
      FreeProdElement const&              g,
      std::size_t                         max_factors,
      std::size_t                         cap = default_frontier_cap);

  //! All products of at most `max_factors` generators (including the empty
  //! product), sorted. Throws BudgetExceeded past `cap` elements.
  [[nodiscard]] std::vector<FreeProdElement> enumerate_submonoid(
      FreeProduct const&                  fp,
      std::vector<FreeProdElement> const& gens,
      std::size_t                         max_factors,
      std::size_t                         cap = default_frontier_cap);

  //! The submonoid of a finite group generated by `w` (contains 1).
  [[nodiscard]] std::vector<HElement> submonoid_closure(
      GroupOracle const&           h,
      std::vector<HElement> const& w);

  struct KeyClaimReport {
    bool        h_in_t = false;
    Membership  in_s   = Membership::not_found;
    //! Length of a shortest factorization of h over W (when h ∈ T).
    std::size_t t_factors = 0;
    //! Number of generators of S used by the search (when found).
    std::size_t s_factors = 0;
    //! h ∈ T ⟺ tht⁻¹ found in S, and when found within t_factors factors.
    bool agree = false;
  };

  //! Compares h ∈ T = ⟨W⟩ ≤ H with tht⁻¹ ∈ S = ⟨{t} ∪ H ∪ tWt⁻¹⟩. Requires
  //! H finite and max_factors ≥ |H| − 1, which bounds the length of a
  //! shortest factorization over W.
  [[nodiscard]] KeyClaimReport key_claim_check(
      std::shared_ptr<FiniteGroup const> const& h,
      std::vector<HElement> const&              w,
      HElement const&                           target,
      std::size_t                               max_factors,
      std::size_t                               cap = default_frontier_cap);

  struct IdealComplementReport {
    std::size_t u_elements          = 0;
    std::size_t v_elements          = 0;
    std::size_t complement_elements = 0;
    std::size_t spot_checks         = 0;
    std::size_t failures            = 0;
    bool        t_in_complement     = false;
    std::vector<std::string> messages;

    [[nodiscard]] bool ok() const noexcept {
      return failures == 0 && t_in_complement;
    }
  };

  //! Enumerates U and V to `max_factors` factors and checks: θ(V) = 1, θ > 0
  //! on the enumerated U ∖ V, t ∈ U ∖ V, and θ(x·u·y) > 0 for
  //! `sample_size` seeded random triples with u ∈ U ∖ V.
  [[nodiscard]] IdealComplementReport ideal_complement_check(
      std::shared_ptr<FiniteGroup const> const& h,
      std::size_t                               sample_size,
      std::size_t                               max_factors,
      std::size_t                               cap = default_frontier_cap);

  //! Generators {t} ∪ (H ∖ 1) ∪ tWt⁻¹ of S, in that order.
  [[nodiscard]] std::vector<FreeProdElement> key_claim_generators(
      FreeProduct const&           fp,
      std::vector<HElement> const& w);

}  // namespace invmon

#endif  // INVMON_FREEPROD_HPP_

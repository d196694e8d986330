// Inverse monoid and group presentations.

#ifndef INVMON_PRESENTATION_HPP_
#define INVMON_PRESENTATION_HPP_

#include <vector>

#include "invmon/words.hpp"

namespace invmon {

  //! A defining relation lhs = rhs; relations r = 1 have rhs = ε.
  struct Relation {
    Word lhs;
    Word rhs;

    bool operator==(Relation const&) const = default;
  };

  //! Inv⟨A | u_i = v_i⟩. An empty relation list presents FIM(A).
  struct InvPresentation {
    Alphabet              alphabet;
    std::vector<Relation> relations;

    //! Throws UnknownLetter if some relation word leaves the alphabet.
    void validate() const;

    //! True iff every relation has the form r = 1.
    [[nodiscard]] bool is_special() const;

    bool operator==(InvPresentation const&) const = default;
  };

  //! Gp⟨A | r_i = 1⟩.
  struct GroupPresentation {
    Alphabet          alphabet;
    std::vector<Word> relators;

    void validate() const;

    bool operator==(GroupPresentation const&) const = default;
  };

}  // namespace invmon

#endif  // INVMON_PRESENTATION_HPP_

#include "invmon/presentation.hpp"

#include <algorithm>

namespace invmon {

  void InvPresentation::validate() const {
    for (auto const& rel : relations) {
      alphabet.validate(rel.lhs);
      alphabet.validate(rel.rhs);
    }
  }

  bool InvPresentation::is_special() const {
    return std::all_of(relations.begin(), relations.end(), [](auto const& rel) {
      return rel.rhs.empty();
    });
  }

  void GroupPresentation::validate() const {
    for (auto const& r : relators) {
      alphabet.validate(r);
    }
  }

}  // namespace invmon

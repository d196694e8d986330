// Letters, words over A ∪ A⁻¹, alphabets, and the elementary word operations:
// free reduction, formal inverses, prefixes and idempotent words.

#ifndef INVMON_WORDS_HPP_
#define INVMON_WORDS_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace invmon {

  //! A generator name together with a sign; sign -1 denotes the formal
  //! inverse of the generator.
  struct Letter {
    std::string name;
    int         sign = 1;

    Letter() = default;
    Letter(std::string n, int s = 1);

    [[nodiscard]] Letter inverse() const {
      return Letter(name, -sign);
    }
    [[nodiscard]] bool is_inverse_of(Letter const& other) const noexcept {
      return name == other.name && sign == -other.sign;
    }

    auto operator<=>(Letter const&) const = default;
  };

  //! Throws ParseError unless `name` is a legal generator name: nonempty
  //! ASCII, no whitespace and none of `^ - ' " ,`.
  void validate_letter_name(std::string_view name);

  //! A finite sequence of letters. Words are values: every operation below
  //! returns a new word.
  class Word {
   public:
    using value_type     = Letter;
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}

    [[nodiscard]] std::size_t size() const noexcept {
      return _letters.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _letters.empty();
    }
    [[nodiscard]] Letter const& operator[](std::size_t i) const {
      return _letters[i];
    }
    [[nodiscard]] const_iterator begin() const noexcept {
      return _letters.begin();
    }
    [[nodiscard]] const_iterator end() const noexcept {
      return _letters.end();
    }
    [[nodiscard]] std::vector<Letter> const& letters() const noexcept {
      return _letters;
    }

    void push_back(Letter x) {
      _letters.push_back(std::move(x));
    }
    void append(Word const& w) {
      _letters.insert(_letters.end(), w.begin(), w.end());
    }

    //! The word consisting of letters [first, first + len).
    [[nodiscard]] Word subword(std::size_t first, std::size_t len) const;

    auto operator<=>(Word const&) const = default;

   private:
    std::vector<Letter> _letters;
  };

  //! Concatenation.
  [[nodiscard]] Word operator*(Word const& u, Word const& v);

  //! The word x^n for n ≥ 0, or (x⁻¹)^|n| for n < 0.
  [[nodiscard]] Word power(Letter const& x, int n);

  //! Generator x with sign +1 as a one-letter word.
  [[nodiscard]] Word gen(std::string name);

  //! Inverse generator x⁻¹ as a one-letter word.
  [[nodiscard]] Word inv(std::string name);

  //! Delete adjacent xx⁻¹ pairs to exhaustion.
  [[nodiscard]] Word reduce(Word const& w);

  //! x₁…x_n ↦ x_n⁻¹…x₁⁻¹.
  [[nodiscard]] Word formal_inverse(Word const& w);

  //! All prefixes of the raw word in increasing length, from ε to w.
  [[nodiscard]] std::vector<Word> prefixes(Word const& w);

  //! True iff w freely reduces to ε.
  [[nodiscard]] bool is_idempotent_word(Word const& w);

  //! u₁u₁⁻¹u₂u₂⁻¹…u_mu_m⁻¹. Throws EmptyList when `us` is empty.
  [[nodiscard]] Word idempotent_word(std::vector<Word> const& us);

  //! A signed letter packed as 2 * index + (sign < 0). The inverse of a code c
  //! is c ^ 1 and codes sort by (generator order, positive first).
  using Code = std::uint32_t;

  [[nodiscard]] constexpr Code inverse_code(Code c) noexcept {
    return c ^ 1U;
  }

  //! A finite ordered set of generator names. Declaration order is the
  //! canonical order used for every tie-break downstream.
  class Alphabet {
   public:
    Alphabet() = default;
    Alphabet(std::initializer_list<std::string> names);
    explicit Alphabet(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept {
      return _names.size();
    }
    [[nodiscard]] std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    [[nodiscard]] std::string const& name(std::size_t i) const {
      return _names.at(i);
    }
    [[nodiscard]] bool contains(std::string_view name) const;
    [[nodiscard]] std::optional<std::size_t> index(std::string_view name) const;

    //! True iff every name is a single lowercase ASCII character, which
    //! enables the terse `aA` word syntax.
    [[nodiscard]] bool is_terse() const noexcept;

    //! Throws UnknownLetter if some letter of w is not in the alphabet.
    void validate(Word const& w) const;

    [[nodiscard]] Code              encode(Letter const& x) const;
    [[nodiscard]] std::vector<Code> encode(Word const& w) const;
    [[nodiscard]] Letter            decode(Code c) const;
    [[nodiscard]] Word              decode(std::vector<Code> const& codes) const;

    //! A new alphabet with `name` appended. Throws InvalidArgument on clash.
    [[nodiscard]] Alphabet extended(std::string const& name) const;

    //! Alphabet of the distinct names of `words`, in order of first occurrence.
    [[nodiscard]] static Alphabet of(std::vector<Word> const& words);

    bool operator==(Alphabet const& that) const {
      return _names == that._names;
    }

   private:
    std::vector<std::string>                     _names;
    std::unordered_map<std::string, std::size_t> _index;
  };

}  // namespace invmon

#endif  // INVMON_WORDS_HPP_

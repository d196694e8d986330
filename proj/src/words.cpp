#include "invmon/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "invmon/errors.hpp"

namespace invmon {

  void validate_letter_name(std::string_view name) {
    if (name.empty()) {
      throw ParseError("letter names must be nonempty");
    }
    for (unsigned char ch : name) {
      if (ch > 127 || std::isspace(ch) || std::iscntrl(ch)) {
        throw ParseError("letter name '" + std::string(name)
                         + "' contains whitespace or non-ASCII bytes");
      }
      switch (ch) {
        case '^':
        case '-':
        case '\'':
        case '"':
        case ',':
          throw ParseError("letter name '" + std::string(name)
                           + "' contains a reserved character");
        default:
          break;
      }
    }
  }

  Letter::Letter(std::string n, int s) : name(std::move(n)), sign(s) {
    validate_letter_name(name);
    if (sign != 1 && sign != -1) {
      throw InvalidArgument("letter sign must be +1 or -1");
    }
  }

  Word Word::subword(std::size_t first, std::size_t len) const {
    first = std::min(first, _letters.size());
    len   = std::min(len, _letters.size() - first);
    return Word(std::vector<Letter>(_letters.begin() + first,
                                    _letters.begin() + first + len));
  }

  Word operator*(Word const& u, Word const& v) {
    Word result = u;
    result.append(v);
    return result;
  }

  Word power(Letter const& x, int n) {
    Letter const y = n >= 0 ? x : x.inverse();
    Word         result;
    for (int i = 0; i < std::abs(n); ++i) {
      result.push_back(y);
    }
    return result;
  }

  Word gen(std::string name) {
    return Word{Letter(std::move(name), 1)};
  }

  Word inv(std::string name) {
    return Word{Letter(std::move(name), -1)};
  }

  Word reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto const& x : w) {
      if (!stack.empty() && stack.back().is_inverse_of(x)) {
        stack.pop_back();
      } else {
        stack.push_back(x);
      }
    }
    return Word(std::move(stack));
  }

  Word formal_inverse(Word const& w) {
    std::vector<Letter> result;
    result.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      result.push_back(it->inverse());
    }
    return Word(std::move(result));
  }

  std::vector<Word> prefixes(Word const& w) {
    std::vector<Word> result;
    result.reserve(w.size() + 1);
    for (std::size_t i = 0; i <= w.size(); ++i) {
      result.push_back(w.subword(0, i));
    }
    return result;
  }

  bool is_idempotent_word(Word const& w) {
    return reduce(w).empty();
  }

  Word idempotent_word(std::vector<Word> const& us) {
    if (us.empty()) {
      throw EmptyList("idempotent_word requires at least one word");
    }
    Word result;
    for (auto const& u : us) {
      result.append(u);
      result.append(formal_inverse(u));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::initializer_list<std::string> names)
      : Alphabet(std::vector<std::string>(names)) {}

  Alphabet::Alphabet(std::vector<std::string> names) : _names(std::move(names)) {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      validate_letter_name(_names[i]);
      if (!_index.emplace(_names[i], i).second) {
        throw InvalidArgument("duplicate alphabet name '" + _names[i] + "'");
      }
    }
  }

  bool Alphabet::contains(std::string_view name) const {
    return _index.count(std::string(name)) != 0;
  }

  std::optional<std::size_t> Alphabet::index(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  bool Alphabet::is_terse() const noexcept {
    return std::all_of(_names.begin(), _names.end(), [](auto const& n) {
      return n.size() == 1 && n[0] >= 'a' && n[0] <= 'z';
    });
  }

  void Alphabet::validate(Word const& w) const {
    for (auto const& x : w) {
      if (!contains(x.name)) {
        throw UnknownLetter("letter '" + x.name + "' is not in the alphabet");
      }
    }
  }

  Code Alphabet::encode(Letter const& x) const {
    auto i = index(x.name);
    if (!i) {
      throw UnknownLetter("letter '" + x.name + "' is not in the alphabet");
    }
    return static_cast<Code>(2 * *i + (x.sign < 0 ? 1 : 0));
  }

  std::vector<Code> Alphabet::encode(Word const& w) const {
    std::vector<Code> result;
    result.reserve(w.size());
    for (auto const& x : w) {
      result.push_back(encode(x));
    }
    return result;
  }

  Letter Alphabet::decode(Code c) const {
    return Letter(name(c / 2), (c & 1U) ? -1 : 1);
  }

  Word Alphabet::decode(std::vector<Code> const& codes) const {
    std::vector<Letter> letters;
    letters.reserve(codes.size());
    for (auto c : codes) {
      letters.push_back(decode(c));
    }
    return Word(std::move(letters));
  }

  Alphabet Alphabet::extended(std::string const& name) const {
    auto names = _names;
    names.push_back(name);
    return Alphabet(std::move(names));
  }

  Alphabet Alphabet::of(std::vector<Word> const& words) {
    std::vector<std::string> names;
    for (auto const& w : words) {
      for (auto const& x : w) {
        if (std::find(names.begin(), names.end(), x.name) == names.end()) {
          names.push_back(x.name);
        }
      }
    }
    return Alphabet(std::move(names));
  }

}  // namespace invmon

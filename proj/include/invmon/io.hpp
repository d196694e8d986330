// Text, JSON, CSV and DOT formats.

#ifndef INVMON_IO_HPP_
#define INVMON_IO_HPP_

#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include "json.hpp"

#include "invmon/construct.hpp"
#include "invmon/freeprod.hpp"
#include "invmon/hnn.hpp"
#include "invmon/presentation.hpp"
#include "invmon/raag.hpp"
#include "invmon/stephen.hpp"
#include "invmon/word_graph.hpp"
#include "invmon/words.hpp"

namespace invmon {

  using json = nlohmann::ordered_json;

  //! Parses a word. "" and "1" denote ε. In terse mode (every alphabet name
  //! is one lowercase char, or no alphabet is given and the text holds only
  //! ASCII letters, blanks and "^-1") each letter is a generator and an
  //! uppercase letter is its inverse, with or without separating blanks.
  //! Otherwise tokens are separated by blanks and have the form `name` or
  //! `name^-1`. Throws ParseError, or UnknownLetter if an alphabet is given
  //! and the word leaves it.
  [[nodiscard]] Word parse_word(std::string_view text,
                                Alphabet const*  alphabet = nullptr);

  //! Inverse of parse_word: "1" for ε, otherwise blank-separated tokens, with
  //! uppercase inverses when every letter name is one lowercase char.
  [[nodiscard]] std::string format_word(Word const& w);

  [[nodiscard]] json word_to_json(Word const& w);
  //! Accepts an array of {name, sign} objects or of tokens, or a string.
  [[nodiscard]] Word word_from_json(json const& j,
                                    Alphabet const* alphabet = nullptr);

  [[nodiscard]] json            presentation_to_json(InvPresentation const& p);
  [[nodiscard]] InvPresentation presentation_from_json(json const& j);

  [[nodiscard]] json              group_to_json(GroupPresentation const& g);
  [[nodiscard]] GroupPresentation group_from_json(json const& j);

  [[nodiscard]] json                 instance_to_json(ConstructionInstance const& ci);
  [[nodiscard]] ConstructionInstance instance_from_json(json const& j);

  [[nodiscard]] json      simp_graph_to_json(SimpGraph const& g);
  [[nodiscard]] SimpGraph simp_graph_from_json(json const& j);

  [[nodiscard]] json            hnn_to_json(HnnPresentation const& h);
  [[nodiscard]] HnnPresentation hnn_from_json(json const& j);

  [[nodiscard]] json        finite_group_to_json(FiniteGroup const& g);
  [[nodiscard]] FiniteGroup finite_group_from_json(json const& j);
  //! One row of comma-separated ids per line, optionally preceded by a row
  //! of element names.
  [[nodiscard]] FiniteGroup finite_group_from_csv(std::string_view text);

  [[nodiscard]] json word_graph_to_json(WordGraph const& g,
                                        Alphabet const&  alphabet);
  //! DOT rendering: start vertex double circle, end vertex shaded.
  [[nodiscard]] std::string to_dot(WordGraph const&   g,
                                   Alphabet const&    alphabet,
                                   std::string const& name = "G");

  [[nodiscard]] json stephen_result_to_json(StephenResult const& r);
  [[nodiscard]] json query_bundle_to_json(QueryBundle const& b);
  [[nodiscard]] json certificate_to_json(Certificate const& c);
  [[nodiscard]] json britton_form_to_json(BrittonForm const& f,
                                          std::string const& stable);

  [[nodiscard]] std::string to_string(Verdict v);
  [[nodiscard]] std::string to_string(Answer a);
  [[nodiscard]] std::string to_string(Membership m);
  [[nodiscard]] std::string to_string(CertificateStatus s);

  //! Reads a whole file; throws ParseError if it cannot be opened.
  [[nodiscard]] std::string read_file(std::string const& path);
  //! Reads and parses a JSON file; throws ParseError.
  [[nodiscard]] json read_json_file(std::string const& path);
  //! Writes text to a file, creating missing parent directories; throws Error
  //! on failure.
  void write_file(std::string const& path, std::string const& text);

}  // namespace invmon

#endif  // INVMON_IO_HPP_

// A sound, budgeted semi-decision procedure for the word problem of a finitely
// presented inverse monoid, following Stephen's approximation of
// Schützenberger graphs by iterated expansion and folding.
//
// The approximant of a word w starts as its Munn tree. One round sews, for
// every relation (u, v) in both orientations and every vertex x of the current
// graph from which a u-path runs to y, a v-path from x to y (unless one is
// already readable), and then folds. A relation r = 1 therefore identifies the
// endpoints of every r-path and sews an r-loop at every vertex. Every
// approximant maps into the Schützenberger graph S(w), so if v is readable
// between the roots of the approximant of u and u between those of the
// approximant of v, then [u] = [v]. Nothing can be concluded from a
// negative answer at any finite stage, unless the approximant stops changing,
// in which case it is S(w) itself.

#ifndef INVMON_STEPHEN_HPP_
#define INVMON_STEPHEN_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "invmon/presentation.hpp"
#include "invmon/word_graph.hpp"
#include "invmon/words.hpp"

namespace invmon {

  struct Budget {
    std::size_t max_rounds   = 10;
    std::size_t max_vertices = 10'000;

    //! Throws InvalidArgument if max_vertices is 0.
    void validate() const;
  };

  struct Approximant {
    WordGraph   graph;
    std::size_t round = 0;
  };

  enum class ExpansionMode {
    //! Sew ε → r loops at every vertex.
    every_vertex,
    //! Sew ε → r loops only at the start and end vertices.
    roots_only
  };

  struct StephenOptions {
    ExpansionMode mode = ExpansionMode::every_vertex;
    //! Expand the two approximant towers of stephen_equal on two threads.
    bool concurrent = false;
    //! Keep a copy of every approximant (for DOT dumps).
    bool keep_graphs = false;
  };

  //! The Munn tree of w over the presentation's alphabet, at round 0.
  [[nodiscard]] Approximant initial_approximant(InvPresentation const& pres,
                                                Word const&            w);

  //! One full expansion round followed by folding. Throws BudgetExceeded if
  //! the working graph would exceed `max_vertices` vertices; the partial
  //! round is discarded.
  [[nodiscard]] Approximant expand_round(Approximant const&     appr,
                                         InvPresentation const& pres,
                                         std::size_t            max_vertices,
                                         ExpansionMode mode = ExpansionMode::every_vertex);

  enum class Verdict { equal, unknown };

  //! One line of the per-round trace of a tower.
  struct RoundTrace {
    std::size_t round;
    std::size_t vertices;
    std::size_t edges;
    bool        readable;

    bool operator==(RoundTrace const&) const = default;
  };

  struct StephenResult {
    Verdict     verdict = Verdict::unknown;
    //! Rounds completed by the longer of the two towers.
    std::size_t rounds = 0;
    //! Why the run stopped.
    std::string reason;
    //! True if some tower reached a fixpoint without the other word being
    //! readable; then [u] ≠ [v], although the verdict stays unknown.
    bool closed = false;
    std::vector<RoundTrace> trace_u;
    std::vector<RoundTrace> trace_v;
    //! Filled only with StephenOptions::keep_graphs.
    std::vector<WordGraph> graphs_u;
    std::vector<WordGraph> graphs_v;
  };

  //! Equal only if [u]_M = [v]_M; unknown carries no information.
  [[nodiscard]] StephenResult stephen_equal(InvPresentation const& pres,
                                            Word const&            u,
                                            Word const&            v,
                                            Budget const&          budget,
                                            StephenOptions const&  options = {});

  enum class Answer { yes, unknown };

  struct RightInvertibility {
    Answer        answer = Answer::unknown;
    StephenResult detail;
  };

  //! [w] is right invertible iff [ww⁻¹] = 1; yes is sound.
  [[nodiscard]] RightInvertibility is_right_invertible(
      InvPresentation const& pres,
      Word const&            w,
      Budget const&          budget,
      StephenOptions const&  options = {});

  //! The nonempty prefixes of the relators of Inv⟨A | r_i = 1⟩, deduplicated,
  //! in order of first occurrence; their images generate the right units.
  //! Throws NotSpecialPresentation if some relation has rhs ≠ ε.
  [[nodiscard]] std::vector<Word> prefix_generators(InvPresentation const& pres);

  //! Gp⟨A | u_i v_i⁻¹ = 1⟩.
  [[nodiscard]] GroupPresentation max_group_image(InvPresentation const& pres);

}  // namespace invmon

#endif  // INVMON_STEPHEN_HPP_

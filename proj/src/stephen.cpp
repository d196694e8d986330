#include "invmon/stephen.hpp"

#include <future>
#include <optional>

#include "invmon/errors.hpp"
#include "invmon/munn.hpp"

namespace invmon {

  void Budget::validate() const {
    if (max_vertices == 0) {
      throw InvalidArgument("budget: max_vertices must be at least 1");
    }
  }

  namespace {
    struct CompiledRelation {
      std::vector<Code> lhs;
      std::vector<Code> rhs;
    };

    std::vector<CompiledRelation> compile(InvPresentation const& pres) {
      std::vector<CompiledRelation> result;
      result.reserve(pres.relations.size());
      for (auto const& rel : pres.relations) {
        result.push_back({pres.alphabet.encode(rel.lhs),
                          pres.alphabet.encode(rel.rhs)});
      }
      return result;
    }

    Approximant expand(Approximant const&                   appr,
                       std::vector<CompiledRelation> const& relations,
                       std::size_t                          max_vertices,
                       ExpansionMode                        mode) {
      WordGraph const& input = appr.graph;
      FoldingEngine    engine(input);
      auto const       n = static_cast<Vertex>(input.num_vertices());

      auto apply = [&](std::vector<Code> const& from,
                       std::vector<Code> const& to) {
        auto visit = [&](Vertex x) {
          auto y = input.read(x, from);
          if (!y) {
            return;
          }
          auto [reached, consumed] = engine.read_prefix(x, to);
          if (consumed == to.size() && reached == engine.find(*y)) {
            return;
          }
          engine.sew(x, to, *y);
          if (engine.num_alive() > max_vertices) {
            throw BudgetExceeded("approximant exceeds "
                                 + std::to_string(max_vertices)
                                 + " vertices in round "
                                 + std::to_string(appr.round + 1));
          }
        };
        if (from.empty() && mode == ExpansionMode::roots_only) {
          visit(input.start());
          if (input.end() != input.start()) {
            visit(input.end());
          }
        } else {
          for (Vertex x = 0; x < n; ++x) {
            visit(x);
          }
        }
      };

      for (auto const& rel : relations) {
        apply(rel.lhs, rel.rhs);
        apply(rel.rhs, rel.lhs);
      }
      return Approximant{engine.canonical(input.start(), input.end()),
                         appr.round + 1};
    }

    // One side of stephen_equal: the approximants of `word`, tested for
    // readability of `other`.
    struct Tower {
      Approximant         appr;
      std::vector<Code>   other;
      bool                readable = false;
      bool                closed   = false;
      std::optional<std::string> failure;
      std::vector<RoundTrace>    trace;
      std::vector<WordGraph>     graphs;

      Tower(Approximant a, std::vector<Code> o)
          : appr(std::move(a)), other(std::move(o)) {}

      void record(bool keep) {
        readable = appr.graph.accepts(other);
        trace.push_back({appr.round,
                         appr.graph.num_vertices(),
                         appr.graph.num_edges(),
                         readable});
        if (keep) {
          graphs.push_back(appr.graph);
        }
      }

      [[nodiscard]] bool active() const {
        return !readable && !closed && !failure;
      }

      void step(std::vector<CompiledRelation> const& relations,
                Budget const&                        budget,
                StephenOptions const&                options) {
        try {
          Approximant next = expand(appr, relations, budget.max_vertices,
                                    options.mode);
          // Only a complete, every-vertex round that changes nothing certifies
          // that the Schützenberger graph has been reached.
          if (next.graph == appr.graph
              && options.mode == ExpansionMode::every_vertex) {
            closed = true;
          }
          appr = std::move(next);
          record(options.keep_graphs);
        } catch (BudgetExceeded const& e) {
          failure = e.what();
        }
      }
    };
  }  // namespace

  Approximant initial_approximant(InvPresentation const& pres, Word const& w) {
    return Approximant{munn_tree(pres.alphabet, w).graph, 0};
  }

  Approximant expand_round(Approximant const&     appr,
                           InvPresentation const& pres,
                           std::size_t            max_vertices,
                           ExpansionMode          mode) {
    if (max_vertices == 0) {
      throw InvalidArgument("expand_round: max_vertices must be at least 1");
    }
    return expand(appr, compile(pres), max_vertices, mode);
  }

  StephenResult stephen_equal(InvPresentation const& pres,
                              Word const&            u,
                              Word const&            v,
                              Budget const&          budget,
                              StephenOptions const&  options) {
    budget.validate();
    pres.validate();
    auto const relations = compile(pres);

    Tower tu{initial_approximant(pres, u), pres.alphabet.encode(v)};
    Tower tv{initial_approximant(pres, v), pres.alphabet.encode(u)};
    tu.record(options.keep_graphs);
    tv.record(options.keep_graphs);

    StephenResult result;
    auto          finish = [&](Verdict verdict, std::string reason) {
      result.verdict  = verdict;
      result.reason   = std::move(reason);
      result.rounds   = std::max(tu.appr.round, tv.appr.round);
      result.trace_u  = std::move(tu.trace);
      result.trace_v  = std::move(tv.trace);
      result.graphs_u = std::move(tu.graphs);
      result.graphs_v = std::move(tv.graphs);
      return std::move(result);
    };

    for (std::size_t round = 0;; ++round) {
      if (tu.readable && tv.readable) {
        return finish(Verdict::equal,
                      "each word is readable in the other's approximant");
      }
      for (auto* t : {&tu, &tv}) {
        if (t->closed && !t->readable) {
          result.closed = true;
          return finish(Verdict::unknown,
                        "approximant closed without the other word being "
                        "readable");
        }
        if (t->failure) {
          return finish(Verdict::unknown, *t->failure);
        }
      }
      if (round == budget.max_rounds) {
        return finish(Verdict::unknown,
                      "round budget of " + std::to_string(budget.max_rounds)
                          + " exhausted");
      }
      if (options.concurrent && tu.active() && tv.active()) {
        auto pending = std::async(std::launch::async, [&] {
          tu.step(relations, budget, options);
        });
        tv.step(relations, budget, options);
        pending.get();
      } else {
        for (auto* t : {&tu, &tv}) {
          if (t->active()) {
            t->step(relations, budget, options);
          }
        }
      }
    }
  }

  RightInvertibility is_right_invertible(InvPresentation const& pres,
                                         Word const&            w,
                                         Budget const&          budget,
                                         StephenOptions const&  options) {
    RightInvertibility result;
    result.detail = stephen_equal(pres, w * formal_inverse(w), Word{}, budget,
                                  options);
    result.answer = result.detail.verdict == Verdict::equal ? Answer::yes
                                                            : Answer::unknown;
    return result;
  }

  std::vector<Word> prefix_generators(InvPresentation const& pres) {
    if (!pres.is_special()) {
      throw NotSpecialPresentation(
          "prefix_generators requires every relation to be of the form r = 1");
    }
    std::vector<Word> result;
    for (auto const& rel : pres.relations) {
      for (auto& p : prefixes(rel.lhs)) {
        if (!p.empty()
            && std::find(result.begin(), result.end(), p) == result.end()) {
          result.push_back(std::move(p));
        }
      }
    }
    return result;
  }

  GroupPresentation max_group_image(InvPresentation const& pres) {
    GroupPresentation result{pres.alphabet, {}};
    for (auto const& rel : pres.relations) {
      result.relators.push_back(rel.lhs * formal_inverse(rel.rhs));
    }
    return result;
  }

}  // namespace invmon

#include "criteria.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "invmon/construct.hpp"
#include "invmon/errors.hpp"
#include "invmon/freeprod.hpp"
#include "invmon/hnn.hpp"
#include "invmon/io.hpp"
#include "invmon/munn.hpp"
#include "invmon/raag.hpp"
#include "invmon/stephen.hpp"

#include "../support/oracles.hpp"

namespace invmon::acceptance {

  namespace {
    using Clock = std::chrono::steady_clock;

    template <typename Body>
    Outcome timed(int id, std::string title, double limit, Body&& body) {
      Outcome o{id, std::move(title)};
      o.limit_seconds = limit;
      auto const t0   = Clock::now();
      try {
        o.passed = body(o.detail);
      } catch (std::exception const& e) {
        o.passed = false;
        o.detail += std::string(o.detail.empty() ? "" : "; ") + "exception: "
                    + e.what();
      }
      o.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
      if (o.seconds > limit) {
        o.passed = false;
        o.detail += "; time limit exceeded";
      }
      return o;
    }

    InvPresentation bicyclic() {
      return InvPresentation{Alphabet{"a"}, {{gen("a") * inv("a"), {}}}};
    }

    Word pw(std::string const& name, int k) {
      return power(Letter(name), k);
    }

    std::string describe(Word const& u, Word const& v) {
      return "(" + format_word(u) + ", " + format_word(v) + ")";
    }

    // Pairs that hold in the monoid of the headline construction with
    // W = {a}.
    std::vector<std::pair<Word, Word>> equivalence_pairs(
        ConstructionInstance const& ci) {
      Word const a = gen("a"), A = inv("a"), z = gen("z"), Z = inv("z"),
                 t = gen("t"), T = inv("t");
      Word const r = ci.group.relators[0];
      Word const e = construction_idempotent(ci);
      return {{t * a * T * t * A * T, {}},
              {a * A, {}},
              {A * a, {}},
              {z * Z, {}},
              {Z * z, {}},
              {e, {}},
              {r, {}},
              {a * z * a * Z, z * a * Z * a},
              {a * A * z, z},
              {t * T, {}},
              {t * a * a * T * t * A * A * T, {}},
              {z * r * Z, {}},
              {A * r * a, {}},
              {a * t * T * A, {}},
              {t * T * a, a},
              {z * t * T, z},
              {t * a * T * t * A * T * z, z},
              {a * a * z * Z * A, a},
              {t * a * T * t * a * T * t * A * A * T, {}},
              {Z * A * a * z, {}}};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // 1
  ////////////////////////////////////////////////////////////////////////

  Outcome munn_vagner_agreement() {
    return timed(1, "Munn trees agree with the Vagner closure", 60,
                 [](std::string& detail) {
      std::size_t pairs = 0, equal = 0, disagreements = 0;
      std::string first;
      for (auto const& [alphabet, n] :
           std::vector<std::pair<Alphabet, std::size_t>>{{Alphabet{"a"}, 6},
                                                         {Alphabet{"a", "z"}, 4}}) {
        auto const words = oracle::all_words(alphabet, n);
        // Closures at radius |u| + |v| + 4, one per (word, radius).
        std::map<std::pair<std::size_t, std::size_t>,
                 std::vector<std::vector<Code>>>
                                       closures;
        std::vector<WordGraph>         trees;
        std::vector<std::vector<Code>> codes;
        for (auto const& w : words) {
          trees.push_back(munn_tree(alphabet, w).graph);
          codes.push_back(alphabet.encode(w));
        }
        for (std::size_t i = 0; i < words.size(); ++i) {
          for (std::size_t j = 0; j < words.size(); ++j) {
            ++pairs;
            std::size_t const radius = words[i].size() + words[j].size() + 4;
            auto              it     = closures.find({i, radius});
            if (it == closures.end()) {
              it = closures
                       .emplace(std::pair{i, radius},
                                vagner_closure(alphabet, words[i], radius))
                       .first;
            }
            bool const by_closure = std::binary_search(
                it->second.begin(), it->second.end(), codes[j]);
            bool const by_tree = trees[i] == trees[j];
            equal += by_tree;
            if (by_closure != by_tree) {
              if (disagreements++ == 0) {
                first = describe(words[i], words[j]);
              }
            }
          }
        }
      }
      detail = std::to_string(pairs) + " pairs, " + std::to_string(equal)
               + " equal, " + std::to_string(disagreements) + " disagreements";
      if (!first.empty()) {
        detail += ", first " + first;
      }
      return disagreements == 0;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 2
  ////////////////////////////////////////////////////////////////////////

  Outcome bicyclic_suite() {
    return timed(2, "Bicyclic monoid suite", 120, [](std::string& detail) {
      auto const   p = bicyclic();
      Budget const small{3, 5000};
      auto const   basic = stephen_equal(p, gen("a") * inv("a"), {}, small);
      bool         ok    = basic.verdict == Verdict::equal && basic.rounds <= 3;
      detail = "a A = 1 in " + std::to_string(basic.rounds) + " round(s)";

      std::mt19937                          rng(2);
      std::uniform_int_distribution<std::size_t> pick(0, 5);
      Budget const                          budget{15, 5000};
      std::size_t oracle_equal = 0, proved = 0, unsound = 0;
      for (std::size_t i = 0; i < 200; ++i) {
        std::size_t const m = pick(rng), n = pick(rng);
        Word              u = oracle::bicyclic_word(m, n);
        // Pad u with factors a a⁻¹ at random positions.
        for (std::size_t k = pick(rng) % 3; k > 0; --k) {
          std::uniform_int_distribution<std::size_t> at(0, u.size());
          std::size_t const                          pos = at(rng);
          u = u.subword(0, pos) * gen("a") * inv("a")
              * u.subword(pos, u.size() - pos);
        }
        std::size_t m2 = m, n2 = n;
        if (i % 2 == 1) {
          while (m2 == m && n2 == n) {
            m2 = pick(rng);
            n2 = pick(rng);
          }
        }
        Word const v    = oracle::bicyclic_word(m2, n2);
        bool const same = oracle::bicyclic_normal_form(u)
                          == oracle::bicyclic_normal_form(v);
        auto const r = stephen_equal(p, u, v, budget);
        oracle_equal += same;
        if (r.verdict == Verdict::equal) {
          ++proved;
          if (!same) {
            ++unsound;
            ok = false;
          }
        }
      }
      detail += "; 200 pairs, " + std::to_string(oracle_equal)
                + " equal by the oracle, " + std::to_string(proved)
                + " proved equal, " + std::to_string(unsound) + " unsound";
      return ok;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 3
  ////////////////////////////////////////////////////////////////////////

  Outcome raag_agreement() {
    return timed(3, "RAAG normal forms agree with the commutation oracle", 120,
                 [](std::string& detail) {
      SimpGraph const     g = p4();
      oracle::RaagClasses classes(g, 6);

      // Agreement on all pairs of words of length ≤ 5 is agreement of the
      // two partitions.
      std::map<std::vector<Code>, std::size_t> nf_to_class;
      std::map<std::size_t, std::vector<Code>> class_to_nf;
      std::size_t words = 0, disagreements = 0;
      for (std::size_t i = 0; i < classes.num_words(); ++i) {
        auto const w = classes.word(i);
        if (w.size() > 5) {
          break;
        }
        ++words;
        auto const nf = raag_normal_form_codes(g, w);
        auto const c  = classes.class_of(w);
        auto [it1, new1] = nf_to_class.emplace(nf, c);
        auto [it2, new2] = class_to_nf.emplace(c, nf);
        if (it1->second != c || it2->second != nf) {
          ++disagreements;
        }
      }

      std::mt19937                        rng(3);
      std::uniform_int_distribution<Code> letter(0, 2 * g.size() - 1);
      std::size_t                         sampled_equal = 0;
      for (std::size_t i = 0; i < 1000; ++i) {
        std::vector<Code> u(6), v(6);
        for (auto& c : u) {
          c = letter(rng);
        }
        if (i % 2 == 0) {
          v = u;
          for (int k = 0; k < 12; ++k) {
            std::size_t const p = rng() % 5;
            if (v[p] / 2 == v[p + 1] / 2 || g.adjacent(v[p] / 2, v[p + 1] / 2)) {
              std::swap(v[p], v[p + 1]);
            }
          }
        } else {
          for (auto& c : v) {
            c = letter(rng);
          }
        }
        bool const by_nf = raag_equal(g, g.vertices().decode(u),
                                      g.vertices().decode(v));
        sampled_equal += by_nf;
        if (by_nf != classes.equal(u, v)) {
          ++disagreements;
        }
      }
      detail = std::to_string(words) + " words of length <= 5 in "
               + std::to_string(class_to_nf.size())
               + " classes, 1000 sampled pairs at length 6 ("
               + std::to_string(sampled_equal) + " equal), "
               + std::to_string(disagreements) + " disagreements";
      return disagreements == 0;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 4
  ////////////////////////////////////////////////////////////////////////

  Outcome embedding_verification() {
    return timed(4, "Embedding of A(P4) into the one-relator group", 60,
                 [](std::string& detail) {
      // Length ≤ 4 is exhausted inside length ≤ 6; the distinct nontrivial
      // normal forms of length ≤ 4 alone number fewer than 8000.
      auto const report = verify_embedding_sample(6);
      auto const h      = p4_instance();
      std::size_t conjugates = 0;
      for (auto const& r : p4_conjugate_relators()) {
        conjugates += hnn_is_trivial(h, r);
      }
      detail = std::to_string(report.relators_checked) + " relator images, "
               + std::to_string(report.nontrivial_checked)
               + " nontrivial normal forms of length <= 6 from "
               + std::to_string(report.words_enumerated) + " words, "
               + std::to_string(report.failed) + " failures, "
               + std::to_string(conjugates) + "/2 conjugate relators trivial";
      if (!report.failures.empty()) {
        detail += ", first: " + report.failures.front();
      }
      return report.ok() && report.nontrivial_checked >= 8000
             && conjugates == 2;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 5
  ////////////////////////////////////////////////////////////////////////

  Outcome one_relator_relator_check() {
    return timed(5, "One-relator word problem on the defining relator", 1,
                 [](std::string& detail) {
      bool       ok = one_relator_wp(one_relator_relator());
      Word const a = gen("a"), z = gen("z");
      for (auto const& g : {a, z, a * z, z * a * inv("z") * inv("a")}) {
        if (one_relator_wp(g)) {
          ok = false;
          detail += "trivial: " + format_word(g) + "; ";
        }
      }
      detail += ok ? "relator trivial, a, z, az, zaz^-1a^-1 nontrivial" : "";
      return ok;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 6
  ////////////////////////////////////////////////////////////////////////

  Outcome free_product_lemmas() {
    return timed(6, "Free-product submonoid lemmas", 180,
                 [](std::string& detail) {
      std::vector<std::pair<std::string, FiniteGroup>> groups{
          {"Z/2", FiniteGroup::cyclic(2)},
          {"Z/3", FiniteGroup::cyclic(3)},
          {"S3", FiniteGroup::symmetric3()}};
      bool        ok     = true;
      std::size_t checks = 0, in_t = 0;
      std::string notes;
      for (auto& [name, group] : groups) {
        auto const  h     = std::make_shared<FiniteGroup const>(group);
        std::size_t order = h->order();
        for (std::size_t mask = 0; mask < (std::size_t{1} << order); ++mask) {
          std::vector<HElement> w;
          std::vector<int>      ids;
          for (std::size_t x = 0; x < order; ++x) {
            if (mask >> x & 1) {
              w.push_back(h->element(static_cast<int>(x)));
              ids.push_back(static_cast<int>(x));
            }
          }
          auto const t = oracle::finite_submonoid(*h, ids);
          for (std::size_t x = 0; x < order; ++x) {
            auto const r = key_claim_check(h, w, h->element(static_cast<int>(x)),
                                           order);
            ++checks;
            in_t += r.h_in_t;
            bool const expected = t.count(static_cast<int>(x)) != 0;
            if (!r.agree || r.h_in_t != expected) {
              ok = false;
              if (notes.size() < 200) {
                notes += " disagreement in " + name + " at h = "
                         + h->format(h->element(static_cast<int>(x))) + ";";
              }
            }
          }
        }
        auto const ideal = ideal_complement_check(h, 2000, 5);
        notes += " " + name + ": |U|=" + std::to_string(ideal.u_elements)
                 + " |V|=" + std::to_string(ideal.v_elements) + " |U\\V|="
                 + std::to_string(ideal.complement_elements) + " "
                 + (ideal.ok() ? "ok" : "FAILED") + ";";
        ok = ok && ideal.ok();
      }
      detail = std::to_string(checks) + " key-claim cases (" + std::to_string(in_t)
               + " with h in T);" + notes;
      return ok;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 7
  ////////////////////////////////////////////////////////////////////////

  Outcome construction_end_to_end() {
    return timed(7, "Membership queries compiled to right invertibility", 600,
                 [](std::string& detail) {
      Budget const yes_budget{5, 20000};
      Budget const no_budget{20, 20000};
      bool         ok = true;
      for (auto const& [name, ci] :
           std::vector<std::pair<std::string, ConstructionInstance>>{
               {"free", free_instance({gen("a")})},
               {"headline", headline_instance({gen("a")})}}) {
        auto const p  = build_presentation(ci);
        auto const wp = bundled_group_wp(ci.group);
        detail += name + ":";
        for (int k = 0; k <= 3; ++k) {
          auto const q = membership_query(ci, pw("a", k));
          auto const r = is_right_invertible(p, q.probe, yes_budget);
          auto const c = forward_certificate(
              ci, pw("a", k), std::vector<std::size_t>(k, 1), wp);
          bool const good = r.answer == Answer::yes
                            && c.status == CertificateStatus::valid;
          ok = ok && good;
          detail += " a^" + std::to_string(k) + " " + to_string(r.answer) + " in "
                    + std::to_string(r.detail.rounds) + ";";
        }
        auto const q = membership_query(ci, inv("a"));
        auto const r = is_right_invertible(p, q.probe, no_budget);
        ok           = ok && r.answer == Answer::unknown;
        detail += " a^-1 " + to_string(r.answer) + " after "
                  + std::to_string(r.detail.rounds) + " (" + r.detail.reason
                  + ");";
      }
      detail += " budgets: yes 5 rounds/20000 vertices, no 20/20000";
      return ok;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 8
  ////////////////////////////////////////////////////////////////////////

  Outcome presentation_equivalence() {
    return timed(8, "Equivalent presentations prove the same pairs", 600,
                 [](std::string& detail) {
      auto const   ci     = headline_instance({gen("a")});
      auto const   dagger = build_presentation(ci);
      auto const   forms  = equivalent_presentations(dagger, ci);
      Budget const budget{8, 100000};
      std::vector<std::pair<std::string, InvPresentation const*>> named{
          {"built", &dagger}, {"split", &forms[0]}, {"expanded", &forms[1]}};
      bool                     ok = true;
      std::vector<std::size_t> max_rounds(3, 0);
      std::size_t              pairs = 0;
      for (auto const& [u, v] : equivalence_pairs(ci)) {
        ++pairs;
        for (std::size_t f = 0; f < named.size(); ++f) {
          auto const r = stephen_equal(*named[f].second, u, v, budget);
          if (r.verdict != Verdict::equal) {
            ok = false;
            detail += named[f].first + " fails " + describe(u, v) + "; ";
          }
          max_rounds[f] = std::max(max_rounds[f], r.rounds);
        }
      }
      detail += std::to_string(pairs) + " pairs; budget 8 rounds/100000 vertices; "
                "max rounds used: built "
                + std::to_string(max_rounds[0]) + ", split "
                + std::to_string(max_rounds[1]) + ", expanded "
                + std::to_string(max_rounds[2]);
      return ok;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 9
  ////////////////////////////////////////////////////////////////////////

  Outcome prefix_generator_check() {
    return timed(9, "Prefix generators are right invertible", 300,
                 [](std::string& detail) {
      Budget const budget{10, 20000};
      bool         ok = true;
      for (auto const& [name, p] :
           std::vector<std::pair<std::string, InvPresentation>>{
               {"bicyclic", bicyclic()},
               {"headline", build_presentation(headline_instance({gen("a")}))}}) {
        auto const  gens   = prefix_generators(p);
        std::size_t yes    = 0;
        std::size_t rounds = 0;
        for (auto const& w : gens) {
          auto const r = is_right_invertible(p, w, budget);
          if (r.answer == Answer::yes) {
            ++yes;
          } else {
            ok = false;
            detail += "not certified: " + format_word(w) + "; ";
          }
          rounds = std::max(rounds, r.detail.rounds);
        }
        detail += name + " " + std::to_string(yes) + "/"
                  + std::to_string(gens.size()) + " (max rounds "
                  + std::to_string(rounds) + "); ";
      }
      detail += "budget 10 rounds/20000 vertices";
      return ok;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // 10
  ////////////////////////////////////////////////////////////////////////

  std::map<std::string, std::string> generate_artifacts() {
    std::map<std::string, std::string> out;
    auto put = [&](std::string const& name, json const& j) {
      out[name] = j.dump(2) + "\n";
    };

    for (auto const& [name, text] :
         std::vector<std::pair<std::string, std::string>>{
             {"munn_aAz", "a A z"}, {"munn_azAZa", "a z A Z a"}}) {
      auto const w = parse_word(text);
      auto const t = munn_tree(w);
      out[name + ".dot"] = to_dot(t.graph, t.alphabet, "munn");
      put(name + ".json", word_graph_to_json(t.graph, t.alphabet));
    }

    auto const bc = bicyclic();
    StephenOptions keep;
    keep.keep_graphs = true;
    keep.concurrent  = true;
    for (auto const& [name, text] :
         std::vector<std::pair<std::string, std::string>>{{"bicyclic_aA", "a A"},
                                                          {"bicyclic_Aa", "A a"}}) {
      auto const r = stephen_equal(bc, parse_word(text, &bc.alphabet), {},
                                   Budget{6, 5000}, keep);
      put(name + ".trace.json", stephen_result_to_json(r));
      out[name + ".last.dot"] = to_dot(r.graphs_v.back(), bc.alphabet, "stephen");
    }

    auto const ci = headline_instance({gen("a")});
    put("headline.instance.json", instance_to_json(ci));
    put("headline.presentation.json", presentation_to_json(build_presentation(ci)));
    auto const q = membership_query(ci, pw("a", 3));
    put("headline.query_a3.json", query_bundle_to_json(q));
    put("headline.certificate_a3.json",
        certificate_to_json(forward_certificate(ci, pw("a", 3), {1, 1, 1},
                                                headline_group_wp())));
    auto const ri = is_right_invertible(q.presentation, q.probe,
                                        Budget{5, 20000}, keep);
    put("headline.right_inv_a3.json", stephen_result_to_json(ri.detail));
    out["headline.right_inv_a3.dot"]
        = to_dot(ri.detail.graphs_v.back(), q.presentation.alphabet, "probe");

    auto const h = p4_instance();
    put("p4.hnn.json", hnn_to_json(h));
    put("p4.britton_theta_bcBC.json",
        britton_form_to_json(britton_reduce(h, theta_embed(parse_word("b c B C"))),
                             h.stable));

    auto const s3 = std::make_shared<FiniteGroup const>(FiniteGroup::symmetric3());
    json       claims = json::array();
    for (int x = 0; x < 6; ++x) {
      auto const r = key_claim_check(s3, {s3->element(4)}, s3->element(x), 5);
      claims.push_back({{"h", s3->format(s3->element(x))},
                        {"h_in_T", r.h_in_t},
                        {"in_S", to_string(r.in_s)},
                        {"t_factors", r.t_factors},
                        {"s_factors", r.s_factors},
                        {"agree", r.agree}});
    }
    put("s3.key_claim_W_012.json", claims);
    return out;
  }

  Outcome determinism(SuiteOptions const& options) {
    return timed(10, "Artifacts are byte-identical across runs", 600,
                 [&](std::string& detail) {
      auto const first  = generate_artifacts();
      auto const second = generate_artifacts();
      std::size_t differing = 0;
      for (auto const& [name, text] : first) {
        auto it = second.find(name);
        if (it == second.end() || it->second != text) {
          ++differing;
          detail += "differs: " + name + "; ";
        }
      }
      differing += first.size() != second.size();
      std::size_t bytes = 0;
      for (auto const& [name, text] : first) {
        bytes += text.size();
      }
      detail += std::to_string(first.size()) + " artifacts, "
                + std::to_string(bytes) + " bytes, "
                + std::to_string(differing) + " differing";
      if (!options.output_dir.empty()) {
        std::filesystem::create_directories(options.output_dir);
        for (auto const& [name, text] : first) {
          write_file((std::filesystem::path(options.output_dir) / name).string(),
                     text);
        }
        detail += ", written to " + options.output_dir;
      }
      return differing == 0;
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Driver
  ////////////////////////////////////////////////////////////////////////

  std::vector<Outcome> run_suite(SuiteOptions const&                         options,
                                 std::vector<int> const&                     only,
                                 std::function<void(Outcome const&)> const& each) {
    std::vector<std::function<Outcome()>> const all{
        munn_vagner_agreement,
        bicyclic_suite,
        raag_agreement,
        embedding_verification,
        one_relator_relator_check,
        free_product_lemmas,
        construction_end_to_end,
        presentation_equivalence,
        prefix_generator_check,
        [&] { return determinism(options); }};
    std::vector<Outcome> result;
    for (std::size_t i = 0; i < all.size(); ++i) {
      int const id = static_cast<int>(i) + 1;
      if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
        continue;
      }
      result.push_back(all[i]());
      if (each) {
        each(result.back());
      }
    }
    return result;
  }

  std::string format_outcome(Outcome const& o) {
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << (o.passed ? "PASS" : "FAIL") << " [" << o.id << "] " << o.title
        << " (" << o.seconds << " s, limit " << o.limit_seconds
        << " s): " << o.detail;
    return out.str();
  }

}  // namespace invmon::acceptance

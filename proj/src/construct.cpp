#include "invmon/construct.hpp"

#include <string>

#include "invmon/errors.hpp"
#include "invmon/hnn.hpp"

namespace invmon {

  void ConstructionInstance::validate() const {
    validate_letter_name(stable);
    if (group.alphabet.contains(stable)) {
      throw StableLetterClash("stable letter '" + stable
                              + "' already belongs to the alphabet");
    }
    if (group.relators.empty()) {
      throw InvalidArgument("a construction instance needs at least one relator");
    }
    group.validate();
    for (auto const& w : wset) {
      group.alphabet.validate(w);
    }
  }

  namespace {
    Word conjugate(std::string const& stable, Word const& w) {
      return gen(stable) * w * inv(stable);
    }
  }  // namespace

  Word construction_idempotent(ConstructionInstance const& ci) {
    ci.validate();
    std::vector<Word> factors;
    for (auto const& a : ci.group.alphabet.names()) {
      factors.push_back(gen(a));
    }
    for (auto const& w : ci.wset) {
      factors.push_back(conjugate(ci.stable, w));
    }
    for (auto const& a : ci.group.alphabet.names()) {
      factors.push_back(inv(a));
    }
    return idempotent_word(factors);
  }

  InvPresentation build_presentation(ConstructionInstance const& ci) {
    Word const      e = construction_idempotent(ci);
    InvPresentation p{ci.group.alphabet.extended(ci.stable), {}};
    for (std::size_t i = 0; i < ci.group.relators.size(); ++i) {
      Word const& r = ci.group.relators[i];
      p.relations.push_back({i == 0 ? e * r : r, {}});
    }
    return p;
  }

  std::vector<InvPresentation> equivalent_presentations(
      InvPresentation const&      p,
      ConstructionInstance const& ci) {
    if (!(p == build_presentation(ci))) {
      throw NotConstructionShape(
          "the presentation was not built from the given construction instance");
    }
    InvPresentation split{p.alphabet, {{construction_idempotent(ci), {}}}};
    for (auto const& r : ci.group.relators) {
      split.relations.push_back({r, {}});
    }

    InvPresentation expanded{p.alphabet, {}};
    for (auto const& r : ci.group.relators) {
      expanded.relations.push_back({r, {}});
    }
    for (auto const& a : ci.group.alphabet.names()) {
      expanded.relations.push_back({gen(a) * inv(a), {}});
      expanded.relations.push_back({inv(a) * gen(a), {}});
    }
    for (auto const& w : ci.wset) {
      Word const c = conjugate(ci.stable, w);
      expanded.relations.push_back({c * formal_inverse(c), {}});
    }
    return {std::move(split), std::move(expanded)};
  }

  QueryBundle membership_query(ConstructionInstance const& ci, Word const& u) {
    ci.group.alphabet.validate(u);
    QueryBundle b;
    b.presentation = build_presentation(ci);
    b.probe        = conjugate(ci.stable, u);
    b.wp_instance  = {b.probe * formal_inverse(b.probe), {}};
    return b;
  }

  Certificate forward_certificate(ConstructionInstance const&     ci,
                                  Word const&                     u,
                                  std::vector<std::size_t> const& factorization,
                                  GroupWordProblem const&         group_wp) {
    if (!group_wp) {
      throw OracleMissing("forward_certificate needs a word-problem oracle for G");
    }
    ci.validate();
    ci.group.alphabet.validate(u);
    Word product;
    for (auto j : factorization) {
      if (j == 0 || j > ci.wset.size()) {
        throw InvalidArgument("factorization index " + std::to_string(j)
                              + " is outside 1.."
                              + std::to_string(ci.wset.size()));
      }
      product.append(ci.wset[j - 1]);
    }
    Certificate c;
    c.u             = u;
    c.factorization = factorization;
    c.residual      = reduce(u * formal_inverse(product));
    c.status = group_wp(c.residual) ? CertificateStatus::valid
                                    : CertificateStatus::invalid;
    return c;
  }

  GroupWordProblem free_group_wp() {
    return [](Word const& w) { return reduce(w).empty(); };
  }

  GroupWordProblem headline_group_wp() {
    return [](Word const& w) { return one_relator_wp(w); };
  }

  GroupWordProblem bundled_group_wp(GroupPresentation const& g) {
    bool free = true;
    for (auto const& r : g.relators) {
      free = free && reduce(r).empty();
    }
    if (free) {
      return free_group_wp();
    }
    if (g.alphabet == Alphabet{"a", "z"} && g.relators.size() == 1
        && g.relators[0] == one_relator_relator()) {
      return headline_group_wp();
    }
    throw OracleMissing("no bundled word-problem oracle for this group");
  }

  GroupWordProblem free_product_wp(GroupWordProblem group_wp,
                                   std::string      stable) {
    if (!group_wp) {
      throw OracleMissing("free_product_wp needs an oracle for the factor");
    }
    return [group_wp = std::move(group_wp),
            stable   = std::move(stable)](Word const& w) {
      // Alternating syllables: G-segments (as words) and t-exponents.
      struct Syl {
        bool is_t;
        Word g;
        int  k;
      };
      std::vector<Syl> seq;
      auto push = [&](Syl s) {
        while (true) {
          if (!seq.empty() && seq.back().is_t == s.is_t) {
            Syl last = std::move(seq.back());
            seq.pop_back();
            s = s.is_t ? Syl{true, {}, last.k + s.k}
                       : Syl{false, last.g * s.g, 0};
            continue;
          }
          bool const trivial = s.is_t ? s.k == 0 : group_wp(s.g);
          if (!trivial) {
            seq.push_back(std::move(s));
          }
          return;
        }
      };
      Word segment;
      for (auto const& x : w) {
        if (x.name == stable) {
          if (!segment.empty()) {
            push({false, std::move(segment), 0});
            segment = Word();
          }
          push({true, {}, x.sign});
        } else {
          segment.push_back(x);
        }
      }
      if (!segment.empty()) {
        push({false, std::move(segment), 0});
      }
      return seq.empty();
    };
  }

  ConstructionInstance headline_instance(std::vector<Word> wset) {
    ConstructionInstance ci{
        {Alphabet{"a", "z"}, {one_relator_relator()}}, std::move(wset), "t"};
    ci.validate();
    return ci;
  }

  ConstructionInstance free_instance(std::vector<Word> wset) {
    ConstructionInstance ci{{Alphabet{"a", "z"}, {Word()}}, std::move(wset), "t"};
    ci.validate();
    return ci;
  }

  ConsistencyReport max_group_consistency(
      InvPresentation const&                    p,
      std::vector<std::pair<Word, Word>> const& pairs,
      Budget const&                             budget,
      GroupWordProblem const&                   max_group_wp) {
    if (!max_group_wp) {
      throw OracleMissing(
          "max_group_consistency needs an oracle for the maximal group image");
    }
    ConsistencyReport report;
    for (auto const& [u, v] : pairs) {
      auto const r = stephen_equal(p, u, v, budget);
      ConsistencyEntry entry{u, v, r.verdict, false};
      if (r.verdict == Verdict::equal) {
        entry.images_equal = max_group_wp(u * formal_inverse(v));
        if (!entry.images_equal) {
          ++report.violations;
        }
      }
      report.entries.push_back(std::move(entry));
    }
    return report;
  }

}  // namespace invmon

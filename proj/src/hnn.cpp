#include "invmon/hnn.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>

#include "invmon/errors.hpp"

namespace invmon {

  void HnnPresentation::validate() const {
    validate_letter_name(stable);
    if (base.vertices().contains(stable)) {
      throw StableLetterClash("stable letter '" + stable
                              + "' is a vertex of the base graph");
    }
    for (auto const* delta : {&delta1, &delta2}) {
      for (auto const& x : *delta) {
        (void) base.vertex_index(x);
      }
    }
    if (psi.size() != delta1.size()) {
      throw InvalidArgument("psi must be defined on exactly delta1");
    }
    std::set<std::string> image;
    for (auto const& [from, to] : psi) {
      if (!delta1.count(from)) {
        throw InvalidArgument("psi maps '" + from + "', which is not in delta1");
      }
      if (!delta2.count(to)) {
        throw InvalidArgument("psi maps into '" + to + "', not in delta2");
      }
      image.insert(to);
    }
    if (image != delta2) {
      throw InvalidArgument("psi is not a bijection delta1 -> delta2");
    }
    for (auto const& [u, pu] : psi) {
      for (auto const& [v, pv] : psi) {
        if (u != v && base.adjacent(u, v) != base.adjacent(pu, pv)) {
          throw InvalidArgument("psi is not a graph isomorphism: {" + u + ","
                                + v + "}");
        }
      }
    }
  }

  std::string const& HnnPresentation::map(std::string const& x,
                                          bool               inverse) const {
    if (!inverse) {
      return psi.at(x);
    }
    for (auto const& [from, to] : psi) {
      if (to == x) {
        return from;
      }
    }
    throw InvalidArgument("'" + x + "' is not in delta2");
  }

  HnnPresentation p4_instance() {
    HnnPresentation h{p4(),
                      {"a", "b", "c"},
                      {"b", "c", "d"},
                      {{"a", "b"}, {"b", "c"}, {"c", "d"}},
                      "t"};
    h.validate();
    return h;
  }

  std::size_t BrittonForm::stable_letter_count() const noexcept {
    std::size_t result = 0;
    for (auto const& s : tail) {
      result += static_cast<std::size_t>(std::abs(s.t_power));
    }
    return result;
  }

  Word BrittonForm::to_word(std::string const& stable) const {
    Word result = head.word;
    for (auto const& s : tail) {
      result.append(power(Letter(stable), s.t_power));
      result.append(s.g.word);
    }
    return result;
  }

  namespace {
    // Letterwise ψ or ψ⁻¹ on base codes. mapping[i] is the image index of
    // vertex i, or npos if i is outside the domain.
    struct CodeMap {
      static constexpr std::size_t npos = static_cast<std::size_t>(-1);
      std::vector<std::size_t>     image;

      bool in_domain(std::vector<Code> const& w) const {
        return std::all_of(w.begin(), w.end(),
                           [&](Code c) { return image[c / 2] != npos; });
      }
      void apply(std::vector<Code>& w) const {
        for (auto& c : w) {
          c = static_cast<Code>(2 * image[c / 2] + (c & 1U));
        }
      }
    };

    CodeMap make_map(HnnPresentation const& h, bool inverse) {
      auto const& vs = h.base.vertices();
      CodeMap     m{std::vector<std::size_t>(vs.size(), CodeMap::npos)};
      for (auto const& [from, to] : h.psi) {
        auto i = h.base.vertex_index(from);
        auto j = h.base.vertex_index(to);
        if (inverse) {
          m.image[j] = i;
        } else {
          m.image[i] = j;
        }
      }
      return m;
    }

    void append(std::vector<Code>& w, std::vector<Code> const& v) {
      w.insert(w.end(), v.begin(), v.end());
    }
  }  // namespace

  BrittonForm britton_reduce(HnnPresentation const& h, Word const& w) {
    h.validate();
    auto const&   vs  = h.base.vertices();
    CodeMap const fwd = make_map(h, false);
    CodeMap const bwd = make_map(h, true);

    // w = seg[0] t^{sign[0]} seg[1] … t^{sign[n-1]} seg[n]
    std::vector<std::vector<Code>> seg(1);
    std::vector<int>               sign;
    for (auto const& x : w) {
      if (x.name == h.stable) {
        sign.push_back(x.sign);
        seg.emplace_back();
      } else {
        if (!vs.contains(x.name)) {
          throw UnknownVertex("'" + x.name + "' is not a vertex");
        }
        seg.back().push_back(vs.encode(x));
      }
    }

    std::size_t i = 0;
    while (i + 1 < sign.size()) {
      if (sign[i] == -sign[i + 1]) {
        // Pinch candidate t^ε seg[i+1] t^-ε; the middle is reduced to normal
        // form so that ψ is applied to a word over the associated subgroup.
        auto           middle = raag_normal_form_codes(h.base, seg[i + 1]);
        CodeMap const& m      = sign[i] > 0 ? fwd : bwd;
        if (m.in_domain(middle)) {
          m.apply(middle);
          std::vector<Code> merged = std::move(seg[i]);
          append(merged, middle);
          append(merged, seg[i + 2]);
          seg[i] = raag_normal_form_codes(h.base, merged);
          seg.erase(seg.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    seg.begin() + static_cast<std::ptrdiff_t>(i) + 3);
          sign.erase(sign.begin() + static_cast<std::ptrdiff_t>(i),
                     sign.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          i = i > 0 ? i - 1 : 0;
          continue;
        }
      }
      ++i;
    }

    BrittonForm result;
    result.head.word = vs.decode(raag_normal_form_codes(h.base, seg[0]));
    for (std::size_t k = 0; k < sign.size(); ++k) {
      auto g = vs.decode(raag_normal_form_codes(h.base, seg[k + 1]));
      if (!result.tail.empty() && result.tail.back().g.word.empty()) {
        // t^ε t^ε with nothing in between; opposite signs would be a pinch.
        result.tail.back().t_power += sign[k];
        result.tail.back().g.word = std::move(g);
      } else {
        result.tail.push_back({sign[k], NormalForm{std::move(g)}});
      }
    }
    return result;
  }

  bool hnn_is_trivial(HnnPresentation const& h, Word const& w) {
    auto form = britton_reduce(h, w);
    return !form.has_stable_letter() && form.head.word.empty();
  }

  bool hnn_equal(HnnPresentation const& h, Word const& u, Word const& v) {
    return hnn_is_trivial(h, u * formal_inverse(v));
  }

  Word theta_embed(Word const& w) {
    Word result;
    for (auto const& x : w) {
      if (x.name.size() != 1 || x.name[0] < 'a' || x.name[0] > 'd') {
        throw UnknownVertex("'" + x.name + "' is not a vertex of P4");
      }
      int const k = x.name[0] - 'a';
      result.append(power(Letter("t"), k));
      result.push_back(Letter("a", x.sign));
      result.append(power(Letter("t"), -k));
    }
    return result;
  }

  bool one_relator_wp(Word const& u) {
    static HnnPresentation const h = p4_instance();
    Word                         renamed;
    for (auto const& x : u) {
      if (x.name == "a") {
        renamed.push_back(x);
      } else if (x.name == "z") {
        renamed.push_back(Letter("t", x.sign));
      } else {
        throw UnknownVertex("'" + x.name
                            + "' is not a generator of Gp<a, z | ...>");
      }
    }
    return hnn_is_trivial(h, renamed);
  }

  Word one_relator_relator() {
    Letter const a("a"), z("z");
    return Word{a, z, a, z.inverse(), a.inverse(), z, a.inverse(), z.inverse()};
  }

  namespace {
    Word commutator(Word const& x, Word const& y) {
      return x * y * formal_inverse(x) * formal_inverse(y);
    }
  }  // namespace

  std::vector<Word> p4_relators() {
    return {commutator(gen("a"), gen("b")),
            commutator(gen("b"), gen("c")),
            commutator(gen("c"), gen("d"))};
  }

  std::vector<Word> p4_conjugate_relators() {
    return {commutator(theta_embed(gen("b")), theta_embed(gen("c"))),
            commutator(theta_embed(gen("c")), theta_embed(gen("d")))};
  }

  EmbeddingReport verify_embedding_sample(std::size_t max_letters) {
    HnnPresentation const h = p4_instance();
    SimpGraph const       g = p4();
    EmbeddingReport       report;

    auto fail = [&](std::string msg) {
      ++report.failed;
      if (report.failures.size() < 20) {
        report.failures.push_back(std::move(msg));
      }
    };

    for (auto const& r : p4_relators()) {
      ++report.relators_checked;
      if (hnn_is_trivial(h, theta_embed(r))) {
        ++report.passed;
      } else {
        fail("image of a relator is nontrivial");
      }
    }

    std::set<std::vector<Code>> forms;
    std::vector<Code>           word;
    std::function<void()>       enumerate = [&] {
      ++report.words_enumerated;
      forms.insert(raag_normal_form_codes(g, word));
      if (word.size() == max_letters) {
        return;
      }
      for (Code c = 0; c < 2 * g.size(); ++c) {
        word.push_back(c);
        enumerate();
        word.pop_back();
      }
    };
    enumerate();

    report.normal_forms = forms.size();
    for (auto const& nf : forms) {
      if (nf.size() > max_letters || nf.empty()) {
        continue;
      }
      ++report.nontrivial_checked;
      Word const u = g.vertices().decode(nf);
      if (!hnn_is_trivial(h, theta_embed(u))) {
        ++report.passed;
      } else {
        std::string msg = "nontrivial normal form with trivial image:";
        for (auto const& x : u) {
          msg += " " + x.name + (x.sign < 0 ? "^-1" : "");
        }
        fail(std::move(msg));
      }
    }
    return report;
  }

}  // namespace invmon

// invmon: command-line front end to the library.

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "invmon/construct.hpp"
#include "invmon/errors.hpp"
#include "invmon/freeprod.hpp"
#include "invmon/hnn.hpp"
#include "invmon/io.hpp"
#include "invmon/munn.hpp"
#include "invmon/raag.hpp"
#include "invmon/stephen.hpp"

#include "criteria.hpp"

namespace fs = std::filesystem;
using namespace invmon;

namespace {

  constexpr int exit_yes   = 0;
  constexpr int exit_no    = 1;
  constexpr int exit_input = 2;

  struct Config {
    Budget      default_budget;
    std::string output_dir = "artifacts";
    std::string format     = "text";
    bool        frugal_expansion = false;
  };

  Budget parse_budget(std::string const& text) {
    auto const comma = text.find(',');
    if (comma == std::string::npos) {
      throw ParseError("budget must have the form ROUNDS,VERTICES: " + text);
    }
    Budget b;
    try {
      std::size_t used = 0;
      b.max_rounds     = std::stoul(text.substr(0, comma), &used);
      if (used != comma) {
        throw std::invalid_argument(text);
      }
      auto const rest = text.substr(comma + 1);
      b.max_vertices  = std::stoul(rest, &used);
      if (used != rest.size()) {
        throw std::invalid_argument(text);
      }
    } catch (std::logic_error const&) {
      throw ParseError("budget must have the form ROUNDS,VERTICES: " + text);
    }
    if (b.max_vertices == 0) {
      throw ParseError("budget: max_vertices must be at least 1");
    }
    return b;
  }

  //! Defaults, then INVMON_BUDGET, then the config file.
  Config load_config(std::string const& path) {
    Config c;
    if (char const* env = std::getenv("INVMON_BUDGET"); env && *env) {
      c.default_budget = parse_budget(env);
    }
    if (path.empty()) {
      return c;
    }
    auto const j = read_json_file(path);
    try {
      if (j.contains("default_budget")) {
        auto const& b = j.at("default_budget");
        c.default_budget.max_rounds   = b.at(0).get<std::size_t>();
        c.default_budget.max_vertices = b.at(1).get<std::size_t>();
        if (c.default_budget.max_vertices == 0) {
          throw ParseError("config: max_vertices must be at least 1");
        }
      }
      c.output_dir       = j.value("output_dir", c.output_dir);
      c.format           = j.value("format", c.format);
      c.frugal_expansion = j.value("frugal_expansion", c.frugal_expansion);
    } catch (json::exception const& e) {
      throw ParseError(std::string("config: ") + e.what());
    }
    if (c.format != "text" && c.format != "json") {
      throw ParseError("config: format must be text or json");
    }
    return c;
  }

  //! Inline JSON (starting with '{') or a file name.
  json load_json_arg(std::string const& arg) {
    if (!arg.empty() && arg.front() == '{') {
      try {
        return json::parse(arg);
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
      }
    }
    return read_json_file(arg);
  }

  InvPresentation load_presentation(std::string const& arg) {
    if (arg == "bicyclic") {
      return {Alphabet{"a"}, {{gen("a") * inv("a"), {}}}};
    }
    return presentation_from_json(load_json_arg(arg));
  }

  SimpGraph load_graph(std::string const& arg) {
    if (arg == "p4") {
      return p4();
    }
    if (arg.starts_with("path:")) {
      try {
        return SimpGraph::path(std::stoul(arg.substr(5)));
      } catch (std::logic_error const&) {
        throw ParseError("invalid graph: " + arg);
      }
    }
    return simp_graph_from_json(load_json_arg(arg));
  }

  std::shared_ptr<FiniteGroup const> load_group(std::string const& arg) {
    if (arg == "S3") {
      return std::make_shared<FiniteGroup const>(FiniteGroup::symmetric3());
    }
    if (arg.size() > 1 && arg[0] == 'Z'
        && arg.find_first_not_of("0123456789", 1) == std::string::npos) {
      return std::make_shared<FiniteGroup const>(
          FiniteGroup::cyclic(std::stoul(arg.substr(1))));
    }
    if (arg.ends_with(".csv")) {
      return std::make_shared<FiniteGroup const>(
          finite_group_from_csv(read_file(arg)));
    }
    return std::make_shared<FiniteGroup const>(
        finite_group_from_json(load_json_arg(arg)));
  }

  ConstructionInstance load_instance(std::string const&              arg,
                                     std::vector<std::string> const& wset) {
    ConstructionInstance ci;
    if (arg == "headline") {
      ci = headline_instance({});
    } else if (arg == "free") {
      ci = free_instance({});
    } else {
      ci = instance_from_json(load_json_arg(arg));
    }
    if (!wset.empty() || arg == "headline" || arg == "free") {
      ci.wset.clear();
      for (auto const& w : wset) {
        ci.wset.push_back(parse_word(w, &ci.group.alphabet));
      }
      if (wset.empty()) {
        ci.wset.push_back(gen(ci.group.alphabet.names().front()));
      }
    }
    ci.validate();
    return ci;
  }

  int parse_element(FiniteGroup const& h, std::string const& token) {
    if (auto id = h.id_of(token)) {
      return *id;
    }
    try {
      std::size_t used = 0;
      int const   id   = std::stoi(token, &used);
      if (used == token.size() && id >= 0
          && static_cast<std::size_t>(id) < h.order()) {
        return id;
      }
    } catch (std::logic_error const&) {
    }
    throw ParseError("unknown group element: " + token);
  }

  //! Blank- or '.'-separated syllables: t, T, t^k, an element name, an id,
  //! or any of those in brackets.
  FreeProdElement parse_fp_element(FreeProduct const& fp, std::string const& text) {
    auto const& h = dynamic_cast<FiniteGroup const&>(fp.factor());
    std::string spaced;
    int         depth = 0;
    for (char c : text) {
      depth += c == '[' ? 1 : c == ']' ? -1 : 0;
      spaced += (c == '.' && depth == 0) ? ' ' : c;
    }
    std::istringstream in(spaced);
    FreeProdElement    result;
    for (std::string tok; in >> tok;) {
      if (tok == "1") {
        continue;
      }
      if (tok.size() > 1 && tok.front() == '[' && tok.back() == ']') {
        result = fp.multiply(result, fp.from_h(h.element(
                                         parse_element(h, tok.substr(1, tok.size() - 2)))));
      } else if (h.id_of(tok)) {
        result = fp.multiply(result, fp.from_h(h.element(*h.id_of(tok))));
      } else if (tok == "t" || tok == "T") {
        result = fp.multiply(result, fp.t_power(tok == "t" ? 1 : -1));
      } else if (tok.starts_with("t^")) {
        try {
          std::size_t used = 0;
          int const   k    = std::stoi(tok.substr(2), &used);
          if (used + 2 != tok.size()) {
            throw std::invalid_argument(tok);
          }
          result = fp.multiply(result, fp.t_power(k));
        } catch (std::logic_error const&) {
          throw ParseError("invalid power of t: " + tok);
        }
      } else {
        result = fp.multiply(result, fp.from_h(h.element(parse_element(h, tok))));
      }
    }
    return result;
  }

  std::vector<std::string> split_list(std::string const& text) {
    std::vector<std::string> result;
    std::string              cur;
    for (char c : text) {
      if (c == ',' || c == ' ') {
        if (!cur.empty()) {
          result.push_back(cur);
        }
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) {
      result.push_back(cur);
    }
    return result;
  }

  void print_json(json const& j) {
    std::cout << j.dump(2) << '\n';
  }

  void print_trace(std::string const& tag, std::vector<RoundTrace> const& trace) {
    for (auto const& t : trace) {
      std::cout << tag << " round " << t.round << ": " << t.vertices
                << " vertices, " << t.edges << " edges, "
                << (t.readable ? "readable" : "not readable") << '\n';
    }
  }

  void write_tower_dots(std::string const&            dir,
                        std::string const&            tag,
                        std::vector<WordGraph> const& graphs,
                        Alphabet const&               alphabet) {
    fs::create_directories(dir);
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      auto const name = tag + "_round_" + std::to_string(i);
      write_file((fs::path(dir) / (name + ".dot")).string(),
                 to_dot(graphs[i], alphabet, name));
    }
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Inverse monoid, RAAG, HNN and free product word problems"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, format, budget_text;
  bool        frugal = false;
  app.add_option("--config", config_path, "JSON config file")
      ->check(CLI::ExistingFile);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--budget", budget_text, "Stephen budget ROUNDS,VERTICES");
  app.add_flag("--frugal-expansion", frugal,
               "Sew relator loops only at the roots");

  Config                           config;
  bool                             as_json = false;
  std::map<CLI::App*, std::function<int()>> commands;

  auto budget = [&] {
    return budget_text.empty() ? config.default_budget : parse_budget(budget_text);
  };
  auto stephen_options = [&] {
    StephenOptions o;
    o.mode = (frugal || config.frugal_expansion) ? ExpansionMode::roots_only
                                                 : ExpansionMode::every_vertex;
    return o;
  };

  // Free words.
  std::string word_a, word_b;
  {
    auto* c = app.add_subcommand("reduce", "Freely reduce a word");
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      auto const r = reduce(parse_word(word_a));
      as_json ? print_json({{"reduced", format_word(r)}})
              : void(std::cout << format_word(r) << '\n');
      return exit_yes;
    };
  }
  {
    auto* c = app.add_subcommand("inv", "Formal inverse of a word");
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      auto const r = formal_inverse(parse_word(word_a));
      as_json ? print_json({{"inverse", format_word(r)}})
              : void(std::cout << format_word(r) << '\n');
      return exit_yes;
    };
  }
  {
    auto* c = app.add_subcommand("prefixes", "All prefixes of a word");
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      json out = json::array();
      for (auto const& p : prefixes(parse_word(word_a))) {
        as_json ? out.push_back(format_word(p))
                : void(std::cout << format_word(p) << '\n');
      }
      if (as_json) {
        print_json({{"prefixes", out}});
      }
      return exit_yes;
    };
  }

  // Free inverse monoids.
  bool leq = false;
  {
    auto* c = app.add_subcommand("fim-eq", "Equality in the free inverse monoid");
    c->add_option("u", word_a)->required();
    c->add_option("v", word_b)->required();
    c->add_flag("--leq", leq, "Test the natural order u <= v instead");
    commands[c] = [&] {
      auto const u = parse_word(word_a), v = parse_word(word_b);
      bool const r = leq ? fim_leq(u, v) : fim_equal(u, v);
      std::string const verdict
          = leq ? (r ? "leq" : "not leq") : (r ? "equal" : "not equal");
      as_json ? print_json({{"result", verdict}})
              : void(std::cout << verdict << '\n');
      return r ? exit_yes : exit_no;
    };
  }
  std::string dot_path;
  {
    auto* c = app.add_subcommand("munn", "Munn tree of a word");
    c->add_option("word", word_a)->required();
    c->add_option("--dot", dot_path, "Write the tree as DOT");
    commands[c] = [&] {
      auto const w = parse_word(word_a);
      Alphabet   alphabet;
      for (auto const& x : w) {
        if (!alphabet.contains(x.name)) {
          alphabet = alphabet.extended(x.name);
        }
      }
      auto const tree = munn_tree(alphabet, w).graph;
      if (!dot_path.empty()) {
        write_file(dot_path, to_dot(tree, alphabet, "munn"));
      }
      if (as_json) {
        print_json(word_graph_to_json(tree, alphabet));
      } else {
        std::cout << tree.num_vertices() << " vertices, "
                  << tree.num_edges() << " edges\n";
      }
      return exit_yes;
    };
  }

  // Stephen's procedure.
  std::string pres_arg, dot_dir;
  bool        trace = false, concurrent = false;
  {
    auto* c = app.add_subcommand("stephen", "Semi-decide [u] = [v]");
    c->add_option("presentation", pres_arg, "JSON file, inline JSON or 'bicyclic'")
        ->required();
    c->add_option("u", word_a)->required();
    c->add_option("v", word_b)->required();
    c->add_flag("--trace", trace, "Print the per-round trace");
    c->add_option("--dot", dot_dir, "Write every approximant as DOT here");
    c->add_flag("--concurrent", concurrent, "Expand both towers on two threads");
    commands[c] = [&] {
      auto const p = load_presentation(pres_arg);
      auto const u = parse_word(word_a, &p.alphabet);
      auto const v = parse_word(word_b, &p.alphabet);
      auto       o = stephen_options();
      o.concurrent  = concurrent;
      o.keep_graphs = !dot_dir.empty();
      auto const r  = stephen_equal(p, u, v, budget(), o);
      if (!dot_dir.empty()) {
        write_tower_dots(dot_dir, "u", r.graphs_u, p.alphabet);
        write_tower_dots(dot_dir, "v", r.graphs_v, p.alphabet);
      }
      if (as_json) {
        print_json(stephen_result_to_json(r));
      } else {
        std::cout << to_string(r.verdict) << '\n';
        if (r.verdict != Verdict::equal) {
          std::cout << "reason: " << r.reason << '\n';
        }
        if (trace) {
          print_trace("u", r.trace_u);
          print_trace("v", r.trace_v);
        }
      }
      return r.verdict == Verdict::equal ? exit_yes : exit_no;
    };
  }
  {
    auto* c = app.add_subcommand("right-inv", "Semi-decide right invertibility");
    c->add_option("presentation", pres_arg)->required();
    c->add_option("word", word_a)->required();
    c->add_flag("--trace", trace);
    commands[c] = [&] {
      auto const p = load_presentation(pres_arg);
      auto const r = is_right_invertible(
          p, parse_word(word_a, &p.alphabet), budget(), stephen_options());
      if (as_json) {
        print_json({{"right_invertible", to_string(r.answer)},
                    {"detail", stephen_result_to_json(r.detail)}});
      } else {
        std::cout << to_string(r.answer) << '\n';
        if (trace) {
          print_trace("u", r.detail.trace_u);
          print_trace("v", r.detail.trace_v);
        }
      }
      return r.answer == Answer::yes ? exit_yes : exit_no;
    };
  }
  {
    auto* c = app.add_subcommand("prefix-gens",
                                 "Prefixes of the relators of a special presentation");
    c->add_option("presentation", pres_arg)->required();
    commands[c] = [&] {
      json out = json::array();
      for (auto const& w : prefix_generators(load_presentation(pres_arg))) {
        as_json ? out.push_back(format_word(w))
                : void(std::cout << format_word(w) << '\n');
      }
      if (as_json) {
        print_json({{"prefix_generators", out}});
      }
      return exit_yes;
    };
  }

  // Right-angled Artin groups and the HNN extension.
  std::string graph_arg, delta_arg;
  {
    auto* c = app.add_subcommand("raag-nf", "RAAG normal form");
    c->add_option("graph", graph_arg, "JSON file, inline JSON, 'p4' or 'path:n'")
        ->required();
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      auto const g  = load_graph(graph_arg);
      auto const nf = raag_normal_form(g, parse_word(word_a, &g.vertices()));
      as_json ? print_json({{"normal_form", format_word(nf.word)}})
              : void(std::cout << format_word(nf.word) << '\n');
      return exit_yes;
    };
  }
  {
    auto* c = app.add_subcommand("raag-eq", "Equality in a RAAG");
    c->add_option("graph", graph_arg)->required();
    c->add_option("u", word_a)->required();
    c->add_option("v", word_b)->required();
    commands[c] = [&] {
      auto const g = load_graph(graph_arg);
      bool const r = raag_equal(g, parse_word(word_a, &g.vertices()),
                                parse_word(word_b, &g.vertices()));
      as_json ? print_json({{"equal", r}})
              : void(std::cout << (r ? "equal" : "not equal") << '\n');
      return r ? exit_yes : exit_no;
    };
  }
  {
    auto* c = app.add_subcommand("parabolic", "Membership in a parabolic subgroup");
    c->add_option("graph", graph_arg)->required();
    c->add_option("delta", delta_arg, "Comma-separated vertices")->required();
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      auto const g     = load_graph(graph_arg);
      auto const names = split_list(delta_arg);
      auto const r     = parabolic_membership(
          g, {names.begin(), names.end()}, parse_word(word_a, &g.vertices()));
      if (as_json) {
        print_json({{"member", r.has_value()},
                    {"normal_form", r ? json(format_word(*r)) : json()}});
      } else {
        std::cout << (r ? format_word(*r) : std::string("absent")) << '\n';
      }
      return r ? exit_yes : exit_no;
    };
  }
  std::string hnn_arg;
  {
    auto* c = app.add_subcommand("hnn-wp", "Britton reduction in an HNN extension");
    c->add_option("word", word_a)->required();
    c->add_option("--hnn", hnn_arg, "JSON file or inline JSON (default: P4)");
    commands[c] = [&] {
      auto const h = hnn_arg.empty() ? p4_instance() : hnn_from_json(load_json_arg(hnn_arg));
      auto const letters = h.base.vertices().extended(h.stable);
      auto const f       = britton_reduce(h, parse_word(word_a, &letters));
      bool const trivial = !f.has_stable_letter() && f.head.word.empty();
      if (as_json) {
        print_json(britton_form_to_json(f, h.stable));
      } else {
        std::cout << (trivial ? "trivial" : "nontrivial") << '\n'
                  << "britton: " << format_word(f.to_word(h.stable)) << '\n';
      }
      return trivial ? exit_yes : exit_no;
    };
  }
  {
    auto* c = app.add_subcommand("theta", "Image of a word of A(P4) in the HNN extension");
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      auto const img     = theta_embed(parse_word(word_a, &p4().vertices()));
      bool const trivial = hnn_is_trivial(p4_instance(), img);
      if (as_json) {
        print_json({{"image", format_word(img)}, {"trivial", trivial}});
      } else {
        std::cout << format_word(img) << '\n';
      }
      return exit_yes;
    };
  }
  {
    auto* c = app.add_subcommand("one-relator-wp",
                                 "Word problem of Gp<a, z | azaz^-1a^-1za^-1z^-1>");
    c->add_option("word", word_a)->required();
    commands[c] = [&] {
      Alphabet const az{"a", "z"};
      bool const     r = one_relator_wp(parse_word(word_a, &az));
      as_json ? print_json({{"trivial", r}})
              : void(std::cout << (r ? "trivial" : "nontrivial") << '\n');
      return r ? exit_yes : exit_no;
    };
  }

  // Free products.
  std::string group_arg, target_arg;
  std::vector<std::string> elements;
  std::size_t              max_factors = 0;
  {
    auto* c = app.add_subcommand("fp-mul", "Multiply in H * FG(t)");
    c->add_option("group", group_arg, "Z<n>, S3, or a JSON/CSV table")->required();
    c->add_option("elements", elements, "Elements such as \"t . g . T\"")
        ->required();
    commands[c] = [&] {
      FreeProduct const fp(load_group(group_arg));
      FreeProdElement   x;
      for (auto const& e : elements) {
        x = fp.multiply(x, parse_fp_element(fp, e));
      }
      if (as_json) {
        print_json({{"product", fp.format(x)},
                    {"length", fp_length(x)},
                    {"theta", theta_to_fgt(x)}});
      } else {
        std::cout << fp.format(x) << '\n';
      }
      return exit_yes;
    };
  }
  std::vector<std::string> wset_args;
  {
    auto* c = app.add_subcommand("key-claim", "Compare h in <W> with tht^-1 in S");
    c->add_option("group", group_arg)->required();
    c->add_option("element", target_arg, "Element h of H")->required();
    c->add_option("-w,--w", wset_args, "Elements of W");
    c->add_option("--max-factors", max_factors, "Default: |H|");
    commands[c] = [&] {
      auto const            h = load_group(group_arg);
      std::vector<HElement> w;
      for (auto const& e : wset_args) {
        w.push_back(h->element(parse_element(*h, e)));
      }
      auto const target = h->element(parse_element(*h, target_arg));
      auto const r      = key_claim_check(h, w, target,
                                     max_factors ? max_factors : h->order());
      if (as_json) {
        print_json({{"h_in_t", r.h_in_t},
                    {"in_s", to_string(r.in_s)},
                    {"t_factors", r.t_factors},
                    {"s_factors", r.s_factors},
                    {"agree", r.agree}});
      } else {
        std::cout << "h in T: " << (r.h_in_t ? "yes" : "no") << '\n'
                  << "tht^-1 in S: " << to_string(r.in_s) << '\n'
                  << (r.agree ? "agree" : "disagree") << '\n';
      }
      return r.agree ? exit_yes : exit_no;
    };
  }

  // The construction.
  std::string instance_arg, out_path;
  {
    auto* c = app.add_subcommand("construct", "Build the inverse monoid presentation");
    c->add_option("instance", instance_arg,
                  "JSON file, inline JSON, 'headline' or 'free'")
        ->required();
    c->add_option("-w,--w", wset_args, "Replace W");
    c->add_option("--out", out_path, "Write the presentation JSON here");
    commands[c] = [&] {
      auto const ci = load_instance(instance_arg, wset_args);
      auto const j  = presentation_to_json(build_presentation(ci));
      if (!out_path.empty()) {
        write_file(out_path, j.dump(2) + "\n");
      }
      if (as_json || out_path.empty()) {
        print_json(j);
      } else {
        std::cout << "wrote " << out_path << '\n';
      }
      return exit_yes;
    };
  }
  bool bundle_only = false;
  {
    auto* c = app.add_subcommand("member-query",
                                 "Is u in <W>? via right invertibility of tut^-1");
    c->add_option("instance", instance_arg)->required();
    c->add_option("u", word_a)->required();
    c->add_option("-w,--w", wset_args, "Replace W");
    c->add_option("--out", out_path, "Write the query bundle JSON here");
    c->add_flag("--bundle-only", bundle_only, "Do not run Stephen's procedure");
    commands[c] = [&] {
      auto const ci = load_instance(instance_arg, wset_args);
      auto const q  = membership_query(ci, parse_word(word_a, &ci.group.alphabet));
      if (!out_path.empty()) {
        write_file(out_path, query_bundle_to_json(q).dump(2) + "\n");
      }
      if (bundle_only) {
        if (as_json || out_path.empty()) {
          print_json(query_bundle_to_json(q));
        }
        return exit_yes;
      }
      auto const r = is_right_invertible(q.presentation, q.probe, budget(),
                                         stephen_options());
      if (as_json) {
        print_json({{"probe", format_word(q.probe)},
                    {"right_invertible", to_string(r.answer)},
                    {"detail", stephen_result_to_json(r.detail)}});
      } else {
        std::cout << "probe: " << format_word(q.probe) << '\n'
                  << "right-invertible: " << to_string(r.answer) << '\n';
      }
      return r.answer == Answer::yes ? exit_yes : exit_no;
    };
  }
  std::string factorization_arg;
  {
    auto* c = app.add_subcommand("certify", "Check a factorization of u over W in G");
    c->add_option("instance", instance_arg)->required();
    c->add_option("u", word_a)->required();
    c->add_option("factorization", factorization_arg,
                  "Comma-separated 1-based indices into W")
        ->required();
    c->add_option("-w,--w", wset_args, "Replace W");
    commands[c] = [&] {
      auto const               ci = load_instance(instance_arg, wset_args);
      std::vector<std::size_t> idx;
      for (auto const& s : split_list(factorization_arg)) {
        try {
          std::size_t used = 0;
          idx.push_back(std::stoul(s, &used));
          if (used != s.size()) {
            throw std::invalid_argument(s);
          }
        } catch (std::logic_error const&) {
          throw ParseError("invalid factorization index: " + s);
        }
      }
      auto const cert = forward_certificate(
          ci, parse_word(word_a, &ci.group.alphabet), idx,
          bundled_group_wp(ci.group));
      as_json ? print_json(certificate_to_json(cert))
              : void(std::cout << to_string(cert.status) << '\n');
      return cert.status == CertificateStatus::valid ? exit_yes : exit_no;
    };
  }

  // Acceptance suite.
  std::vector<int> criteria;
  std::string      suite_out;
  {
    auto* c = app.add_subcommand("suite", "Run the acceptance criteria");
    c->add_option("criteria", criteria, "Criterion ids (default: all)");
    c->add_option("--out", suite_out, "Artifact directory");
    commands[c] = [&] {
      acceptance::SuiteOptions options;
      options.output_dir = suite_out.empty() ? config.output_dir : suite_out;
      auto const outcomes = acceptance::run_suite(
          options, criteria, [&](acceptance::Outcome const& o) {
            if (!as_json) {
              std::cout << acceptance::format_outcome(o) << std::endl;
            }
          });
      std::size_t failed = 0;
      json        out    = json::array();
      for (auto const& o : outcomes) {
        failed += o.passed ? 0 : 1;
        out.push_back({{"id", o.id},
                       {"title", o.title},
                       {"passed", o.passed},
                       {"detail", o.detail},
                       {"seconds", o.seconds}});
      }
      if (as_json) {
        print_json({{"criteria", out}, {"failed", failed}});
      }
      return failed == 0 ? exit_yes : exit_no;
    };
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? exit_yes : exit_input;
  }

  try {
    config  = load_config(config_path);
    as_json = (format.empty() ? config.format : format) == "json";
    for (auto* sub : app.get_subcommands()) {
      return commands.at(sub)();
    }
  } catch (BudgetExceeded const& e) {
    std::cout << "unknown\nreason: " << e.what() << '\n';
    return exit_no;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_input;
  }
  return exit_input;
}

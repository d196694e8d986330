#include "invmon/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "invmon/errors.hpp"

namespace invmon {

  namespace {
    bool is_blank(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    bool is_ascii_letter(char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }

    std::string_view trim(std::string_view s) {
      while (!s.empty() && is_blank(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_blank(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    bool looks_terse(std::string_view text) {
      for (std::size_t i = 0; i < text.size(); ++i) {
        if (is_blank(text[i]) || is_ascii_letter(text[i])) {
          continue;
        }
        if (text.substr(i, 3) == "^-1" && i > 0 && is_ascii_letter(text[i - 1])) {
          i += 2;
          continue;
        }
        return false;
      }
      return true;
    }

    Word parse_terse(std::string_view text) {
      Word result;
      for (std::size_t i = 0; i < text.size(); ++i) {
        char const c = text[i];
        if (is_blank(c)) {
          continue;
        }
        if (!is_ascii_letter(c)) {
          throw ParseError("unexpected character '" + std::string(1, c)
                           + "' in word \"" + std::string(text) + "\"");
        }
        bool const upper = c >= 'A' && c <= 'Z';
        int        sign  = upper ? -1 : 1;
        if (text.substr(i + 1, 3) == "^-1") {
          sign = -sign;
          i += 3;
        }
        result.push_back(Letter(std::string(1, upper ? c - 'A' + 'a' : c), sign));
      }
      return result;
    }

    Letter parse_token(std::string_view token) {
      int sign = 1;
      if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
        sign = -1;
        token.remove_suffix(3);
      }
      return Letter(std::string(token), sign);
    }

    Word parse_tokens(std::string_view text) {
      Word        result;
      std::size_t i = 0;
      while (i < text.size()) {
        while (i < text.size() && is_blank(text[i])) {
          ++i;
        }
        std::size_t j = i;
        while (j < text.size() && !is_blank(text[j])) {
          ++j;
        }
        if (j > i) {
          result.push_back(parse_token(text.substr(i, j - i)));
        }
        i = j;
      }
      return result;
    }

    std::vector<std::string> string_list(json const& j, char const* what) {
      if (!j.is_array()) {
        throw ParseError(std::string(what) + " must be an array of strings");
      }
      std::vector<std::string> result;
      for (auto const& x : j) {
        if (!x.is_string()) {
          throw ParseError(std::string(what) + " must be an array of strings");
        }
        result.push_back(x.get<std::string>());
      }
      return result;
    }

    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
      }
      return j.at(key);
    }

    json word_list_to_json(std::vector<Word> const& ws) {
      json result = json::array();
      for (auto const& w : ws) {
        result.push_back(word_to_json(w));
      }
      return result;
    }

    std::vector<Word> word_list_from_json(json const& j, Alphabet const* a) {
      if (!j.is_array()) {
        throw ParseError("expected an array of words");
      }
      std::vector<Word> result;
      for (auto const& w : j) {
        result.push_back(word_from_json(w, a));
      }
      return result;
    }

    json trace_to_json(std::vector<RoundTrace> const& trace) {
      json result = json::array();
      for (auto const& t : trace) {
        result.push_back({{"round", t.round},
                          {"vertices", t.vertices},
                          {"edges", t.edges},
                          {"readable", t.readable}});
      }
      return result;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(std::string_view text, Alphabet const* alphabet) {
    text = trim(text);
    if (text.empty() || text == "1") {
      return {};
    }
    bool const terse = alphabet ? alphabet->is_terse() : looks_terse(text);
    Word result      = terse ? parse_terse(text) : parse_tokens(text);
    if (alphabet) {
      alphabet->validate(result);
    }
    return result;
  }

  std::string format_word(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    bool const terse = std::all_of(w.begin(), w.end(), [](Letter const& x) {
      return x.name.size() == 1 && x.name[0] >= 'a' && x.name[0] <= 'z';
    });
    std::string result;
    for (auto const& x : w) {
      if (!result.empty()) {
        result += ' ';
      }
      if (terse) {
        result += x.sign > 0 ? x.name[0] : static_cast<char>(x.name[0] - 'a' + 'A');
      } else {
        result += x.name;
        if (x.sign < 0) {
          result += "^-1";
        }
      }
    }
    return result;
  }

  json word_to_json(Word const& w) {
    json result = json::array();
    for (auto const& x : w) {
      result.push_back({{"name", x.name}, {"sign", x.sign}});
    }
    return result;
  }

  Word word_from_json(json const& j, Alphabet const* alphabet) {
    if (j.is_string()) {
      return parse_word(j.get<std::string>(), alphabet);
    }
    if (!j.is_array()) {
      throw ParseError("a word must be a string or an array");
    }
    Word result;
    for (auto const& x : j) {
      if (x.is_string()) {
        result.push_back(parse_token(x.get<std::string>()));
      } else if (x.is_object()) {
        auto const& name = field(x, "name");
        if (!name.is_string()) {
          throw ParseError("letter name must be a string");
        }
        int sign = 1;
        if (x.contains("sign")) {
          if (!x.at("sign").is_number_integer()) {
            throw ParseError("letter sign must be 1 or -1");
          }
          sign = x.at("sign").get<int>();
        }
        if (sign != 1 && sign != -1) {
          throw ParseError("letter sign must be 1 or -1");
        }
        result.push_back(Letter(name.get<std::string>(), sign));
      } else {
        throw ParseError("a letter must be a string or a {name, sign} object");
      }
    }
    if (alphabet) {
      alphabet->validate(result);
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentations
  ////////////////////////////////////////////////////////////////////////

  json presentation_to_json(InvPresentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relations) {
      rels.push_back({{"lhs", word_to_json(r.lhs)}, {"rhs", word_to_json(r.rhs)}});
    }
    return {{"alphabet", p.alphabet.names()}, {"relations", rels}};
  }

  InvPresentation presentation_from_json(json const& j) {
    InvPresentation p{Alphabet(string_list(field(j, "alphabet"), "alphabet")),
                      {}};
    if (j.contains("relations")) {
      auto const& rels = j.at("relations");
      if (!rels.is_array()) {
        throw ParseError("relations must be an array");
      }
      for (auto const& r : rels) {
        if (r.is_array() && r.size() == 2) {
          p.relations.push_back({word_from_json(r[0], &p.alphabet),
                                 word_from_json(r[1], &p.alphabet)});
        } else if (r.is_object()) {
          Word rhs;
          if (r.contains("rhs")) {
            rhs = word_from_json(r.at("rhs"), &p.alphabet);
          }
          p.relations.push_back(
              {word_from_json(field(r, "lhs"), &p.alphabet), std::move(rhs)});
        } else {
          throw ParseError("a relation must be {lhs, rhs} or [lhs, rhs]");
        }
      }
    }
    if (j.contains("relators")) {
      for (auto& r : word_list_from_json(j.at("relators"), &p.alphabet)) {
        p.relations.push_back({std::move(r), {}});
      }
    }
    p.validate();
    return p;
  }

  json group_to_json(GroupPresentation const& g) {
    return {{"alphabet", g.alphabet.names()},
            {"relators", word_list_to_json(g.relators)}};
  }

  GroupPresentation group_from_json(json const& j) {
    GroupPresentation g{Alphabet(string_list(field(j, "alphabet"), "alphabet")),
                        {}};
    g.relators = word_list_from_json(field(j, "relators"), &g.alphabet);
    return g;
  }

  json instance_to_json(ConstructionInstance const& ci) {
    return {{"group", group_to_json(ci.group)},
            {"wset", word_list_to_json(ci.wset)},
            {"stable", ci.stable}};
  }

  ConstructionInstance instance_from_json(json const& j) {
    ConstructionInstance ci;
    ci.group = group_from_json(field(j, "group"));
    ci.wset  = word_list_from_json(field(j, "wset"), &ci.group.alphabet);
    if (j.contains("stable")) {
      if (!j.at("stable").is_string()) {
        throw ParseError("stable must be a string");
      }
      ci.stable = j.at("stable").get<std::string>();
    }
    ci.validate();
    return ci;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graphs and HNN data
  ////////////////////////////////////////////////////////////////////////

  json simp_graph_to_json(SimpGraph const& g) {
    json edges = json::array();
    for (auto const& [i, j] : g.edges()) {
      edges.push_back({g.vertices().name(i), g.vertices().name(j)});
    }
    return {{"vertices", g.vertices().names()}, {"edges", edges}};
  }

  SimpGraph simp_graph_from_json(json const& j) {
    if (j.is_object() && j.contains("path")) {
      return SimpGraph::path(j.at("path").get<std::size_t>());
    }
    std::vector<std::pair<std::string, std::string>> edges;
    auto const&                                      e = field(j, "edges");
    if (!e.is_array()) {
      throw ParseError("edges must be an array of pairs");
    }
    for (auto const& x : e) {
      auto names = string_list(x, "an edge");
      if (names.size() != 2) {
        throw ParseError("an edge must have exactly two endpoints");
      }
      edges.emplace_back(names[0], names[1]);
    }
    return SimpGraph(Alphabet(string_list(field(j, "vertices"), "vertices")),
                     edges);
  }

  json hnn_to_json(HnnPresentation const& h) {
    json psi = json::object();
    for (auto const& [from, to] : h.psi) {
      psi[from] = to;
    }
    return {{"graph", simp_graph_to_json(h.base)},
            {"delta1", h.delta1},
            {"delta2", h.delta2},
            {"psi", psi},
            {"stable", h.stable}};
  }

  HnnPresentation hnn_from_json(json const& j) {
    auto        base  = simp_graph_from_json(field(j, "graph"));
    auto        d1    = string_list(field(j, "delta1"), "delta1");
    auto        d2    = string_list(field(j, "delta2"), "delta2");
    auto const& psi_j = field(j, "psi");
    if (!psi_j.is_object()) {
      throw ParseError("psi must be an object {from: to}");
    }
    std::map<std::string, std::string> psi;
    for (auto const& [from, to] : psi_j.items()) {
      if (!to.is_string()) {
        throw ParseError("psi values must be strings");
      }
      psi[from] = to.get<std::string>();
    }
    HnnPresentation h{std::move(base),
                      {d1.begin(), d1.end()},
                      {d2.begin(), d2.end()},
                      std::move(psi),
                      j.value("stable", std::string("t"))};
    h.validate();
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Finite groups
  ////////////////////////////////////////////////////////////////////////

  json finite_group_to_json(FiniteGroup const& g) {
    return {{"order", g.order()}, {"table", g.table()}, {"names", g.names()}};
  }

  FiniteGroup finite_group_from_json(json const& j) {
    auto const& t = field(j, "table");
    if (!t.is_array()) {
      throw ParseError("table must be an array of rows");
    }
    std::vector<std::vector<int>> table;
    try {
      table = t.get<std::vector<std::vector<int>>>();
    } catch (json::exception const&) {
      throw ParseError("table must be an array of integer rows");
    }
    if (j.contains("order") && j.at("order").get<std::size_t>() != table.size()) {
      throw ParseError("order does not match the table size");
    }
    std::vector<std::string> names;
    if (j.contains("names")) {
      names = string_list(j.at("names"), "names");
    }
    return FiniteGroup(std::move(table), std::move(names));
  }

  FiniteGroup finite_group_from_csv(std::string_view text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream                    in{std::string(text)};
    std::string                           line;
    while (std::getline(in, line)) {
      if (trim(line).empty()) {
        continue;
      }
      std::vector<std::string> row;
      std::istringstream       fields(line);
      std::string              cell;
      while (std::getline(fields, cell, ',')) {
        row.emplace_back(trim(cell));
      }
      rows.push_back(std::move(row));
    }
    auto is_int = [](std::string const& s) {
      return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c)) != 0;
      });
    };
    std::vector<std::string> names;
    if (!rows.empty()
        && !std::all_of(rows[0].begin(), rows[0].end(), is_int)) {
      names = std::move(rows[0]);
      rows.erase(rows.begin());
    }
    std::vector<std::vector<int>> table;
    for (auto const& row : rows) {
      std::vector<int> ids;
      for (auto const& cell : row) {
        if (!is_int(cell)) {
          throw ParseError("table entry '" + cell + "' is not an element id");
        }
        ids.push_back(std::stoi(cell));
      }
      table.push_back(std::move(ids));
    }
    return FiniteGroup(std::move(table), std::move(names));
  }

  ////////////////////////////////////////////////////////////////////////
  // Word graphs
  ////////////////////////////////////////////////////////////////////////

  json word_graph_to_json(WordGraph const& g, Alphabet const& alphabet) {
    json edges = json::array();
    for (auto const& e : g.edges()) {
      edges.push_back({e.src, alphabet.name(e.letter), e.tgt});
    }
    return {{"vertices", g.num_vertices()},
            {"start", g.start()},
            {"end", g.end()},
            {"edges", edges}};
  }

  std::string to_dot(WordGraph const&   g,
                     Alphabet const&    alphabet,
                     std::string const& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n"
        << "  rankdir=LR;\n"
        << "  node [shape=circle];\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out << "  " << v;
      std::vector<std::string> attrs;
      if (v == g.start()) {
        attrs.emplace_back("shape=doublecircle");
      }
      if (v == g.end()) {
        attrs.emplace_back("style=filled");
        attrs.emplace_back("fillcolor=lightgrey");
      }
      if (!attrs.empty()) {
        out << " [";
        for (std::size_t i = 0; i < attrs.size(); ++i) {
          out << (i ? ", " : "") << attrs[i];
        }
        out << "]";
      }
      out << ";\n";
    }
    for (auto const& e : g.edges()) {
      out << "  " << e.src << " -> " << e.tgt << " [label=\""
          << alphabet.name(e.letter) << "\"];\n";
    }
    out << "}\n";
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Results
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Verdict v) {
    return v == Verdict::equal ? "equal" : "unknown";
  }

  std::string to_string(Answer a) {
    return a == Answer::yes ? "yes" : "unknown";
  }

  std::string to_string(Membership m) {
    return m == Membership::yes ? "yes" : "not-found";
  }

  std::string to_string(CertificateStatus s) {
    return s == CertificateStatus::valid ? "valid" : "invalid";
  }

  json stephen_result_to_json(StephenResult const& r) {
    return {{"verdict", to_string(r.verdict)},
            {"rounds", r.rounds},
            {"reason", r.reason},
            {"closed", r.closed},
            {"trace_u", trace_to_json(r.trace_u)},
            {"trace_v", trace_to_json(r.trace_v)}};
  }

  json query_bundle_to_json(QueryBundle const& b) {
    return {{"presentation", presentation_to_json(b.presentation)},
            {"probe", word_to_json(b.probe)},
            {"wp_instance",
             {{"lhs", word_to_json(b.wp_instance.lhs)},
              {"rhs", word_to_json(b.wp_instance.rhs)}}},
            {"semantics", b.semantics}};
  }

  json certificate_to_json(Certificate const& c) {
    return {{"status", to_string(c.status)},
            {"u", word_to_json(c.u)},
            {"factorization", c.factorization},
            {"residual", word_to_json(c.residual)}};
  }

  json britton_form_to_json(BrittonForm const& f, std::string const& stable) {
    json tail = json::array();
    for (auto const& s : f.tail) {
      tail.push_back({{"t_power", s.t_power}, {"g", word_to_json(s.g.word)}});
    }
    return {{"head", word_to_json(f.head.word)},
            {"tail", tail},
            {"word", format_word(f.to_word(stable))},
            {"trivial", !f.has_stable_letter() && f.head.word.empty()}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Files
  ////////////////////////////////////////////////////////////////////////

  std::string read_file(std::string const& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  json read_json_file(std::string const& path) {
    try {
      return json::parse(read_file(path));
    } catch (json::parse_error const& e) {
      throw ParseError("'" + path + "' is not valid JSON: " + e.what());
    }
  }

  void write_file(std::string const& path, std::string const& text) {
    auto const parent = std::filesystem::path(path).parent_path();
    std::error_code ec;
    if (!parent.empty()) {
      std::filesystem::create_directories(parent, ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
      throw Error("cannot write '" + path + "'");
    }
  }

}  // namespace invmon

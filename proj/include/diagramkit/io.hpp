// Text and JSON formats.
//
//   word         x1x2x3 or x1.x2.x3
//   presentation {"alphabet_size": 3, "relations": [[[1,2],[2,1]], ...]}
//                (letters 1-based; optional "letter_names")
//   diagram      {"presentation": {...}, "top": [1,2,3],
//                 "cells": [{"offset": 0, "rel": 0, "dir": "F"}, ...]}
//                (offsets and relation indices 0-based)
//   braid        "n=3 s1 s2 s1" or {"n": 3, "slots": [1,2,1]}
//   annular      "n=3 r=1 c0 c2" or {"n": 3, "rotation": 1, "slots": [0,2]}

#ifndef DIAGRAMKIT_IO_HPP_
#define DIAGRAMKIT_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "annular.hpp"
#include "diagram.hpp"
#include "error.hpp"
#include "homology.hpp"
#include "ppbraid.hpp"
#include "presentation.hpp"
#include "squier.hpp"

namespace diagramkit {

  using json = nlohmann::ordered_json;

  namespace detail {

    template <typename F>
    auto parsing(std::string_view what, F&& f) -> decltype(f()) {
      try {
        return f();
      } catch (json::exception const& e) {
        throw ParseError("malformed " + std::string(what) + ": " + e.what());
      }
    }

    inline json parse_json_text(std::string_view text, std::string_view what) {
      try {
        return json::parse(text);
      } catch (json::exception const& e) {
        throw ParseError("malformed " + std::string(what) + ": " + e.what());
      }
    }

    inline std::size_t parse_natural(std::string_view token,
                                     std::string_view what) {
      if (token.empty()) {
        throw ParseError("missing number in " + std::string(what));
      }
      std::size_t v = 0;
      for (char c : token) {
        if (c < '0' || c > '9') {
          throw ParseError("invalid number \"" + std::string(token) + "\" in "
                           + std::string(what));
        }
        v = v * 10 + static_cast<std::size_t>(c - '0');
        if (v > (std::size_t{1} << 40)) {
          throw ParseError("number too large in " + std::string(what));
        }
      }
      return v;
    }

    inline std::int64_t parse_integer(std::string_view token,
                                      std::string_view what) {
      bool negative = !token.empty() && (token[0] == '-' || token[0] == '+');
      auto magnitude = parse_natural(negative ? token.substr(1) : token, what);
      auto v         = static_cast<std::int64_t>(magnitude);
      return token[0] == '-' ? -v : v;
    }

    inline std::vector<std::string> tokens(std::string_view text) {
      std::istringstream       in{std::string(text)};
      std::vector<std::string> out;
      std::string              t;
      while (in >> t) {
        out.push_back(t);
      }
      return out;
    }

    inline bool looks_like_json(std::string_view text) {
      auto p = text.find_first_not_of(" \t\r\n");
      return p != std::string_view::npos && text[p] == '{';
    }

  }  // namespace detail

  ////////////////////////////////////////////////////////////////////////
  // Words and presentations
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline json word_to_json(Word const& w) {
    json out = json::array();
    for (auto x : w) {
      out.push_back(x.index + 1);
    }
    return out;
  }

  [[nodiscard]] inline Word word_from_json(json const& j) {
    return detail::parsing("word", [&] {
      Word w;
      for (auto const& x : j) {
        auto const k = x.get<std::int64_t>();
        if (k < 1 || k > UINT32_MAX) {
          throw ParseError("letters are numbered from 1");
        }
        w.push_back(Letter{static_cast<std::uint32_t>(k - 1)});
      }
      return w;
    });
  }

  [[nodiscard]] inline json presentation_to_json(Presentation const& p) {
    json rels = json::array();
    for (auto const& r : p.relations()) {
      rels.push_back(json::array({word_to_json(r.lhs), word_to_json(r.rhs)}));
    }
    json out{{"alphabet_size", p.alphabet_size()}, {"relations", rels}};
    if (p.letter_names()) {
      out["letter_names"] = *p.letter_names();
    }
    return out;
  }

  [[nodiscard]] inline PresentationPtr presentation_from_json(json const& j) {
    return detail::parsing("presentation", [&] {
      auto const                         n = j.at("alphabet_size").get<std::size_t>();
      std::vector<std::pair<Word, Word>> rels;
      for (auto const& r : j.at("relations")) {
        if (!r.is_array() || r.size() != 2) {
          throw ParseError("each relation must be a pair of words");
        }
        rels.emplace_back(word_from_json(r[0]), word_from_json(r[1]));
      }
      std::optional<std::vector<std::string>> names;
      if (j.contains("letter_names")) {
        names = j.at("letter_names").get<std::vector<std::string>>();
      }
      return std::make_shared<Presentation const>(n, std::move(rels),
                                                  std::move(names));
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagrams
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline json diagram_to_json(Diagram const& d) {
    json cells = json::array();
    for (auto const& c : d.cells()) {
      cells.push_back(json{{"offset", c.offset},
                           {"rel", c.relation_index},
                           {"dir", std::string(1, to_char(c.direction))}});
    }
    return json{{"presentation", presentation_to_json(d.presentation())},
                {"top", word_to_json(d.top())},
                {"cells", cells}};
  }

  [[nodiscard]] inline Diagram diagram_from_json(json const& j) {
    auto p = detail::parsing("diagram", [&] {
      return presentation_from_json(j.at("presentation"));
    });
    return detail::parsing("diagram", [&] {
      Word top = word_from_json(j.at("top"));
      std::vector<Cell> cells;
      for (auto const& c : j.at("cells")) {
        auto const dir = c.at("dir").get<std::string>();
        if (dir != "F" && dir != "B") {
          throw ParseError("cell direction must be \"F\" or \"B\"");
        }
        cells.push_back({c.at("offset").get<std::size_t>(),
                         c.at("rel").get<std::size_t>(),
                         dir == "F" ? Direction::Forward : Direction::Backward});
      }
      return Diagram(p, std::move(top), std::move(cells));
    });
  }

  [[nodiscard]] inline Diagram parse_diagram(std::string_view text) {
    return diagram_from_json(detail::parse_json_text(text, "diagram"));
  }

  [[nodiscard]] inline std::string to_text(Diagram const& d) {
    std::string out = to_string(d.top()) + " ->";
    for (auto const& c : d.cells()) {
      out += " (" + std::to_string(c.offset) + ","
             + std::to_string(c.relation_index) + "," + to_char(c.direction)
             + ")";
    }
    out += " -> " + to_string(d.bottom());
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Braids
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline std::string to_string(BraidWord const& b) {
    std::string out = "n=" + std::to_string(b.strands());
    for (auto s : b.slots()) {
      out += " s" + std::to_string(s);
    }
    return out;
  }

  [[nodiscard]] inline json braid_to_json(BraidWord const& b) {
    return json{{"n", b.strands()}, {"slots", b.slots()}};
  }

  [[nodiscard]] inline BraidWord braid_from_json(json const& j) {
    return detail::parsing("braid", [&] {
      return BraidWord(j.at("n").get<std::size_t>(),
                       j.at("slots").get<std::vector<std::size_t>>());
    });
  }

  //! Accepts the text form or JSON.
  [[nodiscard]] inline BraidWord parse_braid(std::string_view text) {
    if (detail::looks_like_json(text)) {
      return braid_from_json(detail::parse_json_text(text, "braid"));
    }
    auto toks = detail::tokens(text);
    if (toks.empty() || toks[0].rfind("n=", 0) != 0) {
      throw ParseError("a braid starts with n=<strands>");
    }
    std::size_t const        n = detail::parse_natural(toks[0].substr(2), "braid");
    std::vector<std::size_t> slots;
    for (std::size_t i = 1; i < toks.size(); ++i) {
      if (toks[i].size() < 2 || toks[i][0] != 's') {
        throw ParseError("expected s<k>, found \"" + toks[i] + "\"");
      }
      slots.push_back(detail::parse_natural(toks[i].substr(1), "braid"));
    }
    return BraidWord(n, std::move(slots));
  }

  ////////////////////////////////////////////////////////////////////////
  // Annular elements
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline std::string annular_text(std::size_t n, std::int64_t rotation,
                                    std::vector<std::size_t> const& slots) {
      std::string out
          = "n=" + std::to_string(n) + " r=" + std::to_string(rotation);
      for (auto s : slots) {
        out += " c" + std::to_string(s);
      }
      return out;
    }
  }  // namespace detail

  [[nodiscard]] inline std::string to_string(AnnularElement const& e) {
    return detail::annular_text(e.strands(), e.rotation(), e.slots());
  }

  [[nodiscard]] inline std::string to_string(AnnularNormalForm const& e) {
    return detail::annular_text(e.n, e.rotation, e.slots);
  }

  [[nodiscard]] inline json annular_to_json(AnnularElement const& e) {
    return json{{"n", e.strands()},
                {"rotation", e.rotation()},
                {"slots", e.slots()}};
  }

  [[nodiscard]] inline json annular_to_json(AnnularNormalForm const& e) {
    return json{{"n", e.n}, {"rotation", e.rotation}, {"slots", e.slots}};
  }

  //! Reads the fields of an annular element without the purity check; the
  //! result is not reduced.
  [[nodiscard]] inline AnnularNormalForm parse_annular_fields(std::string_view text) {
    if (detail::looks_like_json(text)) {
      auto const j = detail::parse_json_text(text, "annular element");
      return detail::parsing("annular element", [&] {
        return AnnularNormalForm{j.at("n").get<std::size_t>(),
                                 j.value("rotation", std::int64_t{0}),
                                 j.at("slots").get<std::vector<std::size_t>>()};
      });
    }
    auto toks = detail::tokens(text);
    if (toks.empty() || toks[0].rfind("n=", 0) != 0) {
      throw ParseError("an annular element starts with n=<strands>");
    }
    AnnularNormalForm out;
    out.n = detail::parse_natural(toks[0].substr(2), "annular element");
    std::size_t i = 1;
    if (i < toks.size() && toks[i].rfind("r=", 0) == 0) {
      out.rotation = detail::parse_integer(toks[i].substr(2), "annular element");
      ++i;
    }
    for (; i < toks.size(); ++i) {
      if (toks[i].size() < 2 || toks[i][0] != 'c') {
        throw ParseError("expected c<k>, found \"" + toks[i] + "\"");
      }
      out.slots.push_back(
          detail::parse_natural(toks[i].substr(1), "annular element"));
    }
    return out;
  }

  [[nodiscard]] inline AnnularElement annular_from_json(json const& j) {
    return detail::parsing("annular element", [&] {
      return AnnularElement(j.at("n").get<std::size_t>(),
                            j.value("rotation", std::int64_t{0}),
                            j.at("slots").get<std::vector<std::size_t>>());
    });
  }

  [[nodiscard]] inline AnnularElement parse_annular(std::string_view text) {
    auto f = parse_annular_fields(text);
    return AnnularElement(f.n, f.rotation, std::move(f.slots));
  }

  ////////////////////////////////////////////////////////////////////////
  // Squier complexes, presentations, homology
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline json squier_to_json(SquierComplex const& K) {
    json vertices = json::array();
    for (auto const& w : K.vertices()) {
      vertices.push_back(word_to_json(w));
    }
    json graded = json::array();
    for (std::size_t k = 0; k <= K.dimension(); ++k) {
      json level = json::array();
      for (auto const& cube : K.cubes(k)) {
        json cells = json::array();
        for (auto const& c : cube.cells) {
          cells.push_back(json::array({c.offset, c.relation_index}));
        }
        level.push_back(json{{"base", cube.base}, {"cells", cells}});
      }
      graded.push_back(level);
    }
    return json{{"presentation", presentation_to_json(K.presentation())},
                {"base_word", word_to_json(K.base_word())},
                {"counts", cube_counts(K)},
                {"euler_characteristic", euler_characteristic(K)},
                {"vertices", vertices},
                {"cubes", graded}};
  }

  [[nodiscard]] inline std::string squier_summary(SquierComplex const& K) {
    std::string out = "base_word: " + to_string(K.base_word()) + "\n";
    auto const  counts = cube_counts(K);
    out += "cube_counts:";
    for (auto c : counts) {
      out += " " + std::to_string(c);
    }
    out += "\neuler_characteristic: "
           + std::to_string(euler_characteristic(K)) + "\n";
    return out;
  }

  //! The 1-skeleton: vertices labelled by words, edges by (offset,relation).
  [[nodiscard]] inline std::string squier_to_dot(SquierComplex const& K) {
    std::string out = "graph squier {\n";
    for (std::size_t v = 0; v < K.vertices().size(); ++v) {
      out += "  v" + std::to_string(v) + " [label=\"" + to_string(K.vertex(v))
             + "\"];\n";
    }
    for (auto const& e : K.edges()) {
      std::size_t const to = *K.vertex_id(K.corner(e, 1));
      out += "  v" + std::to_string(e.base) + " -- v" + std::to_string(to)
             + " [label=\"(" + std::to_string(e.cells[0].offset) + ","
             + std::to_string(e.cells[0].relation_index) + ")\"];\n";
    }
    out += "}\n";
    return out;
  }

  [[nodiscard]] inline json homology_to_json(std::size_t          dimension,
                                             HomologyGroup const& h) {
    json torsion = json::array();
    for (auto const& t : h.torsion) {
      if (t <= INT64_MAX) {
        torsion.push_back(static_cast<std::int64_t>(t));
      } else {
        torsion.push_back(t.str());  // too wide for a JSON integer
      }
    }
    return json{{"dimension", dimension},
                {"betti", h.betti},
                {"torsion", torsion}};
  }

  [[nodiscard]] inline json group_presentation_to_json(GroupPresentation const& gp) {
    json relators = json::array();
    for (auto const& r : gp.relators) {
      json word = json::array();
      for (auto x : r) {
        word.push_back((x.inverse ? "G" : "g") + std::to_string(x.generator + 1));
      }
      relators.push_back(word);
    }
    return json{{"generators", gp.generator_count}, {"relators", relators}};
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_IO_HPP_

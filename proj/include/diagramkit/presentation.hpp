// Semigroup presentations, positive words and single-relation rewriting.

#ifndef DIAGRAMKIT_PRESENTATION_HPP_
#define DIAGRAMKIT_PRESENTATION_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace diagramkit {

  //! A letter of the alphabet, stored 0-based. Displayed as x<index + 1>.
  struct Letter {
    std::uint32_t index = 0;

    friend constexpr auto operator<=>(Letter, Letter) = default;
  };

  //! A positive word. Operations that require a non-empty word say so.
  using Word = std::vector<Letter>;

  using ChainBreak = BasicChainBreak<Word>;

  enum class Direction : std::uint8_t { Forward = 0, Backward = 1 };

  [[nodiscard]] constexpr Direction opposite(Direction d) noexcept {
    return d == Direction::Forward ? Direction::Backward : Direction::Forward;
  }

  [[nodiscard]] constexpr char to_char(Direction d) noexcept {
    return d == Direction::Forward ? 'F' : 'B';
  }

  struct Relation {
    Word        lhs;
    Word        rhs;
    std::size_t index = 0;

    //! The side that must be present in the word for a cell in direction d.
    [[nodiscard]] Word const& source(Direction d) const noexcept {
      return d == Direction::Forward ? lhs : rhs;
    }
    [[nodiscard]] Word const& target(Direction d) const noexcept {
      return d == Direction::Forward ? rhs : lhs;
    }
    [[nodiscard]] bool length_preserving() const noexcept {
      return lhs.size() == rhs.size();
    }

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  ////////////////////////////////////////////////////////////////////////
  // Word text format
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline std::string to_string(Letter x) {
    return "x" + std::to_string(x.index + 1);
  }

  [[nodiscard]] inline std::string to_string(Word const& w) {
    std::string out;
    for (auto x : w) {
      out += to_string(x);
    }
    return out;
  }

  //! Parses words such as "x1x2x3" or "x1.x2.x3". Letters are 1-based in the
  //! text and 0-based in the result. Whitespace is ignored.
  [[nodiscard]] inline Word parse_word(std::string_view text) {
    Word        w;
    std::size_t i = 0;
    auto        skip = [&] {
      while (i < text.size()
             && (text[i] == '.' || text[i] == ' ' || text[i] == '\t')) {
        ++i;
      }
    };
    skip();
    while (i < text.size()) {
      if (text[i] != 'x') {
        throw ParseError("expected 'x' at position " + std::to_string(i)
                         + " in word \"" + std::string(text) + "\"");
      }
      ++i;
      std::uint64_t k      = 0;
      std::size_t   digits = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        k = k * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (k > UINT32_MAX) {
          throw ParseError("letter number too large in \"" + std::string(text)
                           + "\"");
        }
        ++i;
        ++digits;
      }
      if (digits == 0 || k == 0) {
        throw ParseError("letters are numbered from 1 in \""
                         + std::string(text) + "\"");
      }
      w.push_back(Letter{static_cast<std::uint32_t>(k - 1)});
      skip();
    }
    return w;
  }

  //! The word x_1 x_2 ... x_n.
  [[nodiscard]] inline Word standard_word(std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = Letter{static_cast<std::uint32_t>(i)};
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Presentation
  ////////////////////////////////////////////////////////////////////////

  class Presentation {
   public:
    //! Validates and builds a presentation. Relations keep their input order
    //! and the orientation they were given in.
    Presentation(std::size_t                             alphabet_size,
                 std::vector<std::pair<Word, Word>>      relations,
                 std::optional<std::vector<std::string>> letter_names
                 = std::nullopt)
        : _alphabet_size(alphabet_size), _letter_names(std::move(letter_names)) {
      if (alphabet_size == 0) {
        throw LetterOutOfRange("the alphabet must contain at least one letter");
      }
      if (_letter_names && _letter_names->size() != alphabet_size) {
        throw LetterOutOfRange("expected " + std::to_string(alphabet_size)
                               + " letter names, found "
                               + std::to_string(_letter_names->size()));
      }
      _relations.reserve(relations.size());
      for (auto& [lhs, rhs] : relations) {
        std::size_t const k = _relations.size();
        if (lhs.empty() || rhs.empty()) {
          throw EmptyWord("relation " + std::to_string(k)
                          + " has an empty side");
        }
        validate_word(lhs);
        validate_word(rhs);
        if (lhs == rhs) {
          throw TrivialRelation("relation " + std::to_string(k) + " is "
                                + to_string(lhs) + " = " + to_string(rhs));
        }
        for (auto const& r : _relations) {
          if ((r.lhs == lhs && r.rhs == rhs) || (r.lhs == rhs && r.rhs == lhs)) {
            throw DuplicateRelation("relation " + std::to_string(k)
                                    + " repeats relation "
                                    + std::to_string(r.index));
          }
        }
        _relations.push_back(Relation{std::move(lhs), std::move(rhs), k});
      }
    }

    [[nodiscard]] std::size_t alphabet_size() const noexcept {
      return _alphabet_size;
    }
    [[nodiscard]] std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }
    [[nodiscard]] std::size_t number_of_relations() const noexcept {
      return _relations.size();
    }
    [[nodiscard]] Relation const& relation(std::size_t i) const {
      if (i >= _relations.size()) {
        throw RelationOutOfRange("relation index " + std::to_string(i)
                                 + " out of range [0, "
                                 + std::to_string(_relations.size()) + ")");
      }
      return _relations[i];
    }
    [[nodiscard]] std::optional<std::vector<std::string>> const&
    letter_names() const noexcept {
      return _letter_names;
    }
    [[nodiscard]] bool length_preserving() const noexcept {
      return std::all_of(_relations.begin(), _relations.end(), [](auto const& r) {
        return r.length_preserving();
      });
    }

    //! Throws EmptyWord or LetterOutOfRange if w is not a word over this
    //! presentation.
    void validate_word(Word const& w) const {
      if (w.empty()) {
        throw EmptyWord("words must be non-empty");
      }
      for (auto x : w) {
        if (x.index >= _alphabet_size) {
          throw LetterOutOfRange("letter " + to_string(x)
                                 + " is not in an alphabet of size "
                                 + std::to_string(_alphabet_size));
        }
      }
    }

    //! Equality of the data that determines diagrams: the alphabet and the
    //! oriented relation list. Display names are ignored.
    friend bool operator==(Presentation const& a, Presentation const& b) {
      return a._alphabet_size == b._alphabet_size && a._relations == b._relations;
    }

   private:
    std::size_t                             _alphabet_size;
    std::vector<Relation>                   _relations;
    std::optional<std::vector<std::string>> _letter_names;
  };

  using PresentationPtr = std::shared_ptr<Presentation const>;

  [[nodiscard]] inline PresentationPtr
  make_presentation(std::size_t                             alphabet_size,
                    std::vector<std::pair<Word, Word>>      relations,
                    std::optional<std::vector<std::string>> letter_names
                    = std::nullopt) {
    return std::make_shared<Presentation const>(
        alphabet_size, std::move(relations), std::move(letter_names));
  }

  [[nodiscard]] inline bool same_presentation(PresentationPtr const& a,
                                              PresentationPtr const& b) {
    return a == b || (a && b && *a == *b);
  }

  //! Index of the relation x_{i+1} x_{j+1} = x_{j+1} x_{i+1} (0-based i < j)
  //! in planar_presentation(n).
  [[nodiscard]] constexpr std::size_t
  planar_relation_index(std::size_t n, std::size_t i, std::size_t j) noexcept {
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }

  //! The presentation <x_1, ..., x_n | x_i x_j = x_j x_i (i < j)>, relations
  //! oriented ascending and ordered lexicographically by (i, j).
  [[nodiscard]] inline PresentationPtr planar_presentation(std::size_t n) {
    std::vector<std::pair<Word, Word>> rels;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = i + 1; j < n; ++j) {
        rels.push_back({{Letter{i}, Letter{j}}, {Letter{j}, Letter{i}}});
      }
    }
    return make_presentation(n, std::move(rels));
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  [[nodiscard]] inline bool matches_at(Word const&       word,
                                       Word const&       pattern,
                                       std::size_t       offset) noexcept {
    return offset <= word.size() && pattern.size() <= word.size() - offset
           && std::equal(pattern.begin(), pattern.end(), word.begin() + offset);
  }

  //! Replaces the source side of rel at offset by its target side.
  [[nodiscard]] inline Word apply_relation(Word const&     word,
                                           Relation const& rel,
                                           Direction       dir,
                                           std::size_t     offset) {
    Word const& src = rel.source(dir);
    Word const& tgt = rel.target(dir);
    if (offset > word.size() || src.size() > word.size() - offset) {
      throw OffsetOutOfRange("offset " + std::to_string(offset) + " + "
                             + std::to_string(src.size())
                             + " exceeds word length "
                             + std::to_string(word.size()));
    }
    if (!matches_at(word, src, offset)) {
      throw SubwordMismatch("relation " + std::to_string(rel.index) + " ("
                            + to_char(dir) + ") does not apply to "
                            + to_string(word) + " at offset "
                            + std::to_string(offset));
    }
    Word out;
    out.reserve(word.size() - src.size() + tgt.size());
    out.insert(out.end(), word.begin(), word.begin() + offset);
    out.insert(out.end(), tgt.begin(), tgt.end());
    out.insert(out.end(), word.begin() + offset + src.size(), word.end());
    return out;
  }

  [[nodiscard]] inline Word apply_relation(Word const&         word,
                                           Presentation const& p,
                                           std::size_t         relation_index,
                                           Direction           dir,
                                           std::size_t         offset) {
    return apply_relation(word, p.relation(relation_index), dir, offset);
  }

  struct Cell {
    std::size_t offset         = 0;
    std::size_t relation_index = 0;
    Direction   direction      = Direction::Forward;

    friend auto operator<=>(Cell const&, Cell const&) = default;
  };

  //! Every (offset, relation, direction) at which apply_relation succeeds on
  //! word, sorted by (offset, relation_index, direction).
  [[nodiscard]] inline std::vector<Cell>
  applicable_cells(Word const& word, Presentation const& p) {
    std::vector<Cell> out;
    for (std::size_t o = 0; o < word.size(); ++o) {
      for (auto const& r : p.relations()) {
        for (auto d : {Direction::Forward, Direction::Backward}) {
          if (matches_at(word, r.source(d), o)) {
            out.push_back({o, r.index, d});
          }
        }
      }
    }
    return out;
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_PRESENTATION_HPP_

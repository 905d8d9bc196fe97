// Semigroup diagrams encoded as cell sequences.
//
// A diagram over a presentation is a top word together with the ordered
// list of its cells (transistors) read from top to bottom. Cells whose
// intervals are disjoint commute; the class of a diagram under these
// commutations is its picture up to isotopy. Two diagrams represent the same
// element of the diagram group exactly when they have the same reduced
// normal form (see reduce()).

#ifndef DIAGRAMKIT_DIAGRAM_HPP_
#define DIAGRAMKIT_DIAGRAM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"

namespace diagramkit {

  class NormalDiagram;

  class Diagram {
   public:
    //! Builds a diagram, checking that every cell applies to the running
    //! word. Throws ChainBreak carrying the index of the first failing cell.
    Diagram(PresentationPtr p, Word top, std::vector<Cell> cells)
        : _presentation(std::move(p)),
          _top(std::move(top)),
          _cells(std::move(cells)) {
      if (!_presentation) {
        throw PresentationMismatch("a diagram needs a presentation");
      }
      _presentation->validate_word(_top);
      _bottom = _top;
      for (std::size_t k = 0; k < _cells.size(); ++k) {
        auto const& c = _cells[k];
        if (c.relation_index >= _presentation->number_of_relations()) {
          throw ChainBreak(k, _bottom,
                           "cell " + std::to_string(k) + " uses relation "
                               + std::to_string(c.relation_index)
                               + " which does not exist");
        }
        auto const& r = _presentation->relation(c.relation_index);
        if (!matches_at(_bottom, r.source(c.direction), c.offset)) {
          throw ChainBreak(k, _bottom,
                           "cell " + std::to_string(k) + " does not apply to "
                               + to_string(_bottom) + " at offset "
                               + std::to_string(c.offset));
        }
        _bottom = apply_relation(_bottom, r, c.direction, c.offset);
      }
    }

    [[nodiscard]] Presentation const& presentation() const noexcept {
      return *_presentation;
    }
    [[nodiscard]] PresentationPtr const& presentation_ptr() const noexcept {
      return _presentation;
    }
    [[nodiscard]] Word const& top() const noexcept {
      return _top;
    }
    [[nodiscard]] Word const& bottom() const noexcept {
      return _bottom;
    }
    [[nodiscard]] std::vector<Cell> const& cells() const noexcept {
      return _cells;
    }
    [[nodiscard]] std::size_t size() const noexcept {
      return _cells.size();
    }
    [[nodiscard]] bool empty() const noexcept {
      return _cells.empty();
    }
    [[nodiscard]] bool spherical() const noexcept {
      return _top == _bottom;
    }

    //! Cell-for-cell identity (not group equality; see equal()).
    friend bool operator==(Diagram const& a, Diagram const& b) {
      return same_presentation(a._presentation, b._presentation)
             && a._top == b._top && a._cells == b._cells;
    }

   protected:
    struct unchecked_t {};

    Diagram(unchecked_t,
            PresentationPtr   p,
            Word              top,
            std::vector<Cell> cells,
            Word              bottom)
        : _presentation(std::move(p)),
          _top(std::move(top)),
          _cells(std::move(cells)),
          _bottom(std::move(bottom)) {}

    static Diagram unchecked(PresentationPtr   p,
                             Word              top,
                             std::vector<Cell> cells,
                             Word              bottom) {
      return Diagram(unchecked_t{},
                     std::move(p),
                     std::move(top),
                     std::move(cells),
                     std::move(bottom));
    }

    friend Diagram compose(Diagram const&, Diagram const&);
    friend Diagram invert(Diagram const&);
    friend Diagram normalize(Diagram const&);
    friend class NormalDiagram;

   private:
    PresentationPtr   _presentation;
    Word              _top;
    std::vector<Cell> _cells;
    Word              _bottom;
  };

  //! A dipole-free diagram in leftmost-first commutation normal form. Only
  //! reduce() creates these.
  class NormalDiagram : public Diagram {
   private:
    explicit NormalDiagram(Diagram d) : Diagram(std::move(d)) {}

    friend NormalDiagram make_normal(Diagram);
  };

  inline NormalDiagram make_normal(Diagram d) {
    return NormalDiagram(std::move(d));
  }

  [[nodiscard]] inline Diagram make_diagram(PresentationPtr   p,
                                            Word              top,
                                            std::vector<Cell> cells) {
    return Diagram(std::move(p), std::move(top), std::move(cells));
  }

  [[nodiscard]] inline Diagram identity(PresentationPtr p, Word u) {
    return Diagram(std::move(p), std::move(u), {});
  }

  [[nodiscard]] inline Word const& bottom_word(Diagram const& d) noexcept {
    return d.bottom();
  }

  namespace detail {

    struct CellGeometry {
      std::size_t source_length;
      std::size_t target_length;
    };

    inline CellGeometry geometry(Presentation const& p, Cell const& c) {
      auto const& r = p.relation(c.relation_index);
      return {r.source(c.direction).size(), r.target(c.direction).size()};
    }

    // Half-open intervals [a, a + m) and [b, b + n) share a position.
    inline bool overlap(std::size_t a,
                        std::size_t m,
                        std::size_t b,
                        std::size_t n) noexcept {
      return a < b + n && b < a + m;
    }

    // Tries to swap adjacent cells `first` (applied first) and `second`.
    // Returns the pair in new order (second', first') if they are
    // independent: the output interval of `first` is disjoint from the input
    // interval of `second`.
    inline std::optional<std::pair<Cell, Cell>>
    swap_adjacent(Presentation const& p, Cell first, Cell second) {
      auto const g1 = geometry(p, first);
      auto const g2 = geometry(p, second);
      if (overlap(first.offset, g1.target_length, second.offset,
                  g2.source_length)) {
        return std::nullopt;
      }
      if (second.offset + g2.source_length <= first.offset) {
        // second lies to the left; first moves by the length change of second
        first.offset = first.offset + g2.target_length - g2.source_length;
      } else {
        second.offset = second.offset + g1.source_length - g1.target_length;
      }
      return std::pair{second, first};
    }

    struct Dipole {
      std::size_t first;
      std::size_t second;
    };

    // Partner of cell i, if cells i and j form a dipole for some j > i.
    inline std::optional<std::size_t>
    dipole_partner(Presentation const& p, std::vector<Cell> const& cells,
                   std::size_t i) {
      auto const& ci  = cells[i];
      std::size_t pos = ci.offset;
      std::size_t len = geometry(p, ci).target_length;
      for (std::size_t k = i + 1; k < cells.size(); ++k) {
        auto const& ck = cells[k];
        if (ck.offset == pos && ck.relation_index == ci.relation_index
            && ck.direction == opposite(ci.direction)) {
          return k;
        }
        auto const gk = geometry(p, ck);
        if (overlap(pos, len, ck.offset, gk.source_length)) {
          return std::nullopt;
        }
        if (ck.offset + gk.source_length <= pos) {
          pos = pos + gk.target_length - gk.source_length;
        }
      }
      return std::nullopt;
    }

    inline std::vector<Dipole> all_dipoles(Presentation const&      p,
                                           std::vector<Cell> const& cells) {
      std::vector<Dipole> out;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (auto j = dipole_partner(p, cells, i)) {
          out.push_back({i, *j});
        }
      }
      return out;
    }

    inline std::optional<Dipole> first_dipole(Presentation const&      p,
                                              std::vector<Cell> const& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (auto j = dipole_partner(p, cells, i)) {
          return Dipole{i, *j};
        }
      }
      return std::nullopt;
    }

    // Removes a dipole; cells strictly between that lie right of the
    // cancelled interval are shifted by the length change of the first cell.
    inline void delete_dipole(Presentation const& p,
                              std::vector<Cell>&  cells,
                              Dipole              dp) {
      auto const  g   = geometry(p, cells[dp.first]);
      std::size_t pos = cells[dp.first].offset;
      for (std::size_t k = dp.first + 1; k < dp.second; ++k) {
        auto&      ck = cells[k];
        auto const gk = geometry(p, ck);
        if (ck.offset + gk.source_length <= pos) {
          pos = pos + gk.target_length - gk.source_length;
        } else {
          ck.offset = ck.offset + g.source_length - g.target_length;
        }
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(dp.second));
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(dp.first));
    }

    // Lexicographically least representative of the commutation class of
    // cells. Repeatedly extracts, among the cells that can be commuted to the
    // front, the one with the least (offset, relation, direction) key there.
    inline std::vector<Cell> leftmost_normal_form(Presentation const& p,
                                                  std::vector<Cell>   rest) {
      std::vector<Cell> out;
      out.reserve(rest.size());
      while (!rest.empty()) {
        std::optional<std::size_t> best;
        Cell                       best_cell{};
        for (std::size_t j = 0; j < rest.size(); ++j) {
          Cell c  = rest[j];
          bool ok = true;
          for (std::size_t k = j; k-- > 0;) {
            auto swapped = swap_adjacent(p, rest[k], c);
            if (!swapped) {
              ok = false;
              break;
            }
            c = swapped->first;
          }
          if (ok && (!best || c < best_cell)) {
            best      = j;
            best_cell = c;
          }
        }
        // j = 0 is always movable, so best is set
        std::size_t const j = *best;
        Cell              c = rest[j];
        for (std::size_t k = j; k-- > 0;) {
          auto swapped = swap_adjacent(p, rest[k], c);
          c            = swapped->first;
          rest[k]      = swapped->second;
        }
        out.push_back(c);
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
      }
      return out;
    }

  }  // namespace detail

  //! Stacks d1 on top of d2. No reduction is performed.
  [[nodiscard]] inline Diagram compose(Diagram const& d1, Diagram const& d2) {
    if (!same_presentation(d1.presentation_ptr(), d2.presentation_ptr())) {
      throw PresentationMismatch("cannot compose diagrams over different "
                                 "presentations");
    }
    if (d1.bottom() != d2.top()) {
      throw BoundaryMismatch("bottom word " + to_string(d1.bottom())
                             + " differs from top word " + to_string(d2.top()));
    }
    auto cells = d1.cells();
    cells.insert(cells.end(), d2.cells().begin(), d2.cells().end());
    return Diagram::unchecked(d1.presentation_ptr(), d1.top(), std::move(cells),
                              d2.bottom());
  }

  //! The mirror image: cells reversed, directions flipped. Each reversed cell
  //! keeps its offset, since it undoes its original in place.
  [[nodiscard]] inline Diagram invert(Diagram const& d) {
    std::vector<Cell> cells(d.cells().rbegin(), d.cells().rend());
    for (auto& c : cells) {
      c.direction = opposite(c.direction);
    }
    return Diagram::unchecked(d.presentation_ptr(), d.bottom(),
                              std::move(cells), d.top());
  }

  //! Leftmost-first commutation normal form. Does not delete dipoles.
  [[nodiscard]] inline Diagram normalize(Diagram const& d) {
    return Diagram::unchecked(
        d.presentation_ptr(), d.top(),
        detail::leftmost_normal_form(d.presentation(), d.cells()), d.bottom());
  }

  [[nodiscard]] inline bool is_reduced(Diagram const& d) {
    return !detail::first_dipole(d.presentation(), d.cells());
  }

  //! Deletes dipoles (leftmost-topmost first) until none remain, then
  //! normalizes. The result is the canonical representative of d's class.
  [[nodiscard]] inline NormalDiagram reduce(Diagram const& d) {
    auto const& p     = d.presentation();
    auto        cells = d.cells();
    while (auto dp = detail::first_dipole(p, cells)) {
      detail::delete_dipole(p, cells, *dp);
    }
    return make_normal(normalize(Diagram(d.presentation_ptr(), d.top(),
                                         std::move(cells))));
  }

  //! As reduce(), but each deletion picks a dipole uniformly at random. The
  //! result is the same for every choice sequence.
  template <typename URBG>
  [[nodiscard]] NormalDiagram reduce(Diagram const& d, URBG& rng) {
    auto const& p     = d.presentation();
    auto        cells = d.cells();
    while (true) {
      auto dipoles = detail::all_dipoles(p, cells);
      if (dipoles.empty()) {
        break;
      }
      std::uniform_int_distribution<std::size_t> pick(0, dipoles.size() - 1);
      detail::delete_dipole(p, cells, dipoles[pick(rng)]);
    }
    return make_normal(normalize(Diagram(d.presentation_ptr(), d.top(),
                                         std::move(cells))));
  }

  //! Inserts the pair (offset, rel, dir), (offset, rel, opposite dir) before
  //! the cell at `position`.
  [[nodiscard]] inline Diagram insert_dipole(Diagram const& d,
                                             std::size_t    position,
                                             std::size_t    relation_index,
                                             Direction      direction,
                                             std::size_t    offset) {
    if (position > d.size()) {
      throw ChainBreak(position, d.bottom(),
                       "insertion position " + std::to_string(position)
                           + " exceeds the number of cells "
                           + std::to_string(d.size()));
    }
    auto cells = d.cells();
    Cell c{offset, relation_index, direction};
    Cell back{offset, relation_index, opposite(direction)};
    auto at = cells.begin() + static_cast<std::ptrdiff_t>(position);
    at      = cells.insert(at, back);
    cells.insert(at, c);
    return Diagram(d.presentation_ptr(), d.top(), std::move(cells));
  }

  //! Equality in the diagram group (or groupoid): same top word and the same
  //! reduced normal form.
  [[nodiscard]] inline bool equal(Diagram const& d1, Diagram const& d2) {
    if (!same_presentation(d1.presentation_ptr(), d2.presentation_ptr())) {
      throw PresentationMismatch("cannot compare diagrams over different "
                                 "presentations");
    }
    if (d1.top() != d2.top() || d1.bottom() != d2.bottom()) {
      return false;
    }
    return reduce(d1).cells() == reduce(d2).cells();
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_DIAGRAM_HPP_

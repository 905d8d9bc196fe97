// Planar pure braids as crossing-slot sequences, and their correspondence
// with spherical diagrams over P_n at the base word x_1 ... x_n.
//
// A braid on n strands is read top to bottom; slot s (1-based) is a single
// transverse crossing of the strands currently at positions s and s + 1.
// Crossing x_a over x_b with x_a on the left becomes an
// (x_a x_b, x_b x_a)-cell, so the letters of the running word record which
// strands cross.

#ifndef DIAGRAMKIT_PPBRAID_HPP_
#define DIAGRAMKIT_PPBRAID_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "error.hpp"
#include "presentation.hpp"

namespace diagramkit {

  class BraidWord {
   public:
    BraidWord(std::size_t n, std::vector<std::size_t> slots)
        : _n(n), _slots(std::move(slots)) {
      if (n == 0) {
        throw SlotOutOfRange("a braid needs at least one strand");
      }
      for (std::size_t k = 0; k < _slots.size(); ++k) {
        if (_slots[k] < 1 || _slots[k] + 1 > n) {
          throw SlotOutOfRange("slot " + std::to_string(_slots[k])
                               + " at position " + std::to_string(k)
                               + " is outside [1, " + std::to_string(n - 1)
                               + "]");
        }
      }
    }

    [[nodiscard]] std::size_t strands() const noexcept {
      return _n;
    }
    [[nodiscard]] std::vector<std::size_t> const& slots() const noexcept {
      return _slots;
    }
    [[nodiscard]] std::size_t length() const noexcept {
      return _slots.size();
    }

    friend bool operator==(BraidWord const&, BraidWord const&) = default;

   private:
    std::size_t              _n;
    std::vector<std::size_t> _slots;
  };

  [[nodiscard]] inline BraidWord make_braid(std::size_t              n,
                                            std::vector<std::size_t> slots) {
    return BraidWord(n, std::move(slots));
  }

  //! image[i] is the final position (0-based) of the strand that starts at
  //! position i.
  struct StrandPermutation {
    std::vector<std::size_t> image;

    [[nodiscard]] bool is_identity() const noexcept {
      for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i] != i) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(StrandPermutation const&,
                           StrandPermutation const&) = default;
  };

  [[nodiscard]] inline StrandPermutation permutation(BraidWord const& b) {
    // at[p] = strand currently at position p
    std::vector<std::size_t> at(b.strands());
    std::iota(at.begin(), at.end(), 0);
    for (auto s : b.slots()) {
      std::swap(at[s - 1], at[s]);
    }
    StrandPermutation result{std::vector<std::size_t>(b.strands())};
    for (std::size_t p = 0; p < at.size(); ++p) {
      result.image[at[p]] = p;
    }
    return result;
  }

  [[nodiscard]] inline bool is_pure(BraidWord const& b) {
    return permutation(b).is_identity();
  }

  namespace detail {
    inline void require_pure(BraidWord const& b) {
      if (!is_pure(b)) {
        throw NotPure("the braid does not return every strand to its "
                      "starting position");
      }
    }

    inline void require_same_strands(BraidWord const& a, BraidWord const& b) {
      if (a.strands() != b.strands()) {
        throw StrandCountMismatch(std::to_string(a.strands()) + " strands vs "
                                  + std::to_string(b.strands()));
      }
    }
  }  // namespace detail

  namespace detail {
    // One cell per crossing, starting at x_1 ... x_n. The bottom word is the
    // standard word permuted by b, so impure braids are allowed here.
    inline Diagram crossing_diagram(BraidWord const& b, PresentationPtr const& pn) {
      std::size_t const n = b.strands();
      if (pn->alphabet_size() != n) {
        throw PresentationMismatch("presentation alphabet does not match the "
                                   "number of strands");
      }
      Word              running = standard_word(n);
      std::vector<Cell> cells;
      cells.reserve(b.length());
      for (auto s : b.slots()) {
        auto const a = running[s - 1].index;
        auto const c = running[s].index;
        cells.push_back({s - 1, planar_relation_index(n, std::min(a, c),
                                                      std::max(a, c)),
                         a < c ? Direction::Forward : Direction::Backward});
        std::swap(running[s - 1], running[s]);
      }
      return Diagram(pn, standard_word(n), std::move(cells));
    }
  }  // namespace detail

  //! The diagram over P_n at x_1 ... x_n with one cell per crossing.
  [[nodiscard]] inline Diagram braid_to_diagram(BraidWord const&       b,
                                                PresentationPtr const& pn) {
    detail::require_pure(b);
    return detail::crossing_diagram(b, pn);
  }

  [[nodiscard]] inline Diagram braid_to_diagram(BraidWord const& b) {
    return braid_to_diagram(b, planar_presentation(b.strands()));
  }

  //! Replaces each cell by a crossing at slot offset + 1.
  [[nodiscard]] inline BraidWord diagram_to_braid(Diagram const& d) {
    std::size_t const n = d.presentation().alphabet_size();
    if (!(d.presentation() == *planar_presentation(n))) {
      throw PresentationMismatch("diagram is not over the planar presentation "
                                 "P_"
                                 + std::to_string(n));
    }
    Word const base = standard_word(n);
    if (d.top() != base || d.bottom() != base) {
      throw WrongBaseWord("expected top and bottom word " + to_string(base)
                          + ", found " + to_string(d.top()) + " and "
                          + to_string(d.bottom()));
    }
    std::vector<std::size_t> slots;
    slots.reserve(d.size());
    for (auto const& c : d.cells()) {
      slots.push_back(c.offset + 1);
    }
    return BraidWord(n, std::move(slots));
  }

  //! Equality of planar braids. Impure braids are compared through their
  //! (x_1 ... x_n, permuted word)-diagrams, so they must also induce the same
  //! permutation.
  [[nodiscard]] inline bool braid_equal(BraidWord const& b1,
                                        BraidWord const& b2) {
    detail::require_same_strands(b1, b2);
    auto const pn = planar_presentation(b1.strands());
    return equal(detail::crossing_diagram(b1, pn),
                 detail::crossing_diagram(b2, pn));
  }

  //! Stacks b1 on top of b2.
  [[nodiscard]] inline BraidWord braid_mul(BraidWord const& b1,
                                           BraidWord const& b2) {
    detail::require_same_strands(b1, b2);
    auto slots = b1.slots();
    slots.insert(slots.end(), b2.slots().begin(), b2.slots().end());
    return BraidWord(b1.strands(), std::move(slots));
  }

  //! Every crossing is an involution, so the inverse is the reversed word.
  [[nodiscard]] inline BraidWord braid_inv(BraidWord const& b) {
    return BraidWord(b.strands(),
                     std::vector<std::size_t>(b.slots().rbegin(),
                                              b.slots().rend()));
  }

  //! The braid read off the reduced diagram of b.
  [[nodiscard]] inline BraidWord braid_normal_form(BraidWord const& b) {
    auto const               d = reduce(
        detail::crossing_diagram(b, planar_presentation(b.strands())));
    std::vector<std::size_t> slots;
    slots.reserve(d.size());
    for (auto const& c : d.cells()) {
      slots.push_back(c.offset + 1);
    }
    return BraidWord(b.strands(), std::move(slots));
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_PPBRAID_HPP_

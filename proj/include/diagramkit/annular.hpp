// Annular planar pure braids.
//
// An element is a rotation count together with a sequence of cyclic
// crossing slots. Slot s (0-based) crosses the strands at cyclic positions
// s and s + 1 mod n; slot n - 1 crosses the basepoint ray. The element
// (r, c) stands for the crossings c followed by r rigid turns, where one turn
// moves every strand forward by one position. Passing a crossing through a
// turn shifts its slot by one:
//
//   turn * (slot s) = (slot s - 1) * turn
//
// so products are (r1, c1) * (r2, c2) = (r1 + r2, c1 ++ (c2 shifted by -r1)).

#ifndef DIAGRAMKIT_ANNULAR_HPP_
#define DIAGRAMKIT_ANNULAR_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace diagramkit {

  class AnnularElement {
   public:
    AnnularElement(std::size_t n, std::int64_t rotation,
                   std::vector<std::size_t> slots)
        : _n(n), _rotation(rotation), _slots(std::move(slots)) {
      if (n == 0) {
        throw SlotOutOfRange("an annular braid needs at least one strand");
      }
      for (std::size_t k = 0; k < _slots.size(); ++k) {
        // a single strand cannot cross itself
        if (_slots[k] >= n || n == 1) {
          throw SlotOutOfRange("cyclic slot " + std::to_string(_slots[k])
                               + " at position " + std::to_string(k)
                               + " is outside [0, " + std::to_string(n - 1)
                               + "]");
        }
      }
      std::vector<std::size_t> at(n);
      std::iota(at.begin(), at.end(), 0);
      for (auto s : _slots) {
        std::swap(at[s], at[(s + 1) % n]);
      }
      for (std::size_t p = 0; p < n; ++p) {
        if (at[p] != p) {
          throw NotPure("the crossings do not return every strand to its "
                        "starting position");
        }
      }
    }

    [[nodiscard]] std::size_t strands() const noexcept {
      return _n;
    }
    [[nodiscard]] std::int64_t rotation() const noexcept {
      return _rotation;
    }
    [[nodiscard]] std::vector<std::size_t> const& slots() const noexcept {
      return _slots;
    }

    friend bool operator==(AnnularElement const&,
                           AnnularElement const&) = default;

   private:
    std::size_t              _n;
    std::int64_t             _rotation;
    std::vector<std::size_t> _slots;
  };

  //! Reduced element: no cyclic dipole and slots in leftmost-first order.
  struct AnnularNormalForm {
    std::size_t              n = 0;
    std::int64_t             rotation = 0;
    std::vector<std::size_t> slots;

    friend bool operator==(AnnularNormalForm const&,
                           AnnularNormalForm const&) = default;
  };

  [[nodiscard]] inline AnnularElement a_make(std::size_t n, std::int64_t rotation,
                                             std::vector<std::size_t> slots) {
    return AnnularElement(n, rotation, std::move(slots));
  }

  [[nodiscard]] inline AnnularElement a_identity(std::size_t n) {
    return AnnularElement(n, 0, {});
  }

  namespace detail {

    // slot - k mod n
    inline std::size_t shift_slot(std::size_t s, std::int64_t k, std::size_t n) {
      auto const nn = static_cast<std::int64_t>(n);
      auto       r  = (static_cast<std::int64_t>(s) - k) % nn;
      return static_cast<std::size_t>(r < 0 ? r + nn : r);
    }

    inline std::vector<std::size_t> shift_slots(std::vector<std::size_t> v,
                                                std::int64_t k, std::size_t n) {
      for (auto& s : v) {
        s = shift_slot(s, k, n);
      }
      return v;
    }

    // Crossings at slots s and t share a strand position.
    inline bool slots_touch(std::size_t s, std::size_t t, std::size_t n) {
      std::size_t const d = s > t ? s - t : t - s;
      return d <= 1 || d == n - 1;
    }

    inline void require_same_strands(AnnularElement const& a,
                                     AnnularElement const& b) {
      if (a.strands() != b.strands()) {
        throw StrandCountMismatch(std::to_string(a.strands()) + " strands vs "
                                  + std::to_string(b.strands()));
      }
    }

    inline std::optional<std::size_t>
    cyclic_partner(std::vector<std::size_t> const& slots, std::size_t i,
                   std::size_t n) {
      for (std::size_t k = i + 1; k < slots.size(); ++k) {
        if (slots[k] == slots[i]) {
          return k;
        }
        if (slots_touch(slots[k], slots[i], n)) {
          return std::nullopt;
        }
      }
      return std::nullopt;
    }

  }  // namespace detail

  [[nodiscard]] inline AnnularElement a_compose(AnnularElement const& e1,
                                                AnnularElement const& e2) {
    detail::require_same_strands(e1, e2);
    auto slots = e1.slots();
    auto tail  = detail::shift_slots(e2.slots(), e1.rotation(), e1.strands());
    slots.insert(slots.end(), tail.begin(), tail.end());
    return AnnularElement(e1.strands(), e1.rotation() + e2.rotation(),
                          std::move(slots));
  }

  [[nodiscard]] inline AnnularElement a_invert(AnnularElement const& e) {
    std::vector<std::size_t> rev(e.slots().rbegin(), e.slots().rend());
    return AnnularElement(e.strands(), -e.rotation(),
                          detail::shift_slots(std::move(rev), -e.rotation(),
                                              e.strands()));
  }

  //! Cancels cyclic dipoles (leftmost first) and puts the remaining slots in
  //! the lexicographically least order reachable by commuting crossings that
  //! share no strand position. Works on any in-range crossing sequence, pure
  //! or not.
  [[nodiscard]] inline AnnularNormalForm
  a_reduce_slots(std::size_t n, std::int64_t rotation,
                 std::vector<std::size_t> slots) {
    if (n == 0) {
      throw SlotOutOfRange("an annular braid needs at least one strand");
    }
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (slots[k] >= n || n == 1) {
        throw SlotOutOfRange("cyclic slot " + std::to_string(slots[k])
                             + " at position " + std::to_string(k)
                             + " is outside [0, " + std::to_string(n - 1) + "]");
      }
    }
    bool found = true;
    while (found) {
      found = false;
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (auto j = detail::cyclic_partner(slots, i, n)) {
          slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(*j));
          slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(i));
          found = true;
          break;
        }
      }
    }
    std::vector<std::size_t> out;
    out.reserve(slots.size());
    while (!slots.empty()) {
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < slots.size(); ++j) {
        bool free = true;
        for (std::size_t k = 0; k < j && free; ++k) {
          free = !detail::slots_touch(slots[k], slots[j], n);
        }
        if (free && (!best || slots[j] < slots[*best])) {
          best = j;
        }
      }
      out.push_back(slots[*best]);
      slots.erase(slots.begin() + static_cast<std::ptrdiff_t>(*best));
    }
    return {n, rotation, std::move(out)};
  }

  [[nodiscard]] inline AnnularNormalForm a_reduce(AnnularElement const& e) {
    return a_reduce_slots(e.strands(), e.rotation(), e.slots());
  }

  [[nodiscard]] inline bool a_equal(AnnularElement const& e1,
                                    AnnularElement const& e2) {
    detail::require_same_strands(e1, e2);
    return a_reduce(e1) == a_reduce(e2);
  }

  //! End position of each strand after the crossings and turns.
  [[nodiscard]] inline std::vector<std::size_t>
  a_endpoints(AnnularElement const& e) {
    std::size_t const        n = e.strands();
    std::vector<std::size_t> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (auto s : e.slots()) {
      std::swap(at[s], at[(s + 1) % n]);
    }
    std::vector<std::size_t> end(n);
    for (std::size_t p = 0; p < n; ++p) {
      end[at[p]] = detail::shift_slot(p, -e.rotation(), n);
    }
    return end;
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_ANNULAR_HPP_

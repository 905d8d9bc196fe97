// The Squier cube complex of a presentation at a base word, and a
// presentation of its fundamental group (the diagram group).
//
// Vertices are the words reachable from the base word by single relation
// applications. A k-cube is a vertex together with k pairwise disjoint cells
// that are Forward-applicable there; that vertex is the cube's canonical
// corner. Edges are the 1-cubes.

#ifndef DIAGRAMKIT_SQUIER_HPP_
#define DIAGRAMKIT_SQUIER_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "presentation.hpp"

namespace diagramkit {

  inline constexpr std::size_t default_max_vertices = 1'000'000;

  //! A Forward-applicable cell of a cube, identified by its offset at the
  //! cube's canonical corner.
  struct CubeCell {
    std::size_t offset         = 0;
    std::size_t relation_index = 0;

    friend auto operator<=>(CubeCell const&, CubeCell const&) = default;
  };

  struct SquierCube {
    std::size_t           base = 0;  // vertex id of the canonical corner
    std::vector<CubeCell> cells;     // sorted by offset, pairwise disjoint

    [[nodiscard]] std::size_t dimension() const noexcept {
      return cells.size();
    }

    friend bool operator==(SquierCube const&, SquierCube const&) = default;
  };

  class SquierComplex {
   public:
    [[nodiscard]] Presentation const& presentation() const noexcept {
      return *_presentation;
    }
    [[nodiscard]] PresentationPtr const& presentation_ptr() const noexcept {
      return _presentation;
    }
    [[nodiscard]] Word const& base_word() const noexcept {
      return _vertices.front();
    }
    [[nodiscard]] std::vector<Word> const& vertices() const noexcept {
      return _vertices;
    }
    [[nodiscard]] Word const& vertex(std::size_t v) const {
      return _vertices.at(v);
    }
    [[nodiscard]] std::optional<std::size_t>
    vertex_id(Word const& w) const {
      auto it = _vertex_index.find(w);
      if (it == _vertex_index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    //! Highest dimension in which a cube exists.
    [[nodiscard]] std::size_t dimension() const noexcept {
      return _cubes.size() - 1;
    }
    //! Cubes of dimension k, in canonical order. cubes(0) are the vertices
    //! as 0-cubes.
    [[nodiscard]] std::vector<SquierCube> const& cubes(std::size_t k) const {
      static std::vector<SquierCube> const none;
      return k < _cubes.size() ? _cubes[k] : none;
    }
    [[nodiscard]] std::vector<SquierCube> const& edges() const {
      return cubes(1);
    }

    [[nodiscard]] std::optional<std::size_t>
    cube_id(std::size_t base, std::vector<CubeCell> const& cells) const {
      std::size_t const k = cells.size();
      if (k >= _index.size()) {
        return std::nullopt;
      }
      auto it = _index[k].find({base, cells});
      if (it == _index[k].end()) {
        return std::nullopt;
      }
      return it->second;
    }

    [[nodiscard]] std::optional<std::size_t>
    edge_id(std::size_t base, std::size_t offset, std::size_t relation) const {
      return cube_id(base, {CubeCell{offset, relation}});
    }

    //! Word at the corner reached from `base` by applying every cell of
    //! `cells` whose bit is set in `mask`.
    [[nodiscard]] Word corner(SquierCube const& cube, std::uint64_t mask) const;

    friend bool operator==(SquierComplex const& a, SquierComplex const& b) {
      return same_presentation(a._presentation, b._presentation)
             && a._vertices == b._vertices && a._cubes == b._cubes;
    }

    friend SquierComplex build_squier(PresentationPtr, Word, std::size_t);

   private:
    using Key = std::pair<std::size_t, std::vector<CubeCell>>;

    PresentationPtr                         _presentation;
    std::vector<Word>                       _vertices;
    std::map<Word, std::size_t>             _vertex_index;
    std::vector<std::vector<SquierCube>>    _cubes;
    std::vector<std::map<Key, std::size_t>> _index;
  };

  namespace detail {
    // Applies the Forward cells of a cube corner in increasing offset order,
    // tracking the length change of earlier cells.
    inline Word apply_cube_cells(Presentation const&          p,
                                 Word                         w,
                                 std::vector<CubeCell> const& cells,
                                 std::uint64_t                mask) {
      std::ptrdiff_t shift = 0;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if ((mask >> i) & 1U) {
          auto const& r = p.relation(cells[i].relation_index);
          auto const  o = static_cast<std::size_t>(
              static_cast<std::ptrdiff_t>(cells[i].offset) + shift);
          w = apply_relation(w, r, Direction::Forward, o);
          shift += static_cast<std::ptrdiff_t>(r.rhs.size())
                   - static_cast<std::ptrdiff_t>(r.lhs.size());
        }
      }
      return w;
    }
  }  // namespace detail

  inline Word SquierComplex::corner(SquierCube const& cube,
                                    std::uint64_t     mask) const {
    return detail::apply_cube_cells(*_presentation, _vertices.at(cube.base),
                                    cube.cells, mask);
  }

  //! Breadth-first construction from w. Neighbours are expanded in
  //! applicable_cells() order. Throws VertexBudgetExceeded if more than
  //! max_vertices words are reachable.
  [[nodiscard]] inline SquierComplex
  build_squier(PresentationPtr p,
               Word            w,
               std::size_t     max_vertices = default_max_vertices) {
    p->validate_word(w);
    if (max_vertices == 0) {
      throw VertexBudgetExceeded("the vertex budget must be at least 1");
    }
    SquierComplex K;
    K._presentation = std::move(p);
    auto const& pres = *K._presentation;

    K._vertices.push_back(w);
    K._vertex_index.emplace(std::move(w), 0);
    for (std::size_t head = 0; head < K._vertices.size(); ++head) {
      Word const current = K._vertices[head];
      for (auto const& c : applicable_cells(current, pres)) {
        Word next = apply_relation(current, pres.relation(c.relation_index),
                                   c.direction, c.offset);
        if (K._vertex_index.contains(next)) {
          continue;
        }
        if (K._vertices.size() == max_vertices) {
          throw VertexBudgetExceeded(
              "more than " + std::to_string(max_vertices)
              + " vertices are reachable from " + to_string(K._vertices[0]));
        }
        K._vertex_index.emplace(next, K._vertices.size());
        K._vertices.push_back(std::move(next));
      }
    }

    K._cubes.emplace_back();
    K._index.emplace_back();
    for (std::size_t v = 0; v < K._vertices.size(); ++v) {
      K._cubes[0].push_back({v, {}});
      K._index[0].emplace(SquierComplex::Key{v, {}}, v);
    }

    for (std::size_t v = 0; v < K._vertices.size(); ++v) {
      Word const&           word = K._vertices[v];
      std::vector<CubeCell> forward;
      for (auto const& c : applicable_cells(word, pres)) {
        if (c.direction == Direction::Forward) {
          forward.push_back({c.offset, c.relation_index});
        }
      }
      // forward is sorted by (offset, relation); enumerate every set of
      // pairwise disjoint cells in lexicographic order
      std::vector<CubeCell> chosen;
      auto recurse = [&](auto&& self, std::size_t from, std::size_t min_offset)
          -> void {
        for (std::size_t i = from; i < forward.size(); ++i) {
          if (forward[i].offset < min_offset) {
            continue;
          }
          chosen.push_back(forward[i]);
          std::size_t const k = chosen.size();
          if (K._cubes.size() <= k) {
            K._cubes.resize(k + 1);
            K._index.resize(k + 1);
          }
          K._index[k].emplace(SquierComplex::Key{v, chosen},
                              K._cubes[k].size());
          K._cubes[k].push_back({v, chosen});
          auto const& r = pres.relation(forward[i].relation_index);
          self(self, i + 1, forward[i].offset + r.lhs.size());
          chosen.pop_back();
        }
      };
      recurse(recurse, 0, 0);
    }
    return K;
  }

  [[nodiscard]] inline std::vector<std::size_t>
  cube_counts(SquierComplex const& K) {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= K.dimension(); ++k) {
      out.push_back(K.cubes(k).size());
    }
    return out;
  }

  [[nodiscard]] inline std::int64_t euler_characteristic(SquierComplex const& K) {
    std::int64_t chi = 0;
    for (std::size_t k = 0; k <= K.dimension(); ++k) {
      auto const c = static_cast<std::int64_t>(K.cubes(k).size());
      chi += (k % 2 == 0) ? c : -c;
    }
    return chi;
  }

  //! Tree edges of a breadth-first spanning tree rooted at the base word,
  //! in discovery order. Neighbours are visited in applicable_cells() order.
  [[nodiscard]] inline std::vector<std::size_t>
  spanning_tree(SquierComplex const& K) {
    auto const&              pres = K.presentation();
    std::vector<bool>        seen(K.vertices().size(), false);
    std::vector<std::size_t> tree;
    std::deque<std::size_t>  queue{0};
    seen[0] = true;
    while (!queue.empty()) {
      std::size_t const v = queue.front();
      queue.pop_front();
      Word const& word = K.vertex(v);
      for (auto const& c : applicable_cells(word, pres)) {
        Word next = apply_relation(word, pres.relation(c.relation_index),
                                   c.direction, c.offset);
        std::size_t const u = *K.vertex_id(next);
        if (seen[u]) {
          continue;
        }
        seen[u]              = true;
        std::size_t const lo = c.direction == Direction::Forward ? v : u;
        tree.push_back(*K.edge_id(lo, c.offset, c.relation_index));
        queue.push_back(u);
      }
    }
    return tree;
  }

  ////////////////////////////////////////////////////////////////////////
  // Group presentations
  ////////////////////////////////////////////////////////////////////////

  struct GroupLetter {
    std::size_t generator = 0;
    bool        inverse   = false;

    friend auto operator<=>(GroupLetter const&, GroupLetter const&) = default;
  };

  using GroupWord = std::vector<GroupLetter>;

  struct GroupPresentation {
    std::size_t            generator_count = 0;
    std::vector<GroupWord> relators;

    friend bool operator==(GroupPresentation const&,
                           GroupPresentation const&) = default;
  };

  [[nodiscard]] inline GroupWord free_reduce(GroupWord const& w) {
    GroupWord out;
    for (auto x : w) {
      if (!out.empty() && out.back().generator == x.generator
          && out.back().inverse != x.inverse) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  [[nodiscard]] inline GroupWord cyclic_reduce(GroupWord const& w) {
    GroupWord   out = free_reduce(w);
    std::size_t i = 0, j = out.size();
    while (j - i >= 2 && out[i].generator == out[j - 1].generator
           && out[i].inverse != out[j - 1].inverse) {
      ++i;
      --j;
    }
    return GroupWord(out.begin() + static_cast<std::ptrdiff_t>(i),
                     out.begin() + static_cast<std::ptrdiff_t>(j));
  }

  //! One generator per non-tree edge (in edge order), one relator per square
  //! read around its boundary from the canonical corner.
  [[nodiscard]] inline GroupPresentation
  fundamental_presentation(SquierComplex const&            K,
                           std::vector<std::size_t> const& tree) {
    constexpr auto             none = static_cast<std::size_t>(-1);
    std::vector<std::size_t>   generator(K.edges().size(), 0);
    for (auto e : tree) {
      generator[e] = none;
    }
    GroupPresentation gp;
    for (auto& g : generator) {
      if (g != none) {
        g = gp.generator_count++;
      }
    }

    auto const& pres = K.presentation();
    for (auto const& sq : K.cubes(2)) {
      auto const& c1 = sq.cells[0];
      auto const& c2 = sq.cells[1];
      auto const& r1 = pres.relation(c1.relation_index);
      std::size_t const b1 = *K.vertex_id(K.corner(sq, 0b01));
      std::size_t const b2 = *K.vertex_id(K.corner(sq, 0b10));
      std::size_t const c2_after
          = c2.offset + r1.rhs.size() - r1.lhs.size();
      std::size_t const loop[4] = {
          *K.edge_id(sq.base, c1.offset, c1.relation_index),
          *K.edge_id(b1, c2_after, c2.relation_index),
          *K.edge_id(b2, c1.offset, c1.relation_index),
          *K.edge_id(sq.base, c2.offset, c2.relation_index)};
      bool const inverted[4] = {false, false, true, true};
      GroupWord  relator;
      for (int i = 0; i < 4; ++i) {
        if (generator[loop[i]] != none) {
          relator.push_back({generator[loop[i]], inverted[i]});
        }
      }
      gp.relators.push_back(free_reduce(relator));
    }
    return gp;
  }

  [[nodiscard]] inline GroupPresentation
  fundamental_presentation(SquierComplex const& K) {
    return fundamental_presentation(K, spanning_tree(K));
  }

  //! Tietze-style cleanup: cyclically reduce relators, drop empty ones, and
  //! eliminate any generator that occurs exactly once overall together with
  //! the relator containing it. Repeats until nothing changes.
  [[nodiscard]] inline GroupPresentation
  simplify_presentation(GroupPresentation gp) {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<GroupWord> kept;
      for (auto const& r : gp.relators) {
        auto reduced = cyclic_reduce(r);
        if (!reduced.empty()) {
          kept.push_back(std::move(reduced));
        }
      }
      changed = kept.size() != gp.relators.size();
      gp.relators = std::move(kept);

      std::vector<std::size_t> occurrences(gp.generator_count, 0);
      std::vector<std::size_t> where(gp.generator_count, 0);
      for (std::size_t i = 0; i < gp.relators.size(); ++i) {
        for (auto x : gp.relators[i]) {
          ++occurrences[x.generator];
          where[x.generator] = i;
        }
      }
      for (std::size_t g = 0; g < gp.generator_count; ++g) {
        if (occurrences[g] != 1) {
          continue;
        }
        gp.relators.erase(gp.relators.begin()
                          + static_cast<std::ptrdiff_t>(where[g]));
        for (auto& r : gp.relators) {
          for (auto& x : r) {
            if (x.generator > g) {
              --x.generator;
            }
          }
        }
        --gp.generator_count;
        changed = true;
        break;
      }
    }
    return gp;
  }

  //! <g1,g2 | g1G2, ...>; G<i> is the inverse of g<i>, 1 the empty relator.
  [[nodiscard]] inline std::string to_string(GroupPresentation const& gp) {
    std::string out = "<";
    for (std::size_t g = 0; g < gp.generator_count; ++g) {
      out += (g == 0 ? "g" : ",g") + std::to_string(g + 1);
    }
    out += " | ";
    for (std::size_t i = 0; i < gp.relators.size(); ++i) {
      if (i != 0) {
        out += ", ";
      }
      if (gp.relators[i].empty()) {
        out += "1";
      }
      for (auto x : gp.relators[i]) {
        out += (x.inverse ? "G" : "g") + std::to_string(x.generator + 1);
      }
    }
    out += ">";
    return out;
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_SQUIER_HPP_

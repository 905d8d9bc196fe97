#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "catch_amalgamated.hpp"

#include "support.hpp"

namespace diagramkit {

  namespace {
    Word w(char const* text) {
      return parse_word(text);
    }

    std::vector<std::size_t> to_sizes(std::vector<std::uint64_t> const& v) {
      return {v.begin(), v.end()};
    }

    // Faces of a cube recomputed from scratch: the back face drops cell i,
    // the front face applies it first and shifts every later offset.
    std::pair<SquierCube, SquierCube> faces(SquierComplex const& K,
                                            SquierCube const&    c,
                                            std::size_t          i) {
      auto const& pres = K.presentation();
      SquierCube  back{c.base, {}};
      SquierCube  front{0, {}};
      auto const& ci = c.cells[i];
      auto const& r  = pres.relation(ci.relation_index);
      Word        after
          = apply_relation(K.vertex(c.base), r, Direction::Forward, ci.offset);
      front.base = *K.vertex_id(after);
      auto const delta = static_cast<std::ptrdiff_t>(r.rhs.size())
                         - static_cast<std::ptrdiff_t>(r.lhs.size());
      for (std::size_t j = 0; j < c.cells.size(); ++j) {
        if (j == i) {
          continue;
        }
        back.cells.push_back(c.cells[j]);
        auto moved = c.cells[j];
        if (j > i) {
          moved.offset = static_cast<std::size_t>(
              static_cast<std::ptrdiff_t>(moved.offset) + delta);
        }
        front.cells.push_back(moved);
      }
      return {back, front};
    }

    void check_closed(SquierComplex const& K) {
      for (std::size_t k = 1; k <= K.dimension(); ++k) {
        for (auto const& c : K.cubes(k)) {
          REQUIRE(c.dimension() == k);
          for (std::size_t i = 0; i < k; ++i) {
            auto [back, front] = faces(K, c, i);
            REQUIRE(K.cube_id(back.base, back.cells).has_value());
            REQUIRE(K.cube_id(front.base, front.cells).has_value());
          }
          std::set<Word> corners;
          for (std::uint64_t m = 0; m < (std::uint64_t{1} << k); ++m) {
            auto word = K.corner(c, m);
            REQUIRE(K.vertex_id(word).has_value());
            corners.insert(word);
          }
          REQUIRE(corners.size() == (std::size_t{1} << k));
        }
      }
    }
  }  // namespace

  TEST_CASE("cube counts of K(P_n)", "[squier]") {
    REQUIRE(cube_counts(build_squier(planar_presentation(1), w("x1")))
            == std::vector<std::size_t>{1});
    REQUIRE(cube_counts(build_squier(planar_presentation(2), w("x1x2")))
            == std::vector<std::size_t>{2, 1});
    REQUIRE(cube_counts(build_squier(planar_presentation(3), standard_word(3)))
            == std::vector<std::size_t>{6, 6});
    REQUIRE(cube_counts(build_squier(planar_presentation(4), standard_word(4)))
            == std::vector<std::size_t>{24, 36, 6});
    REQUIRE(cube_counts(build_squier(planar_presentation(5), standard_word(5)))
            == std::vector<std::size_t>{120, 240, 90});
    REQUIRE(cube_counts(build_squier(planar_presentation(6), standard_word(6)))
            == std::vector<std::size_t>{720, 1800, 1080, 90});

    for (std::size_t n = 1; n <= 7; ++n) {
      auto K        = build_squier(planar_presentation(n), standard_word(n));
      auto counts   = cube_counts(K);
      auto expected = to_sizes(test::enumerate_cube_counts(n));
      REQUIRE(counts == expected);
      for (std::size_t k = 0; k < counts.size(); ++k) {
        REQUIRE(counts[k] == test::cube_count_formula(n, k));
      }
    }
  }

  TEST_CASE("vertices of K(P_n) are the permutations", "[squier]") {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto K    = build_squier(planar_presentation(n), standard_word(n));
      Word word = standard_word(n);
      std::size_t seen = 0;
      do {
        REQUIRE(K.vertex_id(word).has_value());
        ++seen;
      } while (std::next_permutation(word.begin(), word.end()));
      REQUIRE(seen == K.vertices().size());
      REQUIRE(K.base_word() == standard_word(n));
      REQUIRE(*K.vertex_id(standard_word(n)) == 0);
    }
  }

  TEST_CASE("faces of every cube are cubes", "[squier]") {
    for (std::size_t n = 1; n <= 6; ++n) {
      check_closed(build_squier(planar_presentation(n), standard_word(n)));
    }
    check_closed(build_squier(
        make_presentation(3, {{w("x1x2"), w("x3")}}), w("x1x2x1x2")));
  }

  TEST_CASE("a length-changing presentation", "[squier]") {
    auto K = build_squier(make_presentation(3, {{w("x1x2"), w("x3")}}),
                          w("x1x2x1x2"));
    REQUIRE(cube_counts(K) == std::vector<std::size_t>{4, 4, 1});
    REQUIRE(euler_characteristic(K) == 1);
    auto const& sq = K.cubes(2).front();
    REQUIRE(sq.cells == std::vector<CubeCell>{{0, 0}, {2, 0}});
    REQUIRE(K.corner(sq, 0b11) == w("x3x3"));
    REQUIRE(K.corner(sq, 0b10) == w("x1x2x3"));
    auto gp = fundamental_presentation(K);
    REQUIRE(gp.generator_count == 1);
    REQUIRE(gp.relators.size() == 1);
    REQUIRE(simplify_presentation(gp) == GroupPresentation{0, {}});
  }

  TEST_CASE("construction is deterministic", "[squier]") {
    for (std::size_t n = 2; n <= 5; ++n) {
      auto a = build_squier(planar_presentation(n), standard_word(n));
      auto b = build_squier(planar_presentation(n), standard_word(n));
      REQUIRE(a == b);
      REQUIRE(spanning_tree(a) == spanning_tree(b));
    }
    // same component from another start gives the same cube count
    auto a = build_squier(planar_presentation(4), standard_word(4));
    auto b = build_squier(planar_presentation(4), w("x4x2x3x1"));
    REQUIRE(cube_counts(a) == cube_counts(b));
  }

  TEST_CASE("vertex budget", "[squier]") {
    REQUIRE_THROWS_AS(
        build_squier(planar_presentation(7), standard_word(7), 100),
        VertexBudgetExceeded);
    REQUIRE_NOTHROW(build_squier(planar_presentation(4), standard_word(4), 24));
    REQUIRE_THROWS_AS(
        build_squier(planar_presentation(4), standard_word(4), 23),
        VertexBudgetExceeded);
    // unbounded component
    REQUIRE_THROWS_AS(build_squier(test::mixed_presentation(), w("x3"), 500),
                      VertexBudgetExceeded);
  }

  TEST_CASE("Euler characteristic", "[squier]") {
    std::int64_t const expected[] = {1, 1, 0, -6, -30, -90};
    for (std::size_t n = 1; n <= 6; ++n) {
      auto K = build_squier(planar_presentation(n), standard_word(n));
      REQUIRE(euler_characteristic(K) == expected[n - 1]);
    }
  }

  TEST_CASE("spanning tree", "[squier]") {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto K    = build_squier(planar_presentation(n), standard_word(n));
      auto tree = spanning_tree(K);
      REQUIRE(tree.size() == K.vertices().size() - 1);
      // union-find: the tree edges are acyclic and reach every vertex
      std::vector<std::size_t> parent(K.vertices().size());
      for (std::size_t v = 0; v < parent.size(); ++v) {
        parent[v] = v;
      }
      auto find = [&](std::size_t v) {
        while (parent[v] != v) {
          v = parent[v] = parent[parent[v]];
        }
        return v;
      };
      for (auto e : tree) {
        auto const& edge = K.edges()[e];
        auto        to   = *K.vertex_id(K.corner(edge, 1));
        auto        a = find(edge.base), b = find(to);
        REQUIRE(a != b);
        parent[a] = b;
      }
    }
    REQUIRE(spanning_tree(build_squier(planar_presentation(3), standard_word(3))).size()
            == 5);
    REQUIRE(spanning_tree(build_squier(planar_presentation(4), standard_word(4))).size()
            == 23);
    REQUIRE(spanning_tree(build_squier(planar_presentation(1), w("x1"))).empty());
  }

  TEST_CASE("fundamental presentation", "[squier]") {
    auto g1 = fundamental_presentation(build_squier(planar_presentation(1), w("x1")));
    REQUIRE(g1 == GroupPresentation{0, {}});
    REQUIRE(to_string(g1) == "< | >");

    auto g3 = fundamental_presentation(
        build_squier(planar_presentation(3), standard_word(3)));
    REQUIRE(g3.generator_count == 1);
    REQUIRE(g3.relators.empty());
    REQUIRE(to_string(g3) == "<g1 | >");

    auto K4 = build_squier(planar_presentation(4), standard_word(4));
    auto g4 = fundamental_presentation(K4);
    REQUIRE(g4.generator_count == 13);
    REQUIRE(g4.relators.size() == 6);
    for (auto const& r : g4.relators) {
      REQUIRE(r.size() <= 4);
      REQUIRE(r == free_reduce(r));
    }
    auto s4 = simplify_presentation(g4);
    REQUIRE(s4.generator_count == 7);
    REQUIRE(s4.relators.empty());

    for (std::size_t n = 2; n <= 6; ++n) {
      auto K  = build_squier(planar_presentation(n), standard_word(n));
      auto gp = fundamental_presentation(K);
      REQUIRE(gp.generator_count == K.edges().size() - K.vertices().size() + 1);
      REQUIRE(gp.relators.size() == K.cubes(2).size());
    }
  }

  TEST_CASE("free and cyclic reduction", "[squier]") {
    using G = GroupLetter;
    GroupWord const x{{0, false}, {1, false}, {1, true}, {2, false}};
    REQUIRE(free_reduce(x) == GroupWord{{0, false}, {2, false}});
    GroupWord const y{{0, true}, {1, false}, {0, false}};
    REQUIRE(free_reduce(y) == y);
    REQUIRE(cyclic_reduce(y) == GroupWord{{1, false}});
    REQUIRE(cyclic_reduce(GroupWord{G{0, false}, G{0, true}}).empty());
  }

  TEST_CASE("simplify_presentation", "[squier]") {
    using G = GroupLetter;
    // <g1,g2,g3 | g1 g2 G1, g3 G3, > -> <g1 | > after dropping g2
    GroupPresentation gp{3,
                         {{G{0, false}, G{1, false}, G{0, true}},
                          {G{2, false}, G{2, true}},
                          {}}};
    auto s = simplify_presentation(gp);
    REQUIRE(s == GroupPresentation{2, {}});
    REQUIRE(to_string(s) == "<g1,g2 | >");

    // a commutator survives
    GroupPresentation c{2, {{G{0, false}, G{1, false}, G{0, true}, G{1, true}}}};
    REQUIRE(simplify_presentation(c) == c);
    REQUIRE(to_string(c) == "<g1,g2 | g1g2G1G2>");
  }

}  // namespace diagramkit

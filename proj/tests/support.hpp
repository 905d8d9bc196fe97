// Random generators and brute-force oracles shared by the test suites.
// Nothing here calls the reduction or normal-form code it is used to check.

#ifndef DIAGRAMKIT_TESTS_SUPPORT_HPP_
#define DIAGRAMKIT_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "diagramkit/diagramkit.hpp"

namespace diagramkit::test {

  using Rng = std::mt19937_64;

  inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
  }

  // Slots (1-based) of a bubble sort returning the strands of `slots` home.
  inline std::vector<std::size_t> sorting_tail(std::size_t                     n,
                                               std::vector<std::size_t> const& slots) {
    std::vector<std::size_t> at(n);
    std::iota(at.begin(), at.end(), 0);
    for (auto s : slots) {
      std::swap(at[s - 1], at[s]);
    }
    std::vector<std::size_t> tail;
    for (std::size_t pass = 0; pass < n; ++pass) {
      for (std::size_t p = 0; p + 1 < n; ++p) {
        if (at[p] > at[p + 1]) {
          std::swap(at[p], at[p + 1]);
          tail.push_back(p + 1);
        }
      }
    }
    return tail;
  }

  inline std::vector<std::size_t> random_slots(Rng& rng, std::size_t n,
                                               std::size_t len) {
    std::vector<std::size_t> w(len);
    for (auto& s : w) {
      s = uniform(rng, 1, n - 1);
    }
    return w;
  }

  //! A random pure braid on n >= 2 strands, drawn from a mixture of: a word
  //! followed by its reverse, a word followed by a sorting tail, and
  //! rejection sampling of uniform words.
  inline BraidWord random_pure_braid(Rng& rng, std::size_t n,
                                     std::size_t max_len = 12) {
    if (n < 2) {
      return BraidWord(n, {});
    }
    switch (uniform(rng, 0, 3)) {
      case 0: {
        auto w = random_slots(rng, n, uniform(rng, 0, max_len / 2));
        w.insert(w.end(), w.rbegin(), w.rend());
        // the reversed copy forces purity; shuffle in a second piece so the
        // element is not always trivial
        auto v    = random_slots(rng, n, uniform(rng, 0, max_len / 2));
        auto tail = sorting_tail(n, v);
        w.insert(w.end(), v.begin(), v.end());
        w.insert(w.end(), tail.begin(), tail.end());
        return BraidWord(n, std::move(w));
      }
      case 1: {
        for (int attempt = 0; attempt < 2000; ++attempt) {
          auto w = random_slots(rng, n, 2 * uniform(rng, 0, max_len / 2));
          BraidWord b(n, w);
          if (is_pure(b)) {
            return b;
          }
        }
        [[fallthrough]];
      }
      default: {
        auto w    = random_slots(rng, n, uniform(rng, 0, max_len));
        auto tail = sorting_tail(n, w);
        w.insert(w.end(), tail.begin(), tail.end());
        return BraidWord(n, std::move(w));
      }
    }
  }

  //! Random walk of up to `steps` cells from `top`, never letting the running
  //! word exceed max_word letters.
  inline Diagram random_diagram(Rng& rng, PresentationPtr const& p, Word top,
                                std::size_t steps,
                                std::size_t max_word = 10) {
    std::vector<Cell> cells;
    Word              w = top;
    for (std::size_t k = 0; k < steps; ++k) {
      auto options = applicable_cells(w, *p);
      std::erase_if(options, [&](Cell const& c) {
        auto const& r = p->relation(c.relation_index);
        return w.size() + r.target(c.direction).size()
                   - r.source(c.direction).size()
               > max_word;
      });
      if (options.empty()) {
        break;
      }
      auto const c = options[uniform(rng, 0, options.size() - 1)];
      w = apply_relation(w, p->relation(c.relation_index), c.direction,
                         c.offset);
      cells.push_back(c);
    }
    return Diagram(p, std::move(top), std::move(cells));
  }

  inline Word random_word(Rng& rng, std::size_t alphabet, std::size_t len) {
    Word w(len);
    for (auto& x : w) {
      x = Letter{static_cast<std::uint32_t>(uniform(rng, 0, alphabet - 1))};
    }
    return w;
  }

  //! A presentation with length-changing relations, for exercising the
  //! offset bookkeeping.
  inline PresentationPtr mixed_presentation() {
    return make_presentation(3, {{parse_word("x1x2"), parse_word("x2x1")},
                                 {parse_word("x1x1"), parse_word("x1")},
                                 {parse_word("x2x3"), parse_word("x3")},
                                 {parse_word("x3"), parse_word("x2x2")}});
  }

  //! Inserts up to `count` random dipoles at random valid places.
  inline Diagram insert_random_dipoles(Rng& rng, Diagram d, std::size_t count) {
    auto const& p = d.presentation_ptr();
    for (std::size_t k = 0; k < count; ++k) {
      std::size_t const pos = uniform(rng, 0, d.size());
      Word              w   = d.top();
      for (std::size_t i = 0; i < pos; ++i) {
        auto const& c = d.cells()[i];
        w = apply_relation(w, p->relation(c.relation_index), c.direction,
                           c.offset);
      }
      auto options = applicable_cells(w, *p);
      if (options.empty()) {
        continue;
      }
      auto const c = options[uniform(rng, 0, options.size() - 1)];
      d = insert_dipole(d, pos, c.relation_index, c.direction, c.offset);
    }
    return d;
  }

  // Independent commutation test used by the oracles below: two adjacent
  // cells commute iff applying them in either order (with the shifted
  // offsets) yields the same word and neither reads what the other wrote.
  inline std::optional<std::pair<Cell, Cell>>
  oracle_swap(Presentation const& p, Word const& before, Cell a, Cell b) {
    auto const& ra = p.relation(a.relation_index);
    auto const& rb = p.relation(b.relation_index);
    auto const  ta = ra.target(a.direction).size();
    auto const  sa = ra.source(a.direction).size();
    auto const  sb = rb.source(b.direction).size();
    auto const  tb = rb.target(b.direction).size();
    Cell        b2 = b, a2 = a;
    if (b.offset + sb <= a.offset) {
      a2.offset = a.offset + tb - sb;
    } else if (b.offset >= a.offset + ta) {
      b2.offset = b.offset + sa - ta;
    } else {
      return std::nullopt;
    }
    Word w1 = apply_relation(apply_relation(before, ra, a.direction, a.offset),
                             rb, b.direction, b.offset);
    Word w2 = apply_relation(
        apply_relation(before, rb, b2.direction, b2.offset), ra, a2.direction,
        a2.offset);
    if (w1 != w2) {
      return std::nullopt;
    }
    return std::pair{b2, a2};
  }

  //! Every cell sequence reachable by adjacent commutations (small inputs).
  inline std::set<std::vector<Cell>> commutation_class(Diagram const& d) {
    auto const&                  p = d.presentation();
    std::set<std::vector<Cell>>  seen{d.cells()};
    std::vector<std::vector<Cell>> stack{d.cells()};
    while (!stack.empty()) {
      auto cells = stack.back();
      stack.pop_back();
      Word w = d.top();
      for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
        if (auto s = oracle_swap(p, w, cells[i], cells[i + 1])) {
          auto next     = cells;
          next[i]       = s->first;
          next[i + 1]   = s->second;
          if (seen.insert(next).second) {
            stack.push_back(std::move(next));
          }
        }
        w = apply_relation(w, p.relation(cells[i].relation_index),
                           cells[i].direction, cells[i].offset);
      }
    }
    return seen;
  }

  //! A random sequence of adjacent commutations applied to d's cells.
  inline Diagram random_shuffle(Rng& rng, Diagram const& d, std::size_t moves) {
    auto const& p     = d.presentation();
    auto        cells = d.cells();
    if (cells.size() < 2) {
      return d;
    }
    for (std::size_t m = 0; m < moves; ++m) {
      std::size_t const i = uniform(rng, 0, cells.size() - 2);
      Word              w = d.top();
      for (std::size_t k = 0; k < i; ++k) {
        w = apply_relation(w, p.relation(cells[k].relation_index),
                           cells[k].direction, cells[k].offset);
      }
      if (auto s = oracle_swap(p, w, cells[i], cells[i + 1])) {
        cells[i]     = s->first;
        cells[i + 1] = s->second;
      }
    }
    return Diagram(d.presentation_ptr(), d.top(), std::move(cells));
  }

  // Random pure element: random cyclic crossings, then crossings that
  // bubble every strand home without using the wrap slot.
  inline AnnularElement random_annular(Rng& rng, std::size_t n) {
    std::vector<std::size_t> slots;
    std::size_t              len = uniform(rng, 0, 8);
    for (std::size_t k = 0; k < len; ++k) {
      slots.push_back(uniform(rng, 0, n - 1));
    }
    std::vector<std::size_t> at(n);  // at[position] = strand
    std::iota(at.begin(), at.end(), 0);
    for (auto s : slots) {
      std::swap(at[s], at[(s + 1) % n]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j + 1 < n - i; ++j) {
        if (at[j] > at[j + 1]) {
          std::swap(at[j], at[j + 1]);
          slots.push_back(j);
        }
      }
    }
    auto const r = static_cast<std::int64_t>(uniform(rng, 0, 6)) - 3;
    return a_make(n, r, slots);
  }

  //! The annular element with the same crossings and no rotation.
  inline AnnularElement from_braid(BraidWord const& b) {
    std::vector<std::size_t> slots;
    for (auto s : b.slots()) {
      slots.push_back(s - 1);
    }
    return a_make(b.strands(), 0, slots);
  }

  // An equal braid: insert crossing pairs and swap far-apart neighbours.
  inline BraidWord disguise(Rng& rng, BraidWord const& b) {
    auto w = b.slots();
    for (std::size_t k = uniform(rng, 0, 3); k > 0; --k) {
      auto const pos = static_cast<std::ptrdiff_t>(uniform(rng, 0, w.size()));
      auto const s   = uniform(rng, 1, b.strands() - 1);
      w.insert(w.begin() + pos, {s, s});
    }
    for (std::size_t k = 0; k < 2 * w.size(); ++k) {
      std::size_t const i = uniform(rng, 0, w.size() - 1);
      if (i + 1 < w.size() && (w[i] > w[i + 1] + 1 || w[i + 1] > w[i] + 1)) {
        std::swap(w[i], w[i + 1]);
      }
    }
    return BraidWord(b.strands(), w);
  }

  inline std::uint64_t factorial(std::uint64_t n) {
    return n <= 1 ? 1 : n * factorial(n - 1);
  }

  inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) {
      return 0;
    }
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  //! n! * C(n - k, k) / 2^k
  inline std::uint64_t cube_count_formula(std::uint64_t n, std::uint64_t k) {
    if (2 * k > n) {
      return 0;
    }
    return factorial(n) * binomial(n - k, k) >> k;
  }

  //! Cube counts of the Squier complex of (P_n, x_1...x_n) by direct
  //! enumeration: over all permutations, count sets of k disjoint adjacent
  //! positions each holding an ascending pair.
  inline std::vector<std::uint64_t> enumerate_cube_counts(std::size_t n) {
    std::vector<std::uint64_t> counts(n / 2 + 1, 0);
    std::vector<std::size_t>   perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::size_t const positions = n - 1;
    do {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positions);
           ++mask) {
        if (mask & (mask >> 1)) {
          continue;  // overlapping pairs
        }
        bool ok = true;
        for (std::size_t i = 0; i < positions && ok; ++i) {
          if ((mask >> i) & 1U) {
            ok = perm[i] < perm[i + 1];
          }
        }
        if (ok) {
          ++counts[static_cast<std::size_t>(std::popcount(mask))];
        }
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    while (counts.size() > 1 && counts.back() == 0) {
      counts.pop_back();
    }
    return counts;
  }

  //! Exact determinant by cofactor expansion (small matrices only).
  inline BigInt determinant(Matrix<BigInt> const& m) {
    std::size_t const n = m.rows();
    if (n == 0) {
      return 1;
    }
    if (n == 1) {
      return m(0, 0);
    }
    BigInt det = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(0, j) == 0) {
        continue;
      }
      Matrix<BigInt> minor(n - 1, n - 1);
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c != j) {
            minor(i - 1, cc++) = m(i, c);
          }
        }
      }
      BigInt term = m(0, j) * determinant(minor);
      det += (j % 2 == 0) ? term : BigInt(-term);
    }
    return det;
  }

  //! Smith divisors from determinantal divisors: D_k is the gcd of all
  //! k x k minors and d_k = D_k / D_{k-1}.
  inline std::vector<BigInt> divisors_from_minors(Matrix<BigInt> const& m) {
    std::size_t const   r = std::min(m.rows(), m.cols());
    std::vector<BigInt> out;
    BigInt              previous = 1;
    for (std::size_t k = 1; k <= r; ++k) {
      BigInt g = 0;
      std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
      std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
      do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
          Matrix<BigInt> sub(k, k);
          for (std::size_t i = 0, si = 0; i < m.rows(); ++i) {
            if (!rsel[i]) {
              continue;
            }
            for (std::size_t j = 0, sj = 0; j < m.cols(); ++j) {
              if (csel[j]) {
                sub(si, sj++) = m(i, j);
              }
            }
            ++si;
          }
          g = boost::multiprecision::gcd(g, determinant(sub));
        } while (std::prev_permutation(csel.begin(), csel.end()));
      } while (std::prev_permutation(rsel.begin(), rsel.end()));
      if (g == 0) {
        break;
      }
      out.push_back(g / previous);
      previous = g;
    }
    return out;
  }

}  // namespace diagramkit::test

#endif  // DIAGRAMKIT_TESTS_SUPPORT_HPP_

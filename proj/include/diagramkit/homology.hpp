// Integral cellular homology of Squier complexes.
//
// Boundary matrices are built in the canonical cube orderings and reduced to
// Smith normal form. Elimination first runs on 64-bit integers with checked
// arithmetic and restarts on arbitrary-precision integers if any operation
// would overflow.

#ifndef DIAGRAMKIT_HOMOLOGY_HPP_
#define DIAGRAMKIT_HOMOLOGY_HPP_

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"
#include "squier.hpp"

namespace diagramkit {

  using BigInt = boost::multiprecision::cpp_int;

  //! Thrown by the checked 64-bit arithmetic; never escapes the public API.
  class Overflow : public std::overflow_error {
   public:
    Overflow() : std::overflow_error("64-bit integer overflow") {}
  };

  //! Dense row-major integer matrix.
  template <typename Int>
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, Int(0)) {}
    Matrix(std::size_t                                 rows,
           std::size_t                                 cols,
           std::initializer_list<std::initializer_list<long long>> init)
        : Matrix(rows, cols) {
      std::size_t i = 0;
      for (auto const& row : init) {
        std::size_t j = 0;
        for (auto x : row) {
          (*this)(i, j++) = Int(x);
        }
        ++i;
      }
    }

    [[nodiscard]] std::size_t rows() const noexcept {
      return _rows;
    }
    [[nodiscard]] std::size_t cols() const noexcept {
      return _cols;
    }
    Int& operator()(std::size_t i, std::size_t j) noexcept {
      return _data[i * _cols + j];
    }
    Int const& operator()(std::size_t i, std::size_t j) const noexcept {
      return _data[i * _cols + j];
    }

    [[nodiscard]] static Matrix identity(std::size_t n) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Int(1);
      }
      return m;
    }

    template <typename Other>
    [[nodiscard]] Matrix<Other> cast() const {
      Matrix<Other> out(_rows, _cols);
      for (std::size_t i = 0; i < _rows; ++i) {
        for (std::size_t j = 0; j < _cols; ++j) {
          out(i, j) = Other((*this)(i, j));
        }
      }
      return out;
    }

    [[nodiscard]] bool is_zero() const {
      return std::all_of(_data.begin(), _data.end(),
                         [](Int const& x) { return x == 0; });
    }

    friend bool operator==(Matrix const&, Matrix const&) = default;

   private:
    std::size_t      _rows = 0;
    std::size_t      _cols = 0;
    std::vector<Int> _data;
  };

  using IntegerMatrix = Matrix<BigInt>;

  template <typename Int>
  [[nodiscard]] Matrix<Int> operator*(Matrix<Int> const& a,
                                      Matrix<Int> const& b) {
    if (a.cols() != b.rows()) {
      throw std::invalid_argument("matrix dimensions do not agree");
    }
    Matrix<Int> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) += a(i, k) * b(k, j);
        }
      }
    }
    return c;
  }

  //! Sparse triplet text: a "rows cols" header then one "row col value" line
  //! per nonzero entry, 0-based.
  template <typename Int>
  void write_triplets(std::ostream& os, Matrix<Int> const& m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) {
          os << i << ' ' << j << ' ' << m(i, j) << '\n';
        }
      }
    }
  }

  namespace detail {

    inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw Overflow();
      }
      return r;
    }
    inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_sub_overflow(a, b, &r)) {
        throw Overflow();
      }
      return r;
    }
    inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
      std::int64_t r;
      if (__builtin_add_overflow(a, b, &r)) {
        throw Overflow();
      }
      return r;
    }
    inline std::int64_t checked_neg(std::int64_t a) {
      return checked_sub(0, a);
    }
    inline std::int64_t magnitude(std::int64_t a) {
      return a < 0 ? checked_neg(a) : a;
    }

    inline BigInt checked_mul(BigInt const& a, BigInt const& b) {
      return a * b;
    }
    inline BigInt checked_sub(BigInt const& a, BigInt const& b) {
      return a - b;
    }
    inline BigInt checked_add(BigInt const& a, BigInt const& b) {
      return a + b;
    }
    inline BigInt checked_neg(BigInt const& a) {
      return -a;
    }
    inline BigInt magnitude(BigInt const& a) {
      return boost::multiprecision::abs(a);
    }

  }  // namespace detail

  template <typename Int>
  struct SNFResult {
    std::vector<BigInt>        divisors;  // positive, d_1 | d_2 | ...
    std::size_t                rank = 0;
    std::optional<Matrix<Int>> row_transform;     // U
    std::optional<Matrix<Int>> column_transform;  // V
    std::optional<Matrix<Int>> diagonal;          // S = U M V
  };

  namespace detail {

    // Elimination state; U and V are updated only when tracked.
    template <typename Int>
    class SmithReducer {
     public:
      SmithReducer(Matrix<Int> m, bool track)
          : _a(std::move(m)), _track(track) {
        if (_track) {
          _u = Matrix<Int>::identity(_a.rows());
          _v = Matrix<Int>::identity(_a.cols());
        }
      }

      SNFResult<Int> run() {
        std::size_t const rows = _a.rows();
        std::size_t const cols = _a.cols();
        std::size_t       t    = 0;
        while (t < rows && t < cols) {
          auto pivot = smallest_entry(t);
          if (!pivot) {
            break;
          }
          move_to(pivot->first, pivot->second, t);
          while (true) {
            clear_pivot(t);
            auto bad = non_divisible(t);
            if (!bad) {
              break;
            }
            // bring a row whose entries are not multiples of the pivot into
            // row t; the next round produces a smaller pivot
            add_row(t, *bad, Int(1));
          }
          if (_a(t, t) < 0) {
            negate_row(t);
          }
          ++t;
        }
        SNFResult<Int> out;
        out.rank = t;
        for (std::size_t i = 0; i < t; ++i) {
          out.divisors.push_back(BigInt(_a(i, i)));
        }
        if (_track) {
          out.row_transform    = std::move(_u);
          out.column_transform = std::move(_v);
          out.diagonal         = std::move(_a);
        }
        return out;
      }

     private:
      std::optional<std::pair<std::size_t, std::size_t>>
      smallest_entry(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int                                                best_mag{};
        for (std::size_t j = t; j < _a.cols(); ++j) {
          for (std::size_t i = t; i < _a.rows(); ++i) {
            if (_a(i, j) == 0) {
              continue;
            }
            Int mag = magnitude(_a(i, j));
            if (!best || mag < best_mag) {
              best     = {i, j};
              best_mag = mag;
              if (best_mag == 1) {
                return best;
              }
            }
          }
        }
        return best;
      }

      // smallest nonzero entry in row t or column t (excluding the pivot)
      std::optional<std::pair<std::size_t, std::size_t>>
      smallest_in_cross(std::size_t t) const {
        std::optional<std::pair<std::size_t, std::size_t>> best;
        Int                                                best_mag{};
        auto consider = [&](std::size_t i, std::size_t j) {
          if (_a(i, j) == 0) {
            return;
          }
          Int mag = magnitude(_a(i, j));
          if (!best || mag < best_mag) {
            best     = {i, j};
            best_mag = mag;
          }
        };
        for (std::size_t i = t + 1; i < _a.rows(); ++i) {
          consider(i, t);
        }
        for (std::size_t j = t + 1; j < _a.cols(); ++j) {
          consider(t, j);
        }
        return best;
      }

      void move_to(std::size_t i, std::size_t j, std::size_t t) {
        swap_rows(i, t);
        swap_cols(j, t);
      }

      // Zeroes row t and column t outside the pivot.
      void clear_pivot(std::size_t t) {
        while (true) {
          bool clean = true;
          for (std::size_t i = t + 1; i < _a.rows(); ++i) {
            if (_a(i, t) != 0) {
              Int q = _a(i, t) / _a(t, t);
              if (q != 0) {
                add_row(i, t, checked_neg(q));
              }
              clean = clean && _a(i, t) == 0;
            }
          }
          for (std::size_t j = t + 1; j < _a.cols(); ++j) {
            if (_a(t, j) != 0) {
              Int q = _a(t, j) / _a(t, t);
              if (q != 0) {
                add_col(j, t, checked_neg(q));
              }
              clean = clean && _a(t, j) == 0;
            }
          }
          if (clean) {
            return;
          }
          auto smaller = smallest_in_cross(t);
          move_to(smaller->first, smaller->second, t);
        }
      }

      std::optional<std::size_t> non_divisible(std::size_t t) const {
        Int const& p = _a(t, t);
        if (magnitude(p) == 1) {
          return std::nullopt;
        }
        for (std::size_t i = t + 1; i < _a.rows(); ++i) {
          for (std::size_t j = t + 1; j < _a.cols(); ++j) {
            if (_a(i, j) % p != 0) {
              return i;
            }
          }
        }
        return std::nullopt;
      }

      // row dst += q * row src
      void add_row(std::size_t dst, std::size_t src, Int const& q) {
        for (std::size_t j = 0; j < _a.cols(); ++j) {
          if (_a(src, j) != 0) {
            _a(dst, j) = checked_add(_a(dst, j), checked_mul(q, _a(src, j)));
          }
        }
        if (_track) {
          for (std::size_t j = 0; j < _u.cols(); ++j) {
            _u(dst, j) = checked_add(_u(dst, j), checked_mul(q, _u(src, j)));
          }
        }
      }

      // col dst += q * col src
      void add_col(std::size_t dst, std::size_t src, Int const& q) {
        for (std::size_t i = 0; i < _a.rows(); ++i) {
          if (_a(i, src) != 0) {
            _a(i, dst) = checked_add(_a(i, dst), checked_mul(q, _a(i, src)));
          }
        }
        if (_track) {
          for (std::size_t i = 0; i < _v.rows(); ++i) {
            _v(i, dst) = checked_add(_v(i, dst), checked_mul(q, _v(i, src)));
          }
        }
      }

      void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) {
          return;
        }
        for (std::size_t j = 0; j < _a.cols(); ++j) {
          std::swap(_a(i, j), _a(k, j));
        }
        if (_track) {
          for (std::size_t j = 0; j < _u.cols(); ++j) {
            std::swap(_u(i, j), _u(k, j));
          }
        }
      }

      void swap_cols(std::size_t j, std::size_t k) {
        if (j == k) {
          return;
        }
        for (std::size_t i = 0; i < _a.rows(); ++i) {
          std::swap(_a(i, j), _a(i, k));
        }
        if (_track) {
          for (std::size_t i = 0; i < _v.rows(); ++i) {
            std::swap(_v(i, j), _v(i, k));
          }
        }
      }

      void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < _a.cols(); ++j) {
          _a(i, j) = checked_neg(_a(i, j));
        }
        if (_track) {
          for (std::size_t j = 0; j < _u.cols(); ++j) {
            _u(i, j) = checked_neg(_u(i, j));
          }
        }
      }

      Matrix<Int> _a;
      Matrix<Int> _u;
      Matrix<Int> _v;
      bool        _track;
    };

  }  // namespace detail

  //! Smith normal form over exact integers. With track_transforms, also
  //! returns unimodular U, V with U M V = S and checks that identity before
  //! returning.
  template <typename Int>
  [[nodiscard]] SNFResult<Int> smith_normal_form(Matrix<Int> const& m,
                                                 bool track_transforms = false) {
    auto result = detail::SmithReducer<Int>(m, track_transforms).run();
    if (track_transforms) {
      if ((*result.row_transform) * m * (*result.column_transform)
          != *result.diagonal) {
        throw std::logic_error("Smith normal form transforms do not verify");
      }
    }
    return result;
  }

  //! Divisors and rank of an int64 matrix, retrying in arbitrary precision if
  //! the 64-bit elimination overflows.
  [[nodiscard]] inline SNFResult<BigInt>
  smith_divisors(Matrix<std::int64_t> const& m) {
    try {
      auto r = smith_normal_form(m);
      return SNFResult<BigInt>{std::move(r.divisors), r.rank, {}, {}, {}};
    } catch (Overflow const&) {
      return smith_normal_form(m.cast<BigInt>());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Boundary matrices and homology
  ////////////////////////////////////////////////////////////////////////

  //! Matrix of the boundary map from k-cubes to (k-1)-cubes. For a cube with
  //! cells c_1 < ... < c_k, the i-th term is (-1)^(i-1) times the face with
  //! c_i applied minus the face at the base corner.
  [[nodiscard]] inline Matrix<std::int64_t>
  boundary_matrix(SquierComplex const& K, std::size_t k) {
    if (k < 1 || k > K.dimension()) {
      throw DimensionOutOfRange("boundary map of dimension "
                                + std::to_string(k) + " outside [1, "
                                + std::to_string(K.dimension()) + "]");
    }
    auto const&          pres = K.presentation();
    auto const&          top  = K.cubes(k);
    Matrix<std::int64_t> d(K.cubes(k - 1).size(), top.size());
    for (std::size_t col = 0; col < top.size(); ++col) {
      auto const& cube = top[col];
      for (std::size_t i = 0; i < k; ++i) {
        auto const&           ci = cube.cells[i];
        auto const&           r  = pres.relation(ci.relation_index);
        std::vector<CubeCell> back, front;
        for (std::size_t j = 0; j < k; ++j) {
          if (j == i) {
            continue;
          }
          back.push_back(cube.cells[j]);
          CubeCell shifted = cube.cells[j];
          if (j > i) {
            shifted.offset = shifted.offset + r.rhs.size() - r.lhs.size();
          }
          front.push_back(shifted);
        }
        std::size_t const front_base
            = *K.vertex_id(K.corner(cube, std::uint64_t{1} << i));
        std::size_t const back_id  = *K.cube_id(cube.base, back);
        std::size_t const front_id = *K.cube_id(front_base, front);
        std::int64_t const sign    = (i % 2 == 0) ? 1 : -1;
        d(front_id, col) += sign;
        d(back_id, col) -= sign;
      }
    }
    return d;
  }

  struct HomologyGroup {
    std::size_t         betti = 0;
    std::vector<BigInt> torsion;  // entries > 1, each dividing the next

    friend bool operator==(HomologyGroup const&, HomologyGroup const&) = default;
  };

  [[nodiscard]] inline std::string to_string(HomologyGroup const& h) {
    std::string out;
    if (h.betti > 0) {
      out = h.betti == 1 ? "Z" : "Z^" + std::to_string(h.betti);
    }
    for (auto const& t : h.torsion) {
      out += (out.empty() ? "Z/" : " + Z/") + t.str();
    }
    return out.empty() ? "0" : out;
  }

  namespace detail {
    inline HomologyGroup homology_from(std::size_t              chains,
                                       std::size_t              rank_out,
                                       SNFResult<BigInt> const* incoming) {
      HomologyGroup h;
      std::size_t   rank_in = incoming ? incoming->rank : 0;
      h.betti               = chains - rank_out - rank_in;
      if (incoming) {
        for (auto const& d : incoming->divisors) {
          if (d > 1) {
            h.torsion.push_back(d);
          }
        }
      }
      return h;
    }
  }  // namespace detail

  //! Integral homology of the complex in every dimension 0..dimension().
  [[nodiscard]] inline std::vector<HomologyGroup>
  homology_all(SquierComplex const& K) {
    std::size_t const              top = K.dimension();
    std::vector<SNFResult<BigInt>> snf(top + 2);
    for (std::size_t k = 1; k <= top; ++k) {
      snf[k] = smith_divisors(boundary_matrix(K, k));
    }
    std::vector<HomologyGroup> out;
    for (std::size_t k = 0; k <= top; ++k) {
      std::size_t const rank_out = k == 0 ? 0 : snf[k].rank;
      out.push_back(detail::homology_from(K.cubes(k).size(), rank_out,
                                          k < top ? &snf[k + 1] : nullptr));
    }
    return out;
  }

  //! H_k of the complex; zero above the top dimension.
  [[nodiscard]] inline HomologyGroup homology(SquierComplex const& K,
                                              std::size_t          k) {
    std::size_t const top = K.dimension();
    if (k > top) {
      return {};
    }
    std::size_t rank_out = 0;
    if (k >= 1) {
      rank_out = smith_divisors(boundary_matrix(K, k)).rank;
    }
    std::optional<SNFResult<BigInt>> in;
    if (k < top) {
      in = smith_divisors(boundary_matrix(K, k + 1));
    }
    return detail::homology_from(K.cubes(k).size(), rank_out,
                                 in ? &*in : nullptr);
  }

  //! Relator-by-generator matrix of exponent sums.
  [[nodiscard]] inline Matrix<std::int64_t>
  relation_matrix(GroupPresentation const& gp) {
    Matrix<std::int64_t> m(gp.relators.size(), gp.generator_count);
    for (std::size_t i = 0; i < gp.relators.size(); ++i) {
      for (auto x : gp.relators[i]) {
        m(i, x.generator) += x.inverse ? -1 : 1;
      }
    }
    return m;
  }

  //! The abelianization of the presented group, as rank plus torsion.
  [[nodiscard]] inline HomologyGroup abelianization(GroupPresentation const& gp) {
    auto const    snf = smith_divisors(relation_matrix(gp));
    HomologyGroup h;
    h.betti = gp.generator_count - snf.rank;
    for (auto const& d : snf.divisors) {
      if (d > 1) {
        h.torsion.push_back(d);
      }
    }
    return h;
  }

}  // namespace diagramkit

#endif  // DIAGRAMKIT_HOMOLOGY_HPP_

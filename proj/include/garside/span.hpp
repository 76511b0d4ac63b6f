#pragma once

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "matrix.hpp"

namespace garside {

  //! A subspace of F^d kept as a basis in reduced row echelon form.  Rows are
  //! ordered by pivot column; each pivot entry is 1 and is the only nonzero
  //! entry of its column.
  template <Field F>
  class SpanBasis {
   public:
    using value_type = typename F::value_type;
    using row_type   = std::vector<value_type>;

    SpanBasis(F field, std::size_t dim) : _field(std::move(field)), _dim(dim) {}

    std::size_t rank() const noexcept {
      return _rows.size();
    }

    std::size_t ambient_dimension() const noexcept {
      return _dim;
    }

    std::vector<row_type> const& rows() const noexcept {
      return _rows;
    }

    std::vector<std::size_t> const& pivots() const noexcept {
      return _pivots;
    }

    //! v minus its projection on the span along the pivot columns.
    row_type reduce(std::span<value_type const> v) const {
      check_length(v.size());
      row_type r(v.begin(), v.end());
      for (std::size_t k = 0; k < _rows.size(); ++k) {
        auto c = r[_pivots[k]];
        if (!_field.is_zero(c)) {
          axpy(r, c, _rows[k]);
        }
      }
      return r;
    }

    bool contains(std::span<value_type const> v) const {
      auto r = reduce(v);
      return std::all_of(r.begin(), r.end(),
                         [this](auto const& x) { return _field.is_zero(x); });
    }

    //! Adjoins v; returns whether the rank grew.
    bool insert(std::span<value_type const> v) {
      auto r     = reduce(v);
      auto pivot = std::find_if(r.begin(), r.end(), [this](auto const& x) {
        return !_field.is_zero(x);
      });
      if (pivot == r.end()) {
        return false;
      }
      std::size_t col   = pivot - r.begin();
      auto        scale = _field.inv(*pivot);
      for (auto& x : r) {
        x = _field.mul(scale, x);
      }
      for (auto& row : _rows) {
        auto c = row[col];
        if (!_field.is_zero(c)) {
          axpy(row, c, r);
        }
      }
      auto pos = std::lower_bound(_pivots.begin(), _pivots.end(), col);
      auto at  = pos - _pivots.begin();
      _pivots.insert(pos, col);
      _rows.insert(_rows.begin() + at, std::move(r));
      return true;
    }

   private:
    void check_length(std::size_t n) const {
      if (n != _dim) {
        throw InputError("vector length does not match the span");
      }
    }

    // row -= c * other
    void axpy(row_type& row, value_type const& c, row_type const& other) const {
      for (std::size_t i = 0; i < _dim; ++i) {
        if (!_field.is_zero(other[i])) {
          row[i] = _field.sub(row[i], _field.mul(c, other[i]));
        }
      }
    }

    F                        _field;
    std::size_t              _dim;
    std::vector<row_type>    _rows;
    std::vector<std::size_t> _pivots;
  };

  //! Free-function form of SpanBasis::insert.
  template <Field F>
  bool rref_insert(SpanBasis<F>&                                 basis,
                   std::span<typename F::value_type const> v) {
    return basis.insert(v);
  }

  struct ClosureResult {
    std::size_t dimension = 0;
    //! Number of enlargement steps F_r -> F_{r+1} that were computed,
    //! including the last one, which adds nothing.
    std::size_t rounds = 0;
    //! dim F_0, dim F_1, ..., dim F_rounds.
    std::vector<std::size_t> dimensions;
  };

  namespace detail {
    template <Field F>
    void check_generators(std::vector<Matrix<F>> const& gens) {
      if (gens.empty()) {
        throw InputError("no generators");
      }
      for (auto const& g : gens) {
        if (!(g.field() == gens.front().field())
            || g.dimension() != gens.front().dimension()) {
          throw InputError("generators over different fields or dimensions");
        }
      }
    }

    // Iterates space -> space + step(space) to a fixpoint.  Only the vectors
    // added in the previous round need to be pushed through `step`, since the
    // image of the older part already lies in the current space.
    template <Field F, typename Step>
    ClosureResult close(SpanBasis<F>& basis, std::vector<Matrix<F>> frontier,
                        Step step) {
      ClosureResult out;
      out.dimensions.push_back(basis.rank());
      while (true) {
        std::vector<Matrix<F>> added;
        for (auto const& x : frontier) {
          step(x, [&](Matrix<F> const& y) {
            if (basis.insert(y.flat())) {
              added.push_back(y);
            }
          });
        }
        ++out.rounds;
        out.dimensions.push_back(basis.rank());
        if (added.empty()) {
          break;
        }
        frontier = std::move(added);
      }
      out.dimension = basis.rank();
      return out;
    }
  }  // namespace detail

  //! Dimension of the unital algebra generated by the matrices: starting
  //! from F_0 = span(1), F_{r+1} = F_r + F_r y_1 + ... + F_r y_k until the
  //! dimension stops growing.
  template <Field F>
  ClosureResult algebra_dimension(std::vector<Matrix<F>> const& gens) {
    detail::check_generators(gens);
    auto const& field = gens.front().field();
    auto        n     = gens.front().dimension();
    SpanBasis<F> basis(field, n * n);
    auto         one = Matrix<F>::identity(field, n);
    basis.insert(one.flat());
    return detail::close(basis, {one},
                         [&gens](Matrix<F> const& x, auto&& emit) {
                           for (auto const& y : gens) {
                             emit(x * y);
                           }
                         });
  }

  //! Dimension of the Lie algebra generated by the matrices under
  //! [a, b] = a b - b a, starting from their span.
  template <Field F>
  ClosureResult lie_algebra_dimension(std::vector<Matrix<F>> const& gens) {
    detail::check_generators(gens);
    auto const& field = gens.front().field();
    auto        n     = gens.front().dimension();
    SpanBasis<F>           basis(field, n * n);
    std::vector<Matrix<F>> seed;
    for (auto const& g : gens) {
      if (basis.insert(g.flat())) {
        seed.push_back(g);
      }
    }
    if (seed.empty()) {
      return {0, 0, {0}};
    }
    return detail::close(basis, seed,
                         [&gens](Matrix<F> const& x, auto&& emit) {
                           for (auto const& y : gens) {
                             emit(x.bracket(y));
                           }
                         });
  }

  //! Contents of a matrix file: "p n k" then k blocks of n rows of n
  //! integers.  p = 0 means the rationals.  Lines starting with '#' are
  //! ignored.
  struct MatrixFile {
    std::uint64_t                       p = 0;
    std::size_t                         n = 0;
    std::vector<std::vector<long long>> matrices;

    std::vector<FpMatrix> over_prime_field() const {
      PrimeField            f(static_cast<std::uint32_t>(p));
      std::vector<FpMatrix> out;
      for (auto const& m : matrices) {
        out.push_back(FpMatrix::from_integers(f, n, m));
      }
      return out;
    }

    std::vector<QMatrix> over_rationals() const {
      std::vector<QMatrix> out;
      for (auto const& m : matrices) {
        out.push_back(QMatrix::from_integers(RationalField{}, n, m));
      }
      return out;
    }
  };

  inline MatrixFile read_matrix_file(std::istream& in) {
    std::string       text, line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.erase(hash);
      }
      text += line + '\n';
    }
    std::istringstream tokens(text);
    MatrixFile         out;
    long long          p = 0, n = 0, k = 0;
    if (!(tokens >> p >> n >> k) || p < 0 || n < 1 || k < 1) {
      throw InputError("matrix file header must be \"p n k\" with n, k >= 1");
    }
    if (p != 0 && (p > 2147483647LL || !is_prime(static_cast<std::uint64_t>(p)))) {
      throw InputError("matrix file modulus " + std::to_string(p)
                       + " is not a supported prime");
    }
    out.p = static_cast<std::uint64_t>(p);
    out.n = static_cast<std::size_t>(n);
    for (long long m = 0; m < k; ++m) {
      std::vector<long long> entries(out.n * out.n);
      for (auto& e : entries) {
        if (!(tokens >> e)) {
          throw InputError("matrix file ends inside matrix "
                           + std::to_string(m + 1));
        }
      }
      out.matrices.push_back(std::move(entries));
    }
    std::string extra;
    if (tokens >> extra) {
      throw InputError("unexpected trailing data in matrix file: " + extra);
    }
    return out;
  }

  inline MatrixFile read_matrix_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw InputError("cannot open " + path);
    }
    return read_matrix_file(in);
  }

}  // namespace garside

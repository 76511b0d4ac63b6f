#pragma once

#include <span>
#include <string>
#include <vector>

#include "field.hpp"

namespace garside {

  //! Dense square matrix over a field, stored row-major.
  template <Field F>
  class Matrix {
   public:
    using value_type = typename F::value_type;

    Matrix(F field, std::size_t n)
        : _field(std::move(field)), _n(n), _data(n * n, _field.zero()) {}

    Matrix(F field, std::size_t n, std::vector<value_type> data)
        : _field(std::move(field)), _n(n), _data(std::move(data)) {
      if (_data.size() != n * n) {
        throw InputError("matrix data has the wrong size");
      }
    }

    static Matrix identity(F field, std::size_t n) {
      Matrix out(std::move(field), n);
      for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = out._field.one();
      }
      return out;
    }

    //! The matrix unit E_ij (0-based).
    static Matrix unit(F field, std::size_t n, std::size_t i, std::size_t j) {
      Matrix out(std::move(field), n);
      out(i, j) = out._field.one();
      return out;
    }

    static Matrix from_integers(F field, std::size_t n,
                                std::vector<long long> const& entries) {
      std::vector<value_type> data;
      data.reserve(entries.size());
      for (auto e : entries) {
        data.push_back(field.from_integer(e));
      }
      return Matrix(std::move(field), n, std::move(data));
    }

    F const& field() const noexcept {
      return _field;
    }

    std::size_t dimension() const noexcept {
      return _n;
    }

    value_type& operator()(std::size_t i, std::size_t j) {
      return _data[i * _n + j];
    }

    value_type const& operator()(std::size_t i, std::size_t j) const {
      return _data[i * _n + j];
    }

    //! The entries row by row, as a vector of length n^2.
    std::span<value_type const> flat() const noexcept {
      return _data;
    }

    static Matrix from_flat(F field, std::size_t n,
                            std::span<value_type const> v) {
      return Matrix(std::move(field), n,
                    std::vector<value_type>(v.begin(), v.end()));
    }

    Matrix operator*(Matrix const& o) const {
      check_compatible(o);
      Matrix out(_field, _n);
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t k = 0; k < _n; ++k) {
          auto const& a = (*this)(i, k);
          if (_field.is_zero(a)) {
            continue;
          }
          for (std::size_t j = 0; j < _n; ++j) {
            out(i, j) = _field.add(out(i, j), _field.mul(a, o(k, j)));
          }
        }
      }
      return out;
    }

    Matrix operator+(Matrix const& o) const {
      check_compatible(o);
      Matrix out(*this);
      for (std::size_t i = 0; i < _data.size(); ++i) {
        out._data[i] = _field.add(_data[i], o._data[i]);
      }
      return out;
    }

    Matrix operator-(Matrix const& o) const {
      check_compatible(o);
      Matrix out(*this);
      for (std::size_t i = 0; i < _data.size(); ++i) {
        out._data[i] = _field.sub(_data[i], o._data[i]);
      }
      return out;
    }

    Matrix scaled(value_type const& c) const {
      Matrix out(*this);
      for (auto& x : out._data) {
        x = _field.mul(c, x);
      }
      return out;
    }

    //! a b - b a
    Matrix bracket(Matrix const& o) const {
      return (*this) * o - o * (*this);
    }

    Matrix power(std::size_t e) const {
      Matrix out  = identity(_field, _n);
      Matrix base = *this;
      while (e > 0) {
        if (e & 1) {
          out = out * base;
        }
        base = base * base;
        e >>= 1;
      }
      return out;
    }

    bool is_identity() const {
      return *this == identity(_field, _n);
    }

    //! Least k in [1, limit] with this^k = 1, or 0 if there is none.
    std::size_t order(std::size_t limit) const {
      Matrix p = *this;
      for (std::size_t k = 1; k <= limit; ++k) {
        if (p.is_identity()) {
          return k;
        }
        p = p * (*this);
      }
      return 0;
    }

    bool operator==(Matrix const& o) const {
      return _field == o._field && _n == o._n && _data == o._data;
    }

    std::string to_string() const {
      std::string out;
      for (std::size_t i = 0; i < _n; ++i) {
        for (std::size_t j = 0; j < _n; ++j) {
          out += (j == 0 ? "" : " ") + _field.format((*this)(i, j));
        }
        out += '\n';
      }
      return out;
    }

   private:
    void check_compatible(Matrix const& o) const {
      if (!(_field == o._field) || _n != o._n) {
        throw InputError("matrices over different fields or dimensions");
      }
    }

    F                       _field;
    std::size_t             _n;
    std::vector<value_type> _data;
  };

  using FpMatrix = Matrix<PrimeField>;
  using QMatrix  = Matrix<RationalField>;

}  // namespace garside

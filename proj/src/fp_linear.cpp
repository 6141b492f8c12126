#include "synmon/fp_linear.hpp"

#include <stdexcept>
#include <string>

namespace synmon::fp {

  bool is_prime(std::uint32_t n) noexcept {
    if (n < 2) {
      return false;
    }
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  Field::Field(std::uint32_t p) : _p(p) {
    if (!is_prime(p)) {
      throw std::invalid_argument("field characteristic " + std::to_string(p)
                                  + " is not prime");
    }
  }

  Scalar Field::reduce(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(_p);
    return static_cast<Scalar>(r < 0 ? r + _p : r);
  }

  Scalar Field::inv(Scalar a) const {
    if (a % _p == 0) {
      throw std::domain_error("inverse of zero in F_p");
    }
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % _p, e = _p - 2;
    while (e > 0) {
      if (e & 1) {
        result = result * base % _p;
      }
      base = base * base % _p;
      e >>= 1;
    }
    return static_cast<Scalar>(result);
  }

  Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, Vector data) {
    if (data.size() != rows * cols) {
      throw std::invalid_argument("matrix data has wrong size");
    }
    Matrix m;
    m._rows = rows;
    m._cols = cols;
    m._data = std::move(data);
    return m;
  }

  Matrix multiply(Field const& f, Matrix const& a, Matrix const& b) {
    if (a.cols() != b.rows()) {
      throw std::invalid_argument("matrix dimensions do not agree");
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        Scalar const x = a(i, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
        }
      }
    }
    return c;
  }

  Matrix add(Field const& f, Matrix const& a, Matrix const& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
      throw std::invalid_argument("matrix dimensions do not agree");
    }
    Vector data(a.flat().size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      data[i] = f.add(a.flat()[i], b.flat()[i]);
    }
    return Matrix::from_flat(a.rows(), a.cols(), std::move(data));
  }

  Matrix scale(Field const& f, Scalar s, Matrix const& a) {
    Vector data(a.flat().size());
    for (std::size_t i = 0; i < data.size(); ++i) {
      data[i] = f.mul(s, a.flat()[i]);
    }
    return Matrix::from_flat(a.rows(), a.cols(), std::move(data));
  }

  Vector multiply(Field const& f, std::span<Scalar const> x, Matrix const& m) {
    if (x.size() != m.rows()) {
      throw std::invalid_argument("vector/matrix dimensions do not agree");
    }
    Vector y(m.cols(), 0);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < m.cols(); ++j) {
        y[j] = f.add(y[j], f.mul(x[k], m(k, j)));
      }
    }
    return y;
  }

  Vector multiply(Field const& f, Matrix const& m, std::span<Scalar const> x) {
    if (x.size() != m.cols()) {
      throw std::invalid_argument("matrix/vector dimensions do not agree");
    }
    Vector y(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      y[i] = dot(f, m.row(i), x);
    }
    return y;
  }

  Scalar dot(Field const& f, std::span<Scalar const> x, std::span<Scalar const> y) {
    Scalar s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      s = f.add(s, f.mul(x[i], y[i]));
    }
    return s;
  }

  bool is_zero(std::span<Scalar const> x) noexcept {
    for (auto v : x) {
      if (v != 0) {
        return false;
      }
    }
    return true;
  }

  Basis::Basis(Field field, std::size_t dimension)
      : _field(field), _dimension(dimension) {}

  std::pair<Vector, Vector> Basis::reduce(std::span<Scalar const> v) const {
    if (v.size() != _dimension) {
      throw std::invalid_argument("vector has wrong dimension");
    }
    Vector rem(v.begin(), v.end());
    Vector coeff(_echelon.size(), 0);
    // Each echelon row is zero in the pivots of earlier rows, so one pass in
    // insertion order clears every pivot column.
    for (std::size_t j = 0; j < _echelon.size(); ++j) {
      Scalar const c = rem[_pivot[j]];
      if (c == 0) {
        continue;
      }
      coeff[j] = c;
      auto const& row = _echelon[j];
      for (std::size_t k = 0; k < _dimension; ++k) {
        if (row[k] != 0) {
          rem[k] = _field.sub(rem[k], _field.mul(c, row[k]));
        }
      }
    }
    return {std::move(rem), std::move(coeff)};
  }

  bool Basis::insert(std::span<Scalar const> v) {
    auto [rem, coeff] = reduce(v);
    std::size_t pivot = 0;
    while (pivot < _dimension && rem[pivot] == 0) {
      ++pivot;
    }
    if (pivot == _dimension) {
      return false;
    }
    std::size_t const r     = _inserted.size();
    Scalar const      scale = _field.inv(rem[pivot]);
    for (auto& x : rem) {
      x = _field.mul(x, scale);
    }
    // new echelon row = scale * (b_r - sum_j coeff_j * echelon_j)
    Vector comb(r + 1, 0);
    comb[r] = scale;
    for (std::size_t j = 0; j < _echelon.size(); ++j) {
      if (coeff[j] == 0) {
        continue;
      }
      Scalar const c = _field.mul(scale, coeff[j]);
      for (std::size_t k = 0; k < _combination[j].size(); ++k) {
        comb[k] = _field.sub(comb[k], _field.mul(c, _combination[j][k]));
      }
    }
    for (auto& old : _combination) {
      old.resize(r + 1, 0);
    }
    _inserted.emplace_back(v.begin(), v.end());
    _echelon.push_back(std::move(rem));
    _combination.push_back(std::move(comb));
    _pivot.push_back(pivot);
    return true;
  }

  std::optional<Vector> Basis::coordinates(std::span<Scalar const> v) const {
    auto [rem, coeff] = reduce(v);
    if (!is_zero(rem)) {
      return std::nullopt;
    }
    Vector result(_inserted.size(), 0);
    for (std::size_t j = 0; j < coeff.size(); ++j) {
      if (coeff[j] == 0) {
        continue;
      }
      for (std::size_t k = 0; k < _combination[j].size(); ++k) {
        result[k] = _field.add(result[k], _field.mul(coeff[j], _combination[j][k]));
      }
    }
    return result;
  }

  std::size_t rank(Field const& f, std::span<Vector const> vectors, std::size_t dimension) {
    Basis b(f, dimension);
    for (auto const& v : vectors) {
      b.insert(v);
    }
    return b.rank();
  }

}  // namespace synmon::fp

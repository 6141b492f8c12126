#pragma once

// Exact linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace synmon::fp {

  using Scalar = std::uint32_t;
  using Vector = std::vector<Scalar>;

  bool is_prime(std::uint32_t n) noexcept;

  class Field {
   public:
    explicit Field(std::uint32_t p);

    std::uint32_t prime() const noexcept {
      return _p;
    }
    Scalar reduce(std::int64_t x) const noexcept;
    Scalar add(Scalar a, Scalar b) const noexcept {
      return static_cast<Scalar>((std::uint64_t(a) + b) % _p);
    }
    Scalar sub(Scalar a, Scalar b) const noexcept {
      return static_cast<Scalar>((std::uint64_t(a) + _p - b) % _p);
    }
    Scalar mul(Scalar a, Scalar b) const noexcept {
      return static_cast<Scalar>((std::uint64_t(a) * b) % _p);
    }
    Scalar neg(Scalar a) const noexcept {
      return a == 0 ? 0 : _p - a;
    }
    Scalar inv(Scalar a) const;

   private:
    std::uint32_t _p;
  };

  // Dense row-major matrix.
  class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : _rows(rows), _cols(cols), _data(rows * cols, 0) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    Scalar& operator()(std::size_t r, std::size_t c) {
      return _data[r * _cols + c];
    }
    Scalar operator()(std::size_t r, std::size_t c) const {
      return _data[r * _cols + c];
    }
    std::span<Scalar const> row(std::size_t r) const {
      return {_data.data() + r * _cols, _cols};
    }
    Vector const& flat() const noexcept {
      return _data;
    }
    static Matrix from_flat(std::size_t rows, std::size_t cols, Vector data);

    bool operator==(Matrix const&) const = default;

   private:
    std::size_t _rows = 0;
    std::size_t _cols = 0;
    Vector      _data;
  };

  Matrix multiply(Field const& f, Matrix const& a, Matrix const& b);
  Matrix add(Field const& f, Matrix const& a, Matrix const& b);
  Matrix scale(Field const& f, Scalar s, Matrix const& a);
  // Row vector times matrix.
  Vector multiply(Field const& f, std::span<Scalar const> x, Matrix const& m);
  // Matrix times column vector.
  Vector multiply(Field const& f, Matrix const& m, std::span<Scalar const> x);
  Scalar dot(Field const& f, std::span<Scalar const> x, std::span<Scalar const> y);
  bool   is_zero(std::span<Scalar const> x) noexcept;

  // Incrementally built basis of a subspace of F_p^n. Vectors are inserted one
  // at a time; independent ones are kept in insertion order, and coordinates
  // of any vector in the span are reported with respect to that order.
  class Basis {
   public:
    Basis(Field field, std::size_t dimension);

    // Returns true iff v was independent of the current basis (and was added).
    bool insert(std::span<Scalar const> v);
    std::optional<Vector> coordinates(std::span<Scalar const> v) const;
    bool contains(std::span<Scalar const> v) const {
      return coordinates(v).has_value();
    }
    std::size_t rank() const noexcept {
      return _inserted.size();
    }
    std::size_t dimension() const noexcept {
      return _dimension;
    }
    Vector const& vector(std::size_t i) const {
      return _inserted[i];
    }

   private:
    // Reduces v against the echelon rows; returns the remainder and the
    // coefficients c_j with v = remainder + sum_j c_j * echelon_j.
    std::pair<Vector, Vector> reduce(std::span<Scalar const> v) const;

    Field               _field;
    std::size_t         _dimension;
    std::vector<Vector> _inserted;
    // Semi-echelon rows (pivot entry 1) and their expression in _inserted.
    std::vector<Vector>      _echelon;
    std::vector<Vector>      _combination;
    std::vector<std::size_t> _pivot;
  };

  std::size_t rank(Field const& f, std::span<Vector const> vectors, std::size_t dimension);

}  // namespace synmon::fp

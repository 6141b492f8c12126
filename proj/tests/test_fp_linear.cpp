#include <random>
#include <set>

#include "catch_amalgamated.hpp"
#include "synmon/fp_linear.hpp"

using namespace synmon::fp;

TEST_CASE("prime detection", "[fp]") {
  std::vector<std::uint32_t> found;
  for (std::uint32_t n = 0; n < 30; ++n) {
    if (is_prime(n)) {
      found.push_back(n);
    }
  }
  CHECK(found == std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK_THROWS_AS(Field(4), std::invalid_argument);
}

TEST_CASE("field inverses", "[fp]") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 101u}) {
    Field f(p);
    for (Scalar a = 1; a < p; ++a) {
      CHECK(f.mul(a, f.inv(a)) == 1);
    }
    CHECK(f.reduce(-1) == p - 1);
    CHECK(f.add(f.neg(3 % p), 3 % p) == 0);
  }
}

TEST_CASE("matrix products act on row vectors", "[fp]") {
  Field  f(3);
  Matrix a = Matrix::from_flat(2, 2, {1, 2, 0, 1});
  Matrix b = Matrix::from_flat(2, 2, {0, 1, 1, 0});
  Vector x{1, 1};
  // (x a) b = x (a b)
  CHECK(multiply(f, multiply(f, x, a), b) == multiply(f, x, multiply(f, a, b)));
  CHECK(multiply(f, a, Matrix::identity(2)) == a);
  CHECK(multiply(f, x, a) == Vector{1, 0});
}

// The span of a set of vectors over F_p, by enumerating all combinations.
static std::size_t span_size(Field const& f, std::vector<Vector> const& vs, std::size_t n) {
  std::set<Vector> span{Vector(n, 0)};
  for (auto const& v : vs) {
    std::set<Vector> next;
    for (auto const& s : span) {
      for (Scalar c = 0; c < f.prime(); ++c) {
        Vector t = s;
        for (std::size_t i = 0; i < n; ++i) {
          t[i] = f.add(t[i], f.mul(c, v[i]));
        }
        next.insert(t);
      }
    }
    span = std::move(next);
  }
  return span.size();
}

TEST_CASE("basis rank and coordinates agree with enumeration", "[fp][property]") {
  std::mt19937_64 rng(7);
  for (std::uint32_t p : {2u, 3u}) {
    Field f(p);
    for (int trial = 0; trial < 40; ++trial) {
      std::size_t const n = 1 + trial % 4;
      std::vector<Vector> vs(1 + trial % 5, Vector(n));
      for (auto& v : vs) {
        for (auto& x : v) {
          x = std::uniform_int_distribution<Scalar>(0, p - 1)(rng);
        }
      }
      Basis b(f, n);
      for (auto const& v : vs) {
        b.insert(v);
      }
      std::size_t expected = 1, r = 0;
      while (expected < span_size(f, vs, n)) {
        expected *= p;
        ++r;
      }
      CHECK(b.rank() == r);
      CHECK(rank(f, vs, n) == r);
      for (auto const& v : vs) {
        auto c = b.coordinates(v);
        REQUIRE(c.has_value());
        Vector back(n, 0);
        for (std::size_t i = 0; i < b.rank(); ++i) {
          for (std::size_t k = 0; k < n; ++k) {
            back[k] = f.add(back[k], f.mul((*c)[i], b.vector(i)[k]));
          }
        }
        CHECK(back == v);
      }
    }
  }
}

TEST_CASE("vectors outside the span have no coordinates", "[fp]") {
  Field f(2);
  Basis b(f, 3);
  CHECK(b.insert(Vector{1, 0, 0}));
  CHECK_FALSE(b.insert(Vector{1, 0, 0}));
  CHECK(b.insert(Vector{1, 1, 0}));
  CHECK_FALSE(b.coordinates(Vector{0, 0, 1}).has_value());
  CHECK(b.coordinates(Vector{0, 1, 0}) == Vector{1, 1});
}

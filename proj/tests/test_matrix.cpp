#include "operads/matrix.hpp"

#include <random>

#include "doctest.h"
#include "operads/error.hpp"

using namespace operads;

namespace {

RatMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  RatMatrix m;
  for (const auto& r : rows) {
    std::vector<Rational> row(r.begin(), r.end());
    m.append_row(row);
  }
  return m;
}

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(-4, 4);
  RatMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Rational(d(rng));
  return m;
}

}  // namespace

TEST_CASE("rref of simple matrices") {
  CHECK(rref(from_rows({{2, 4}, {1, 2}})) == from_rows({{1, 2}, {0, 0}}));
  CHECK(rref(RatMatrix::identity(3)) == RatMatrix::identity(3));
  CHECK(rref(from_rows({{0, 1}, {1, 0}})) == RatMatrix::identity(2));
  const RatMatrix empty;
  CHECK(rref(empty) == empty);
}

TEST_CASE("rref shape: pivots are 1 and strictly increasing") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const RatMatrix r = rref(random_matrix(rng, 5, 7));
    long last_pivot = -1;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      std::size_t c = 0;
      while (c < r.cols() && r.at(i, c).is_zero()) ++c;
      if (c == r.cols()) {
        // Zero rows only below nonzero rows.
        for (std::size_t k = i; k < r.rows(); ++k)
          for (std::size_t j = 0; j < r.cols(); ++j) CHECK(r.at(k, j).is_zero());
        break;
      }
      CHECK(r.at(i, c) == Rational(1));
      CHECK(static_cast<long>(c) > last_pivot);
      last_pivot = static_cast<long>(c);
      for (std::size_t k = 0; k < r.rows(); ++k)
        if (k != i) CHECK(r.at(k, c).is_zero());
    }
  }
}

TEST_CASE("rref is idempotent") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const RatMatrix r = rref(random_matrix(rng, 4, 6));
    CHECK(rref(r) == r);
  }
}

TEST_CASE("rank") {
  CHECK(rank(RatMatrix(2, 2)) == 0);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(rank(from_rows({{1, 1}, {2, 2}, {3, 3}})) == 1);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const RatMatrix m = random_matrix(rng, 5, 3);
    CHECK(rank(m) <= 3);
  }
}

TEST_CASE("in_span") {
  using V = std::vector<Rational>;
  const V e1{1, 0}, e2{0, 1};
  CHECK(in_span(V{1, 1}, {e1, e2}));
  CHECK_FALSE(in_span(V{1, 0}, {e2}));
  CHECK(in_span(V{2, 4, 6}, {V{1, 2, 3}}));
  CHECK(in_span(V{0, 0}, {}));
  CHECK_THROWS_AS(in_span(V{1}, {e1}), LengthMismatch);
}

TEST_CASE("in_span is closed under linear combinations") {
  std::mt19937_64 rng(19);
  std::uniform_int_distribution<long> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::vector<Rational>> basis;
    for (int b = 0; b < 3; ++b) {
      std::vector<Rational> v(5);
      for (auto& x : v) x = Rational(d(rng));
      basis.push_back(v);
    }
    std::vector<Rational> v(5), w(5);
    // v, w random combinations of the basis.
    for (int b = 0; b < 3; ++b) {
      const Rational cv(d(rng)), cw(d(rng), 2);
      for (int i = 0; i < 5; ++i) {
        v[i] += cv * basis[b][i];
        w[i] += cw * basis[b][i];
      }
    }
    CHECK(in_span(v, basis));
    CHECK(in_span(w, basis));
    std::vector<Rational> sum(5), scaled(5);
    for (int i = 0; i < 5; ++i) {
      sum[i] = v[i] + w[i];
      scaled[i] = Rational(7, 3) * v[i];
    }
    CHECK(in_span(sum, basis));
    CHECK(in_span(scaled, basis));
  }
}

TEST_CASE("inverse") {
  const RatMatrix m = from_rows({{0, 1}, {1, 0}});
  auto inv = inverse(m);
  REQUIRE(inv.has_value());
  CHECK(*inv == m);
  CHECK_FALSE(inverse(from_rows({{1, 1}, {2, 2}})).has_value());
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const RatMatrix a = random_matrix(rng, 4, 4);
    auto ai = inverse(a);
    if (!ai) continue;
    RatMatrix prod(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) prod.at(i, j) += a.at(i, k) * ai->at(k, j);
    CHECK(prod == RatMatrix::identity(4));
  }
}

TEST_CASE("incremental rref agrees with batch rref") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 25; ++trial) {
    const RatMatrix m = random_matrix(rng, 6, 5);
    IncrementalRref acc(5);
    for (std::size_t r = 0; r < m.rows(); ++r) acc.add_row(sparsify(m.row(r)));
    CHECK(acc.rank() == rank(m));
    // Reduced rows reproduce the nonzero part of rref(m).
    const RatMatrix batch = rref(m);
    const RatMatrix inc = acc.to_matrix();
    for (std::size_t r = 0; r < inc.rows(); ++r)
      for (std::size_t c = 0; c < inc.cols(); ++c) CHECK(inc.at(r, c) == batch.at(r, c));
    // Residual of a spanned vector is zero.
    if (m.rows() > 0) CHECK(acc.reduce(sparsify(m.row(0))).empty());
  }
}

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rncdr/error.hpp"
#include "rncdr/matrix.hpp"

using namespace rncdr;

TEST_SUITE("rational") {
  TEST_CASE("parse accepts integers, fractions and decimals") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-2/6") == Rational(-1, 3));
    CHECK(parse_rational("0.25") == Rational(1, 4));
    CHECK(parse_rational("1e-3") == Rational(1, 1000));
    CHECK(parse_rational("-.5") == Rational(-1, 2));
    CHECK(parse_rational("2.5e1") == 25);
  }

  TEST_CASE("parse rejects garbage") {
    for (const char* bad : {"", "abc", "1/0", "1//2", "--1", "1.2.3"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_rational(bad), Error);
    }
  }

  TEST_CASE("canonical printing round-trips") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000), den(1, 500);
    for (int i = 0; i < 200; ++i) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      CHECK(parse_rational(to_string(q)) == q);
    }
    CHECK(to_string(Rational(-1, 2)) == "-1/2");
    Rational six_thirds(6, 3);
    six_thirds.canonicalize();
    CHECK(to_string(six_thirds) == "2");
    CHECK(parse_rational("010/4") == Rational(5, 2));
  }

  TEST_CASE("from_double is exact for dyadic values") {
    CHECK(from_double(0.25) == Rational(1, 4));
    CHECK(from_double(-3.0) == -3);
    CHECK(from_double(0.1).get_d() == 0.1);
  }

  TEST_CASE("primitive scales to coprime integers with positive lead") {
    RVec v{0, Rational(-2, 3), Rational(4, 9)};
    RVec p = primitive(v);
    CHECK(p == RVec{0, 3, -2});
    CHECK(is_zero(RVec{0, 0}));
    CHECK(dot(RVec{1, 2}, RVec{3, -1}) == 1);
  }
}

namespace {

RMatrix random_matrix(std::mt19937_64& rng, size_t r, size_t c, int density) {
  std::uniform_int_distribution<int> val(-3, 3), keep(0, 9);
  RMatrix a(r, c);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < c; ++j)
      if (keep(rng) < density) a(i, j) = val(rng);
  return a;
}

std::vector<RVec> rows_of(const RMatrix& a) {
  std::vector<RVec> out;
  for (size_t i = 0; i < a.rows(); ++i) out.push_back(a.row(i));
  return out;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("rank agrees with fraction-free elimination") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 150; ++trial) {
      size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
      RMatrix a = random_matrix(rng, r, c, 3 + trial % 6);
      CHECK(rank(a) == oracle::bareiss_rank(rows_of(a), c));
      CHECK(rank(a.transpose()) == rank(a));
    }
  }

  TEST_CASE("rank plus nullity equals column count and A*v = 0") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 150; ++trial) {
      size_t r = 1 + rng() % 6, c = 1 + rng() % 7;
      RMatrix a = random_matrix(rng, r, c, 5);
      auto ns = nullspace(a);
      CHECK(rank(a) + ns.size() == c);
      for (auto& v : ns) CHECK(is_zero(a * v));
      if (!ns.empty()) CHECK(rank(ns, c) == ns.size());
      auto lk = left_kernel(a);
      CHECK(rank(a) + lk.size() == r);
      for (auto& y : lk) CHECK(is_zero(a.transpose() * y));
    }
  }

  TEST_CASE("orthogonal complement and spans") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      size_t c = 2 + rng() % 5;
      RMatrix a = random_matrix(rng, 1 + rng() % 4, c, 6);
      auto vecs = rows_of(a);
      auto perp = orthogonal_complement(vecs, c);
      CHECK(perp.size() + rank(vecs, c) == c);
      for (auto& u : perp)
        for (auto& v : vecs) CHECK(dot(u, v) == 0);
      auto canon = canonical_basis(vecs, c);
      CHECK(same_span(canon, vecs, c));
      CHECK(independent_subset(vecs, c).size() == canon.size());
      for (auto& v : vecs) CHECK(in_span(canon, v, c));
    }
  }

  TEST_CASE("products and rref") {
    RMatrix a = RMatrix::from_rows({{1, 2}, {3, 4}}, 2);
    RMatrix b = RMatrix::from_columns({{1, 0}, {1, 1}}, 2);
    RMatrix ab = a * b;
    CHECK(ab == RMatrix::from_rows({{1, 3}, {3, 7}}, 2));
    auto rr = rref(a);
    CHECK(rr.pivots == std::vector<size_t>{0, 1});
    CHECK(rr.reduced == RMatrix::from_rows({{1, 0}, {0, 1}}, 2));
  }
}

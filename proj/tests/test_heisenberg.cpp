#include <random>

#include "doctest.h"
#include "heisred/heisenberg.hpp"
#include "oracles.hpp"

using namespace heisred;

namespace {

HeisElem random_elem(std::mt19937_64 &rng, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  return {coord(rng), coord(rng), coord(rng)};
}

}  // namespace

TEST_CASE("product law examples") {
  CHECK(HeisElem(1L, 0L, 0L) * HeisElem(0L, 1L, 0L) == HeisElem(1L, 1L, 0L));
  CHECK(HeisElem(0L, 1L, 0L) * HeisElem(1L, 0L, 0L) == HeisElem(1L, 1L, 1L));
  CHECK(HeisElem(2L, 3L, 1L) * HeisElem(-1L, 4L, 0L) == HeisElem(1L, 7L, -2L));
}

TEST_CASE("product agrees with matrix multiplication") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 2000; ++k) {
    HeisElem x = random_elem(rng, 1'000'000);
    HeisElem y = random_elem(rng, 1'000'000);
    auto want = oracle::coords(oracle::mat_mul(oracle::embed(x), oracle::embed(y)));
    CHECK(oracle::coords(x * y) == want);
  }
}

TEST_CASE("inverse") {
  CHECK(inverse(HeisElem()) == HeisElem());
  CHECK(inverse(HeisElem(2L, 3L, 1L)) == HeisElem(-2L, -3L, 5L));
  CHECK(inverse(HeisElem::a()) == HeisElem(-1L, 0L, 0L));
  std::mt19937_64 rng(11);
  for (int k = 0; k < 500; ++k) {
    HeisElem x = random_elem(rng, 1000);
    CHECK((x * inverse(x)).is_identity());
    CHECK((inverse(x) * x).is_identity());
    CHECK(oracle::coords(inverse(x)) == oracle::coords(oracle::unitriangular_inverse(oracle::embed(x))));
  }
}

TEST_CASE("power") {
  CHECK(power(HeisElem(1L, 0L, 1L), 2) == HeisElem(2L, 0L, 2L));
  CHECK(power(HeisElem(1L, 1L, 0L), 3) == HeisElem(3L, 3L, 3L));
  CHECK(power(HeisElem(5L, -2L, 9L), 0).is_identity());
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    HeisElem x = random_elem(rng, 50);
    HeisElem acc;
    for (int k = 0; k <= 12; ++k) {
      CHECK(power(x, k) == acc);
      CHECK(power(x, -k) == inverse(acc));
      acc = acc * x;
    }
  }
}

TEST_CASE("commutator") {
  CHECK(commutator(HeisElem::b(), HeisElem::a()) == HeisElem::c());
  CHECK(commutator(HeisElem(1L, 0L, 0L), HeisElem(0L, 2L, 0L)) == HeisElem(0L, 0L, -2L));
  std::mt19937_64 rng(17);
  for (int k = 0; k < 300; ++k) {
    HeisElem x = random_elem(rng, 1000);
    HeisElem y = random_elem(rng, 1000);
    CHECK(commutator(x, x).is_identity());
    CHECK(commutator(x, y).is_central());
    CHECK(commutator(x, y) == inverse(x) * inverse(y) * x * y);
  }
}

TEST_CASE("associativity and centrality") {
  std::mt19937_64 rng(19);
  for (int k = 0; k < 500; ++k) {
    HeisElem x = random_elem(rng, 10000), y = random_elem(rng, 10000), z = random_elem(rng, 10000);
    CHECK((x * y) * z == x * (y * z));
    HeisElem central(Integer(0), Integer(0), z.gamma());
    CHECK(central * x == x * central);
  }
}

TEST_CASE("matrix form") {
  IntMatrix3 a = to_matrix(HeisElem::a());
  CHECK(a(0, 1) == 1);
  CHECK(a(0, 2) == 0);
  CHECK(a(1, 2) == 0);
  CHECK(to_matrix(HeisElem()) == IntMatrix3::identity());
  IntMatrix3 c = to_matrix(HeisElem::c());
  CHECK(c(0, 2) == -1);
  CHECK(c(0, 1) == 0);
  CHECK(c.is_upper_unitriangular());

  std::mt19937_64 rng(23);
  for (int k = 0; k < 300; ++k) {
    HeisElem x = random_elem(rng, 1000), y = random_elem(rng, 1000);
    CHECK(from_matrix(to_matrix(x)) == x);
    CHECK(to_matrix(x * y) == to_matrix(x) * to_matrix(y));
  }

  IntMatrix3 bad = IntMatrix3::identity();
  bad(2, 0) = 1;
  CHECK_THROWS_AS(from_matrix(bad), std::invalid_argument);
  IntMatrix3 diag = IntMatrix3::identity();
  diag(1, 1) = 2;
  CHECK_THROWS_AS(from_matrix(diag), std::invalid_argument);
}

TEST_CASE("big coordinates stay exact") {
  Integer huge = parse_integer("123456789012345678901234567890");
  HeisElem x(huge, huge, Integer(0));
  HeisElem y = power(x, 3);
  CHECK(y.gamma() == 3 * huge * huge);
  CHECK(oracle::coords(x * x) == oracle::coords(oracle::mat_mul(oracle::embed(x), oracle::embed(x))));
}

TEST_CASE("render") {
  CHECK(render(HeisElem()) == "1");
  CHECK(render(HeisElem(2L, 1L, -3L)) == "a^2 b c^-3");
  CHECK(render(HeisElem(1L, 0L, 1L)) == "a c");
  CHECK(render(HeisElem(0L, -1L, 0L)) == "b^-1");
}

TEST_CASE("direct power") {
  PowerElem u = PowerElem::single(4, 1, HeisElem::a());
  PowerElem v = PowerElem::single(4, 2, HeisElem::b());
  PowerElem w = u * v;
  CHECK(w.ambient() == 4);
  CHECK(w.components().size() == 2);
  CHECK(w.at(1) == HeisElem::a());
  CHECK(w.at(2) == HeisElem::b());
  CHECK(w.at(3).is_identity());

  CHECK((w * inverse(w)).is_identity());
  CHECK((w * inverse(w)).components().empty());

  PowerElem c4 = PowerElem::single(4, 4, HeisElem::c());
  PowerElem c4inv = PowerElem::single(4, 4, inverse(HeisElem::c()));
  CHECK((c4 * c4inv).components().empty());

  CHECK_THROWS_AS(u * PowerElem(3), std::invalid_argument);
  CHECK_THROWS_AS(PowerElem(0), std::invalid_argument);
  CHECK_THROWS_AS(u.at(5), std::out_of_range);
  CHECK_THROWS_AS(u.at(0), std::out_of_range);

  PowerElem s(4);
  s.set(3, HeisElem::b());
  s.set(3, HeisElem());
  CHECK(s.is_identity());

  CHECK(render(w) == "comp 1: a\ncomp 2: b\n");
  CHECK(render(PowerElem(2)) == "1\n");
}

TEST_CASE("singleton components multiply like the factors") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 200; ++k) {
    HeisElem x = random_elem(rng, 100), y = random_elem(rng, 100);
    auto u = PowerElem::single(6, 3, x) * PowerElem::single(6, 3, y);
    CHECK(u.at(3) == x * y);
    CHECK(u.components().size() <= 1);
    CHECK(power(PowerElem::single(6, 3, x), 4).at(3) == power(x, 4));
  }
}

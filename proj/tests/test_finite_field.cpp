#include <doctest.h>

#include <random>
#include <vector>

#include "mdscoset/errors.hpp"
#include "mdscoset/finite_field.hpp"

using namespace mdscoset;

namespace {

const std::vector<int> kOrders{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32};

void check_axioms(const Field& f, int a, int b, int c) {
  const auto x = f.element(a), y = f.element(b), z = f.element(c);
  REQUIRE(f.add(x, y) == f.add(y, x));
  REQUIRE(f.mul(x, y) == f.mul(y, x));
  REQUIRE(f.add(f.add(x, y), z) == f.add(x, f.add(y, z)));
  REQUIRE(f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)));
  REQUIRE(f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)));
}

}  // namespace

TEST_CASE("make_field examples") {
  const Field f5 = make_field(5);
  CHECK(f5.characteristic() == 5);
  CHECK(f5.degree() == 1);
  CHECK(f5.modulus().size() == 2);

  const Field f4 = make_field(4);
  CHECK(f4.modulus() == std::vector<int>{1, 1, 1});  // x^2 + x + 1

  CHECK_THROWS_AS(make_field(6), DomainError);
  CHECK_THROWS_AS(make_field(1), DomainError);
  CHECK_THROWS_AS(make_field(33), DomainError);
  CHECK_THROWS_AS(make_field(12), DomainError);
}

TEST_CASE("modulus is the smallest irreducible in base-p order") {
  CHECK(make_field(8).modulus() == std::vector<int>{1, 1, 0, 1});     // x^3 + x + 1
  CHECK(make_field(9).modulus() == std::vector<int>{1, 0, 1});        // x^2 + 1
  CHECK(make_field(16).modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4 + x + 1
  CHECK(make_field(27).modulus() == std::vector<int>{1, 2, 0, 1});    // x^3 + 2x + 1
  CHECK(make_field(25).modulus() == std::vector<int>{2, 0, 1});        // x^2 + 2
  CHECK(is_irreducible({1, 1, 1}, 2));
  CHECK_FALSE(is_irreducible({1, 0, 1}, 2));  // (x+1)^2
  CHECK_FALSE(is_irreducible({0, 0, 1}, 3));
}

TEST_CASE("arith examples") {
  const Field f5 = make_field(5);
  CHECK(f5.add(f5.element(2), f5.element(4)) == f5.element(1));
  const Field f7 = make_field(7);
  CHECK(f7.inv(f7.element(3)) == f7.element(5));
  const Field f4 = make_field(4);
  const auto alpha = f4.element(2);
  CHECK(f4.mul(alpha, alpha) == f4.element(3));  // alpha + 1
  CHECK_THROWS_AS(f7.inv(f7.zero()), DomainError);
  CHECK_THROWS_AS(f7.element(7), DomainError);
  CHECK(f7.neg(f7.element(3)) == f7.element(4));
  CHECK(f7.pow(f7.zero(), 0) == f7.one());
}

TEST_CASE("field axioms exhaustively for q <= 9") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const Field f = make_field(q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c) check_axioms(f, a, b, c);
  }
}

TEST_CASE("field axioms on random triples for q > 9") {
  std::mt19937 rng(20261018);
  for (int q : kOrders) {
    if (q <= 9) continue;
    const Field f = make_field(q);
    std::uniform_int_distribution<int> pick(0, q - 1);
    for (int i = 0; i < 100000; ++i) check_axioms(f, pick(rng), pick(rng), pick(rng));
  }
}

TEST_CASE("inverses, negation and exp/log tables for every supported q") {
  for (int q : kOrders) {
    const Field f = make_field(q);
    CAPTURE(q);
    for (int a = 0; a < q; ++a) {
      const auto x = f.element(a);
      REQUIRE(f.add(x, f.neg(x)) == f.zero());
      REQUIRE(f.add(x, f.zero()) == x);
      REQUIRE(f.mul(x, f.one()) == x);
      if (a == 0) continue;
      REQUIRE(f.mul(x, f.inv(x)) == f.one());
      REQUIRE(f.exp(f.log(x)) == x);
    }
    for (int e = 0; e < q - 1; ++e) REQUIRE(f.log(f.exp(e)) == e);
    // generator has full order
    int order = 1;
    auto g = f.generator();
    while (g != f.one()) {
      g = f.mul(g, f.generator());
      ++order;
    }
    CHECK(order == q - 1);
  }
}

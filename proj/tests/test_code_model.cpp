#include <doctest.h>

#include <vector>

#include "mdscoset/code_model.hpp"
#include "mdscoset/errors.hpp"

using namespace mdscoset;

namespace {

std::vector<CodeParams> all_params(int max_q) {
  std::vector<CodeParams> out;
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    if (q > max_q) continue;
    for (int n = 1; n <= q + 1; ++n)
      for (int k = 1; k <= n; ++k) out.push_back(make_params(n, k, q));
  }
  return out;
}

}  // namespace

TEST_CASE("make_params examples") {
  const auto a = make_params(6, 2, 5);
  CHECK(a.d() == 5);
  CHECK(a.t() == 2);
  const auto b = make_params(5, 3, 4);
  CHECK(b.d() == 3);
  CHECK(b.t() == 1);
  CHECK(make_params(4, 1, 3).t() == 1);  // d = 4
  CHECK_THROWS_AS(make_params(10, 2, 5), DomainError);
  CHECK_THROWS_AS(make_params(5, 0, 5), DomainError);
  CHECK_THROWS_AS(make_params(3, 4, 5), DomainError);
  CHECK_THROWS_AS(make_params(5, 2, 6), DomainError);
}

TEST_CASE("make_params error names the violated condition") {
  try {
    (void)make_params(10, 2, 5);
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("n <= q+1") != std::string::npos);
  }
}

TEST_CASE("build_code examples") {
  const auto code = build_code(make_params(6, 2, 5));
  const auto hist = codeword_weight_histogram(code);
  std::uint64_t total = 0;
  for (auto c : hist) total += c;
  CHECK(total == 25);
  CHECK(hist[0] == 1);
  CHECK(hist[5] == 24);  // every nonzero codeword has weight 5
  CHECK(hist[6] == 0);

  const auto rep = build_code(make_params(3, 1, 2));
  REQUIRE(rep.generator.rows() == 1);
  for (std::size_t j = 0; j < 3; ++j) CHECK(rep.generator(0, j) == rep.field.one());
}

TEST_CASE("generator and parity check are orthogonal, full rank and MDS") {
  for (const auto& p : all_params(9)) {
    CAPTURE(p.n());
    CAPTURE(p.k());
    CAPTURE(p.q());
    const auto code = build_code(p);
    REQUIRE(code.generator.rows() == static_cast<std::size_t>(p.k()));
    REQUIRE(code.parity_check.rows() == static_cast<std::size_t>(p.r()));
    REQUIRE(rank(code.field, code.generator) == static_cast<std::size_t>(p.k()));
    REQUIRE(rank(code.field, code.parity_check) == static_cast<std::size_t>(p.r()));
    const auto prod = multiply_transpose(code.field, code.generator, code.parity_check);
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) REQUIRE(prod(i, j) == code.field.zero());
    REQUIRE(has_mds_property(code));
  }
}

TEST_CASE("build_code is deterministic") {
  const auto a = build_code(make_params(9, 5, 8));
  const auto b = build_code(make_params(9, 5, 8));
  CHECK(a.generator == b.generator);
  CHECK(a.parity_check == b.parity_check);
}

TEST_CASE("has_mds_property detects a non-MDS generator") {
  auto code = build_code(make_params(4, 2, 3));
  code.generator(1, 1) = code.generator(1, 0);  // columns 0 and 1 now equal
  CHECK_FALSE(has_mds_property(code));
}

TEST_CASE("mds_weight examples") {
  const auto p = make_params(6, 2, 5);
  CHECK(mds_weight(p, 5) == 24);
  CHECK(mds_weight(p, 6) == 0);
  CHECK(mds_weight(p, 3) == 0);
  CHECK(mds_weight(p, 0) == 1);
  CHECK_THROWS_AS(mds_weight(p, 7), DomainError);
  CHECK_THROWS_AS(mds_weight(p, -1), DomainError);
}

TEST_CASE("weight enumerator: mass balance and A_d for every code with q <= 9") {
  for (const auto& p : all_params(9)) {
    const auto s = mds_weight_spectrum(p);
    CHECK(s.total() == ipow(p.q(), p.k()));
    CHECK(mds_weight(p, p.d()) == binom(p.n(), p.d()) * (p.q() - 1));
    for (int w = 0; w <= p.n(); ++w) CHECK(s[w] >= 0);
  }
}

TEST_CASE("weight enumerator agrees with codeword enumeration (q^k <= 1e6)") {
  for (const auto& p : all_params(9)) {
    if (ipow(p.q(), p.k()) > 1'000'000) continue;
    const auto hist = codeword_weight_histogram(build_code(p));
    for (int w = 0; w <= p.n(); ++w) {
      REQUIRE(mds_weight(p, w) == Integer(static_cast<unsigned long>(hist[w])));
    }
  }
}

TEST_CASE("codeword enumeration honours its budget") {
  CHECK_THROWS_AS(codeword_weight_histogram(build_code(make_params(9, 7, 9)), 1000), ResourceError);
}

TEST_CASE("sphere_volume examples") {
  CHECK(sphere_volume(6, 5, 0) == 1);
  CHECK(sphere_volume(6, 5, 1) == 25);
  CHECK(sphere_volume(6, 5, 2) == 265);
  CHECK_THROWS_AS(sphere_volume(2, 5, 3), DomainError);
  CHECK_THROWS_AS(sphere_volume(2, 5, -1), DomainError);
}

TEST_CASE("sphere_volume V_6(2) over GF(5) by enumeration") {
  int count = 0;
  for (int v = 0; v < 15625; ++v) {
    int x = v, w = 0;
    for (int i = 0; i < 6; ++i, x /= 5) w += x % 5 != 0;
    count += w <= 2;
  }
  CHECK(count == 265);
}

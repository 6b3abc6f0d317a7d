#include <doctest.h>

#include <vector>

#include "mdscoset/coset_oracle.hpp"
#include "mdscoset/errors.hpp"

using namespace mdscoset;

namespace {

Spectrum spectrum_of(std::vector<long> v) {
  std::vector<Integer> c;
  for (long x : v) c.emplace_back(x);
  return Spectrum(std::move(c));
}

void check_invariants(const CosetCensus& c) {
  const auto& p = c.params;
  Integer cosets = 0;
  Integer vectors = 0;
  for (const auto& [W, cls] : c.per_weight) {
    cosets += cls.coset_count;
    vectors += cls.spectrum.total();
    CHECK(cls.spectrum.total() == cls.coset_count * ipow(p.q(), p.k()));
    for (int w = 0; w < W; ++w) CHECK(cls.spectrum[w] == 0);
    if (W <= p.t()) {
      CHECK(cls.min_leaders == 1);
      CHECK(cls.max_leaders == 1);
    }
  }
  CHECK(cosets == ipow(p.q(), p.r()));
  CHECK(vectors == ipow(p.q(), p.n()));
  CHECK(c.spectrum(0) == mds_weight_spectrum(p));
}

}  // namespace

TEST_CASE("census of the length-3 repetition code over GF(2)") {
  const auto code = build_code(make_params(3, 1, 2));
  const auto c = census(code);
  CHECK(c.covering_radius == 1);
  CHECK(c.coset_count(0) == 1);
  CHECK(c.coset_count(1) == 3);
  CHECK(c.per_weight.size() == 2);
  CHECK(c.spectrum(1) == spectrum_of({0, 3, 3, 0}));
  check_invariants(c);
}

TEST_CASE("census of [6,2,5]_5") {
  const auto c = census(build_code(make_params(6, 2, 5)));
  CHECK(c.covering_radius == 3);
  CHECK(c.coset_count(0) == 1);
  CHECK(c.coset_count(1) == 24);
  CHECK(c.coset_count(2) == 240);
  CHECK(c.coset_count(3) == 360);
  CHECK(c.spectrum(1) == spectrum_of({0, 24, 0, 0, 120, 360, 96}));
  CHECK(c.spectrum(2) == spectrum_of({0, 0, 240, 240, 1440, 2640, 1440}));
  CHECK(c.spectrum(3) == spectrum_of({0, 0, 0, 1040, 2280, 3120, 2560}));
  CHECK(c.spectrum(3).total() == 9000);
  check_invariants(c);
}

TEST_CASE("covering radius examples") {
  CHECK(covering_radius(build_code(make_params(4, 4, 5))) == 0);
  CHECK(covering_radius(build_code(make_params(3, 1, 2))) == 1);
  CHECK(covering_radius(build_code(make_params(6, 2, 5))) == 3);
  CHECK(covering_radius(build_code(make_params(8, 4, 7))) == 3);
}

TEST_CASE("serial and parallel kernels produce identical tables") {
  const std::vector<std::array<int, 3>> cases{
      {3, 1, 2}, {4, 4, 3}, {5, 3, 4}, {5, 1, 4}, {6, 2, 5}, {6, 4, 5}, {6, 3, 5}, {8, 4, 7}, {7, 2, 7}, {9, 6, 8}};
  for (auto [n, k, q] : cases) {
    CAPTURE(n);
    CAPTURE(k);
    CAPTURE(q);
    const auto code = build_code(make_params(n, k, q));
    const auto serial = syndrome_table_serial(code);
    for (int workers : {1, 2, 3, 8}) {
      CensusOptions o;
      o.workers = workers;
      REQUIRE(syndrome_table_parallel(code, o) == serial);
    }
  }
}

TEST_CASE("census invariants across small codes") {
  for (int q : {2, 3, 4, 5}) {
    for (int n = 1; n <= q + 1; ++n) {
      for (int k = 1; k <= n; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(q);
        check_invariants(census(build_code(make_params(n, k, q))));
      }
    }
  }
}

TEST_CASE("budget is enforced before enumeration") {
  const auto code = build_code(make_params(10, 6, 9));  // 9^10 > 2e8
  CHECK_THROWS_AS(census(code), ResourceError);
  CHECK_THROWS_AS(census_serial(code), ResourceError);
  CHECK_THROWS_AS(census_serial(build_code(make_params(6, 2, 5)), 1000), ResourceError);
  CHECK_NOTHROW(check_budget(make_params(9, 5, 8), kDefaultVectorBudget, 8));
}

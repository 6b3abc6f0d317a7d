#include <doctest.h>

#include "mdscoset/errors.hpp"
#include "mdscoset/identities.hpp"
#include "mdscoset/spectra_formulas.hpp"

using namespace mdscoset;

// Expected values for [6,2,5]_5 below were produced by exhaustive coset
// census of GF(5)^6 (see test_coset_oracle.cpp, which re-derives them).

TEST_CASE("cheung_cumulative examples") {
  const auto p = make_params(6, 2, 5);
  CHECK(cheung_cumulative(p, 1, 4) == 120);
  CHECK(cheung_cumulative(p, 2, 3) == 240);
  CHECK(cheung_cumulative(p, 1, 5) == 384);
  CHECK_THROWS_AS(cheung_cumulative(p, 1, 3), DomainError);  // u < d - t_cap
  CHECK_THROWS_AS(cheung_cumulative(p, 3, 5), DomainError);  // t_cap > t
  CHECK_THROWS_AS(cheung_cumulative(p, 0, 5), DomainError);
}

TEST_CASE("sigma_le1 examples, both forms") {
  const auto p = make_params(6, 2, 5);
  for (auto f : {Le1Form::lemma, Le1Form::corollary}) {
    CHECK(sigma_le1(p, 4, f) == 120);
    CHECK(sigma_le1(p, 6, f) == 96);
    CHECK(sigma_le1(p, 5, f) == 384);
  }
  CHECK_THROWS_AS(sigma_le1(p, 3), DomainError);
  CHECK_THROWS_AS(sigma_le1(make_params(4, 3, 5), 2), DomainError);  // d = 2
}

TEST_CASE("sigma_w1 examples, every applicable form") {
  const auto p = make_params(6, 2, 5);
  const std::pair<int, int> expected[] = {{4, 120}, {5, 360}, {6, 96}};
  for (auto [w, v] : expected) {
    for (auto f : applicable_forms_w1(p, w)) {
      CAPTURE(to_string(form(f)));
      CHECK(sigma_w1(p, w, f) == v);
    }
  }
  CHECK(applicable_forms_w1(p, 4).size() == 7);
}

TEST_CASE("sigma_w1 rejects mismatched specializations") {
  const auto p = make_params(5, 3, 5);  // n != q+1
  CHECK_THROWS_AS(sigma_w1(p, 3, W1Form::length_q_plus_1), DomainError);
  CHECK_THROWS_AS(sigma_w1(p, 3, W1Form::length_q_plus_1_d5), DomainError);
  const auto e = make_params(6, 3, 5);  // n = q+1, d = 4
  CHECK_NOTHROW(sigma_w1(e, 4, W1Form::length_q_plus_1));
  CHECK_THROWS_AS(sigma_w1(e, 4, W1Form::length_q_plus_1_d5), DomainError);
  CHECK_THROWS_AS(sigma_w1(e, 2, W1Form::binomial_sum), DomainError);  // w < d-1
}

TEST_CASE("sigma_le2 examples") {
  const auto p = make_params(6, 2, 5);
  CHECK(sigma_le2(p, 3) == 240);
  CHECK(sigma_le2(p, 4) == 1560);
  CHECK(sigma_le2(p, 6) == 1536);
  CHECK_THROWS_AS(sigma_le2(p, 2), DomainError);
  CHECK_THROWS_AS(sigma_le2(make_params(5, 2, 5), 3), DomainError);  // d = 4
}

TEST_CASE("sigma_w2 examples, every applicable form") {
  const auto p = make_params(6, 2, 5);
  const std::pair<int, int> expected[] = {{3, 240}, {4, 1440}, {5, 2640}, {6, 1440}};
  for (auto [w, v] : expected) {
    for (auto f : applicable_forms_w2(p, w)) {
      CAPTURE(to_string(form(f)));
      CHECK(sigma_w2(p, w, f) == v);
    }
  }
  CHECK_THROWS_AS(sigma_w2(make_params(7, 3, 7), 3, W2Form::length_q_plus_1_d5), DomainError);
}

TEST_CASE("sigma_w3 examples, every applicable form") {
  const auto p = make_params(6, 2, 5);
  const std::pair<int, int> expected[] = {{3, 1040}, {4, 2280}, {5, 3120}, {6, 2560}};
  for (auto [w, v] : expected) {
    for (auto f : applicable_forms_w3(p)) {
      CAPTURE(to_string(form(f)));
      CHECK(sigma_w3(p, w, f, 3) == v);
    }
  }
  CHECK_THROWS_AS(sigma_w3(p, 4, W3Form::complement, 2), DomainError);      // R != 3
  CHECK_THROWS_AS(sigma_w3(p, 2, W3Form::complement, 3), DomainError);      // w < 3
  CHECK_THROWS_AS(sigma_w3(make_params(6, 3, 5), 4, W3Form::complement, 3), DomainError);  // d = 4
  CHECK_THROWS_AS(sigma_w3(make_params(7, 3, 7), 4, W3Form::length_q_plus_1, 3), DomainError);
}

TEST_CASE("full_spectrum examples and stitching") {
  const auto p = make_params(6, 2, 5);
  const auto s0 = full_spectrum(p, 0);
  CHECK(s0[5] == 24);
  const auto s1 = full_spectrum(p, 1);
  CHECK(s1[0] == 0);
  CHECK(s1[1] == 24);
  CHECK(s1[2] == 0);
  CHECK(s1[3] == 0);
  CHECK(s1[5] == 360);
  const auto s2 = full_spectrum(p, 2);
  CHECK(s2[1] == 0);
  CHECK(s2[2] == 240);
  const auto s3 = full_spectrum(p, 3, 3);
  CHECK(s3.total() == 9000);
  CHECK(s3[2] == 0);

  CHECK_THROWS_AS(full_spectrum(p, 3), DomainError);  // radius unknown
  CHECK_THROWS_AS(full_spectrum(p, 4), DomainError);
  CHECK_THROWS_AS(full_spectrum(make_params(5, 3, 4), 2), DomainError);
}

TEST_CASE("coset mass and totality for [n, n-4, 5]_q codes of length q+1") {
  for (int q : {5, 7, 8, 9}) {
    const auto p = make_params(q + 1, q - 3, q);
    const auto qk = ipow(q, p.k());
    Integer all = 0;
    for (int W = 0; W <= 3; ++W) {
      const auto s = full_spectrum(p, W, 3);
      CHECK(s.total() == expected_coset_count(p, W) * qk);
      all += s.total();
    }
    CHECK(all == ipow(q, p.n()));
    for (int w = 0; w <= p.n(); ++w) {
      Integer sum = 0;
      for (int W = 0; W <= 3; ++W) sum += full_spectrum(p, W, 3)[w];
      CHECK(sum == binom(p.n(), w) * ipow(q - 1, w));
    }
  }
}

TEST_CASE("coset mass for W = 1, 2 over all codes with q <= 9") {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    for (int n = 1; n <= q + 1; ++n) {
      for (int k = 1; k <= n; ++k) {
        const auto p = make_params(n, k, q);
        for (int W = 1; W <= 2; ++W) {
          if (!coset_weight_admissible(p, W)) continue;
          CHECK(full_spectrum(p, W).total() == expected_coset_count(p, W) * ipow(q, k));
        }
      }
    }
  }
}

TEST_CASE("helper_terms examples") {
  const auto p = make_params(6, 2, 5);
  const auto h5 = helper_terms(p, 5);
  REQUIRE(h5.omega[0].has_value());
  CHECK(*h5.omega[0] == 24);

  const auto h4 = helper_terms(p, 4);
  REQUIRE(h4.delta.has_value());
  CHECK(*h4.delta == -720);
  CHECK(*h4.delta_star == Rational(-3));
  CHECK(*h4.delta == exact_integer(Rational(binom(6, 2) * 16) * *h4.delta_star));

  const auto h3 = helper_terms(p, p.d() - 2);
  CHECK(*h3.omega[0] == 0);
  REQUIRE(h3.phi[1].has_value());  // n = q+1, d = 5

  const auto other = helper_terms(make_params(5, 1, 5), 3);
  CHECK_FALSE(other.phi[1].has_value());
  FormulaEvaluator ev(make_params(5, 1, 5));
  CHECK_THROWS_AS(ev.phi(3, 1), DomainError);
  CHECK_THROWS_AS(helper_terms(p, 7), DomainError);
}

TEST_CASE("delta_star is a genuine fraction when q-1 does not divide") {
  // [8,4,5]_7 at w = 5: binom(5,3) binom(6,3) / 6 = 200/6.
  FormulaEvaluator ev(make_params(8, 4, 7));
  CHECK(ev.delta_star(5) == Rational(100, 3));
}

TEST_CASE("all forms agree over every constructible code with q <= 9") {
  for (const auto& s : run_form_sweeps(9)) {
    INFO(s.name);
    for (const auto& f : s.failures) INFO(f);
    CHECK(s.cases > 0);
    CHECK(s.ok());
  }
}

TEST_CASE("binomial fault injection changes the targeted form only") {
  const auto p = make_params(6, 2, 5);
  FormulaEvaluator clean(p);
  FormulaEvaluator faulty(p, BinomialFault{form(W1Form::omega_sum), 0, 1});
  CHECK(faulty.sigma_w1(5, W1Form::omega_sum) != clean.sigma_w1(5, W1Form::omega_sum));
  CHECK(faulty.sigma_w1(5, W1Form::binomial_sum) == clean.sigma_w1(5, W1Form::binomial_sum));
  CHECK(faulty.last_binomial_calls() > 0);
}

TEST_CASE("to_string names forms") {
  CHECK(to_string(form(W2Form::omega_weight)) == "sigma_w2/omega_weight");
  CHECK(to_string(FormId{Family::cheung_cumulative, 2}) == "cheung_cumulative[t=2]");
  CHECK(to_string(FormId{Family::sigma_le2, 0}) == "sigma_le2");
}

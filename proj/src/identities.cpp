#include "mdscoset/identities.hpp"

#include <exception>
#include <functional>
#include <string>

#include "mdscoset/code_model.hpp"
#include "mdscoset/combinatorics.hpp"
#include "mdscoset/errors.hpp"
#include "mdscoset/spectra_formulas.hpp"

namespace mdscoset {

namespace {

constexpr std::size_t kMaxReportedFailures = 8;

class Sweep {
 public:
  explicit Sweep(std::string name) { result_.name = std::move(name); }

  void check(bool ok, const std::function<std::string()>& describe) {
    ++result_.cases;
    if (!ok && result_.failures.size() < kMaxReportedFailures) result_.failures.push_back(describe());
  }

  // Evaluates both sides, treating an exception as a failure.
  void equal(const std::function<Integer()>& lhs, const std::function<Integer()>& rhs,
             const std::function<std::string()>& where) {
    try {
      const Integer a = lhs();
      const Integer b = rhs();
      check(a == b, [&] { return where() + ": " + a.get_str() + " != " + b.get_str(); });
    } catch (const std::exception& e) {
      check(false, [&] { return where() + ": " + e.what(); });
    }
  }

  SweepResult take() { return std::move(result_); }

 private:
  SweepResult result_;
};

Integer signed_by(long e, Integer x) {
  if (neg_one_pow(e) < 0) x = -x;
  return x;
}

std::string args(std::initializer_list<std::pair<const char*, long>> kv) {
  std::string s = "(";
  bool first = true;
  for (const auto& [k, v] : kv) {
    if (!first) s += ", ";
    s += std::string(k) + "=" + std::to_string(v);
    first = false;
  }
  return s + ")";
}

bool is_prime_power(int q) {
  try {
    (void)make_field(q);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<CodeParams> constructible(int max_q) {
  std::vector<CodeParams> out;
  for (int q = 2; q <= max_q && q <= 32; ++q) {
    if (!is_prime_power(q)) continue;
    for (int n = 1; n <= q + 1; ++n) {
      for (int k = 1; k <= n; ++k) out.push_back(make_params(n, k, q));
    }
  }
  return out;
}

std::string code_name(const CodeParams& p) {
  return "[" + std::to_string(p.n()) + "," + std::to_string(p.k()) + "," + std::to_string(p.d()) + "]_" +
         std::to_string(p.q());
}

}  // namespace

std::vector<SweepResult> run_identity_sweeps(int max_w, int max_q) {
  if (max_w < 0 || max_w > kMaxIdentityWeight) {
    throw DomainError("max_w=" + std::to_string(max_w) + " outside [0, " + std::to_string(kMaxIdentityWeight) + "]");
  }
  if (max_q > 32) throw DomainError("max_q=" + std::to_string(max_q) + " exceeds 32");
  std::vector<SweepResult> out;

  {
    Sweep s("pascal");
    for (long n = 1; n <= max_w; ++n) {
      for (long k = 1; k <= n; ++k) {
        s.equal([&] { return binom(n, k); }, [&] { return Integer(binom(n - 1, k) + binom(n - 1, k - 1)); },
                [&] { return args({{"n", n}, {"k", k}}); });
      }
    }
    out.push_back(s.take());
  }
  {
    Sweep s("subset_chain");
    for (long n = 0; n <= max_w; ++n) {
      for (long m = 0; m <= n; ++m) {
        for (long p = 0; p <= m; ++p) {
          const auto where = [&] { return args({{"n", n}, {"m", m}, {"p", p}}); };
          s.equal([&] { return Integer(binom(n, m) * binom(m, p)); },
                  [&] { return Integer(binom(n, p) * binom(n - p, m - p)); }, where);
          s.equal([&] { return Integer(binom(n, p) * binom(n - p, m - p)); },
                  [&] { return Integer(binom(n, m - p) * binom(n - m + p, p)); }, where);
        }
      }
    }
    out.push_back(s.take());
  }
  {
    Sweep s("alternating_sum");
    for (long n = 1; n <= max_w; ++n) {
      for (long m = 0; m <= n; ++m) {
        s.equal([&] { return alt_binom_sum(n, m); }, [&] { return signed_by(m, binom(n - 1, m)); },
                [&] { return args({{"n", n}, {"m", m}}); });
      }
    }
    out.push_back(s.take());
  }
  {
    // sum_{j=0}^{m} (-1)^j binom(w,j) binom(w-j,v) = (-1)^m binom(w,v) binom(w-v-1,m), v+m <= w.
    // The right side needs w-v-1 >= 0; at v = w the sum has only j = 0 and
    // both sides reduce to [m = 0].
    Sweep s("shifted_alternating_lemma");
    for (long w = 0; w <= max_w; ++w) {
      for (long v = 0; v <= w; ++v) {
        for (long m = 0; v + m <= w; ++m) {
          s.equal(
              [&] {
                Integer acc = 0;
                for (long j = 0; j <= m; ++j) acc += signed_by(j, binom(w, j) * binom(w - j, v));
                return acc;
              },
              [&] {
                if (w - v - 1 < 0) return Integer(m == 0 ? 1 : 0);
                return signed_by(m, binom(w, v) * binom(w - v - 1, m));
              },
              [&] { return args({{"w", w}, {"v", v}, {"m", m}}); });
        }
      }
    }
    out.push_back(s.take());
  }
  {
    // sum_{j=0}^{w+1-d} (-1)^j binom(w,j) q^{w+1-d-j}
    //   = sum_{j=0}^{w-d} (-1)^j binom(w,j)(q^{w+1-d-j} - 1) - (-1)^{w-d} binom(w-1,d-2)
    Sweep s("q_power_lemma");
    for (long q = 2; q <= max_q; ++q) {
      for (long w = 3; w <= max_w; ++w) {
        for (long d = 3; d <= w; ++d) {
          s.equal(
              [&] {
                Integer acc = 0;
                for (long j = 0; j <= w + 1 - d; ++j) acc += signed_by(j, binom(w, j) * ipow(q, w + 1 - d - j));
                return acc;
              },
              [&] {
                Integer acc = 0;
                for (long j = 0; j <= w - d; ++j) acc += signed_by(j, binom(w, j) * (ipow(q, w + 1 - d - j) - 1));
                return Integer(acc - signed_by(w - d, binom(w - 1, d - 2)));
              },
              [&] { return args({{"q", q}, {"w", w}, {"d", d}}); });
        }
      }
    }
    out.push_back(s.take());
  }
  {
    Sweep s("delta_star");
    for (const auto& p : constructible(max_q)) {
      if (p.n() < 2 || p.d() < 2) continue;
      FormulaEvaluator ev(p);
      for (int w = 0; w <= p.n(); ++w) {
        s.equal([&] { return ev.delta(w); },
                [&] {
                  const Rational scaled =
                      Rational(binom(p.n(), 2) * (p.q() - 1) * (p.q() - 1)) * ev.delta_star(w);
                  return exact_integer(scaled);
                },
                [&] { return code_name(p) + " w=" + std::to_string(w); });
      }
    }
    out.push_back(s.take());
  }
  return out;
}

std::vector<SweepResult> run_form_sweeps(int max_q) {
  if (max_q > 32) throw DomainError("max_q=" + std::to_string(max_q) + " exceeds 32");
  Sweep mass("weight_enumerator_mass");
  Sweep le1("sigma_le1_forms");
  Sweep w1("sigma_w1_forms");
  Sweep w2("sigma_w2_forms");
  Sweep w3("sigma_w3_forms");
  Sweep decomp("decomposition");
  Sweep cheung("cheung_consistency");

  for (const auto& p : constructible(max_q)) {
    FormulaEvaluator ev(p);
    const int n = p.n();
    const int d = p.d();
    const std::string name = code_name(p);
    const auto at = [&](int w) { return [name, w] { return name + " w=" + std::to_string(w); }; };

    mass.equal(
        [&] {
          Integer s = 0;
          for (int w = 0; w <= n; ++w) s += ev.weight_enumerator(w);
          return s;
        },
        [&] { return ipow(p.q(), p.k()); }, [name] { return name; });

    if (d >= 3) {
      for (int w = d - 1; w <= n; ++w) {
        le1.equal([&] { return ev.sigma_le1(w, Le1Form::lemma); }, [&] { return ev.sigma_le1(w, Le1Form::corollary); },
                  at(w));
        for (auto f : applicable_forms_w1(p, w)) {
          if (f == W1Form::binomial_sum) continue;
          w1.equal([&] { return ev.sigma_w1(w, W1Form::binomial_sum); }, [&] { return ev.sigma_w1(w, f); },
                   [&, f] { return at(w)() + " " + to_string(form(f)); });
        }
        decomp.equal([&] { return ev.sigma_le1(w, Le1Form::lemma); },
                     [&] { return Integer(ev.weight_enumerator(w) + ev.sigma_w1(w, W1Form::binomial_sum)); }, at(w));
        cheung.equal([&] { return ev.cheung_cumulative(1, w); }, [&] { return ev.sigma_le1(w, Le1Form::lemma); },
                     at(w));
      }
    }
    if (d >= 5) {
      for (int w = d - 2; w <= n; ++w) {
        for (auto f : applicable_forms_w2(p, w)) {
          if (f == W2Form::binomial_sum) continue;
          w2.equal([&] { return ev.sigma_w2(w, W2Form::binomial_sum); }, [&] { return ev.sigma_w2(w, f); },
                   [&, f] { return at(w)() + " " + to_string(form(f)); });
        }
        // Below w = d-1 nothing of weight <= 1 has weight w.
        decomp.equal([&] { return ev.sigma_le2(w); },
                     [&] {
                       const Integer le1v = w >= d - 1 ? ev.sigma_le1(w, Le1Form::lemma) : Integer(0);
                       return Integer(le1v + ev.sigma_w2(w, W2Form::binomial_sum));
                     },
                     at(w));
        cheung.equal([&] { return ev.cheung_cumulative(2, w); }, [&] { return ev.sigma_le2(w); }, at(w));
      }
    }
    if (coset_weight_admissible(p, 3)) {
      // Algebraic agreement only; whether R = 3 holds is the oracle's call.
      for (int w = 3; w <= n; ++w) {
        for (auto f : applicable_forms_w3(p)) {
          if (f == W3Form::complement) continue;
          w3.equal([&] { return ev.sigma_w3(w, W3Form::complement, 3); }, [&] { return ev.sigma_w3(w, f, 3); },
                   [&, f] { return at(w)() + " " + to_string(form(f)); });
        }
      }
    }
  }
  return {mass.take(), le1.take(), w1.take(), w2.take(), w3.take(), decomp.take(), cheung.take()};
}

}  // namespace mdscoset

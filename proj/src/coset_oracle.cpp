#include "mdscoset/coset_oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "mdscoset/errors.hpp"

namespace mdscoset {

namespace {

constexpr std::uint64_t kTableMemoryBudget = 1ull << 30;

std::uint64_t checked_pow(std::uint64_t base, int exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

// a * H[:, i] for every coordinate i and field element a, as syndrome digits.
struct ColumnContributions {
  int r;
  int q;
  std::vector<std::uint8_t> digits;  // [(i * q + a) * r + row]

  const std::uint8_t* at(int i, int a) const { return digits.data() + (static_cast<std::size_t>(i) * q + a) * r; }
};

ColumnContributions column_contributions(const MdsCode& code) {
  const int n = code.params.n();
  const int q = code.params.q();
  const int r = code.params.r();
  ColumnContributions c{r, q, std::vector<std::uint8_t>(static_cast<std::size_t>(n) * q * r)};
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < q; ++a) {
      for (int row = 0; row < r; ++row) {
        c.digits[(static_cast<std::size_t>(i) * q + a) * r + row] =
            code.field.mul(code.field.element(a), code.parity_check(row, i)).index;
      }
    }
  }
  return c;
}

std::size_t pack(const std::uint8_t* s, int r, int q) {
  std::size_t b = 0;
  for (int row = r; row-- > 0;) b = b * q + s[row];
  return b;
}

}  // namespace

void check_budget(const CodeParams& params, std::uint64_t max_vectors, int workers) {
  const std::uint64_t vectors = checked_pow(params.q(), params.n(), max_vectors);
  if (vectors > max_vectors) {
    throw ResourceError("enumeration budget exceeded: q^n = " + std::to_string(params.q()) + "^" +
                        std::to_string(params.n()) + " > " + std::to_string(max_vectors));
  }
  const std::uint64_t buckets = checked_pow(params.q(), params.r(), max_vectors);
  const std::uint64_t bytes = buckets * (params.n() + 1) * sizeof(std::uint64_t) * std::max(workers, 1);
  if (bytes > kTableMemoryBudget) {
    throw ResourceError("syndrome tables need " + std::to_string(bytes) + " bytes, over the memory budget");
  }
}

SyndromeTable syndrome_table_serial(const MdsCode& code, std::uint64_t max_vectors) {
  check_budget(code.params, max_vectors);
  const int n = code.params.n();
  const int q = code.params.q();
  const int r = code.params.r();
  const auto contrib = column_contributions(code);
  const auto& add = code.field.addition_table();

  // step[i][a]: syndrome change when coordinate i moves from a to a+1 (mod q).
  std::vector<std::uint8_t> step(static_cast<std::size_t>(n) * q * r);
  for (int i = 0; i < n; ++i) {
    for (int a = 0; a < q; ++a) {
      const std::uint8_t* from = contrib.at(i, a);
      const std::uint8_t* to = contrib.at(i, (a + 1) % q);
      for (int row = 0; row < r; ++row) {
        const FieldElement diff = code.field.sub(FieldElement{to[row]}, FieldElement{from[row]});
        step[(static_cast<std::size_t>(i) * q + a) * r + row] = diff.index;
      }
    }
  }

  SyndromeTable table;
  table.n = n;
  table.buckets = checked_pow(q, r, max_vectors);
  table.counts.assign(table.buckets * (n + 1), 0);

  std::vector<int> v(n, 0);
  std::vector<std::uint8_t> syn(std::max(r, 1), 0);
  int weight = 0;
  while (true) {
    ++table.counts[pack(syn.data(), r, q) * (n + 1) + weight];
    int i = n - 1;
    for (; i >= 0; --i) {
      const int a = v[i];
      const std::uint8_t* delta = step.data() + (static_cast<std::size_t>(i) * q + a) * r;
      for (int row = 0; row < r; ++row) syn[row] = add[syn[row] * q + delta[row]];
      if (a + 1 < q) {
        v[i] = a + 1;
        if (a == 0) ++weight;
        break;
      }
      v[i] = 0;
      --weight;
    }
    if (i < 0) break;
  }
  return table;
}

SyndromeTable syndrome_table_parallel(const MdsCode& code, const CensusOptions& options) {
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
  check_budget(code.params, options.max_vectors, workers);
  const int n = code.params.n();
  const int q = code.params.q();
  const int r = code.params.r();
  const auto contrib = column_contributions(code);
  const auto& add = code.field.addition_table();

  const std::size_t buckets = checked_pow(q, r, options.max_vectors);
  // Suffix block of trailing coordinates, enumerated once; one more coordinate
  // than the redundancy keeps the per-prefix translation cost amortized.
  const int suffix_len = std::min(n, r + 1);
  const int prefix_len = n - suffix_len;
  const std::size_t suffix_count = checked_pow(q, suffix_len, options.max_vectors);
  const std::size_t prefix_count = checked_pow(q, prefix_len, options.max_vectors);

  // Unpacked digits of every syndrome index.
  std::vector<std::uint8_t> unpacked(buckets * std::max(r, 1), 0);
  for (std::size_t b = 0; b < buckets; ++b) {
    std::size_t x = b;
    for (int row = 0; row < r; ++row) {
      unpacked[b * r + row] = static_cast<std::uint8_t>(x % q);
      x /= q;
    }
  }

  std::vector<std::uint32_t> suffix_syndrome(suffix_count);
  std::vector<std::uint8_t> suffix_weight(suffix_count);
  {
    std::vector<std::uint8_t> syn(std::max(r, 1));
    for (std::size_t s = 0; s < suffix_count; ++s) {
      std::fill(syn.begin(), syn.end(), 0);
      std::size_t x = s;
      int w = 0;
      for (int i = n - 1; i >= prefix_len; --i) {
        const int a = static_cast<int>(x % q);
        x /= q;
        w += a != 0;
        const std::uint8_t* c = contrib.at(i, a);
        for (int row = 0; row < r; ++row) syn[row] = add[syn[row] * q + c[row]];
      }
      suffix_syndrome[s] = static_cast<std::uint32_t>(pack(syn.data(), r, q));
      suffix_weight[s] = static_cast<std::uint8_t>(w);
    }
  }

  SyndromeTable table;
  table.n = n;
  table.buckets = buckets;
  table.counts.assign(buckets * (n + 1), 0);
  const std::size_t stride = static_cast<std::size_t>(n) + 1;

#pragma omp parallel num_threads(workers)
  {
    std::vector<std::uint64_t> local(buckets * stride, 0);
    std::vector<std::uint32_t> translate(buckets);
    std::vector<std::uint8_t> syn(std::max(r, 1));

#pragma omp for schedule(dynamic, 4)
    for (long long p = 0; p < static_cast<long long>(prefix_count); ++p) {
      std::fill(syn.begin(), syn.end(), 0);
      std::size_t x = static_cast<std::size_t>(p);
      int wp = 0;
      for (int i = prefix_len - 1; i >= 0; --i) {
        const int a = static_cast<int>(x % q);
        x /= q;
        wp += a != 0;
        const std::uint8_t* c = contrib.at(i, a);
        for (int row = 0; row < r; ++row) syn[row] = add[syn[row] * q + c[row]];
      }
      for (std::size_t b = 0; b < buckets; ++b) {
        std::size_t packed = 0;
        for (int row = r; row-- > 0;) packed = packed * q + add[syn[row] * q + unpacked[b * r + row]];
        translate[b] = static_cast<std::uint32_t>(packed);
      }
      std::uint64_t* base = local.data() + wp;
      for (std::size_t s = 0; s < suffix_count; ++s) {
        ++base[translate[suffix_syndrome[s]] * stride + suffix_weight[s]];
      }
    }

#pragma omp critical(mdscoset_merge)
    for (std::size_t i = 0; i < local.size(); ++i) table.counts[i] += local[i];
  }
  return table;
}

CosetCensus summarize(const CodeParams& params, const SyndromeTable& table) {
  CosetCensus c{params, 0, {}};
  const int n = table.n;
  for (std::size_t b = 0; b < table.buckets; ++b) {
    int min_w = 0;
    while (min_w <= n && table.at(b, min_w) == 0) ++min_w;
    if (min_w > n) throw std::logic_error("census: empty syndrome bucket " + std::to_string(b));

    auto [it, inserted] = c.per_weight.try_emplace(min_w);
    CosetClass& cls = it->second;
    const std::uint64_t leaders = table.at(b, min_w);
    if (inserted) {
      cls.spectrum = Spectrum(n);
      cls.min_leaders = leaders;
      cls.max_leaders = leaders;
    }
    cls.coset_count += 1;
    cls.min_leaders = std::min(cls.min_leaders, leaders);
    cls.max_leaders = std::max(cls.max_leaders, leaders);
    for (int w = 0; w <= n; ++w) {
      const std::uint64_t v = table.at(b, w);
      if (v != 0) cls.spectrum[w] += Integer(static_cast<unsigned long>(v));
    }
    c.covering_radius = std::max(c.covering_radius, min_w);
  }
  return c;
}

Spectrum CosetCensus::spectrum(int coset_weight) const {
  auto it = per_weight.find(coset_weight);
  if (it == per_weight.end()) return Spectrum(params.n());
  return it->second.spectrum;
}

Integer CosetCensus::coset_count(int coset_weight) const {
  auto it = per_weight.find(coset_weight);
  return it == per_weight.end() ? Integer(0) : it->second.coset_count;
}

CosetCensus census(const MdsCode& code, const CensusOptions& options) {
  return summarize(code.params, syndrome_table_parallel(code, options));
}

CosetCensus census_serial(const MdsCode& code, std::uint64_t max_vectors) {
  return summarize(code.params, syndrome_table_serial(code, max_vectors));
}

int covering_radius(const MdsCode& code, const CensusOptions& options) {
  return census(code, options).covering_radius;
}

}  // namespace mdscoset

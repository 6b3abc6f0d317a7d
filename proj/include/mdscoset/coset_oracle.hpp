#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "mdscoset/code_model.hpp"
#include "mdscoset/combinatorics.hpp"

namespace mdscoset {

// Ground truth by exhaustive enumeration of GF(q)^n. Every vector is visited,
// its syndrome H v^T selects a bucket (one bucket per coset), and each bucket
// keeps a Hamming-weight histogram. Nothing is inferred from code structure.

inline constexpr std::uint64_t kDefaultVectorBudget = 200'000'000;

/// Per-syndrome weight histograms: counts[bucket * (n + 1) + w]. The bucket
/// index packs the syndrome digits base q, first parity row least significant.
struct SyndromeTable {
  int n = 0;
  std::size_t buckets = 0;
  std::vector<std::uint64_t> counts;

  std::uint64_t at(std::size_t bucket, int w) const { return counts[bucket * (n + 1) + w]; }
  friend bool operator==(const SyndromeTable&, const SyndromeTable&) = default;
};

/// Aggregate over all cosets of one weight W.
struct CosetClass {
  Integer coset_count = 0;
  Spectrum spectrum;
  /// Range of the number of minimum-weight vectors (leaders) per coset.
  std::uint64_t min_leaders = 0;
  std::uint64_t max_leaders = 0;
};

struct CosetCensus {
  CodeParams params;
  int covering_radius = 0;
  std::map<int, CosetClass> per_weight;

  /// Spectrum of coset weight W; all zeros when no coset has that weight.
  Spectrum spectrum(int coset_weight) const;
  Integer coset_count(int coset_weight) const;
};

struct CensusOptions {
  /// OpenMP worker threads; 0 uses the runtime default.
  int workers = 0;
  std::uint64_t max_vectors = kDefaultVectorBudget;
};

/// Throws ResourceError if q^n exceeds max_vectors or the bucket tables would
/// not fit in memory.
void check_budget(const CodeParams& params, std::uint64_t max_vectors, int workers = 1);

/// Reference kernel: single odometer in lexicographic order, syndrome updated
/// by one column per step.
SyndromeTable syndrome_table_serial(const MdsCode& code, std::uint64_t max_vectors = kDefaultVectorBudget);

/// Parallel kernel: the leading coordinates are partitioned across workers;
/// each worker combines its prefixes with a precomputed table of all suffixes
/// into a private bucket table, and the tables are summed. The result is
/// identical to the serial kernel for any worker count.
SyndromeTable syndrome_table_parallel(const MdsCode& code, const CensusOptions& options = {});

/// Aggregates buckets by coset weight.
CosetCensus summarize(const CodeParams& params, const SyndromeTable& table);

CosetCensus census(const MdsCode& code, const CensusOptions& options = {});
CosetCensus census_serial(const MdsCode& code, std::uint64_t max_vectors = kDefaultVectorBudget);

int covering_radius(const MdsCode& code, const CensusOptions& options = {});

}  // namespace mdscoset

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqlab/natural.hpp"

namespace seqlab {

// Greedy sequence from 1 with no t terms in arithmetic progression.
std::vector<std::uint64_t> nap_sequence(unsigned t, std::size_t n);

// Keep/skip block sieve over the naturals 1, 2, 3, ...
//
//   block_runs:       one left-to-right pass; block k keeps keep(k) numbers
//                     then deletes the next skip(k), k = first_k, first_k+1, ...
//   periodic_passes:  pass k walks the current survivors repeating
//                     "keep keep(k), delete skip(k)"; passes k = first_k, ...
//
// keep(k) = keep_scale * k + keep_offset, skip(k) = skip_scale * k + skip_offset.
struct SieveSchedule {
  enum class Mode { block_runs, periodic_passes };

  Mode mode = Mode::block_runs;
  std::uint64_t first_k = 2;
  std::uint64_t keep_scale = 1;
  std::int64_t keep_offset = 0;
  std::uint64_t skip_scale = 1;
  std::int64_t skip_offset = 1;

  std::uint64_t keep(std::uint64_t k) const;
  std::uint64_t skip(std::uint64_t k) const;

  // "Keep the first k numbers, skip the next k+1, for k = 2, 3, 4, ..."
  static SieveSchedule literal();
  // Pass k deletes every (k+1)-th survivor: keep k, skip 1.
  static SieveSchedule every_kth();
  static SieveSchedule default_schedule() { return literal(); }

  static SieveSchedule parse(const std::string& name);
  std::string describe() const;
};

std::vector<std::uint64_t> nary_sieve(std::size_t n, const SieveSchedule& schedule = SieveSchedule::default_schedule());

// 2 <= n <= limit with P(n) == S(n).
std::vector<std::uint64_t> erdos_smarandache(std::uint64_t limit, int jobs = 0);
std::vector<std::uint64_t> erdos_smarandache_serial(std::uint64_t limit);

// Multisets of positive m-th powers summing to n, with exactly k parts when
// given, any number of parts otherwise.
Natural representation_count(std::uint64_t n, std::optional<std::uint64_t> k, unsigned m);

}  // namespace seqlab

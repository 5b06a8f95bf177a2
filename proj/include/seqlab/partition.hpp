#pragma once

#include <string>
#include <vector>

#include "seqlab/natural.hpp"

namespace seqlab {

// Split of a decimal rendering into square segments. Segments are "0" or
// have no leading zero, and there are at least two of them.
struct SegmentPartition {
  std::vector<std::string> segments;
  friend bool operator==(const SegmentPartition&, const SegmentPartition&) = default;
};

bool is_valid_partition(const Natural& n, const SegmentPartition& p);

// Every partition of rendering(n) into >= 2 square segments, depth-first order.
std::vector<SegmentPartition> square_partitions(const Natural& n);

// Whether root^2 admits at least one square partition.
bool is_spds_member(const Natural& root);

// Squares m^2, m <= root_limit, that admit a square partition; ascending.
std::vector<Natural> spds_enumerate(std::uint64_t root_limit, int jobs = 0);
std::vector<Natural> spds_enumerate_serial(std::uint64_t root_limit);

struct RootRun {
  std::uint64_t start_root = 0;
  std::uint64_t length = 0;
  friend bool operator==(const RootRun&, const RootRun&) = default;
};

// Maximal runs m, m+1, ... of member roots with length >= 2.
std::vector<RootRun> consecutive_spds_runs(std::uint64_t root_limit, int jobs = 0);

struct PowerChain {
  bool m = false;     // m is a square with a square partition
  bool m2 = false;    // m^2 partitions
  bool m4 = false;    // m^4 partitions
};

PowerChain power_chain_check(const Natural& m);

// Members <= root_limit^2 whose rendering contains `pattern`.
std::vector<Natural> pattern_search(const std::string& pattern, std::uint64_t root_limit, int jobs = 0);

}  // namespace seqlab

#include "seqlab/partition.hpp"

#include <omp.h>

#include "seqlab/numerics.hpp"

namespace seqlab {

namespace {

bool square_segment(std::string_view seg) {
  if (seg.empty()) return false;
  if (seg.size() > 1 && seg.front() == '0') return false;
  return is_perfect_square(Natural(std::string(seg), 10));
}

void collect(std::string_view text, std::size_t pos, std::vector<std::string>& current,
             std::vector<SegmentPartition>& out) {
  if (pos == text.size()) {
    if (current.size() >= 2) out.push_back({current});
    return;
  }
  for (std::size_t end = pos + 1; end <= text.size(); ++end) {
    auto seg = text.substr(pos, end - pos);
    if (seg.size() > 1 && seg.front() == '0') break;
    if (!square_segment(seg)) continue;
    current.emplace_back(seg);
    collect(text, end, current, out);
    current.pop_back();
  }
}

bool exists(std::string_view text, std::size_t pos, std::size_t segments) {
  if (pos == text.size()) return segments >= 2;
  for (std::size_t end = pos + 1; end <= text.size(); ++end) {
    // A single segment spanning everything never counts.
    if (pos == 0 && end == text.size()) break;
    auto seg = text.substr(pos, end - pos);
    if (seg.size() > 1 && seg.front() == '0') break;
    if (square_segment(seg) && exists(text, end, segments + 1)) return true;
  }
  return false;
}

bool partitionable(const Natural& n) { return exists(to_string(n), 0, 0); }

template <typename Pred>
std::vector<Natural> filter_roots(std::uint64_t root_limit, int jobs, Pred&& keep) {
  const long limit = static_cast<long>(root_limit);
  std::vector<char> hit(root_limit + 1, 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 256) num_threads(threads)
  for (long m = 1; m <= limit; ++m) {
    Natural sq = from_u64(static_cast<std::uint64_t>(m));
    sq *= sq;
    hit[static_cast<std::size_t>(m)] = keep(sq) ? 1 : 0;
  }
  std::vector<Natural> out;
  for (std::uint64_t m = 1; m <= root_limit; ++m) {
    if (hit[m]) out.push_back(from_u64(m) * from_u64(m));
  }
  return out;
}

}  // namespace

bool is_valid_partition(const Natural& n, const SegmentPartition& p) {
  if (p.segments.size() < 2) return false;
  std::string joined;
  for (const auto& s : p.segments) {
    if (!square_segment(s)) return false;
    joined += s;
  }
  return joined == to_string(n);
}

std::vector<SegmentPartition> square_partitions(const Natural& n) {
  if (n < 1) throw DomainError("square_partitions needs n >= 1");
  std::vector<SegmentPartition> out;
  std::vector<std::string> current;
  collect(to_string(n), 0, current, out);
  return out;
}

bool is_spds_member(const Natural& root) {
  if (root < 1) throw DomainError("root must be >= 1");
  return partitionable(root * root);
}

std::vector<Natural> spds_enumerate_serial(std::uint64_t root_limit) {
  if (root_limit < 1) throw DomainError("root_limit must be >= 1");
  std::vector<Natural> out;
  for (std::uint64_t m = 1; m <= root_limit; ++m) {
    Natural sq = from_u64(m) * from_u64(m);
    if (partitionable(sq)) out.push_back(sq);
  }
  return out;
}

std::vector<Natural> spds_enumerate(std::uint64_t root_limit, int jobs) {
  if (root_limit < 1) throw DomainError("root_limit must be >= 1");
  return filter_roots(root_limit, jobs, [](const Natural& sq) { return partitionable(sq); });
}

std::vector<RootRun> consecutive_spds_runs(std::uint64_t root_limit, int jobs) {
  if (root_limit < 2) throw DomainError("root_limit must be >= 2");
  std::vector<RootRun> runs;
  RootRun cur;
  for (const auto& sq : spds_enumerate(root_limit, jobs)) {
    Natural r;
    mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
    const std::uint64_t m = to_u64(r);
    if (cur.length > 0 && cur.start_root + cur.length == m) {
      ++cur.length;
    } else {
      if (cur.length >= 2) runs.push_back(cur);
      cur = {m, 1};
    }
  }
  if (cur.length >= 2) runs.push_back(cur);
  return runs;
}

PowerChain power_chain_check(const Natural& m) {
  if (m < 1) throw DomainError("m must be >= 1");
  PowerChain out;
  out.m = is_perfect_square(m) && partitionable(m);
  const Natural m2 = m * m;
  out.m2 = partitionable(m2);
  out.m4 = partitionable(m2 * m2);
  return out;
}

std::vector<Natural> pattern_search(const std::string& pattern, std::uint64_t root_limit, int jobs) {
  if (pattern.empty()) throw DomainError("pattern must be non-empty");
  if (root_limit < 1) throw DomainError("root_limit must be >= 1");
  return filter_roots(root_limit, jobs, [&](const Natural& sq) {
    return to_string(sq).find(pattern) != std::string::npos && partitionable(sq);
  });
}

}  // namespace seqlab

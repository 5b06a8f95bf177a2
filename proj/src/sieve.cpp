#include "seqlab/sieve.hpp"

#include <omp.h>

#include "seqlab/numerics.hpp"

namespace seqlab {

std::vector<std::uint64_t> nap_sequence(unsigned t, std::size_t n) {
  if (t < 3) throw DomainError("progression length t must be >= 3");
  if (n < 1) throw DomainError("n must be >= 1");
  std::vector<std::uint64_t> out{1};
  std::vector<bool> member{false, true};

  auto completes_progression = [&](std::uint64_t v) {
    // v is the largest element, so any progression through it ends at v.
    for (std::uint64_t d = 1; d * (t - 1) < v; ++d) {
      bool all = true;
      for (unsigned j = 1; j < t && all; ++j) all = member[v - j * d];
      if (all) return true;
    }
    return false;
  };

  for (std::uint64_t v = 2; out.size() < n; ++v) {
    member.resize(v + 1, false);
    if (completes_progression(v)) continue;
    member[v] = true;
    out.push_back(v);
  }
  return out;
}

// --- n-ary sieve -------------------------------------------------------------

namespace {

std::uint64_t affine(std::uint64_t scale, std::int64_t offset, std::uint64_t k) {
  const std::int64_t v = static_cast<std::int64_t>(scale * k) + offset;
  if (v < 1) throw DomainError("sieve schedule produced a block size < 1");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::uint64_t> run_blocks(std::size_t n, const SieveSchedule& s) {
  std::vector<std::uint64_t> out;
  std::uint64_t x = 1;
  for (std::uint64_t k = s.first_k; out.size() < n; ++k) {
    const std::uint64_t keep = s.keep(k), skip = s.skip(k);
    for (std::uint64_t i = 0; i < keep && out.size() < n; ++i) out.push_back(x++);
    x += skip;
  }
  return out;
}

std::vector<std::uint64_t> run_passes(std::size_t n, const SieveSchedule& s) {
  for (std::uint64_t universe = 4 * n + 16;; universe *= 2) {
    std::vector<std::uint64_t> live(universe);
    for (std::uint64_t i = 0; i < universe; ++i) live[i] = i + 1;
    // Once a pass keeps at least n in its first block, the prefix is final.
    for (std::uint64_t k = s.first_k; live.size() >= n; ++k) {
      const std::uint64_t keep = s.keep(k), skip = s.skip(k);
      if (keep >= n) break;
      std::vector<std::uint64_t> next;
      next.reserve(live.size());
      for (std::size_t i = 0; i < live.size(); i += keep + skip) {
        for (std::size_t j = i; j < std::min<std::size_t>(i + keep, live.size()); ++j) next.push_back(live[j]);
      }
      live.swap(next);
    }
    // Survival depends only on earlier positions, so truncating the
    // universe never changes the prefix.
    if (live.size() >= n) {
      live.resize(n);
      return live;
    }
  }
}

}  // namespace

std::uint64_t SieveSchedule::keep(std::uint64_t k) const { return affine(keep_scale, keep_offset, k); }

std::uint64_t SieveSchedule::skip(std::uint64_t k) const { return affine(skip_scale, skip_offset, k); }

SieveSchedule SieveSchedule::literal() { return {Mode::block_runs, 2, 1, 0, 1, 1}; }

SieveSchedule SieveSchedule::every_kth() { return {Mode::periodic_passes, 2, 1, 0, 0, 1}; }

SieveSchedule SieveSchedule::parse(const std::string& name) {
  if (name == "literal" || name == "default") return literal();
  if (name == "every-kth") return every_kth();
  throw DomainError("unknown sieve schedule: " + name);
}

std::string SieveSchedule::describe() const {
  auto affine_str = [](std::uint64_t scale, std::int64_t offset) {
    std::string s = std::to_string(scale) + "k";
    if (offset > 0) s += "+" + std::to_string(offset);
    if (offset < 0) s += std::to_string(offset);
    return s;
  };
  return std::string(mode == Mode::block_runs ? "block-runs" : "periodic-passes") + " keep " +
         affine_str(keep_scale, keep_offset) + " skip " + affine_str(skip_scale, skip_offset) + " from k=" +
         std::to_string(first_k);
}

std::vector<std::uint64_t> nary_sieve(std::size_t n, const SieveSchedule& schedule) {
  if (n < 1) throw DomainError("n must be >= 1");
  return schedule.mode == SieveSchedule::Mode::block_runs ? run_blocks(n, schedule) : run_passes(n, schedule);
}

// --- Erdos-Smarandache numbers -------------------------------------------------

namespace {

bool p_equals_s(std::uint64_t n) {
  const Natural v = from_u64(n);
  return largest_prime_factor(v) == smarandache_S(v);
}

}  // namespace

std::vector<std::uint64_t> erdos_smarandache_serial(std::uint64_t limit) {
  if (limit < 2) throw DomainError("limit must be >= 2");
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (p_equals_s(n)) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> erdos_smarandache(std::uint64_t limit, int jobs) {
  if (limit < 2) throw DomainError("limit must be >= 2");
  std::vector<char> hit(limit + 1, 0);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 512) num_threads(threads)
  for (std::uint64_t n = 2; n <= limit; ++n) hit[n] = p_equals_s(n) ? 1 : 0;
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (hit[n]) out.push_back(n);
  }
  return out;
}

// --- representations as sums of powers -------------------------------------------

Natural representation_count(std::uint64_t n, std::optional<std::uint64_t> k, unsigned m) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (m < 2) throw DomainError("power m must be >= 2");
  if (k && *k < 1) throw DomainError("part count k must be >= 1");

  std::vector<std::uint64_t> powers;
  for (std::uint64_t b = 1;; ++b) {
    std::uint64_t p = 1;
    bool over = false;
    for (unsigned i = 0; i < m && !over; ++i) {
      p *= b;
      over = p > n;
    }
    if (over) break;
    powers.push_back(p);
  }

  if (!k) {
    // Plain coin-change count over unordered parts.
    std::vector<Natural> any(n + 1, 0);
    any[0] = 1;
    for (std::uint64_t p : powers) {
      for (std::uint64_t s = p; s <= n; ++s) any[s] += any[s - p];
    }
    return any[n];
  }

  // ways[j][s]: multisets of j parts (drawn from the powers seen so far)
  // summing to s. Adding one power at a time keeps the parts unordered.
  if (*k > n) return 0;
  const std::uint64_t max_parts = *k;
  std::vector<std::vector<Natural>> ways(max_parts + 1, std::vector<Natural>(n + 1, 0));
  ways[0][0] = 1;
  for (std::uint64_t p : powers) {
    for (std::uint64_t j = 1; j <= max_parts; ++j) {
      for (std::uint64_t s = p; s <= n; ++s) {
        if (ways[j - 1][s - p] != 0) ways[j][s] += ways[j - 1][s - p];
      }
    }
  }
  return ways[max_parts][n];
}

}  // namespace seqlab

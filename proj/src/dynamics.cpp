#include "seqlab/dynamics.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <omp.h>

#include "seqlab/numerics.hpp"

namespace seqlab {

const char* to_string(MapKind k) {
  switch (k) {
    case MapKind::reverse_subtract:
      return "reverse-subtract";
    case MapKind::subtract_const:
      return "subtract-const";
    case MapKind::digit_multiply:
      return "digit-multiply";
    case MapKind::mixed_compose:
      return "mixed-compose";
  }
  return "?";
}

MapKind parse_map_kind(const std::string& name) {
  if (name == "reverse-subtract") return MapKind::reverse_subtract;
  if (name == "subtract-const") return MapKind::subtract_const;
  if (name == "digit-multiply") return MapKind::digit_multiply;
  if (name == "mixed-compose") return MapKind::mixed_compose;
  throw DomainError("unknown map: " + name);
}

void MapSpec::validate() const {
  if (width < 1 || width > kMaxDigitWidth) {
    throw DomainError("width must be in 1.." + std::to_string(kMaxDigitWidth));
  }
  switch (kind) {
    case MapKind::reverse_subtract:
      break;
    case MapKind::subtract_const:
      if (c < 1 || c >= pow10_u64(width)) throw DomainError("subtract-const needs 1 <= c < 10^width");
      break;
    case MapKind::digit_multiply:
      if (c < 2 || c > 9) throw DomainError("digit-multiply needs 2 <= c <= 9");
      break;
    case MapKind::mixed_compose:
      if (width != 2) throw DomainError("mixed-compose is defined on two-digit numbers only");
      break;
  }
}

std::uint64_t MapSpec::domain_lo() const { return kind == MapKind::mixed_compose ? 10 : 0; }

std::uint64_t MapSpec::domain_hi() const { return kind == MapKind::mixed_compose ? 99 : pow10_u64(width) - 1; }

void MapSpec::validate_value(std::uint64_t v) const {
  if (v < domain_lo() || v > domain_hi()) {
    throw DomainError(std::to_string(v) + " is outside the domain " + std::to_string(domain_lo()) + ".." +
                      std::to_string(domain_hi()) + " of " + to_string(kind));
  }
}

std::uint64_t step_value(const MapSpec& m, std::uint64_t v) {
  switch (m.kind) {
    case MapKind::reverse_subtract: {
      const std::uint64_t r = reverse_fixed(v, m.width);
      return v > r ? v - r : r - v;
    }
    case MapKind::subtract_const: {
      if (v == 0) return 0;
      const std::uint64_t r = reverse_fixed(v, m.width);
      return r > m.c ? r - m.c : m.c - r;
    }
    case MapKind::digit_multiply: {
      std::uint64_t out = 0, place = 1;
      for (unsigned i = 0; i < m.width; ++i) {
        out += (m.c * (v % 10) % 10) * place;
        v /= 10;
        place *= 10;
      }
      return out;
    }
    case MapKind::mixed_compose: {
      const std::uint64_t a = v / 10, b = v % 10;
      return 10 * digital_root(a + b) + (a > b ? a - b : b - a);
    }
  }
  return v;
}

DigitString step(const MapSpec& m, const DigitString& v) {
  m.validate();
  if (v.width() != m.width) throw DomainError("value width does not match the map width");
  m.validate_value(v.value());
  return DigitString(step_value(m, v.value()), m.width);
}

std::vector<std::uint64_t> canonical_cycle(std::vector<std::uint64_t> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

OrbitReport orbit(const MapSpec& m, const DigitString& start) {
  m.validate();
  if (start.width() != m.width) throw DomainError("start width does not match the map width");
  m.validate_value(start.value());

  OrbitReport out;
  out.start = start;
  std::unordered_map<std::uint64_t, std::size_t> seen;
  std::uint64_t x = start.value();
  while (seen.find(x) == seen.end()) {
    seen.emplace(x, out.steps.size());
    out.steps.push_back(x);
    x = step_value(m, x);
  }
  out.tail_len = seen[x];
  out.cycle = canonical_cycle({out.steps.begin() + static_cast<std::ptrdiff_t>(out.tail_len), out.steps.end()});
  out.terminated_zero = m.kind == MapKind::subtract_const && out.cycle == std::vector<std::uint64_t>{0};
  return out;
}

OrbitReport orbit(const MapSpec& m, std::uint64_t start) {
  m.validate();
  m.validate_value(start);
  return orbit(m, DigitString(start, m.width));
}

std::uint64_t CensusReport::member_total() const {
  std::uint64_t s = 0;
  for (const auto& c : classes) s += c.members;
  return s;
}

std::pair<std::size_t, std::uint64_t> CensusReport::max_tail() const {
  std::pair<std::size_t, std::uint64_t> best{0, 0};
  bool any = false;
  for (const auto& c : classes) {
    if (!any || c.max_tail > best.first || (c.max_tail == best.first && c.max_tail_start < best.second)) {
      best = {c.max_tail, c.max_tail_start};
      any = true;
    }
  }
  return best;
}

void validate_census_range(const MapSpec& m, std::uint64_t lo, std::uint64_t hi) {
  m.validate();
  if (lo > hi) throw DomainError("census range needs lo <= hi");
  m.validate_value(lo);
  m.validate_value(hi);
}

namespace {

struct ClassTally {
  std::vector<std::uint64_t> cycle;
  std::uint64_t members = 0;
  std::size_t max_tail = 0;
  std::uint64_t max_tail_start = 0;

  void add(std::size_t tail, std::uint64_t start) {
    if (members == 0 || tail > max_tail || (tail == max_tail && start < max_tail_start)) {
      max_tail = tail;
      max_tail_start = start;
    }
    ++members;
  }

  // Associative and commutative, so the merged table does not depend on
  // which thread saw which start.
  void merge(const ClassTally& other) {
    if (other.members == 0) return;
    if (members == 0 || other.max_tail > max_tail ||
        (other.max_tail == max_tail && other.max_tail_start < max_tail_start)) {
      max_tail = other.max_tail;
      max_tail_start = other.max_tail_start;
    }
    if (cycle.empty()) cycle = other.cycle;
    members += other.members;
  }
};

// Keyed by the minimum cycle element; cycles of a function are disjoint.
using ClassTable = std::map<std::uint64_t, ClassTally>;

CensusReport finish(const MapSpec& m, std::uint64_t lo, std::uint64_t hi, std::uint64_t zero_count,
                    const ClassTable& table) {
  CensusReport r;
  r.map = m;
  r.lo = lo;
  r.hi = hi;
  r.total = hi - lo + 1;
  r.zero_count = zero_count;
  for (const auto& [key, t] : table) r.classes.push_back({t.cycle, t.members, t.max_tail, t.max_tail_start});
  return r;
}

}  // namespace

CensusReport census(const MapSpec& m, std::uint64_t lo, std::uint64_t hi, int jobs) {
  validate_census_range(m, lo, hi);
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
  ClassTable merged;
  std::uint64_t zero_count = 0;

#pragma omp parallel num_threads(threads)
  {
    ClassTable local;
    std::uint64_t local_zero = 0;

#pragma omp for schedule(dynamic, 1024) nowait
    for (std::uint64_t s = lo; s <= hi; ++s) {
      // Brent: find cycle length, then tail length.
      std::uint64_t power = 1, lambda = 1;
      std::uint64_t tortoise = s, hare = step_value(m, s);
      while (tortoise != hare) {
        if (power == lambda) {
          tortoise = hare;
          power *= 2;
          lambda = 0;
        }
        hare = step_value(m, hare);
        ++lambda;
      }
      tortoise = hare = s;
      for (std::uint64_t i = 0; i < lambda; ++i) hare = step_value(m, hare);
      std::size_t mu = 0;
      while (tortoise != hare) {
        tortoise = step_value(m, tortoise);
        hare = step_value(m, hare);
        ++mu;
      }

      std::uint64_t key = tortoise, x = tortoise;
      for (std::uint64_t i = 1; i < lambda; ++i) {
        x = step_value(m, x);
        key = std::min(key, x);
      }
      if (lambda == 1 && key == 0) {
        ++local_zero;
        continue;
      }
      auto& tally = local[key];
      if (tally.cycle.empty()) {
        tally.cycle.reserve(lambda);
        x = key;
        for (std::uint64_t i = 0; i < lambda; ++i) {
          tally.cycle.push_back(x);
          x = step_value(m, x);
        }
      }
      tally.add(mu, s);
    }

#pragma omp critical(seqlab_census_merge)
    {
      zero_count += local_zero;
      for (const auto& [key, t] : local) merged[key].merge(t);
    }
  }
  return finish(m, lo, hi, zero_count, merged);
}

CensusReport census_serial(const MapSpec& m, std::uint64_t lo, std::uint64_t hi) {
  validate_census_range(m, lo, hi);
  ClassTable table;
  std::uint64_t zero_count = 0;
  for (std::uint64_t s = lo; s <= hi; ++s) {
    OrbitReport o = orbit(m, s);
    if (o.cycle == std::vector<std::uint64_t>{0}) {
      ++zero_count;
      continue;
    }
    auto& tally = table[o.cycle.front()];
    if (tally.cycle.empty()) tally.cycle = o.cycle;
    tally.add(o.tail_len, s);
  }
  return finish(m, lo, hi, zero_count, table);
}

}  // namespace seqlab

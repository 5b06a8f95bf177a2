#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "seqlab/natural.hpp"

namespace seqlab {

enum class MapKind { reverse_subtract, subtract_const, digit_multiply, mixed_compose };

const char* to_string(MapKind k);
MapKind parse_map_kind(const std::string& name);

// One digit map on a fixed-width state space. The width set here pads every
// value the map produces, not just the start.
struct MapSpec {
  MapKind kind = MapKind::reverse_subtract;
  unsigned width = 2;
  std::uint64_t c = 0;  // subtract_const: 1 <= c < 10^width; digit_multiply: 2..9

  static MapSpec reverse_subtract(unsigned width) { return {MapKind::reverse_subtract, width, 0}; }
  static MapSpec subtract_const(unsigned width, std::uint64_t c) { return {MapKind::subtract_const, width, c}; }
  static MapSpec digit_multiply(unsigned width, std::uint64_t c) { return {MapKind::digit_multiply, width, c}; }
  static MapSpec mixed_compose() { return {MapKind::mixed_compose, 2, 0}; }

  void validate() const;            // throws DomainError
  void validate_value(std::uint64_t v) const;
  std::uint64_t domain_lo() const;  // smallest admissible value
  std::uint64_t domain_hi() const;  // largest admissible value

  friend bool operator==(const MapSpec&, const MapSpec&) = default;
};

// Raw kernel, no validation. subtract_const treats 0 as terminal.
std::uint64_t step_value(const MapSpec& m, std::uint64_t v);

DigitString step(const MapSpec& m, const DigitString& v);

struct OrbitReport {
  DigitString start;
  std::vector<std::uint64_t> steps;  // start first, every value up to the first repeat
  std::size_t tail_len = 0;          // applications before the first cycle member
  std::vector<std::uint64_t> cycle;  // rotated so the minimum comes first
  bool terminated_zero = false;      // subtract_const reached its terminal 0

  // Applications until a value recurs for the first time: tail_len + |cycle|.
  std::size_t closing_step() const { return tail_len + cycle.size(); }

  friend bool operator==(const OrbitReport&, const OrbitReport&) = default;
};

OrbitReport orbit(const MapSpec& m, const DigitString& start);
OrbitReport orbit(const MapSpec& m, std::uint64_t start);

std::vector<std::uint64_t> canonical_cycle(std::vector<std::uint64_t> cycle);

struct CycleClass {
  std::vector<std::uint64_t> cycle;  // canonical
  std::uint64_t members = 0;
  std::size_t max_tail = 0;
  std::uint64_t max_tail_start = 0;  // smallest start achieving max_tail

  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

struct CensusReport {
  MapSpec map;
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::uint64_t total = 0;
  std::uint64_t zero_count = 0;     // starts ending at the 0 invariant
  std::vector<CycleClass> classes;  // nonzero cycles, sorted by minimum element

  std::uint64_t member_total() const;
  // Largest tail over every nonzero class, with its smallest start.
  std::pair<std::size_t, std::uint64_t> max_tail() const;

  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

void validate_census_range(const MapSpec& m, std::uint64_t lo, std::uint64_t hi);

// OpenMP kernel: Brent cycle detection per start, per-thread class tables
// merged afterwards. jobs <= 0 uses the OpenMP default.
CensusReport census(const MapSpec& m, std::uint64_t lo, std::uint64_t hi, int jobs = 0);

// Reference: one orbit() per start, single thread.
CensusReport census_serial(const MapSpec& m, std::uint64_t lo, std::uint64_t hi);

}  // namespace seqlab

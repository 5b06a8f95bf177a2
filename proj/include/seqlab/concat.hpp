#pragma once

#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "seqlab/numerics.hpp"

namespace seqlab {

enum class GeneratorFamily { odd, even, prime, custom };

struct GeneratorSpec {
  GeneratorFamily family = GeneratorFamily::odd;
  std::vector<Natural> custom_terms;  // family == custom only

  static GeneratorSpec odd() { return {GeneratorFamily::odd, {}}; }
  static GeneratorSpec even() { return {GeneratorFamily::even, {}}; }
  static GeneratorSpec prime() { return {GeneratorFamily::prime, {}}; }
  static GeneratorSpec custom(std::vector<Natural> terms) { return {GeneratorFamily::custom, std::move(terms)}; }
};

const char* to_string(GeneratorFamily f);
GeneratorFamily parse_generator_family(const std::string& name);

// g_1..g_count of the generator.
std::vector<Natural> generator_terms(const GeneratorSpec& g, std::size_t count);

// a_1 = g_1, a_i = concat(a_{i-1}, g_i).
std::vector<Natural> g_addon(const GeneratorSpec& g, std::size_t count);

struct TwoP {
  friend bool operator==(const TwoP&, const TwoP&) = default;
};

// prime / probable-prime verdict, perfect power (b, e), or "2q with q prime".
using HitClass = std::variant<PrimalityVerdict, PerfectPower, TwoP>;

struct ScanHit {
  std::size_t rank = 0;
  HitClass classification;
};

struct ScanReport {
  GeneratorSpec family;
  std::size_t limit = 0;
  std::vector<ScanHit> hits;  // strictly increasing ranks
};

std::string describe(const HitClass& c);

struct ScanOptions {
  unsigned rounds = kDefaultRounds;
  std::uint64_t seed = kDefaultSeed;
  int jobs = 0;  // 0: OpenMP default
};

ScanReport prime_rank_scan(const GeneratorSpec& g, std::size_t limit, const ScanOptions& options = {});
ScanReport prime_rank_scan_serial(const GeneratorSpec& g, std::size_t limit, const ScanOptions& options = {});

// Even add-on sequence: perfect powers and terms of the form 2q, q prime.
ScanReport power_and_2p_scan(std::size_t limit, const ScanOptions& options = {});

// Decimal length of a_rank, from generator lengths alone.
std::size_t term_digit_count(const GeneratorSpec& g, std::size_t rank);

// k-th term is s_1 s_2 ... s_k concatenated.
std::vector<Natural> concat_stream(const std::vector<Natural>& s);

std::vector<std::pair<std::size_t, bool>> membership_scan(const std::vector<Natural>& s,
                                                          const std::function<bool(const Natural&)>& member);

// Primes whose decimal digits all lie in {2,3,5,7}, ascending.
std::vector<Natural> prime_digital_stream(std::size_t count);

}  // namespace seqlab

#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "seqlab/natural.hpp"

namespace seqlab {

// ---------------------------------------------------------------------------
// Digit kernels
// ---------------------------------------------------------------------------

// a followed by the decimal digits of b: a * 10^digit_count(b) + b.
Natural concat_decimal(const Natural& a, const Natural& b);

DigitString reverse_fixed(const DigitString& d);
std::uint64_t reverse_fixed(std::uint64_t value, unsigned width);

// Repeated digit sum down to a single digit. n must be >= 1.
Natural digital_root(const Natural& n);
unsigned digital_root(std::uint64_t n);

// ---------------------------------------------------------------------------
// Primality
// ---------------------------------------------------------------------------

enum class PrimalityKind { prime, composite, probable_prime };

struct PrimalityVerdict {
  PrimalityKind kind = PrimalityKind::composite;
  unsigned witness_rounds = 0;  // 0 when the answer is deterministic

  bool prime_like() const { return kind != PrimalityKind::composite; }
  friend bool operator==(const PrimalityVerdict&, const PrimalityVerdict&) = default;
};

const char* to_string(PrimalityKind k);

inline constexpr std::uint64_t kDefaultSeed = 0x5eedC0FFEEull;
inline constexpr unsigned kDefaultRounds = 40;
// Inputs below 2^kDeterministicBits get a proven Miller-Rabin witness set.
inline constexpr unsigned kDeterministicBits = 64;

bool is_prime_u64(std::uint64_t n);

// Deterministic below 2^64; above that, strong base-2 test plus `rounds`
// random bases drawn from `seed`, error <= 4^-rounds.
PrimalityVerdict is_prime(const Natural& n, unsigned rounds = kDefaultRounds,
                          std::uint64_t seed = kDefaultSeed);

// Primes <= limit, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

// ---------------------------------------------------------------------------
// Factorization
// ---------------------------------------------------------------------------

struct PrimePower {
  Natural prime;
  unsigned long exponent = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  std::vector<PrimePower> factors;  // ascending primes
  bool complete = true;
  Natural unfactored = 1;           // composite cofactor left when the budget ran out
};

struct FactorOptions {
  std::chrono::milliseconds budget{5000};
  std::uint64_t seed = kDefaultSeed;
};

// Trial division for small primes, Pollard-Brent rho above.
Factorization factorize(const Natural& n, const FactorOptions& options = {});

Natural largest_prime_factor(const Natural& n);

// Smallest m >= 1 with n | m!. S(1) = 1.
Natural smarandache_S(const Natural& n);

// Smallest m with v_p(m!) >= a, via Legendre's formula.
Natural smarandache_S_prime_power(const Natural& p, const Natural& a);
std::uint64_t smarandache_S_prime_power_u64(std::uint64_t p, std::uint64_t a);

// v_p(m!) = sum floor(m / p^i).
std::uint64_t legendre_valuation(std::uint64_t m, std::uint64_t p);

struct PerfectPower {
  Natural base;
  unsigned long exponent = 0;
  friend bool operator==(const PerfectPower&, const PerfectPower&) = default;
};

// Maximal exponent e >= 2 with b^e == n; 1 reports (1, 2).
std::optional<PerfectPower> is_perfect_power(const Natural& n);

bool is_perfect_square(const Natural& n);

}  // namespace seqlab
